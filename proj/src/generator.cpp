#include <algorithm>
#include <numeric>

#include "pmindex/cycle.hpp"
#include "pmindex/errors.hpp"
#include "pmindex/random.hpp"

namespace pmindex {

// Positions 2a, 2a+1 form unit a. A drum on units a < b uses the C-edges of
// both units and the chords {2a,2b}, {2a+1,2b+1}. Pairing the chosen units by
// a Dyck word keeps all drums nested or disjoint, so chords of distinct drums
// never cross and each legal edge sits in exactly one drum.
HGraph generate_h_graph(int n, int drum_count, std::uint64_t seed) {
  if (n < 3) throw PreconditionError("half-order must be at least 3");
  if (drum_count < 0 || drum_count > n / 2) {
    throw PreconditionError("cannot place " + std::to_string(drum_count) +
                            " vertex-disjoint drums on " + std::to_string(2 * n) +
                            " vertices");
  }
  Rng rng(seed);
  const int L = 2 * n;

  std::vector<int> units(n);
  std::iota(units.begin(), units.end(), 0);
  rng.shuffle(units);
  units.resize(2 * drum_count);
  std::sort(units.begin(), units.end());

  // Random Dyck word of length 2k, read left to right over the chosen units.
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> open;
  int opens_left = drum_count;
  for (int unit : units) {
    bool can_open = opens_left > 0;
    bool can_close = !open.empty();
    if (can_open && (!can_close || rng.chance(1, 2))) {
      open.push_back(unit);
      --opens_left;
    } else {
      pairs.emplace_back(open.back(), unit);
      open.pop_back();
    }
  }

  std::vector<std::pair<int, int>> by_position;
  for (int p = 0; p < L; ++p) by_position.emplace_back(p, (p + 1) % L);
  for (auto [a, b] : pairs) {
    by_position.emplace_back(2 * a, 2 * b);
    by_position.emplace_back(2 * a + 1, 2 * b + 1);
  }

  std::vector<Vertex> label(L);
  std::iota(label.begin(), label.end(), 0);
  rng.shuffle(label);
  const int rotation = static_cast<int>(rng.below(L));

  // Position p of the base cycle becomes position p - rotation of the output.
  std::vector<Vertex> order(L);
  for (int p = 0; p < L; ++p) order[p] = label[(p + rotation) % L];

  std::vector<Edge> edges;
  edges.reserve(by_position.size());
  for (auto [p, q] : by_position) edges.emplace_back(label[p], label[q]);
  return {Graph(L, std::move(edges)), CycleLabelling(std::move(order))};
}

}  // namespace pmindex
