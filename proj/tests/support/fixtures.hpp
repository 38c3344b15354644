#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmindex/colouring.hpp"
#include "pmindex/graph.hpp"
#include "pmindex/random.hpp"
#include "pmindex/weighted.hpp"

namespace pmindex::testing {

/// G(n, num/den); with plant_pm a random perfect matching is added first.
Graph random_graph(Rng& rng, int n, std::uint64_t num, std::uint64_t den, bool plant_pm);

/// Size of a maximum matching by exhaustive branching on the lowest vertex.
int brute_max_matching(const Graph& g);

/// Perfect matchings as sorted edge lists, by exhaustive branching.
std::vector<std::vector<Edge>> brute_perfect_matchings(const Graph& g);

/// C_{2n} with edge {i,i+1} coloured 1 + i % 2.
Graph alternating_cycle(int n);
MonochromaticColouring alternating_cycle_colouring(int n);

struct ColouredFixture {
  std::string name;
  Graph graph;
  MonochromaticColouring colouring;
  /// mu(G, c); every fixture colouring is PMValid.
  int mu = 0;
};

/// Hand-built and generated PMValid colourings on at most 12 vertices.
std::vector<ColouredFixture> pm_valid_fixtures();

/// The colourings matching_index builds for every catalogue graph on n
/// vertices with mu = 2.
std::vector<ColouredFixture> catalogue_two_colourings(int n);

/// Rational weights for a PMValid colouring: edges at vertex 0 of colour i
/// weigh 1/pm_i, all others 1, so each colour totals exactly 1.
WeightedColouredGraph rational_lift(const Graph& g, const MonochromaticColouring& c);

struct WeightedFixture {
  std::string name;
  WeightedColouredGraph instance;
  /// Expected verdict when known: k for valid instances, nullopt for invalid.
  bool expectation_known = false;
  std::optional<int> expected_k;
};

WeightedColouredGraph c4_cancellation();
/// Six vertices, nine edges, two imaginary bi-chromatic edges; valid with k = 2.
WeightedColouredGraph ghz6();

/// Weighted instances on at most 8 vertices.
std::vector<WeightedFixture> weighted_fixtures();

}  // namespace pmindex::testing
