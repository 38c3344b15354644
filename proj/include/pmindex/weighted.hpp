#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pmindex/colouring.hpp"
#include "pmindex/complex_rational.hpp"
#include "pmindex/cycle.hpp"
#include "pmindex/graph.hpp"
#include "pmindex/matching.hpp"

namespace pmindex {

/// Graph + half-edge colouring + nonzero weights indexed by edge id.
struct WeightedColouredGraph {
  Graph graph;
  HalfEdgeColouring colouring;
  std::vector<ComplexRational> weight;
};

/// Throws PreconditionError on a colouring domain mismatch, a weight vector
/// of the wrong length, or a zero weight.
WeightedColouredGraph make_weighted(Graph g, HalfEdgeColouring c,
                                    std::vector<ComplexRational> weight);

/// Parses .wcg: "p <n> <m>" then m lines "e <u> <v> <cu> <cv> <re> <im>".
WeightedColouredGraph parse_weighted_graph(std::string_view text);
std::string serialize_weighted_graph(const WeightedColouredGraph& w);

/// One colour per vertex, indexed by vertex id.
using VertexColouring = std::vector<Colour>;

bool is_monochromatic(const VertexColouring& vc);
/// "c0.c1.c2...", a comma-free spelling for reports.
std::string to_string(const VertexColouring& vc);

struct FilteredGraph {
  Graph graph;
  /// Indexed by edge id of `graph`.
  std::vector<ComplexRational> weight;
};

/// Θ_vc: keeps e = {u,v} iff its half at u has colour vc[u] and its half at v
/// has colour vc[v]. Throws PreconditionError unless vc covers V.
FilteredGraph filter_by_vertex_colouring(const WeightedColouredGraph& w,
                                         const VertexColouring& vc);

/// Sum over perfect matchings of the product of edge weights, in Θ_vc or, with
/// a subset S, in Θ_vc[S]. The empty vertex set has weight 1.
ComplexRational vertex_colouring_weight(
    const WeightedColouredGraph& w, const VertexColouring& vc,
    std::optional<std::span<const Vertex>> subset = std::nullopt,
    std::uint64_t limit = kDefaultPerfectMatchingLimit);

struct WeightedValidityReport {
  bool is_valid = false;
  /// Number of monochromatic vertex colourings of weight 1, set when valid.
  std::optional<int> k;
  /// Weight of every feasible monochromatic vertex colouring, by colour.
  std::map<Colour, ComplexRational> monochromatic_weights;
  /// First feasible vertex colouring (lexicographic) whose weight breaks the
  /// definition.
  std::optional<std::pair<VertexColouring, ComplexRational>> violating_vc;
};

/// Groups the perfect matchings of the underlying graph by the vertex
/// colouring they induce and applies the validity definition exactly.
WeightedValidityReport verify_k_valid(const WeightedColouredGraph& w,
                                      std::uint64_t limit = kDefaultPerfectMatchingLimit);

namespace detail {

// Sums PM weights per induced vertex colouring. Scalar needs +=, *= and a
// value-initialised zero; `one` is the multiplicative identity.
template <typename Scalar>
std::map<VertexColouring, Scalar> group_matchings(const Graph& g,
                                                  const std::vector<HalfColours>& halves,
                                                  const std::vector<Scalar>& weight,
                                                  const Scalar& one, std::uint64_t limit) {
  std::map<VertexColouring, Scalar> groups;
  VertexColouring vc(g.vertex_count());
  for_each_perfect_matching(g, limit, [&](std::span<const EdgeId> ids) {
    Scalar product = one;
    for (EdgeId id : ids) {
      const Edge& e = g.edge(id);
      vc[e.u] = halves[id].at_u;
      vc[e.v] = halves[id].at_v;
      product *= weight[id];
    }
    auto [it, fresh] = groups.try_emplace(vc, Scalar{});
    it->second += product;
  });
  return groups;
}

}  // namespace detail

template <typename Complex>
struct NumericValidityReport {
  bool is_valid = false;
  std::optional<int> k;
  std::map<Colour, Complex> monochromatic_weights;
};

/// Floating-point counterpart of verify_k_valid for cross-checks only: weights
/// within `tolerance` of 0 or 1 count as exactly 0 or 1.
template <typename Complex>
NumericValidityReport<Complex> verify_k_valid_numeric(
    const Graph& g, const HalfEdgeColouring& c, const std::vector<Complex>& weight,
    double tolerance = 1e-9, std::uint64_t limit = kDefaultPerfectMatchingLimit) {
  using std::abs;
  auto groups = detail::group_matchings<Complex>(g, c.aligned(g), weight, Complex(1), limit);
  NumericValidityReport<Complex> out;
  out.is_valid = true;
  int k = 0;
  for (const auto& [vc, total] : groups) {
    if (is_monochromatic(vc)) {
      out.monochromatic_weights[vc.front()] = total;
      if (abs(total - Complex(1)) <= tolerance) {
        ++k;
      } else {
        out.is_valid = false;
      }
    } else if (abs(total) > tolerance) {
      out.is_valid = false;
    }
  }
  if (out.is_valid) out.k = k;
  return out;
}

/// base^exponent with a positive integer base and rational exponent.
struct SymbolicWeight {
  std::uint64_t base = 1;
  mpq_class exponent;
};

struct LiftedInstance {
  Graph graph;
  /// The input colouring with both halves of each edge equal.
  HalfEdgeColouring colouring;
  /// Indexed by edge id: pm_{c(e)}^(-2/n).
  std::vector<SymbolicWeight> weight;
  /// Number of perfect matchings per colour.
  std::map<Colour, std::uint64_t> pm_counts;
  /// Exact total weight of the monochromatic vertex colouring per colour.
  std::map<Colour, mpq_class> totals;
  bool verified = false;
  int mu_bar_of_colouring = 0;
};

/// Weights each edge pm_{c(e)}^(-2/n) and checks by exponent bookkeeping that
/// every perfect matching weighs pm_i^(-1) and each colour totals exactly 1.
/// Throws PreconditionError unless c is PMValid on g.
LiftedInstance lift_weights(const Graph& g, const MonochromaticColouring& c,
                            std::uint64_t limit = kDefaultPerfectMatchingLimit);

/// Evaluates the symbolic weights in Complex's precision.
template <typename Complex, typename Real = typename Complex::value_type>
std::vector<Complex> numeric_weights(const LiftedInstance& lifted) {
  std::vector<Complex> out;
  out.reserve(lifted.weight.size());
  for (const SymbolicWeight& w : lifted.weight) {
    Real exponent = Real(w.exponent.get_num().get_si()) / Real(w.exponent.get_den().get_si());
    using std::pow;
    out.emplace_back(pow(Real(w.base), exponent), Real(0));
  }
  return out;
}

struct MuBarBounds {
  int mu = 0;
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  /// Minimum degree of mcg(g) (0 when g has no perfect matching).
  int min_degree = 0;
  std::optional<Gadget> gadget;
};

/// lower = mu(g); upper = min(δ(mcg), 2 when mcg has a gadget and more than 4
/// vertices, 3). exact when mu != 1 or lower == upper.
MuBarBounds mu_bar_bounds(const Graph& g);

}  // namespace pmindex
