#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pmindex/graph.hpp"

namespace pmindex {

/// A set of pairwise vertex-disjoint edges, stored as a mate array.
class Matching {
 public:
  Matching() = default;
  explicit Matching(Vertex vertex_count) : mate_(vertex_count, -1) {}
  /// Throws PreconditionError if two edges share a vertex.
  Matching(Vertex vertex_count, std::span<const Edge> edges);

  std::optional<Vertex> mate(Vertex v) const {
    if (mate_[v] < 0) return std::nullopt;
    return mate_[v];
  }
  bool covers(Vertex v) const { return mate_[v] >= 0; }
  bool contains(const Edge& e) const { return mate_[e.u] == e.v; }
  std::size_t size() const;
  bool is_perfect() const;

  /// Edges in canonical order.
  std::vector<Edge> edges() const;
  std::vector<Vertex> covered() const;
  std::span<const Vertex> mates() const { return mate_; }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  friend class BlossomSearch;
  std::vector<Vertex> mate_;
};

/// Maximum-cardinality matching via Edmonds' blossom contraction.
Matching maximum_matching(const Graph& g);

/// A perfect matching containing e, or nothing when none exists.
/// Throws PreconditionError if e is not an edge of g.
std::optional<Matching> perfect_matching_through(const Graph& g, const Edge& e);

/// Same, but starting from a known perfect matching of g; cost is a single
/// augmenting-path search instead of a full matching computation.
std::optional<Matching> perfect_matching_through(const Graph& g, const Edge& e,
                                                 const Matching& perfect);

inline constexpr std::uint64_t kDefaultPerfectMatchingLimit = 1'000'000;

/// Visits every perfect matching as the list of its edge ids (in selection
/// order). Branches on the lowest-index uncovered vertex, trying neighbours in
/// ascending order. Throws LimitExceeded once more than `limit` matchings have
/// been found.
void for_each_perfect_matching(const Graph& g, std::uint64_t limit,
                               const std::function<void(std::span<const EdgeId>)>& visit);

std::vector<Matching> enumerate_perfect_matchings(
    const Graph& g, std::uint64_t limit = kDefaultPerfectMatchingLimit);

std::uint64_t count_perfect_matchings(
    const Graph& g, std::uint64_t limit = kDefaultPerfectMatchingLimit);

/// Number of enumeration runs started by this process (diagnostic only; lets
/// callers assert that a code path never falls back to enumeration).
std::uint64_t perfect_matching_enumerations_started();

struct MatchingCoveredSubgraph {
  Graph graph;
  /// Edges of the input lying in no perfect matching, canonical order.
  std::vector<Edge> removed;
};

/// mcg(g): g minus every edge that lies in no perfect matching.
/// Throws PreconditionError when g has no perfect matching.
MatchingCoveredSubgraph matching_covered_subgraph(const Graph& g);

}  // namespace pmindex
