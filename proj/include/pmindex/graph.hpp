#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pmindex {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

/// Undirected edge stored in canonical order (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  /// Canonicalises the endpoint order; loops are rejected by Graph, not here.
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool shares_endpoint(const Edge& e) const {
    return touches(e.u) || touches(e.v);
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// "u-v", the edge spelling used in reports.
std::string to_string(const Edge& e);

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Edges are kept in canonical lexicographic order and an edge's id is its
/// index in that order, so every iteration below is deterministic. Neighbour
/// lists are sorted ascending. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws PreconditionError on loops, out-of-range endpoints or duplicates.
  Graph(Vertex vertex_count, std::vector<Edge> edges);

  Vertex vertex_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  /// Ids of the edges incident to v, parallel to neighbours(v).
  std::span<const EdgeId> incident(Vertex v) const { return incident_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const;
  std::optional<EdgeId> edge_id(const Edge& e) const { return edge_id(e.u, e.v); }
  bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

  /// Same vertex set, keeping only edges whose flag is set.
  Graph with_edges(const std::vector<bool>& keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeId>> incident_;
};

struct GraphStats {
  Vertex n = 0;
  EdgeId m = 0;
  int min_degree = 0;
  int max_degree = 0;
  bool is_k4 = false;
  bool has_even_order = true;
};

GraphStats graph_stats(const Graph& g);

/// Parses the line-based .eg format:
///
///     # comment
///     p <n> <m>
///     e <u> <v>      (exactly m lines, 0 <= u < v < n)
///
/// Blank lines and '#' lines are ignored anywhere; the text must end with a
/// newline. Errors carry the offending line number.
Graph parse_graph(std::string_view text);

/// Canonical .eg text: header then edges in canonical order.
std::string serialize_graph(const Graph& g);

/// Induced subgraph on `subset` (any order, duplicates rejected). Vertices are
/// renumbered by ascending original id; `original` receives the inverse map.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset,
                       std::vector<Vertex>* original = nullptr);

/// Connected components as ascending vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

Graph complete_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph complete_bipartite_graph(Vertex left, Vertex right);
Graph petersen_graph();
/// Cycle 0..n-1 plus the given chords.
Graph cycle_with_chords(Vertex n, std::span<const Edge> chords);

}  // namespace pmindex
