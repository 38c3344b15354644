#include "pmindex/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pmindex/errors.hpp"
#include "text_format.hpp"

namespace pmindex {

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(Vertex vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw PreconditionError("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n_) {
      throw PreconditionError("edge " + to_string(e) + " out of range");
    }
    if (e.u == e.v) throw PreconditionError("loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw PreconditionError("duplicate edge " + to_string(*dup));
  }

  adjacency_.assign(n_, {});
  incident_.assign(n_, {});
  // Walking edges in canonical order fills every list in ascending neighbour
  // order for the smaller endpoint; the larger endpoint needs a sort.
  for (EdgeId id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[e.u].push_back(e.v);
    incident_[e.u].push_back(id);
    adjacency_[e.v].push_back(e.u);
    incident_[e.v].push_back(id);
  }
  for (Vertex v = 0; v < n_; ++v) {
    std::vector<std::size_t> order(adjacency_[v].size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return adjacency_[v][a] < adjacency_[v][b];
    });
    std::vector<Vertex> adj;
    std::vector<EdgeId> inc;
    adj.reserve(order.size());
    inc.reserve(order.size());
    for (std::size_t i : order) {
      adj.push_back(adjacency_[v][i]);
      inc.push_back(incident_[v][i]);
    }
    adjacency_[v] = std::move(adj);
    incident_[v] = std::move(inc);
  }
}

std::optional<EdgeId> Graph::edge_id(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return std::nullopt;
  const auto& adj = adjacency_[a];
  auto it = std::lower_bound(adj.begin(), adj.end(), b);
  if (it == adj.end() || *it != b) return std::nullopt;
  return incident_[a][it - adj.begin()];
}

Graph Graph::with_edges(const std::vector<bool>& keep) const {
  std::vector<Edge> kept;
  for (EdgeId id = 0; id < edge_count(); ++id) {
    if (keep[id]) kept.push_back(edges_[id]);
  }
  return Graph(n_, std::move(kept));
}

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  s.n = g.vertex_count();
  s.m = g.edge_count();
  if (s.n > 0) {
    s.min_degree = g.degree(0);
    s.max_degree = g.degree(0);
    for (Vertex v = 1; v < s.n; ++v) {
      s.min_degree = std::min(s.min_degree, g.degree(v));
      s.max_degree = std::max(s.max_degree, g.degree(v));
    }
  }
  s.is_k4 = s.n == 4 && s.m == 6;
  s.has_even_order = s.n % 2 == 0;
  return s;
}

Graph parse_graph(std::string_view text) {
  auto lines = detail::payload_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header 'p <n> <m>'");
  auto header = detail::parse_header(lines.front());

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (static_cast<EdgeId>(edges.size()) == header.m) {
      throw ParseError(lines[i].number, "more edge lines than declared");
    }
    Edge e = detail::parse_edge_prefix(lines[i], 3, header.n);
    if (!seen.insert(e).second) {
      throw ParseError(lines[i].number, "duplicate edge " + to_string(e));
    }
    edges.push_back(e);
  }
  if (static_cast<EdgeId>(edges.size()) != header.m) {
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(header.m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  return Graph(header.n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset,
                       std::vector<Vertex>* original) {
  std::vector<Vertex> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw PreconditionError("duplicate vertex in subset");
  }
  std::vector<Vertex> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0 || members[i] >= g.vertex_count()) {
      throw PreconditionError("subset vertex out of range");
    }
    local[members[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) edges.emplace_back(local[e.u], local[e.v]);
  }
  if (original) *original = members;
  return Graph(static_cast<Vertex>(members.size()), std::move(edges));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> component(g.vertex_count(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (component[s] >= 0) continue;
    std::vector<Vertex> members{s};
    component[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex w : g.neighbours(members[i])) {
        if (component[w] < 0) {
          component[w] = component[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(Vertex left, Vertex right) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < left; ++u) {
    for (Vertex v = 0; v < right; ++v) edges.emplace_back(u, left + v);
  }
  return Graph(left + right, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

Graph cycle_with_chords(Vertex n, std::span<const Edge> chords) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  edges.insert(edges.end(), chords.begin(), chords.end());
  return Graph(n, std::move(edges));
}

}  // namespace pmindex
