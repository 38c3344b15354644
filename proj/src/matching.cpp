#include "pmindex/matching.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "pmindex/errors.hpp"

namespace pmindex {

Matching::Matching(Vertex vertex_count, std::span<const Edge> edges)
    : mate_(vertex_count, -1) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= vertex_count || e.u == e.v) {
      throw PreconditionError("matching edge " + to_string(e) + " out of range");
    }
    if (mate_[e.u] >= 0 || mate_[e.v] >= 0) {
      throw PreconditionError("edges of a matching must be vertex-disjoint");
    }
    mate_[e.u] = e.v;
    mate_[e.v] = e.u;
  }
}

std::size_t Matching::size() const {
  return static_cast<std::size_t>(
             std::count_if(mate_.begin(), mate_.end(), [](Vertex m) { return m >= 0; })) /
         2;
}

bool Matching::is_perfect() const {
  return std::all_of(mate_.begin(), mate_.end(), [](Vertex m) { return m >= 0; });
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < static_cast<Vertex>(mate_.size()); ++v) {
    if (mate_[v] > v) out.emplace_back(v, mate_[v]);
  }
  return out;
}

std::vector<Vertex> Matching::covered() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(mate_.size()); ++v) {
    if (mate_[v] >= 0) out.push_back(v);
  }
  return out;
}

// Edmonds' algorithm with blossoms tracked by a union-find over base vertices.
// One search grows an alternating forest from a single free root; outer
// vertices carry label 0, inner vertices label 1.
class BlossomSearch {
 public:
  BlossomSearch(const Graph& g, Matching& m)
      : g_(g),
        mate_(m.mate_),
        active_(g.vertex_count(), true),
        label_(g.vertex_count()),
        parent_(g.vertex_count()),
        base_(g.vertex_count()),
        stamp_(g.vertex_count(), 0) {}

  void deactivate(Vertex v) { active_[v] = false; }

  void greedy() {
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (!active_[v] || mate_[v] >= 0) continue;
      for (Vertex w : g_.neighbours(v)) {
        if (active_[w] && mate_[w] < 0) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
  }

  /// Looks for an augmenting path from the free vertex root and applies it.
  bool augment_from(Vertex root) {
    std::fill(label_.begin(), label_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    queue_.clear();
    label_[root] = 0;
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex x = queue_[head];
      for (Vertex y : g_.neighbours(x)) {
        if (!active_[y]) continue;
        if (label_[y] == -1) {
          label_[y] = 1;
          parent_[y] = x;
          if (mate_[y] < 0) {
            flip(y);
            return true;
          }
          label_[mate_[y]] = 0;
          queue_.push_back(mate_[y]);
        } else if (label_[y] == 0 && find(x) != find(y)) {
          Vertex l = lowest_common_base(x, y);
          contract(x, y, l);
          contract(y, x, l);
        }
      }
    }
    return false;
  }

  void augment_all() {
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (active_[v] && mate_[v] < 0) augment_from(v);
    }
  }

 private:
  Vertex find(Vertex x) {
    while (base_[x] != x) {
      base_[x] = base_[base_[x]];
      x = base_[x];
    }
    return x;
  }

  Vertex lowest_common_base(Vertex x, Vertex y) {
    ++clock_;
    for (;;) {
      if (x >= 0) {
        x = find(x);
        if (stamp_[x] == clock_) return x;
        stamp_[x] = clock_;
        x = mate_[x] < 0 ? -1 : parent_[mate_[x]];
      }
      std::swap(x, y);
    }
  }

  void contract(Vertex x, Vertex y, Vertex l) {
    while (find(x) != l) {
      parent_[x] = y;
      y = mate_[x];
      if (label_[y] == 1) {
        label_[y] = 0;
        queue_.push_back(y);
      }
      // Only representatives are re-based: a nested blossom keeps its own
      // base until the walk reaches it.
      if (find(x) == x) base_[x] = l;
      if (find(y) == y) base_[y] = l;
      x = parent_[y];
    }
  }

  void flip(Vertex v) {
    while (v >= 0) {
      Vertex p = parent_[v];
      Vertex next = mate_[p];
      mate_[v] = p;
      mate_[p] = v;
      v = next;
    }
  }

  const Graph& g_;
  std::vector<Vertex>& mate_;
  std::vector<bool> active_;
  std::vector<int> label_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t clock_ = 0;
  std::vector<Vertex> queue_;
};

Matching maximum_matching(const Graph& g) {
  Matching m(g.vertex_count());
  BlossomSearch search(g, m);
  search.greedy();
  search.augment_all();
  return m;
}

std::optional<Matching> perfect_matching_through(const Graph& g, const Edge& e) {
  if (!g.edge_id(e)) throw PreconditionError(to_string(e) + " is not an edge");
  Matching m = maximum_matching(g);
  if (!m.is_perfect()) return std::nullopt;
  return perfect_matching_through(g, e, m);
}

std::optional<Matching> perfect_matching_through(const Graph& g, const Edge& e,
                                                 const Matching& perfect) {
  if (!g.edge_id(e)) throw PreconditionError(to_string(e) + " is not an edge");
  if (!perfect.is_perfect() ||
      perfect.mates().size() != static_cast<std::size_t>(g.vertex_count())) {
    throw PreconditionError("starting matching must be a perfect matching of g");
  }
  if (perfect.contains(e)) return perfect;

  // Drop e's endpoints; their old mates become the only two free vertices,
  // and g - {u,v} has a perfect matching iff they can be joined by an
  // augmenting path.
  std::vector<Edge> kept;
  for (const Edge& f : perfect.edges()) {
    if (!f.touches(e.u) && !f.touches(e.v)) kept.push_back(f);
  }
  Matching m(g.vertex_count(), kept);
  BlossomSearch search(g, m);
  search.deactivate(e.u);
  search.deactivate(e.v);
  if (!search.augment_from(*perfect.mate(e.u))) return std::nullopt;
  std::vector<Edge> edges = m.edges();
  edges.push_back(e);
  return Matching(g.vertex_count(), edges);
}

namespace {
std::atomic<std::uint64_t> enumerations_started{0};
}

std::uint64_t perfect_matching_enumerations_started() {
  return enumerations_started.load(std::memory_order_relaxed);
}

void for_each_perfect_matching(const Graph& g, std::uint64_t limit,
                               const std::function<void(std::span<const EdgeId>)>& visit) {
  enumerations_started.fetch_add(1, std::memory_order_relaxed);
  const Vertex n = g.vertex_count();
  if (n % 2 != 0) return;

  std::vector<bool> covered(n, false);
  std::vector<EdgeId> chosen;
  chosen.reserve(n / 2);
  std::uint64_t found = 0;

  // Iterative backtracking: frame = (branch vertex, next neighbour index).
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  auto lowest_uncovered = [&](Vertex from) {
    while (from < n && covered[from]) ++from;
    return from;
  };

  Vertex start = lowest_uncovered(0);
  if (start == n) {
    ++found;
    if (found > limit) throw LimitExceeded("perfect matching limit exceeded");
    visit(chosen);
    return;
  }
  stack.push_back({start, 0});
  covered[start] = true;
  while (!stack.empty()) {
    Frame& top = stack.back();
    auto nbrs = g.neighbours(top.v);
    auto inc = g.incident(top.v);
    bool descended = false;
    while (top.next < nbrs.size()) {
      std::size_t i = top.next++;
      Vertex w = nbrs[i];
      if (covered[w]) continue;
      covered[w] = true;
      chosen.push_back(inc[i]);
      Vertex next = lowest_uncovered(top.v + 1);
      if (next == n) {
        ++found;
        if (found > limit) throw LimitExceeded("perfect matching limit exceeded");
        visit(chosen);
        chosen.pop_back();
        covered[w] = false;
        continue;
      }
      covered[next] = true;
      stack.push_back({next, 0});
      descended = true;
      break;
    }
    if (descended) continue;
    // Exhausted this branch vertex: undo it and the edge that led here.
    covered[top.v] = false;
    stack.pop_back();
    if (!stack.empty()) {
      const Edge& e = g.edge(chosen.back());
      covered[e.other(stack.back().v)] = false;
      chosen.pop_back();
    }
  }
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, std::uint64_t limit) {
  if (limit < 1) throw PreconditionError("limit must be at least 1");
  std::vector<Matching> out;
  for_each_perfect_matching(g, limit, [&](std::span<const EdgeId> ids) {
    std::vector<Edge> edges;
    for (EdgeId id : ids) edges.push_back(g.edge(id));
    out.emplace_back(g.vertex_count(), edges);
  });
  return out;
}

std::uint64_t count_perfect_matchings(const Graph& g, std::uint64_t limit) {
  std::uint64_t count = 0;
  for_each_perfect_matching(g, limit, [&](std::span<const EdgeId>) { ++count; });
  return count;
}

MatchingCoveredSubgraph matching_covered_subgraph(const Graph& g) {
  Matching base = maximum_matching(g);
  if (!base.is_perfect()) {
    throw PreconditionError("graph has no perfect matching");
  }
  std::vector<bool> keep(g.edge_count(), true);
  MatchingCoveredSubgraph out;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (!perfect_matching_through(g, e, base)) {
      keep[id] = false;
      out.removed.push_back(e);
    }
  }
  out.graph = g.with_edges(keep);
  return out;
}

}  // namespace pmindex
