#include "pmindex/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "pmindex/errors.hpp"

namespace pmindex {

namespace {

// Plain recursive perfect-matching enumeration, kept apart from the library's
// enumerator so the oracle shares no matching code with what it checks.
void all_perfect_matchings(const Graph& g, std::vector<bool>& covered,
                           std::vector<EdgeId>& chosen, std::uint64_t cap,
                           std::vector<std::vector<EdgeId>>& out) {
  Vertex v = 0;
  while (v < g.vertex_count() && covered[v]) ++v;
  if (v == g.vertex_count()) {
    if (out.size() >= cap) throw LimitExceeded("oracle perfect matching budget exceeded");
    out.push_back(chosen);
    return;
  }
  covered[v] = true;
  auto nbrs = g.neighbours(v);
  auto inc = g.incident(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (covered[nbrs[i]]) continue;
    covered[nbrs[i]] = true;
    chosen.push_back(inc[i]);
    all_perfect_matchings(g, covered, chosen, cap, out);
    chosen.pop_back();
    covered[nbrs[i]] = false;
  }
  covered[v] = false;
}

std::vector<std::vector<EdgeId>> all_perfect_matchings(const Graph& g, std::uint64_t cap) {
  std::vector<std::vector<EdgeId>> out;
  if (g.vertex_count() % 2 != 0) return out;
  std::vector<bool> covered(g.vertex_count(), false);
  std::vector<EdgeId> chosen;
  all_perfect_matchings(g, covered, chosen, cap, out);
  return out;
}

// The two PMValid clauses, checked literally.
bool pm_valid(const std::vector<std::vector<EdgeId>>& pms, const std::vector<int>& colour,
              int k) {
  std::vector<bool> owned(k, false);
  for (const auto& pm : pms) {
    int c = colour[pm.front()];
    for (EdgeId id : pm) {
      if (colour[id] != c) return false;
    }
    owned[c] = true;
  }
  return std::all_of(owned.begin(), owned.end(), [](bool b) { return b; });
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

int brute_force_matching_index(const Graph& g, const OracleBudget& budget, bool no_cap) {
  auto pms = all_perfect_matchings(g, budget.max_pm);
  // The empty graph is treated as having no perfect matching, as in
  // matching_index.
  if (pms.empty() || g.vertex_count() == 0) return 0;

  // Units: classes of mcg edges linked by lying in a common perfect matching.
  std::vector<int> parent(g.edge_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<bool> in_mcg(g.edge_count(), false);
  for (const auto& pm : pms) {
    for (EdgeId id : pm) {
      in_mcg[id] = true;
      parent[find_root(parent, id)] = find_root(parent, pm.front());
    }
  }
  std::vector<int> unit_of(g.edge_count(), -1);
  int units = 0;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (!in_mcg[id]) continue;
    int root = find_root(parent, id);
    if (unit_of[root] < 0) unit_of[root] = units++;
    unit_of[id] = unit_of[root];
  }
  if (units > budget.max_edges) {
    throw LimitExceeded("oracle colouring search needs " + std::to_string(units) +
                        " units, budget is " + std::to_string(budget.max_edges));
  }

  // Restricted-growth strings enumerate colourings up to colour permutation.
  // Edges outside mcg lie in no perfect matching and cannot affect validity;
  // they are given colour 0.
  const int cap = no_cap ? units : std::min(units, 3);
  int best = 0;
  std::vector<int> rgs(units, 0);
  std::vector<int> colour(g.edge_count(), 0);
  for (;;) {
    int k = units == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (k <= cap && k > best) {
      for (EdgeId id = 0; id < g.edge_count(); ++id) {
        colour[id] = in_mcg[id] ? rgs[unit_of[id]] : 0;
      }
      if (pm_valid(pms, colour, k)) best = k;
    }
    // Next restricted-growth string with at most `cap` blocks.
    int i = units - 1;
    for (; i > 0; --i) {
      int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= prefix_max && rgs[i] + 1 < cap) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i <= 0) break;
  }
  return best;
}

std::vector<CycleLabelling> enumerate_hamiltonian_cycles(const Graph& g,
                                                         const OracleBudget& budget) {
  const Vertex n = g.vertex_count();
  if (n > budget.max_vertices) {
    throw LimitExceeded("cycle enumeration limited to " +
                        std::to_string(budget.max_vertices) + " vertices");
  }
  std::vector<CycleLabelling> out;
  if (n < 3) return out;

  std::vector<Vertex> path{0};
  std::vector<bool> used(n, false);
  used[0] = true;
  auto extend = [&](auto&& self) -> void {
    Vertex last = path.back();
    if (static_cast<Vertex>(path.size()) == n) {
      if (g.has_edge(last, 0) && path[1] < path.back()) out.emplace_back(path);
      return;
    }
    for (Vertex w : g.neighbours(last)) {
      if (used[w]) continue;
      used[w] = true;
      path.push_back(w);
      self(self);
      path.pop_back();
      used[w] = false;
    }
  };
  extend(extend);
  std::sort(out.begin(), out.end(), [](const CycleLabelling& a, const CycleLabelling& b) {
    return std::lexicographical_compare(a.order().begin(), a.order().end(),
                                        b.order().begin(), b.order().end());
  });
  return out;
}

WeightedValidityReport brute_force_k_valid(const WeightedColouredGraph& w,
                                           const OracleBudget& budget) {
  const Graph& g = w.graph;
  const Vertex n = g.vertex_count();
  std::set<Colour> palette_set = w.colouring.palette();
  std::vector<Colour> palette(palette_set.begin(), palette_set.end());

  double space = std::pow(static_cast<double>(palette.size()), n);
  if (space > 1e7) throw LimitExceeded("vertex colouring space exceeds 10^7");

  WeightedValidityReport out;
  out.is_valid = true;
  int k = 0;
  if (palette.empty()) {
    out.k = 0;
    return out;
  }
  std::vector<std::size_t> digits(n, 0);
  VertexColouring vc(n);
  for (;;) {
    for (Vertex v = 0; v < n; ++v) vc[v] = palette[digits[v]];
    FilteredGraph theta = filter_by_vertex_colouring(w, vc);
    auto pms = all_perfect_matchings(theta.graph, budget.max_pm);
    if (!pms.empty()) {
      ComplexRational weight;
      for (const auto& pm : pms) {
        ComplexRational product(1);
        for (EdgeId id : pm) product *= theta.weight[id];
        weight += product;
      }
      bool ok;
      if (is_monochromatic(vc)) {
        out.monochromatic_weights[vc.front()] = weight;
        ok = weight == ComplexRational(1);
        if (ok) ++k;
      } else {
        ok = weight.is_zero();
      }
      if (!ok && out.is_valid) {
        out.is_valid = false;
        out.violating_vc = {vc, weight};
      }
    }
    Vertex i = n - 1;
    while (i >= 0 && ++digits[i] == palette.size()) digits[i--] = 0;
    if (i < 0) break;
  }
  if (out.is_valid) out.k = k;
  return out;
}

}  // namespace pmindex
