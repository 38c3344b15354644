#include "pmindex/index.hpp"

#include <set>

#include "pmindex/errors.hpp"

namespace pmindex {

PmValidity verify_pm_valid(const Graph& g, const MonochromaticColouring& c,
                           std::uint64_t limit) {
  const std::vector<Colour> colour = c.aligned(g);
  const std::set<Colour> palette = c.palette();
  std::set<Colour> owners;
  PmValidity out;

  for_each_perfect_matching(g, limit, [&](std::span<const EdgeId> ids) {
    bool mono = true;
    for (EdgeId id : ids) mono = mono && colour[id] == colour[ids.front()];
    if (mono) {
      if (!ids.empty()) owners.insert(colour[ids.front()]);
    } else if (!out.violating_matching) {
      std::vector<Edge> edges;
      for (EdgeId id : ids) edges.push_back(g.edge(id));
      out.violating_matching = Matching(g.vertex_count(), edges);
    }
  });

  for (Colour k : palette) {
    if (!owners.contains(k)) {
      out.empty_colour = k;
      break;
    }
  }
  out.valid = !out.violating_matching && !out.empty_colour;
  if (out.valid) out.mu_of_colouring = static_cast<int>(palette.size());
  return out;
}

namespace {

// Walks M1 ∪ M2 from v along e1; the walk must close after visiting all n
// vertices for the union to be one spanning cycle.
std::optional<CycleLabelling> spanning_union(const Graph& g, const Matching& m1,
                                             const Matching& m2, Vertex v) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> order{v};
  order.reserve(n);
  Vertex at = *m1.mate(v);
  bool next_from_m2 = true;
  while (at != v) {
    if (static_cast<Vertex>(order.size()) >= n) return std::nullopt;
    order.push_back(at);
    at = next_from_m2 ? *m2.mate(at) : *m1.mate(at);
    next_from_m2 = !next_from_m2;
  }
  if (static_cast<Vertex>(order.size()) != n) return std::nullopt;
  return CycleLabelling(std::move(order));
}

}  // namespace

std::optional<CycleLabelling> find_alternating_hamiltonian(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n < 4 || n % 2 != 0) return std::nullopt;
  Matching base = maximum_matching(g);
  if (!base.is_perfect()) return std::nullopt;

  const Vertex v = 0;
  auto incident = g.incident(v);
  std::vector<std::optional<Matching>> through(incident.size());
  for (std::size_t i = 0; i < incident.size(); ++i) {
    through[i] = perfect_matching_through(g, g.edge(incident[i]), base);
  }
  for (std::size_t i = 0; i < incident.size(); ++i) {
    for (std::size_t j = i + 1; j < incident.size(); ++j) {
      if (!through[i] || !through[j]) continue;
      const Matching& m1 = *through[i];
      const Matching& m2 = *through[j];
      bool disjoint = true;
      for (Vertex x = 0; x < n && disjoint; ++x) disjoint = m1.mate(x) != m2.mate(x);
      if (!disjoint) continue;
      if (auto cycle = spanning_union(g, m1, m2, v)) return cycle;
    }
  }
  return std::nullopt;
}

std::string_view witness_tag(IndexWitness w) {
  switch (w) {
    case IndexWitness::K4:
      return "k4";
    case IndexWitness::NoPerfectMatching:
      return "no-perfect-matching";
    case IndexWitness::Trivial1Colouring:
      return "trivial-1-colouring";
    case IndexWitness::NoAlternatingHamiltonian:
      return "no-alternating-hamiltonian";
    case IndexWitness::PropertyFailure:
      return "property-failure";
    case IndexWitness::TwoColouring:
      return "two-colouring";
  }
  return "?";
}

MatchingIndexReport matching_index(const Graph& g) {
  MatchingIndexReport r;
  GraphStats stats = graph_stats(g);
  if (stats.is_k4) {
    r.mu = 3;
    r.witness = IndexWitness::K4;
    return r;
  }
  if (g.vertex_count() == 0 || !maximum_matching(g).is_perfect()) {
    r.mu = 0;
    r.witness = IndexWitness::NoPerfectMatching;
    return r;
  }

  MatchingCoveredSubgraph mcg = matching_covered_subgraph(g);
  r.mcg_edges_removed = mcg.removed;
  const Graph& h = mcg.graph;

  // The probe vertex of the decision procedure; a 2-colourable graph has
  // maximum degree 4.
  r.probe_vertex = 0;
  r.probe_degree = h.degree(0);
  if (r.probe_degree >= 5) {
    r.mu = 1;
    r.witness = IndexWitness::Trivial1Colouring;
    return r;
  }

  std::optional<CycleLabelling> cycle = find_alternating_hamiltonian(h);
  if (!cycle) {
    r.mu = 1;
    r.witness = IndexWitness::NoAlternatingHamiltonian;
    return r;
  }
  r.cycle = cycle;

  PropertyReport props = check_h_properties(h, *cycle);
  const std::pair<const char*, const PropertyCheck*> checks[] = {
      {"p1", &props.p1}, {"p2", &props.p2}, {"p3", &props.p3}};
  for (auto [name, check] : checks) {
    if (!check->pass) {
      r.mu = 1;
      r.witness = IndexWitness::PropertyFailure;
      r.failed_property = name;
      r.property_witness = check->witness;
      return r;
    }
  }

  MonochromaticColouring colouring = construct_two_colouring(h, *cycle);
  for (const Edge& e : mcg.removed) colouring.set(e, 1);
  r.mu = 2;
  r.witness = IndexWitness::TwoColouring;
  r.colouring = std::move(colouring);
  return r;
}

std::string result_line(const MatchingIndexReport& r) {
  std::string out = "RESULT index mu=" + std::to_string(r.mu) +
                    " witness=" + std::string(witness_tag(r.witness));
  switch (r.witness) {
    case IndexWitness::Trivial1Colouring:
      out += ":vertex-" + std::to_string(r.probe_vertex) + "-degree-" +
             std::to_string(r.probe_degree);
      break;
    case IndexWitness::PropertyFailure:
      out += ":" + r.failed_property + ":" + r.property_witness;
      break;
    case IndexWitness::TwoColouring: {
      out += ":";
      auto order = r.cycle->order();
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += '-';
        out += std::to_string(order[i]);
      }
      break;
    }
    default:
      break;
  }
  return out;
}

}  // namespace pmindex
