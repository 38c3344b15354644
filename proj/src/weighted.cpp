#include "pmindex/weighted.hpp"

#include <algorithm>
#include <set>

#include "pmindex/errors.hpp"
#include "pmindex/index.hpp"
#include "text_format.hpp"

namespace pmindex {

WeightedColouredGraph make_weighted(Graph g, HalfEdgeColouring c,
                                    std::vector<ComplexRational> weight) {
  c.aligned(g);
  if (weight.size() != static_cast<std::size_t>(g.edge_count())) {
    throw PreconditionError("weight vector length does not match edge count");
  }
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (weight[id].is_zero()) {
      throw PreconditionError("edge " + to_string(g.edge(id)) + " has weight 0");
    }
  }
  return {std::move(g), std::move(c), std::move(weight)};
}

WeightedColouredGraph parse_weighted_graph(std::string_view text) {
  auto lines = detail::payload_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header 'p <n> <m>'");
  auto header = detail::parse_header(lines.front());

  std::map<Edge, std::pair<HalfColours, ComplexRational>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (static_cast<EdgeId>(rows.size()) == header.m) {
      throw ParseError(line.number, "more edge lines than declared");
    }
    Edge e = detail::parse_edge_prefix(line, 7, header.n);
    auto cu = detail::parse_integer(line.tokens[3], line.number, "colour");
    auto cv = detail::parse_integer(line.tokens[4], line.number, "colour");
    if (cu < 0 || cv < 0 || cu > INT32_MAX || cv > INT32_MAX) {
      throw ParseError(line.number, "colour out of range");
    }
    ComplexRational w;
    try {
      w = ComplexRational(parse_rational(line.tokens[5]), parse_rational(line.tokens[6]));
    } catch (const ParseError& err) {
      throw ParseError(line.number, err.what());
    }
    if (w.is_zero()) throw ParseError(line.number, "zero weight on " + to_string(e));
    HalfColours halves{static_cast<Colour>(cu), static_cast<Colour>(cv)};
    if (!rows.try_emplace(e, halves, std::move(w)).second) {
      throw ParseError(line.number, "duplicate edge " + to_string(e));
    }
  }
  if (static_cast<EdgeId>(rows.size()) != header.m) {
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(header.m) + " edges, found " +
                         std::to_string(rows.size()));
  }

  std::vector<Edge> edges;
  HalfEdgeColouring colouring;
  std::vector<ComplexRational> weight;
  for (auto& [e, row] : rows) {
    edges.push_back(e);
    colouring.set(e, row.first);
    weight.push_back(std::move(row.second));
  }
  // rows is ordered canonically, which is exactly the graph's edge id order.
  return make_weighted(Graph(header.n, std::move(edges)), std::move(colouring),
                       std::move(weight));
}

std::string serialize_weighted_graph(const WeightedColouredGraph& w) {
  const Graph& g = w.graph;
  auto halves = w.colouring.aligned(g);
  std::string out = "p " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           std::to_string(halves[id].at_u) + " " + std::to_string(halves[id].at_v) + " " +
           w.weight[id].re().get_str() + " " + w.weight[id].im().get_str() + "\n";
  }
  return out;
}

bool is_monochromatic(const VertexColouring& vc) {
  return std::adjacent_find(vc.begin(), vc.end(), std::not_equal_to<>()) == vc.end();
}

std::string to_string(const VertexColouring& vc) {
  std::string out;
  for (std::size_t i = 0; i < vc.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(vc[i]);
  }
  return out;
}

FilteredGraph filter_by_vertex_colouring(const WeightedColouredGraph& w,
                                         const VertexColouring& vc) {
  const Graph& g = w.graph;
  if (vc.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw PreconditionError("vertex colouring does not cover every vertex");
  }
  auto halves = w.colouring.aligned(g);
  std::vector<bool> keep(g.edge_count());
  FilteredGraph out;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    keep[id] = halves[id].at_u == vc[e.u] && halves[id].at_v == vc[e.v];
    if (keep[id]) out.weight.push_back(w.weight[id]);
  }
  out.graph = g.with_edges(keep);
  return out;
}

ComplexRational vertex_colouring_weight(const WeightedColouredGraph& w,
                                        const VertexColouring& vc,
                                        std::optional<std::span<const Vertex>> subset,
                                        std::uint64_t limit) {
  FilteredGraph filtered = filter_by_vertex_colouring(w, vc);
  Graph h = std::move(filtered.graph);
  std::vector<ComplexRational> weight = std::move(filtered.weight);
  if (subset) {
    Graph induced = induced_subgraph(h, *subset);
    std::vector<Vertex> members(subset->begin(), subset->end());
    std::sort(members.begin(), members.end());
    std::vector<ComplexRational> induced_weight;
    for (const Edge& e : induced.edges()) {
      induced_weight.push_back(weight[*h.edge_id(members[e.u], members[e.v])]);
    }
    h = std::move(induced);
    weight = std::move(induced_weight);
  }
  ComplexRational total;
  for_each_perfect_matching(h, limit, [&](std::span<const EdgeId> ids) {
    ComplexRational product(1);
    for (EdgeId id : ids) product *= weight[id];
    total += product;
  });
  return total;
}

WeightedValidityReport verify_k_valid(const WeightedColouredGraph& w, std::uint64_t limit) {
  auto groups = detail::group_matchings<ComplexRational>(
      w.graph, w.colouring.aligned(w.graph), w.weight, ComplexRational(1), limit);
  WeightedValidityReport out;
  out.is_valid = true;
  int k = 0;
  const ComplexRational one(1);
  for (const auto& [vc, total] : groups) {
    bool ok;
    if (is_monochromatic(vc) && !vc.empty()) {
      out.monochromatic_weights[vc.front()] = total;
      ok = total == one;
      if (ok) ++k;
    } else {
      ok = total.is_zero();
    }
    if (!ok && out.is_valid) {
      out.is_valid = false;
      out.violating_vc = {vc, total};
    }
  }
  if (out.is_valid) out.k = k;
  return out;
}

LiftedInstance lift_weights(const Graph& g, const MonochromaticColouring& c,
                            std::uint64_t limit) {
  PmValidity validity = verify_pm_valid(g, c, limit);
  if (!validity.valid) throw PreconditionError("colouring is not PMValid");
  if (g.vertex_count() == 0) throw PreconditionError("graph has no vertices");

  const std::vector<Colour> colour = c.aligned(g);
  LiftedInstance out;
  out.graph = g;
  out.colouring = HalfEdgeColouring(c);
  for_each_perfect_matching(g, limit, [&](std::span<const EdgeId> ids) {
    ++out.pm_counts[colour[ids.front()]];
  });

  const mpq_class exponent(-2, g.vertex_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    out.weight.push_back({out.pm_counts.at(colour[id]), exponent});
    out.weight.back().exponent.canonicalize();
  }

  // Every PM is monochromatic of some colour i, so its weight is
  // pm_i^(sum of exponents); the sum must be exactly -1 for the PM to weigh
  // 1/pm_i and the colour total to be 1.
  bool exponents_ok = true;
  for (const auto& [k, count] : out.pm_counts) out.totals[k] = 0;
  for_each_perfect_matching(g, limit, [&](std::span<const EdgeId> ids) {
    const SymbolicWeight& first = out.weight[ids.front()];
    mpq_class sum = 0;
    for (EdgeId id : ids) {
      if (out.weight[id].base != first.base) exponents_ok = false;
      sum += out.weight[id].exponent;
    }
    if (sum != -1) exponents_ok = false;
    out.totals[colour[ids.front()]] += mpq_class(1, first.base);
  });
  for (auto& [k, total] : out.totals) total.canonicalize();

  out.verified = exponents_ok && std::all_of(out.totals.begin(), out.totals.end(),
                                             [](const auto& kv) { return kv.second == 1; });
  out.mu_bar_of_colouring = static_cast<int>(
      std::count_if(out.totals.begin(), out.totals.end(),
                    [](const auto& kv) { return kv.second == 1; }));
  return out;
}

MuBarBounds mu_bar_bounds(const Graph& g) {
  MuBarBounds out;
  MatchingIndexReport index = matching_index(g);
  out.mu = index.mu;
  out.lower = index.mu;
  if (index.mu == 0) {
    out.exact = 0;
    return out;
  }
  Graph mcg = g.with_edges([&] {
    std::vector<bool> keep(g.edge_count(), true);
    for (const Edge& e : index.mcg_edges_removed) keep[*g.edge_id(e)] = false;
    return keep;
  }());
  out.min_degree = graph_stats(mcg).min_degree;
  out.upper = std::min(out.min_degree, 3);
  if (mcg.vertex_count() > 4) {
    out.gadget = find_gadget(mcg);
    if (out.gadget) out.upper = std::min(out.upper, 2);
  }
  if (out.mu != 1 || out.lower == out.upper) out.exact = out.mu;
  return out;
}

}  // namespace pmindex
