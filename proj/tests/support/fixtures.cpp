#include "fixtures.hpp"

#include <algorithm>
#include <map>

#include "catalogue.hpp"
#include "pmindex/cycle.hpp"
#include "pmindex/index.hpp"
#include "pmindex/matching.hpp"

namespace pmindex::testing {

Graph random_graph(Rng& rng, int n, std::uint64_t num, std::uint64_t den, bool plant_pm) {
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  if (plant_pm) {
    std::vector<Vertex> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    rng.shuffle(perm);
    for (int i = 0; i + 1 < n; i += 2) {
      edges.emplace_back(perm[i], perm[i + 1]);
      used[perm[i]][perm[i + 1]] = used[perm[i + 1]][perm[i]] = true;
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!used[u][v] && rng.chance(num, den)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

namespace {

int max_matching_from(const Graph& g, std::vector<bool>& used, Vertex v) {
  while (v < g.vertex_count() && used[v]) ++v;
  if (v == g.vertex_count()) return 0;
  used[v] = true;
  int best = max_matching_from(g, used, v + 1);
  for (Vertex w : g.neighbours(v)) {
    if (used[w]) continue;
    used[w] = true;
    best = std::max(best, 1 + max_matching_from(g, used, v + 1));
    used[w] = false;
  }
  used[v] = false;
  return best;
}

void pms_from(const Graph& g, std::vector<bool>& used, std::vector<Edge>& chosen,
              std::vector<std::vector<Edge>>& out) {
  Vertex v = 0;
  while (v < g.vertex_count() && used[v]) ++v;
  if (v == g.vertex_count()) {
    std::vector<Edge> pm = chosen;
    std::sort(pm.begin(), pm.end());
    out.push_back(pm);
    return;
  }
  used[v] = true;
  for (Vertex w : g.neighbours(v)) {
    if (used[w]) continue;
    used[w] = true;
    chosen.emplace_back(v, w);
    pms_from(g, used, chosen, out);
    chosen.pop_back();
    used[w] = false;
  }
  used[v] = false;
}

MonochromaticColouring k4_three_colouring(const Graph& k4) {
  MonochromaticColouring c;
  for (const Edge& e : k4.edges()) {
    // {0,1},{2,3} -> 1; {0,2},{1,3} -> 2; {0,3},{1,2} -> 3.
    Vertex partner_of_0 = e.touches(0) ? e.other(0) : 6 - e.u - e.v;
    c.set(e, partner_of_0);
  }
  return c;
}

MonochromaticColouring uniform(const Graph& g, Colour colour) {
  return MonochromaticColouring(g, std::vector<Colour>(g.edge_count(), colour));
}

}  // namespace

int brute_max_matching(const Graph& g) {
  std::vector<bool> used(g.vertex_count(), false);
  return max_matching_from(g, used, 0);
}

std::vector<std::vector<Edge>> brute_perfect_matchings(const Graph& g) {
  std::vector<std::vector<Edge>> out;
  if (g.vertex_count() % 2 != 0) return out;
  std::vector<bool> used(g.vertex_count(), false);
  std::vector<Edge> chosen;
  pms_from(g, used, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

Graph alternating_cycle(int n) { return cycle_graph(2 * n); }

MonochromaticColouring alternating_cycle_colouring(int n) {
  MonochromaticColouring c;
  for (int i = 0; i < 2 * n; ++i) c.set(Edge(i, (i + 1) % (2 * n)), 1 + i % 2);
  return c;
}

std::vector<ColouredFixture> pm_valid_fixtures() {
  std::vector<ColouredFixture> out;
  Graph k4 = complete_graph(4);
  out.push_back({"k4_three", k4, k4_three_colouring(k4), 3});
  out.push_back({"k4_mono", k4, uniform(k4, 1), 1});
  for (int n = 2; n <= 6; ++n) {
    out.push_back({"c" + std::to_string(2 * n) + "_alt", alternating_cycle(n),
                   alternating_cycle_colouring(n), 2});
  }
  Graph k33 = complete_bipartite_graph(3, 3);
  out.push_back({"k33_mono", k33, uniform(k33, 1), 1});
  out.push_back({"k6_mono", complete_graph(6), uniform(complete_graph(6), 1), 1});
  out.push_back({"petersen_mono", petersen_graph(), uniform(petersen_graph(), 7), 1});

  std::vector<Edge> chord{Edge(0, 2)};
  Graph c6_chord = cycle_with_chords(6, chord);
  out.push_back({"c6_chord_0_2", c6_chord, *matching_index(c6_chord).colouring, 2});

  for (int n = 3; n <= 6; ++n) {
    for (int drums = 0; drums <= n / 2; ++drums) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        HGraph h = generate_h_graph(n, drums, seed);
        out.push_back({"h_" + std::to_string(n) + "_" + std::to_string(drums) + "_" +
                           std::to_string(seed),
                       h.graph, construct_two_colouring(h.graph, h.cycle), 2});
      }
    }
  }
  return out;
}

std::vector<ColouredFixture> catalogue_two_colourings(int n) {
  std::vector<ColouredFixture> out;
  int index = 0;
  for (const Graph& g : connected_graphs(n)) {
    MatchingIndexReport r = matching_index(g);
    if (r.mu != 2) continue;
    out.push_back({"catalogue_" + std::to_string(n) + "_" + std::to_string(index++), g,
                   *r.colouring, 2});
  }
  return out;
}

WeightedColouredGraph rational_lift(const Graph& g, const MonochromaticColouring& c) {
  std::vector<Colour> colour = c.aligned(g);
  std::map<Colour, long> pm_count;
  for (const auto& pm : enumerate_perfect_matchings(g)) {
    ++pm_count[*c.colour(pm.edges().front())];
  }
  std::vector<ComplexRational> weight(g.edge_count(), ComplexRational(1));
  for (EdgeId id : g.incident(0)) {
    auto it = pm_count.find(colour[id]);
    if (it != pm_count.end()) weight[id] = ComplexRational(mpq_class(1, it->second));
  }
  return make_weighted(g, HalfEdgeColouring(c), weight);
}

WeightedColouredGraph c4_cancellation() {
  Graph g = cycle_graph(4);
  MonochromaticColouring c(g, std::vector<Colour>(4, 1));
  std::vector<ComplexRational> w(4);
  for (EdgeId id = 0; id < 4; ++id) {
    const Edge& e = g.edge(id);
    bool imaginary = e == Edge(1, 2) || e == Edge(0, 3);
    w[id] = imaginary ? ComplexRational::i() : ComplexRational(1);
  }
  return make_weighted(g, HalfEdgeColouring(c), w);
}

WeightedColouredGraph ghz6() {
  return parse_weighted_graph(
      "p 6 9\n"
      "e 0 1 0 0 1 0\n"
      "e 0 3 1 1 1 0\n"
      "e 0 4 1 0 0 1\n"
      "e 0 5 1 1 1 0\n"
      "e 1 2 1 1 1 0\n"
      "e 2 3 0 0 1 0\n"
      "e 3 4 1 1 1 0\n"
      "e 3 5 1 0 0 1\n"
      "e 4 5 0 0 1 0\n");
}

std::vector<WeightedFixture> weighted_fixtures() {
  std::vector<WeightedFixture> out;
  out.push_back({"c4_cancellation", c4_cancellation(), true, std::nullopt});
  out.push_back({"ghz6", ghz6(), true, 2});

  {
    Graph g = alternating_cycle(3);
    auto c = alternating_cycle_colouring(3);
    std::vector<ComplexRational> w(g.edge_count(), ComplexRational(1));
    out.push_back({"c6_alt_unit", make_weighted(g, HalfEdgeColouring(c), w), true, 2});
    w[0] = ComplexRational(2);
    out.push_back({"c6_alt_doubled", make_weighted(g, HalfEdgeColouring(c), w), true,
                   std::nullopt});
  }

  for (const ColouredFixture& f : pm_valid_fixtures()) {
    if (f.graph.vertex_count() > 8) continue;
    out.push_back({f.name + "_lift", rational_lift(f.graph, f.colouring), true, f.mu});
  }

  // Random bi-chromatic instances; verdict unknown, used for agreement checks.
  Rng rng(20240611);
  const ComplexRational palette_w[] = {ComplexRational(1), ComplexRational(-1),
                                       ComplexRational::i(), ComplexRational(0, -1),
                                       ComplexRational(mpq_class(1, 2))};
  for (int i = 0; i < 24; ++i) {
    int n = i % 2 == 0 ? 4 : 6;
    Graph g = random_graph(rng, n, 1, 2, true);
    HalfEdgeColouring c;
    std::vector<ComplexRational> w;
    for (const Edge& e : g.edges()) {
      c.set(e, {static_cast<Colour>(rng.below(2)), static_cast<Colour>(rng.below(2))});
      w.push_back(palette_w[rng.below(5)]);
    }
    out.push_back({"random_" + std::to_string(i), make_weighted(g, c, w), false, std::nullopt});
  }
  return out;
}

}  // namespace pmindex::testing
