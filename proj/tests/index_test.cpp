#include <gtest/gtest.h>

#include "catalogue.hpp"
#include "fixtures.hpp"
#include "pmindex/errors.hpp"
#include "pmindex/index.hpp"
#include "pmindex/oracle.hpp"

namespace pmindex {
namespace {

Graph with_chords(int n, std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Edge> chords;
  for (auto [a, b] : xs) chords.emplace_back(a, b);
  return cycle_with_chords(n, chords);
}

TEST(VerifyPmValid, Examples) {
  Graph c6 = cycle_graph(6);
  PmValidity alt = verify_pm_valid(c6, testing::alternating_cycle_colouring(3));
  EXPECT_TRUE(alt.valid);
  EXPECT_EQ(alt.mu_of_colouring, 2);

  PmValidity one = verify_pm_valid(c6, MonochromaticColouring(c6, std::vector<Colour>(6, 1)));
  EXPECT_TRUE(one.valid);
  EXPECT_EQ(one.mu_of_colouring, 1);

  MonochromaticColouring bad(c6, std::vector<Colour>(6, 1));
  bad.set(Edge(0, 1), 2);
  PmValidity broken = verify_pm_valid(c6, bad);
  EXPECT_FALSE(broken.valid);
  ASSERT_TRUE(broken.violating_matching);
  EXPECT_EQ(broken.violating_matching->edges(),
            (std::vector<Edge>{Edge(0, 1), Edge(2, 3), Edge(4, 5)}));
}

TEST(VerifyPmValid, EmptyColourClass) {
  std::vector<Edge> chord{Edge(0, 2)};
  Graph g = cycle_with_chords(6, chord);
  MonochromaticColouring c(g, std::vector<Colour>(g.edge_count(), 1));
  c.set(Edge(0, 2), 5);
  PmValidity v = verify_pm_valid(g, c);
  EXPECT_FALSE(v.valid);
  EXPECT_FALSE(v.violating_matching);
  EXPECT_EQ(v.empty_colour, 5);
}

TEST(VerifyPmValid, Errors) {
  Graph c6 = cycle_graph(6);
  MonochromaticColouring partial;
  partial.set(Edge(0, 1), 1);
  EXPECT_THROW(verify_pm_valid(c6, partial), PreconditionError);
  Graph k8 = complete_graph(8);
  EXPECT_THROW(verify_pm_valid(k8, MonochromaticColouring(k8, std::vector<Colour>(28, 1)), 10),
               LimitExceeded);
}

TEST(FindAlternatingHamiltonian, Examples) {
  Graph drum = with_chords(6, {{1, 3}, {0, 2}});
  auto c = find_alternating_hamiltonian(drum);
  ASSERT_TRUE(c);
  EXPECT_TRUE(c->is_hamiltonian_in(drum));
  EXPECT_FALSE(find_alternating_hamiltonian(petersen_graph()));
  auto c6 = find_alternating_hamiltonian(cycle_graph(6));
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->to_string(), "0,1,2,3,4,5");
}

TEST(MatchingIndex, Examples) {
  MatchingIndexReport k4 = matching_index(complete_graph(4));
  EXPECT_EQ(k4.mu, 3);
  EXPECT_EQ(result_line(k4), "RESULT index mu=3 witness=k4");

  MatchingIndexReport c6 = matching_index(with_chords(6, {{0, 2}}));
  EXPECT_EQ(c6.mu, 2);
  EXPECT_EQ(c6.mcg_edges_removed, std::vector<Edge>{Edge(0, 2)});
  ASSERT_TRUE(c6.colouring);
  EXPECT_EQ(c6.colouring->colour(Edge(0, 2)), 1);
  EXPECT_EQ(result_line(c6), "RESULT index mu=2 witness=two-colouring:0-1-2-3-4-5");

  MatchingIndexReport k33 = matching_index(complete_bipartite_graph(3, 3));
  EXPECT_EQ(k33.mu, 1);
  EXPECT_EQ(k33.witness, IndexWitness::PropertyFailure);
  EXPECT_EQ(k33.failed_property, "p1");

  MatchingIndexReport c5 = matching_index(cycle_graph(5));
  EXPECT_EQ(c5.mu, 0);
  EXPECT_EQ(result_line(c5), "RESULT index mu=0 witness=no-perfect-matching");
}

TEST(MatchingIndex, WitnessKinds) {
  MatchingIndexReport k6 = matching_index(complete_graph(6));
  EXPECT_EQ(k6.mu, 1);
  EXPECT_EQ(k6.witness, IndexWitness::Trivial1Colouring);
  EXPECT_EQ(k6.probe_degree, 5);
  EXPECT_EQ(result_line(k6), "RESULT index mu=1 witness=trivial-1-colouring:vertex-0-degree-5");

  MatchingIndexReport p = matching_index(petersen_graph());
  EXPECT_EQ(p.mu, 1);
  EXPECT_EQ(p.witness, IndexWitness::NoAlternatingHamiltonian);

  Graph two(8, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3), Edge(4, 5), Edge(5, 6),
                Edge(6, 7), Edge(4, 7)});
  MatchingIndexReport d = matching_index(two);
  EXPECT_EQ(d.mu, 1);
  EXPECT_EQ(d.witness, IndexWitness::NoAlternatingHamiltonian);

  EXPECT_EQ(matching_index(Graph()).mu, 0);
  EXPECT_EQ(witness_tag(IndexWitness::TwoColouring), "two-colouring");
}

TEST(MatchingIndex, PropertyFailureWitnessIsRecheckable) {
  for (const Graph& g : testing::connected_graphs(6)) {
    MatchingIndexReport r = matching_index(g);
    if (r.witness != IndexWitness::PropertyFailure) continue;
    Graph h = matching_covered_subgraph(g).graph;
    ASSERT_TRUE(r.cycle);
    PropertyReport p = check_h_properties(h, *r.cycle);
    const PropertyCheck& named =
        r.failed_property == "p1" ? p.p1 : r.failed_property == "p2" ? p.p2 : p.p3;
    EXPECT_FALSE(named.pass);
    EXPECT_EQ(named.witness, r.property_witness);
  }
}

TEST(MatchingIndex, TwoColouringWitnessVerifies) {
  int seen = 0;
  for (int n : {4, 6}) {
    for (const Graph& g : testing::connected_graphs(n)) {
      MatchingIndexReport r = matching_index(g);
      if (r.mu != 2) continue;
      ++seen;
      PmValidity v = verify_pm_valid(g, *r.colouring);
      EXPECT_TRUE(v.valid);
      EXPECT_EQ(v.mu_of_colouring, 2);
      EXPECT_TRUE(check_h_properties(matching_covered_subgraph(g).graph, *r.cycle).all_pass());
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(MatchingIndex, SameOnMcg) {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 * static_cast<int>(rng.between(2, 5));
    Graph g = testing::random_graph(rng, n, rng.between(1, 4), 8, true);
    Graph h = matching_covered_subgraph(g).graph;
    EXPECT_EQ(matching_index(g).mu, matching_index(h).mu) << serialize_graph(g);
  }
}

TEST(MatchingIndex, NeverEnumeratesOnTwoPath) {
  HGraph h = generate_h_graph(60, 20, 4);
  auto before = perfect_matching_enumerations_started();
  EXPECT_EQ(matching_index(h.graph).mu, 2);
  EXPECT_EQ(perfect_matching_enumerations_started(), before);
}

// mu(G,c) >= 2 exactly when an alternating Hamiltonian cycle exists.
TEST(ClassificationChain, AlternatingCycleIffAtLeastTwo) {
  std::vector<std::pair<Graph, MonochromaticColouring>> cases;
  for (const auto& f : testing::pm_valid_fixtures()) {
    if (f.graph.vertex_count() <= 10) cases.emplace_back(f.graph, f.colouring);
  }
  for (const Graph& g : testing::connected_graphs(6)) {
    if (count_perfect_matchings(g) == 0) continue;
    cases.emplace_back(g, MonochromaticColouring(g, std::vector<Colour>(g.edge_count(), 1)));
  }
  for (const auto& [g, c] : cases) {
    PmValidity v = verify_pm_valid(g, c);
    ASSERT_TRUE(v.valid);
    std::vector<Colour> colour = c.aligned(g);
    bool alternating = false;
    for (const CycleLabelling& h : enumerate_hamiltonian_cycles(g)) {
      std::set<Colour> even, odd;
      for (int p = 0; p < h.length(); ++p) {
        (p % 2 ? odd : even).insert(colour[*g.edge_id(h.c_edge(p))]);
      }
      if (even.size() == 1 && odd.size() == 1 && even != odd) alternating = true;
    }
    EXPECT_EQ(*v.mu_of_colouring >= 2, alternating) << serialize_graph(g);
  }
}

}  // namespace
}  // namespace pmindex
