#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "pmindex/errors.hpp"
#include "pmindex/matching.hpp"

namespace pmindex {
namespace {

using testing::brute_max_matching;
using testing::brute_perfect_matchings;
using testing::random_graph;

std::vector<Edge> edges(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Edge> out;
  for (auto [a, b] : xs) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Matching, RejectsOverlappingEdges) {
  std::vector<Edge> bad{Edge(0, 1), Edge(1, 2)};
  EXPECT_THROW(Matching(3, bad), PreconditionError);
}

TEST(MaximumMatching, Examples) {
  Matching k4 = maximum_matching(complete_graph(4));
  EXPECT_EQ(k4.size(), 2u);
  EXPECT_TRUE(k4.is_perfect());
  Matching c5 = maximum_matching(cycle_graph(5));
  EXPECT_EQ(c5.size(), 2u);
  EXPECT_FALSE(c5.is_perfect());
  Graph p = petersen_graph();
  Matching pm = maximum_matching(p);
  EXPECT_EQ(pm.size(), 5u);
  EXPECT_EQ(static_cast<int>(pm.size()), brute_max_matching(p));
}

TEST(MaximumMatching, AgreesWithBruteForce) {
  Rng rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    int n = static_cast<int>(rng.between(1, 10));
    std::uint64_t num = rng.between(1, 5);
    Graph g = random_graph(rng, n, num, 8, false);
    Matching m = maximum_matching(g);
    ASSERT_EQ(static_cast<int>(m.size()), brute_max_matching(g)) << serialize_graph(g);
    for (const Edge& e : m.edges()) ASSERT_TRUE(g.has_edge(e.u, e.v));
  }
}

TEST(PerfectMatchingThrough, Examples) {
  auto c6 = perfect_matching_through(cycle_graph(6), Edge(0, 1));
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->edges(), edges({{0, 1}, {2, 3}, {4, 5}}));

  std::vector<Edge> chord{Edge(0, 2)};
  EXPECT_FALSE(perfect_matching_through(cycle_with_chords(6, chord), Edge(0, 2)));

  auto k4 = perfect_matching_through(complete_graph(4), Edge(0, 2));
  ASSERT_TRUE(k4);
  EXPECT_EQ(k4->edges(), edges({{0, 2}, {1, 3}}));

  EXPECT_THROW(perfect_matching_through(cycle_graph(6), Edge(0, 3)), PreconditionError);
}

TEST(PerfectMatchingThrough, AgreesWithEnumeration) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 * static_cast<int>(rng.between(2, 5));
    Graph g = random_graph(rng, n, 1, 3, rng.chance(1, 2));
    auto pms = brute_perfect_matchings(g);
    for (const Edge& e : g.edges()) {
      bool expected = std::any_of(pms.begin(), pms.end(), [&](const std::vector<Edge>& pm) {
        return std::find(pm.begin(), pm.end(), e) != pm.end();
      });
      auto m = perfect_matching_through(g, e);
      ASSERT_EQ(m.has_value(), expected) << serialize_graph(g) << to_string(e);
      if (m) {
        EXPECT_TRUE(m->is_perfect());
        EXPECT_TRUE(m->contains(e));
      }
    }
  }
}

TEST(EnumeratePerfectMatchings, Examples) {
  EXPECT_EQ(enumerate_perfect_matchings(cycle_graph(6)).size(), 2u);
  EXPECT_EQ(enumerate_perfect_matchings(complete_graph(4)).size(), 3u);

  std::vector<Edge> drum{Edge(1, 3), Edge(0, 2)};
  auto pms = enumerate_perfect_matchings(cycle_with_chords(6, drum));
  ASSERT_EQ(pms.size(), 3u);
  std::set<std::vector<Edge>> got;
  for (const Matching& m : pms) got.insert(m.edges());
  std::set<std::vector<Edge>> want{edges({{0, 1}, {2, 3}, {4, 5}}),
                                   edges({{1, 2}, {3, 4}, {0, 5}}),
                                   edges({{1, 3}, {0, 2}, {4, 5}})};
  EXPECT_EQ(got, want);
  EXPECT_EQ(pms.front().edges(), edges({{0, 1}, {2, 3}, {4, 5}}));
}

TEST(EnumeratePerfectMatchings, LimitExceeded) {
  EXPECT_THROW(enumerate_perfect_matchings(complete_graph(6), 14), LimitExceeded);
  EXPECT_EQ(enumerate_perfect_matchings(complete_graph(6), 15).size(), 15u);
  EXPECT_EQ(count_perfect_matchings(complete_graph(8)), 105u);
}

TEST(EnumeratePerfectMatchings, AgreesWithBruteForce) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng.between(0, 10));
    Graph g = random_graph(rng, n, rng.between(1, 6), 8, rng.chance(1, 2));
    auto pms = enumerate_perfect_matchings(g);
    std::set<std::vector<Edge>> distinct;
    for (const Matching& m : pms) {
      ASSERT_TRUE(m.is_perfect());
      distinct.insert(m.edges());
    }
    ASSERT_EQ(distinct.size(), pms.size());
    auto brute = brute_perfect_matchings(g);
    ASSERT_EQ(std::set<std::vector<Edge>>(brute.begin(), brute.end()), distinct);
  }
}

TEST(MatchingCoveredSubgraph, Examples) {
  Graph k4 = complete_graph(4);
  EXPECT_EQ(matching_covered_subgraph(k4).graph, k4);

  std::vector<Edge> chord02{Edge(0, 2)};
  auto c6 = matching_covered_subgraph(cycle_with_chords(6, chord02));
  EXPECT_EQ(c6.graph, cycle_graph(6));
  EXPECT_EQ(c6.removed, std::vector<Edge>{Edge(0, 2)});

  std::vector<Edge> chord03{Edge(0, 3)};
  Graph g = cycle_with_chords(6, chord03);
  EXPECT_EQ(matching_covered_subgraph(g).graph, g);

  EXPECT_THROW(matching_covered_subgraph(cycle_graph(5)), PreconditionError);
}

TEST(MatchingCoveredSubgraph, IdempotentAndFaithful) {
  Rng rng(23);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 * static_cast<int>(rng.between(2, 5));
    Graph g = random_graph(rng, n, rng.between(1, 4), 8, true);
    auto mcg = matching_covered_subgraph(g);
    EXPECT_EQ(mcg.graph.vertex_count(), g.vertex_count());
    EXPECT_EQ(matching_covered_subgraph(mcg.graph).graph, mcg.graph);
    auto pms = brute_perfect_matchings(g);
    std::set<Edge> used;
    for (const auto& pm : pms) used.insert(pm.begin(), pm.end());
    for (const Edge& e : mcg.graph.edges()) EXPECT_TRUE(used.count(e));
    for (const Edge& e : mcg.removed) EXPECT_FALSE(used.count(e));
    EXPECT_EQ(used.size(), static_cast<std::size_t>(mcg.graph.edge_count()));
    ++checked;
  }
  EXPECT_EQ(checked, 300);
}

TEST(Enumeration, CounterAdvances) {
  auto before = perfect_matching_enumerations_started();
  count_perfect_matchings(cycle_graph(6));
  EXPECT_GT(perfect_matching_enumerations_started(), before);
}

}  // namespace
}  // namespace pmindex
