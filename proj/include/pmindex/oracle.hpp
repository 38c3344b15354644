#pragma once

#include <cstdint>
#include <vector>

#include "pmindex/cycle.hpp"
#include "pmindex/graph.hpp"
#include "pmindex/weighted.hpp"

namespace pmindex {

struct OracleBudget {
  /// Cap on the free units of the colouring search (see
  /// brute_force_matching_index).
  int max_edges = 14;
  int max_vertices = 12;
  std::uint64_t max_pm = 1'000'000;
};

/// mu(g) straight from the definition: the largest k such that some surjective
/// k-colouring of mcg(g) is PMValid. Tries k <= 3 unless no_cap, in which case
/// k runs up to the number of units.
///
/// mcg is found by enumerating perfect matchings. Edges of mcg that share a
/// perfect matching must share a colour in any PMValid colouring, so the search
/// colours the classes of that relation rather than single edges; max_edges
/// bounds the number of classes. Throws LimitExceeded past the budget.
int brute_force_matching_index(const Graph& g, const OracleBudget& budget = {},
                               bool no_cap = false);

/// Every Hamiltonian cycle once, starting at vertex 0 with order[1] <
/// order[L-1], sorted. Throws LimitExceeded when n > budget.max_vertices.
std::vector<CycleLabelling> enumerate_hamiltonian_cycles(const Graph& g,
                                                         const OracleBudget& budget = {});

/// Validity by direct definition: every vertex colouring over the palette is
/// filtered and weighed on its own. Throws LimitExceeded when
/// palette^n > 10^7.
WeightedValidityReport brute_force_k_valid(const WeightedColouredGraph& w,
                                           const OracleBudget& budget = {});

}  // namespace pmindex
