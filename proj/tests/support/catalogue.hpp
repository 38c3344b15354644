#pragma once

#include <cstdint>
#include <vector>

#include "pmindex/graph.hpp"

namespace pmindex::testing {

/// Canonical code of a graph on at most 11 vertices: the upper triangle of the
/// adjacency matrix under the lexicographically smallest admissible relabelling.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class of graphs on n <= 8 vertices,
/// built by adding edges to canonical representatives level by level.
std::vector<Graph> all_graphs(int n);

/// The connected members of all_graphs(n).
std::vector<Graph> connected_graphs(int n);

bool is_connected(const Graph& g);

}  // namespace pmindex::testing
