#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmindex/colouring.hpp"
#include "pmindex/cycle.hpp"
#include "pmindex/graph.hpp"
#include "pmindex/matching.hpp"

namespace pmindex {

struct PmValidity {
  bool valid = false;
  /// Palette size, set when valid.
  std::optional<int> mu_of_colouring;
  /// First non-monochromatic perfect matching in enumeration order.
  std::optional<Matching> violating_matching;
  /// Smallest palette colour owning no monochromatic perfect matching.
  std::optional<Colour> empty_colour;
};

/// Checks both PMValid clauses by enumerating every perfect matching.
/// Throws PreconditionError unless c covers exactly E(g), LimitExceeded past
/// `limit` matchings.
PmValidity verify_pm_valid(const Graph& g, const MonochromaticColouring& c,
                           std::uint64_t limit = kDefaultPerfectMatchingLimit);

/// Fixes v = 0 and, for each pair of edges at v in ascending order, unites a
/// perfect matching through each; returns the first union that is a single
/// spanning cycle, walked from v along the first edge.
std::optional<CycleLabelling> find_alternating_hamiltonian(const Graph& g);

enum class IndexWitness {
  K4,
  NoPerfectMatching,
  Trivial1Colouring,
  NoAlternatingHamiltonian,
  PropertyFailure,
  TwoColouring,
};

std::string_view witness_tag(IndexWitness w);

struct MatchingIndexReport {
  int mu = 0;
  IndexWitness witness = IndexWitness::NoPerfectMatching;
  /// Edges of the input outside mcg (empty for mu 0 and 3).
  std::vector<Edge> mcg_edges_removed;

  /// Trivial1Colouring: the probe vertex of mcg and its degree.
  Vertex probe_vertex = 0;
  int probe_degree = 0;

  /// PropertyFailure and TwoColouring: the cycle found in mcg.
  std::optional<CycleLabelling> cycle;
  /// PropertyFailure: "p1", "p2" or "p3" and that property's witness.
  std::string failed_property;
  std::string property_witness;

  /// TwoColouring: PMValid on the input; edges outside mcg get colour 1.
  std::optional<MonochromaticColouring> colouring;
};

/// Decides mu(g) from the structure theorem. Never enumerates perfect
/// matchings.
MatchingIndexReport matching_index(const Graph& g);

/// "RESULT index mu=<k> witness=<tag>[:<payload>]".
std::string result_line(const MatchingIndexReport& r);

}  // namespace pmindex
