#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmindex/colouring.hpp"
#include "pmindex/graph.hpp"

namespace pmindex {

/// A cyclic vertex order. Position i holds order()[i]; positions are the
/// labels 0..L-1 whose parity defines odd and even vertices.
class CycleLabelling {
 public:
  CycleLabelling() = default;
  /// Throws PreconditionError unless `order` is a permutation of 0..L-1.
  explicit CycleLabelling(std::vector<Vertex> order);

  int length() const { return static_cast<int>(order_.size()); }
  std::span<const Vertex> order() const { return order_; }
  /// Vertex at position p, taken modulo the length.
  Vertex at(std::int64_t p) const;
  int position(Vertex v) const { return position_[v]; }

  bool adjacent(Vertex a, Vertex b) const;
  /// The C-edge joining positions p and p+1.
  Edge c_edge(std::int64_t p) const { return Edge(at(p), at(p + 1)); }

  /// Covers V(g), has even length and each consecutive pair is an edge.
  bool is_hamiltonian_in(const Graph& g) const;
  /// Throws PreconditionError with the first reason is_hamiltonian_in fails.
  void require_hamiltonian_in(const Graph& g) const;

  /// "v0,v1,...", the --cycle spelling.
  std::string to_string() const;

  friend bool operator==(const CycleLabelling&, const CycleLabelling&) = default;

 private:
  std::vector<Vertex> order_;
  std::vector<int> position_;
};

/// Parses "v0,v1,...". Throws ParseError on malformed ids; permutation checks
/// are left to the constructor.
CycleLabelling parse_cycle(std::string_view text);

enum class EdgeClass { CEdge, Legal, Illegal };
std::string_view to_string(EdgeClass c);

/// The two sides of a chord. part_p runs clockwise from the endpoint at the
/// smaller position; both lists are in clockwise order.
struct CrossingInfo {
  Edge edge;
  std::vector<Vertex> part_p;
  std::vector<Vertex> part_p_prime;
  int partition_weight = 0;
};

struct EdgeClassification {
  /// Indexed by edge id of the classified graph.
  std::vector<EdgeClass> classes;
  /// Set exactly for the non-C-edges.
  std::vector<std::optional<CrossingInfo>> crossing;

  EdgeClass of(const Graph& g, const Edge& e) const;
  int count(EdgeClass c) const;
};

/// Throws PreconditionError unless c is an even Hamiltonian cycle of g.
EdgeClassification classify_edges(const Graph& g, const CycleLabelling& c);

/// Whether f has exactly one endpoint strictly inside e's clockwise span.
/// Throws PreconditionError if e and f share an endpoint.
bool crosses(const CycleLabelling& c, const Edge& e, const Edge& f);

/// M_{i,j}: the C-edges {i,i+1},{i+2,i+3},...,{j-1,j}, positions mod L.
/// Throws PreconditionError when the clockwise distance from i to j is even.
std::vector<Edge> alternating_matching(const CycleLabelling& c, std::int64_t i,
                                       std::int64_t j);

/// A cycle path together with its edge count.
struct Strap {
  std::vector<Vertex> path;
  int length = 0;
};

struct Drum {
  Edge odd_edge;
  Edge even_edge;
  /// Sorted by the position at which each C-edge starts.
  std::array<Edge, 2> c_edges;
  /// Vertices strictly between the two C-edges, clockwise from the first.
  std::vector<Vertex> part_p;
  /// The remaining vertices off the drum, clockwise from the second C-edge.
  std::vector<Vertex> part_p_prime;
  /// straps[0] runs through part_p, straps[1] through part_p_prime.
  std::array<Strap, 2> straps;

  int partition_weight() const {
    return static_cast<int>(std::min(part_p.size(), part_p_prime.size()));
  }
};

/// A pair of vertex-disjoint crossing chords, first < second.
using CrossingPair = std::pair<Edge, Edge>;

struct DrumScan {
  /// Ordered by (odd_edge, even_edge).
  std::vector<Drum> drums;
  /// Crossing pairs of legal edges that form no drum, in canonical order.
  std::vector<CrossingPair> non_drum_pairs;
};

DrumScan find_drums(const Graph& g, const CycleLabelling& c);

struct PropertyCheck {
  bool pass = true;
  /// "u-v" for p1 and p3, "a-b/c-d" for p2; empty on pass.
  std::string witness;
};

struct PropertyReport {
  PropertyCheck p1;
  PropertyCheck p2;
  PropertyCheck p3;

  bool all_pass() const { return p1.pass && p2.pass && p3.pass; }
};

/// Evaluates all three properties independently; each witness is the first
/// failure in canonical edge order.
PropertyReport check_h_properties(const Graph& g, const CycleLabelling& c);

struct FamilyVerdict {
  bool member = false;
  std::string reason;
};

/// Never throws on a bad labelling; the verdict carries the reason instead.
FamilyVerdict is_in_family_h(const Graph& g, const CycleLabelling& c);

/// C-edge starting at an odd position: colour 1; at an even position: colour 2.
/// Each legal edge takes the colour of its drum's C-edges. Requires an even
/// Hamiltonian cycle with Properties 1-3; throws PreconditionError otherwise.
MonochromaticColouring construct_two_colouring(const Graph& g,
                                               const CycleLabelling& c);

struct HGraph {
  Graph graph;
  CycleLabelling cycle;
};

/// A 2n-cycle with drum_count pairwise non-crossing drums, then a random
/// rotation and vertex relabelling. Deterministic in seed.
/// Throws PreconditionError unless n >= 3 and 0 <= drum_count <= n/2.
HGraph generate_h_graph(int n, int drum_count, std::uint64_t seed);

struct Gadget {
  Vertex a, b, c, d;
  friend bool operator==(const Gadget&, const Gadget&) = default;
};

/// Whether a-b-c-d-a is a 4-cycle of g with deg(a) = deg(c) = 3.
bool is_gadget(const Graph& g, const Gadget& x);

/// First gadget by ascending a, then c > a, then common neighbours b < d.
/// Throws PreconditionError when |V| <= 4.
std::optional<Gadget> find_gadget(const Graph& g);

}  // namespace pmindex
