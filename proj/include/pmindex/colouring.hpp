#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pmindex/graph.hpp"

namespace pmindex {

using Colour = std::int32_t;

/// One colour per edge. Not necessarily proper.
class MonochromaticColouring {
 public:
  MonochromaticColouring() = default;
  /// Colours g's edges by id: colours[id] is the colour of g.edge(id).
  MonochromaticColouring(const Graph& g, const std::vector<Colour>& colours);

  void set(const Edge& e, Colour c) { colour_[e] = c; }
  std::optional<Colour> colour(const Edge& e) const;
  std::size_t size() const { return colour_.size(); }
  std::set<Colour> palette() const;
  const std::map<Edge, Colour>& entries() const { return colour_; }

  /// Colours indexed by g's edge ids. Throws PreconditionError unless the
  /// colouring's domain is exactly E(g).
  std::vector<Colour> aligned(const Graph& g) const;

  friend bool operator==(const MonochromaticColouring&,
                         const MonochromaticColouring&) = default;

 private:
  std::map<Edge, Colour> colour_;
};

/// Colours of the two halves of an edge {u,v} (u < v).
struct HalfColours {
  Colour at_u = 0;
  Colour at_v = 0;

  bool monochromatic() const { return at_u == at_v; }
  Colour at(const Edge& e, Vertex x) const { return x == e.u ? at_u : at_v; }

  friend bool operator==(const HalfColours&, const HalfColours&) = default;
};

/// One colour per half-edge; an edge is bi-chromatic when its halves differ.
class HalfEdgeColouring {
 public:
  HalfEdgeColouring() = default;
  /// Lifts a monochromatic colouring (both halves get the edge colour).
  explicit HalfEdgeColouring(const MonochromaticColouring& c);

  void set(const Edge& e, HalfColours c) { colour_[e] = c; }
  std::optional<HalfColours> colour(const Edge& e) const;
  std::size_t size() const { return colour_.size(); }
  /// Every colour appearing on some half-edge.
  std::set<Colour> palette() const;
  const std::map<Edge, HalfColours>& entries() const { return colour_; }

  std::vector<HalfColours> aligned(const Graph& g) const;

 private:
  std::map<Edge, HalfColours> colour_;
};

struct ColouredGraph {
  Graph graph;
  MonochromaticColouring colouring;
};

/// Parses the .ecg format: "p <n> <m>" then m lines "e <u> <v> <c>" with a
/// non-negative colour per edge. Same comment/newline rules as .eg.
ColouredGraph parse_coloured_graph(std::string_view text);
std::string serialize_coloured_graph(const Graph& g,
                                     const MonochromaticColouring& c);

using AnyColouring =
    std::variant<std::monostate, MonochromaticColouring, HalfEdgeColouring>;

/// Graphviz text with one node line per vertex and one edge line per edge, in
/// canonical order. Monochromatic colours go to `label`; bi-chromatic edges
/// carry `taillabel` (colour at u) and `headlabel` (colour at v).
std::string export_dot(const Graph& g, const AnyColouring& colouring = {});

}  // namespace pmindex
