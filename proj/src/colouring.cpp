#include "pmindex/colouring.hpp"

#include <cstdint>

#include "pmindex/errors.hpp"
#include "text_format.hpp"

namespace pmindex {

namespace {

template <typename Map>
void require_domain(const Map& entries, const Graph& g) {
  if (entries.size() != static_cast<std::size_t>(g.edge_count())) {
    throw PreconditionError("colouring covers " + std::to_string(entries.size()) +
                            " edges but the graph has " +
                            std::to_string(g.edge_count()));
  }
  for (const auto& [edge, colour] : entries) {
    if (!g.edge_id(edge)) {
      throw PreconditionError("colouring mentions non-edge " + to_string(edge));
    }
  }
}

}  // namespace

MonochromaticColouring::MonochromaticColouring(const Graph& g,
                                               const std::vector<Colour>& colours) {
  if (colours.size() != static_cast<std::size_t>(g.edge_count())) {
    throw PreconditionError("colour vector length does not match edge count");
  }
  for (EdgeId id = 0; id < g.edge_count(); ++id) colour_[g.edge(id)] = colours[id];
}

std::optional<Colour> MonochromaticColouring::colour(const Edge& e) const {
  auto it = colour_.find(e);
  if (it == colour_.end()) return std::nullopt;
  return it->second;
}

std::set<Colour> MonochromaticColouring::palette() const {
  std::set<Colour> out;
  for (const auto& [e, c] : colour_) out.insert(c);
  return out;
}

std::vector<Colour> MonochromaticColouring::aligned(const Graph& g) const {
  require_domain(colour_, g);
  std::vector<Colour> out(g.edge_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) out[id] = colour_.at(g.edge(id));
  return out;
}

HalfEdgeColouring::HalfEdgeColouring(const MonochromaticColouring& c) {
  for (const auto& [e, colour] : c.entries()) colour_[e] = {colour, colour};
}

std::optional<HalfColours> HalfEdgeColouring::colour(const Edge& e) const {
  auto it = colour_.find(e);
  if (it == colour_.end()) return std::nullopt;
  return it->second;
}

std::set<Colour> HalfEdgeColouring::palette() const {
  std::set<Colour> out;
  for (const auto& [e, c] : colour_) {
    out.insert(c.at_u);
    out.insert(c.at_v);
  }
  return out;
}

std::vector<HalfColours> HalfEdgeColouring::aligned(const Graph& g) const {
  require_domain(colour_, g);
  std::vector<HalfColours> out(g.edge_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) out[id] = colour_.at(g.edge(id));
  return out;
}

ColouredGraph parse_coloured_graph(std::string_view text) {
  auto lines = detail::payload_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header 'p <n> <m>'");
  auto header = detail::parse_header(lines.front());

  std::vector<Edge> edges;
  std::vector<Colour> colours;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (static_cast<EdgeId>(edges.size()) == header.m) {
      throw ParseError(line.number, "more edge lines than declared");
    }
    Edge e = detail::parse_edge_prefix(line, 4, header.n);
    if (!seen.insert(e).second) {
      throw ParseError(line.number, "duplicate edge " + to_string(e));
    }
    auto c = detail::parse_integer(line.tokens[3], line.number, "colour");
    if (c < 0 || c > INT32_MAX) throw ParseError(line.number, "colour out of range");
    edges.push_back(e);
    colours.push_back(static_cast<Colour>(c));
  }
  if (static_cast<EdgeId>(edges.size()) != header.m) {
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(header.m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  ColouredGraph out;
  MonochromaticColouring colouring;
  for (std::size_t i = 0; i < edges.size(); ++i) colouring.set(edges[i], colours[i]);
  out.graph = Graph(header.n, std::move(edges));
  out.colouring = std::move(colouring);
  return out;
}

std::string serialize_coloured_graph(const Graph& g, const MonochromaticColouring& c) {
  auto colours = c.aligned(g);
  std::string out = "p " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           std::to_string(colours[id]) + "\n";
  }
  return out;
}

std::string export_dot(const Graph& g, const AnyColouring& colouring) {
  std::vector<std::string> attributes(g.edge_count());
  if (const auto* mono = std::get_if<MonochromaticColouring>(&colouring)) {
    auto colours = mono->aligned(g);
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      attributes[id] = " [label=\"" + std::to_string(colours[id]) + "\"]";
    }
  } else if (const auto* half = std::get_if<HalfEdgeColouring>(&colouring)) {
    auto colours = half->aligned(g);
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      const HalfColours& c = colours[id];
      if (c.monochromatic()) {
        attributes[id] = " [label=\"" + std::to_string(c.at_u) + "\"]";
      } else {
        attributes[id] = " [taillabel=\"" + std::to_string(c.at_u) +
                         "\", headlabel=\"" + std::to_string(c.at_v) + "\"]";
      }
    }
  }

  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v) + ";\n";
  }
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) +
           attributes[id] + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace pmindex
