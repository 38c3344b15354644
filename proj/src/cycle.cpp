#include "pmindex/cycle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <tuple>

#include "pmindex/errors.hpp"
#include "pmindex/matching.hpp"
#include "text_format.hpp"

namespace pmindex {

CycleLabelling::CycleLabelling(std::vector<Vertex> order)
    : order_(std::move(order)), position_(order_.size(), -1) {
  const auto n = static_cast<Vertex>(order_.size());
  for (int p = 0; p < n; ++p) {
    Vertex v = order_[p];
    if (v < 0 || v >= n) {
      throw PreconditionError("cycle vertex " + std::to_string(v) + " out of range");
    }
    if (position_[v] >= 0) {
      throw PreconditionError("cycle repeats vertex " + std::to_string(v));
    }
    position_[v] = p;
  }
}

Vertex CycleLabelling::at(std::int64_t p) const {
  const std::int64_t n = length();
  return order_[((p % n) + n) % n];
}

bool CycleLabelling::adjacent(Vertex a, Vertex b) const {
  int d = std::abs(position_[a] - position_[b]);
  return d == 1 || (d == length() - 1 && length() > 2);
}

namespace {

std::optional<std::string> hamiltonian_problem(const CycleLabelling& c, const Graph& g) {
  if (c.length() != g.vertex_count()) {
    return "cycle has " + std::to_string(c.length()) + " vertices but the graph has " +
           std::to_string(g.vertex_count());
  }
  if (c.length() < 4 || c.length() % 2 != 0) {
    return "cycle length must be even and at least 4";
  }
  for (int p = 0; p < c.length(); ++p) {
    Edge e = c.c_edge(p);
    if (!g.has_edge(e.u, e.v)) return "cycle step " + to_string(e) + " is not an edge";
  }
  return std::nullopt;
}

}  // namespace

bool CycleLabelling::is_hamiltonian_in(const Graph& g) const {
  return !hamiltonian_problem(*this, g);
}

void CycleLabelling::require_hamiltonian_in(const Graph& g) const {
  if (auto problem = hamiltonian_problem(*this, g)) throw PreconditionError(*problem);
}

std::string CycleLabelling::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(order_[i]);
  }
  return out;
}

CycleLabelling parse_cycle(std::string_view text) {
  std::vector<Vertex> order;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto value = detail::parse_integer(text.substr(start, end - start), 0, "cycle vertex");
    if (value < 0 || value > INT32_MAX) throw ParseError(0, "cycle vertex out of range");
    order.push_back(static_cast<Vertex>(value));
    start = end + 1;
  }
  return CycleLabelling(std::move(order));
}

std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::CEdge:
      return "c-edge";
    case EdgeClass::Legal:
      return "legal";
    case EdgeClass::Illegal:
      return "illegal";
  }
  return "?";
}

EdgeClass EdgeClassification::of(const Graph& g, const Edge& e) const {
  auto id = g.edge_id(e);
  if (!id) throw PreconditionError(to_string(e) + " is not an edge");
  return classes[*id];
}

int EdgeClassification::count(EdgeClass c) const {
  return static_cast<int>(std::count(classes.begin(), classes.end(), c));
}

namespace {

EdgeClass class_of(const CycleLabelling& c, const Edge& e) {
  if (c.adjacent(e.u, e.v)) return EdgeClass::CEdge;
  return (c.position(e.u) - c.position(e.v)) % 2 == 0 ? EdgeClass::Legal
                                                      : EdgeClass::Illegal;
}

std::vector<Vertex> arc(const CycleLabelling& c, std::int64_t from, std::int64_t to) {
  std::vector<Vertex> out;
  for (std::int64_t p = from; p <= to; ++p) out.push_back(c.at(p));
  return out;
}

// Chords in position form: lo < hi, with lo/hi the endpoint positions.
struct Chord {
  EdgeId id;
  Edge edge;
  int lo;
  int hi;
  EdgeClass cls;
  bool odd() const { return lo % 2 != 0; }
};

bool chords_cross(const Chord& a, const Chord& b) {
  bool lo_inside = a.lo < b.lo && b.lo < a.hi;
  bool hi_inside = a.lo < b.hi && b.hi < a.hi;
  return lo_inside != hi_inside;
}

std::vector<Chord> chords_of(const Graph& g, const CycleLabelling& c) {
  std::vector<Chord> out;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    EdgeClass cls = class_of(c, e);
    if (cls == EdgeClass::CEdge) continue;
    int a = c.position(e.u);
    int b = c.position(e.v);
    out.push_back({id, e, std::min(a, b), std::max(a, b), cls});
  }
  return out;
}

// The start position p of the C-edge {p, p+1} between positions a and b.
int c_edge_start(int a, int b) {
  int lo = std::min(a, b);
  int hi = std::max(a, b);
  return (hi - lo == 1) ? lo : hi;  // wrap edge {L-1, 0} starts at L-1
}

// Builds the drum for an odd-odd chord x and an even-even chord y when they
// cross and their endpoints pair up along the cycle.
std::optional<Drum> make_drum(const CycleLabelling& c, const Chord& x, const Chord& y) {
  if (!chords_cross(x, y)) return std::nullopt;
  const int L = c.length();
  auto near = [&](int p, int q) {
    int d = std::abs(p - q);
    return d == 1 || d == L - 1;
  };
  std::array<std::pair<int, int>, 2> pairing;
  if (near(x.lo, y.lo) && near(x.hi, y.hi)) {
    pairing = {{{x.lo, y.lo}, {x.hi, y.hi}}};
  } else if (near(x.lo, y.hi) && near(x.hi, y.lo)) {
    pairing = {{{x.lo, y.hi}, {x.hi, y.lo}}};
  } else {
    return std::nullopt;
  }
  int s1 = c_edge_start(pairing[0].first, pairing[0].second);
  int s2 = c_edge_start(pairing[1].first, pairing[1].second);
  if (s1 > s2) std::swap(s1, s2);

  Drum d;
  d.odd_edge = x.edge;
  d.even_edge = y.edge;
  d.c_edges = {c.c_edge(s1), c.c_edge(s2)};
  d.part_p = arc(c, s1 + 2, s2 - 1);
  d.part_p_prime = arc(c, s2 + 2, s1 + L - 1);
  d.straps[0].path = arc(c, s1 + 1, s2);
  d.straps[1].path = arc(c, s2 + 1, s1 + L);
  for (Strap& s : d.straps) s.length = static_cast<int>(s.path.size()) - 1;
  return d;
}

std::string pair_witness(const Edge& a, const Edge& b) {
  return to_string(std::min(a, b)) + "/" + to_string(std::max(a, b));
}

}  // namespace

EdgeClassification classify_edges(const Graph& g, const CycleLabelling& c) {
  c.require_hamiltonian_in(g);
  EdgeClassification out;
  out.classes.resize(g.edge_count());
  out.crossing.resize(g.edge_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    out.classes[id] = class_of(c, e);
    if (out.classes[id] == EdgeClass::CEdge) continue;
    int a = std::min(c.position(e.u), c.position(e.v));
    int b = std::max(c.position(e.u), c.position(e.v));
    CrossingInfo info;
    info.edge = e;
    info.part_p = arc(c, a + 1, b - 1);
    info.part_p_prime = arc(c, b + 1, a + c.length() - 1);
    info.partition_weight =
        static_cast<int>(std::min(info.part_p.size(), info.part_p_prime.size()));
    out.crossing[id] = std::move(info);
  }
  return out;
}

bool crosses(const CycleLabelling& c, const Edge& e, const Edge& f) {
  if (e.shares_endpoint(f)) {
    throw PreconditionError(to_string(e) + " and " + to_string(f) + " share an endpoint");
  }
  auto chord = [&](const Edge& x) {
    int a = c.position(x.u);
    int b = c.position(x.v);
    return Chord{0, x, std::min(a, b), std::max(a, b), EdgeClass::Legal};
  };
  return chords_cross(chord(e), chord(f));
}

std::vector<Edge> alternating_matching(const CycleLabelling& c, std::int64_t i,
                                       std::int64_t j) {
  const std::int64_t L = c.length();
  std::int64_t distance = (((j - i) % L) + L) % L;
  if (distance % 2 == 0) {
    throw PreconditionError("M_{i,j} needs an odd clockwise distance from i to j");
  }
  std::vector<Edge> out;
  for (std::int64_t p = i; p < i + distance; p += 2) out.push_back(c.c_edge(p));
  return out;
}

DrumScan find_drums(const Graph& g, const CycleLabelling& c) {
  c.require_hamiltonian_in(g);
  std::vector<Chord> legal;
  for (const Chord& ch : chords_of(g, c)) {
    if (ch.cls == EdgeClass::Legal) legal.push_back(ch);
  }
  DrumScan out;
  for (std::size_t i = 0; i < legal.size(); ++i) {
    for (std::size_t j = i + 1; j < legal.size(); ++j) {
      const Chord& a = legal[i];
      const Chord& b = legal[j];
      if (a.edge.shares_endpoint(b.edge) || !chords_cross(a, b)) continue;
      std::optional<Drum> drum;
      if (a.odd() != b.odd()) drum = a.odd() ? make_drum(c, a, b) : make_drum(c, b, a);
      if (drum) {
        out.drums.push_back(std::move(*drum));
      } else {
        out.non_drum_pairs.emplace_back(a.edge, b.edge);
      }
    }
  }
  std::sort(out.drums.begin(), out.drums.end(), [](const Drum& x, const Drum& y) {
    return std::tie(x.odd_edge, x.even_edge) < std::tie(y.odd_edge, y.even_edge);
  });
  return out;
}

PropertyReport check_h_properties(const Graph& g, const CycleLabelling& c) {
  c.require_hamiltonian_in(g);
  std::vector<Chord> chords = chords_of(g, c);
  PropertyReport report;

  for (const Chord& ch : chords) {
    if (ch.cls == EdgeClass::Illegal) {
      report.p1 = {false, to_string(ch.edge)};
      break;
    }
  }

  // Drum membership counts per legal chord, collected while scanning every
  // crossing pair (illegal chords included) for p2.
  std::vector<int> drums_of(chords.size(), 0);
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      const Chord& a = chords[i];
      const Chord& b = chords[j];
      if (a.edge.shares_endpoint(b.edge) || !chords_cross(a, b)) continue;
      bool drum = a.cls == EdgeClass::Legal && b.cls == EdgeClass::Legal &&
                  a.odd() != b.odd() &&
                  (a.odd() ? make_drum(c, a, b) : make_drum(c, b, a)).has_value();
      if (drum) {
        ++drums_of[i];
        ++drums_of[j];
      } else if (report.p2.pass) {
        report.p2 = {false, pair_witness(a.edge, b.edge)};
      }
    }
  }

  for (std::size_t i = 0; i < chords.size(); ++i) {
    if (chords[i].cls == EdgeClass::Legal && drums_of[i] != 1) {
      report.p3 = {false, to_string(chords[i].edge)};
      break;
    }
  }
  return report;
}

FamilyVerdict is_in_family_h(const Graph& g, const CycleLabelling& c) {
  const Vertex n = g.vertex_count();
  if (n < 6 || n % 2 != 0) {
    return {false, "order " + std::to_string(n) + " is not even and at least 6"};
  }
  if (c.length() != n) return {false, "cycle length does not match the graph"};
  if (!c.is_hamiltonian_in(g)) return {false, "labelling is not a Hamiltonian cycle"};
  if (!maximum_matching(g).is_perfect()) return {false, "no perfect matching"};
  auto mcg = matching_covered_subgraph(g);
  if (!mcg.removed.empty()) {
    return {false, "not matching covered: " + to_string(mcg.removed.front()) +
                       " lies in no perfect matching"};
  }
  PropertyReport r = check_h_properties(g, c);
  if (!r.p1.pass) return {false, "property 1 fails at " + r.p1.witness};
  if (!r.p2.pass) return {false, "property 2 fails at " + r.p2.witness};
  if (!r.p3.pass) return {false, "property 3 fails at " + r.p3.witness};
  return {true, ""};
}

MonochromaticColouring construct_two_colouring(const Graph& g, const CycleLabelling& c) {
  c.require_hamiltonian_in(g);
  PropertyReport r = check_h_properties(g, c);
  if (!r.all_pass()) {
    throw PreconditionError("labelling violates properties 1-3; cannot 2-colour");
  }
  auto cycle_colour = [&](int start) -> Colour { return start % 2 == 0 ? 2 : 1; };

  MonochromaticColouring out;
  for (int p = 0; p < c.length(); ++p) out.set(c.c_edge(p), cycle_colour(p));
  for (const Drum& d : find_drums(g, c).drums) {
    Colour colour = *out.colour(d.c_edges[0]);
    if (*out.colour(d.c_edges[1]) != colour) {
      throw PreconditionError("drum C-edges carry different colours");
    }
    out.set(d.odd_edge, colour);
    out.set(d.even_edge, colour);
  }
  if (out.size() != static_cast<std::size_t>(g.edge_count())) {
    throw PreconditionError("some legal edge lies in no drum");
  }
  return out;
}

bool is_gadget(const Graph& g, const Gadget& x) {
  const Vertex n = g.vertex_count();
  for (Vertex v : {x.a, x.b, x.c, x.d}) {
    if (v < 0 || v >= n) return false;
  }
  if (x.a == x.c || x.b == x.d || x.a == x.b || x.a == x.d || x.c == x.b || x.c == x.d) {
    return false;
  }
  return g.degree(x.a) == 3 && g.degree(x.c) == 3 && g.has_edge(x.a, x.b) &&
         g.has_edge(x.b, x.c) && g.has_edge(x.c, x.d) && g.has_edge(x.d, x.a);
}

std::optional<Gadget> find_gadget(const Graph& g) {
  if (g.vertex_count() <= 4) {
    throw PreconditionError("the gadget bound needs more than 4 vertices");
  }
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    if (g.degree(a) != 3) continue;
    // Any c with two common neighbours is at distance two through them.
    std::map<Vertex, std::vector<Vertex>> via;
    for (Vertex b : g.neighbours(a)) {
      for (Vertex c : g.neighbours(b)) {
        if (c > a && g.degree(c) == 3) via[c].push_back(b);
      }
    }
    for (auto& [c, mids] : via) {
      if (mids.size() < 2) continue;
      std::sort(mids.begin(), mids.end());
      return Gadget{a, mids[0], c, mids[1]};
    }
  }
  return std::nullopt;
}

}  // namespace pmindex
