#pragma once

// Shared tokenizer for the line-based .eg/.ecg/.wcg formats.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pmindex/errors.hpp"
#include "pmindex/graph.hpp"

namespace pmindex::detail {

struct PayloadLine {
  int number = 0;
  std::vector<std::string_view> tokens;
};

/// Splits text into non-comment, non-blank lines. Enforces the trailing
/// newline rule.
inline std::vector<PayloadLine> payload_lines(std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty input");
  if (text.back() != '\n') throw ParseError(0, "missing trailing newline");

  std::vector<PayloadLine> lines;
  int number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    PayloadLine out{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) out.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (out.tokens.empty() || out.tokens.front().front() == '#') continue;
    lines.push_back(std::move(out));
  }
  return lines;
}

inline std::int64_t parse_integer(std::string_view token, int line,
                                  const char* what) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(line, std::string("invalid ") + what + " '" +
                               std::string(token) + "'");
  }
  return value;
}

struct Header {
  Vertex n = 0;
  EdgeId m = 0;
};

inline Header parse_header(const PayloadLine& line) {
  if (line.tokens.size() != 3 || line.tokens[0] != "p") {
    throw ParseError(line.number, "expected header 'p <n> <m>'");
  }
  auto n = parse_integer(line.tokens[1], line.number, "vertex count");
  auto m = parse_integer(line.tokens[2], line.number, "edge count");
  if (n < 0 || n > (1 << 24)) {
    throw ParseError(line.number, "vertex count out of range");
  }
  if (m < 0 || m > n * (n - 1) / 2) {
    throw ParseError(line.number, "edge count out of range for a simple graph");
  }
  return {static_cast<Vertex>(n), static_cast<EdgeId>(m)};
}

/// Validates the "e <u> <v> ..." prefix of an edge line against the vertex
/// count and the edges already read (which must be kept sorted by the caller
/// in `seen` for duplicate detection).
inline Edge parse_edge_prefix(const PayloadLine& line, std::size_t arity,
                              Vertex n) {
  if (line.tokens.size() != arity || line.tokens[0] != "e") {
    throw ParseError(line.number, "expected edge line with " +
                                      std::to_string(arity - 1) + " fields");
  }
  auto u = parse_integer(line.tokens[1], line.number, "vertex");
  auto v = parse_integer(line.tokens[2], line.number, "vertex");
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw ParseError(line.number, "vertex out of range [0, " +
                                      std::to_string(n - 1) + "]");
  }
  if (u == v) throw ParseError(line.number, "loop at vertex " + std::to_string(u));
  if (u > v) throw ParseError(line.number, "edge endpoints must satisfy u < v");
  return Edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

}  // namespace pmindex::detail
