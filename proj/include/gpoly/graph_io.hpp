// Copyright 2026 The gpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file graph_io.hpp
 * @brief graph6 and edge-list text formats.
 *
 * Edge list:
 *
 *     # comment
 *     n m
 *     u w        (m lines, 1 <= u, w <= n; u == w is a loop)
 *
 * Both readers label vertices 1..n.
 */

#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gpoly/errors.hpp"
#include "gpoly/graph.hpp"

namespace gpoly {

enum class GraphFormat { kGraph6, kEdgeList };

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline long long parse_integer(std::string_view token, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'",
                     line, 0);
  }
  return value;
}

inline Graph parse_edgelist(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  long long n = -1;
  long long m = -1;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("expected two integers per line", line_no, 0);
    }
    const long long a = parse_integer(tokens[0], line_no);
    const long long b = parse_integer(tokens[1], line_no);
    if (n < 0) {
      if (a < 0 || b < 0 || a > 1'000'000 || b > 10'000'000) {
        throw ParseError("vertex and edge counts out of range", line_no, 0);
      }
      n = a;
      m = b;
      header_line = line_no;
      edges.reserve(static_cast<std::size_t>(m));
    } else {
      if (static_cast<long long>(edges.size()) == m) {
        throw ParseError("more edge lines than announced", line_no, 0);
      }
      if (a < 1 || a > n || b < 1 || b > n) {
        throw ParseError("endpoint outside 1.." + std::to_string(n), line_no, 0);
      }
      edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw ParseError("missing 'n m' header", line_no, 0);
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("expected " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     header_line, 0);
  }
  return Graph::with_vertices(static_cast<int>(n), std::move(edges));
}

inline Graph parse_graph6(std::string_view text) {
  // Surrounding whitespace and the optional header are tolerated.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(pos, kHeader.size()) == kHeader) pos += kHeader.size();

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("truncated graph6 string", 0, i + 1);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw ParseError("byte outside the graph6 range 63..126", 0, i + 1);
    }
    return c - 63;
  };

  std::uint64_t n = 0;
  if (pos < text.size() && text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      pos += 2;
      for (int k = 0; k < 6; ++k) n = (n << 6U) | static_cast<std::uint64_t>(byte_at(pos++));
    } else {
      pos += 1;
      for (int k = 0; k < 3; ++k) n = (n << 6U) | static_cast<std::uint64_t>(byte_at(pos++));
    }
  } else {
    n = static_cast<std::uint64_t>(byte_at(pos++));
  }
  if (n > 100'000) throw ParseError("graph6 vertex count too large", 0, pos);

  const std::uint64_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos != byte_count) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) +
                         " bytes, expected " + std::to_string(byte_count),
                     0, pos + 1);
  }

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++bit) {
      const int value = byte_at(pos + bit / 6);
      if ((value >> (5 - bit % 6)) & 1) {
        edges.push_back({static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1)});
      }
    }
  }
  for (; bit < byte_count * 6; ++bit) {
    if ((byte_at(pos + bit / 6) >> (5 - bit % 6)) & 1) {
      throw ParseError("nonzero graph6 padding bit", 0, pos + bit / 6 + 1);
    }
  }
  return Graph::with_vertices(static_cast<int>(n), std::move(edges));
}

}  // namespace detail

inline Graph parse_graph(std::string_view input, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? detail::parse_graph6(input)
                                        : detail::parse_edgelist(input);
}

/// Inline edge list: the edge-list format with ';' in place of newlines,
/// e.g. "3 2;1 2;2 3".
inline Graph parse_inline_edges(std::string_view input) {
  std::string text(input);
  for (char& c : text) {
    if (c == ';') c = '\n';
  }
  return detail::parse_edgelist(text);
}

/// Edge-list rendering with vertices relabeled 1..n in ascending label order.
inline std::string to_edgelist(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(g.index_of(e.u) + 1) + " " +
           std::to_string(g.index_of(e.w) + 1) + "\n";
  }
  return out;
}

/// graph6 rendering; only defined for simple graphs.
inline std::string to_graph6(const Graph& g) {
  if (!g.is_simple()) {
    throw Error("graph6 can only encode simple graphs");
  }
  const std::uint64_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> static_cast<unsigned>(shift)) & 63U) + 63);
    }
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> static_cast<unsigned>(shift)) & 63U) + 63);
    }
  }
  std::vector<bool> adjacent(n * n, false);
  for (const Edge& e : g.edges()) {
    const auto a = g.index_of(e.u);
    const auto b = g.index_of(e.w);
    adjacent[a * n + b] = adjacent[b * n + a] = true;
  }
  int value = 0;
  int filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      value = (value << 1) | (adjacent[i * n + j] ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(value + 63);
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out += static_cast<char>((value << (6 - filled)) + 63);
  return out;
}

}  // namespace gpoly
