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
 * @file encodings.hpp
 * @brief Information recoverable from graph polynomials: the subgraph
 * counting polynomial from its polynomial deck, and the degree sequence
 * from the trivariate chromatic polynomial.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gpoly/corpus.hpp"
#include "gpoly/errors.hpp"
#include "gpoly/graph.hpp"
#include "gpoly/invariants.hpp"
#include "gpoly/polynomial.hpp"
#include "gpoly/polynomial_io.hpp"

namespace gpoly {

/// H-polynomials of the vertex-deleted subgraphs of an n-vertex graph.
struct PolyDeck {
  std::vector<Polynomial> cards;
  std::int64_t n = 0;

  /// Cards as canonical text, sorted; equal for equal multisets.
  std::vector<std::string> sorted_texts() const {
    std::vector<std::string> out;
    out.reserve(cards.size());
    for (const auto& card : cards) out.push_back(to_canonical_text(card));
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const PolyDeck& a, const PolyDeck& b) {
    return a.n == b.n && a.sorted_texts() == b.sorted_texts();
  }
};

inline PolyDeck polynomial_deck(const Graph& g, const SizeGuard& guard = {}) {
  PolyDeck out;
  for (const Graph& card : deck(g)) out.cards.push_back(scp_subset(card, guard));
  out.n = static_cast<std::int64_t>(g.vertex_count());
  return out;
}

/// Strata v^0 .. v^(n-1) of H recovered from the deck: each is the matching
/// stratum of the summed deck divided by (n - i).
inline Polynomial reconstruct_lower_coeffs(const PolyDeck& d) {
  if (d.n < 1) throw MalformedInput("deck must describe a graph with n >= 1");
  if (static_cast<std::int64_t>(d.cards.size()) != d.n) {
    throw MalformedInput("deck has " + std::to_string(d.cards.size()) +
                         " cards but n = " + std::to_string(d.n));
  }
  Polynomial sum;
  for (const auto& card : d.cards) sum += card;
  Polynomial out;
  for (const auto& [exps, c] : sum.terms()) {
    const std::int64_t i = exps[Var::V];
    if (i < 0 || i >= d.n) {
      throw MalformedInput("deck polynomial has a v^" + std::to_string(i) +
                           " term, outside 0.." + std::to_string(d.n - 1));
    }
    const Coefficient divisor = d.n - i;
    if (c % divisor != 0) {
      throw NonIntegralDivision("coefficient " + c.str() + " of v^" +
                                std::to_string(i) + " stratum is not divisible by " +
                                divisor.str());
    }
    out.add_term(exps, c / divisor);
  }
  return out;
}

/// Exhaustive search over labeled simple graphs on n vertices, grouping them
/// by polynomial deck. Building the index costs one H computation per
/// labeled (n-1)-vertex graph; queries then compute H only for matches.
class ReconstructionIndex {
 public:
  static constexpr int kMaxVertices = 7;

  explicit ReconstructionIndex(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) {
      throw SizeGuardExceeded("brute-force reconstruction supports 1 <= n <= " +
                              std::to_string(kMaxVertices) + ", got " +
                              std::to_string(n));
    }
    const std::uint64_t card_count = corpus::labeled_graph_count(n - 1);
    card_ids_.reserve(card_count);
    for (std::uint64_t mask = 0; mask < card_count; ++mask) {
      card_ids_.push_back(intern(to_canonical_text(scp_subset(corpus::labeled_graph(n - 1, mask)))));
    }
    build_restrictions();
    const std::uint64_t graph_count = corpus::labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < graph_count; ++mask) {
      by_deck_[deck_key(mask)].push_back(mask);
    }
  }

  int vertex_count() const noexcept { return n_; }

  /// Distinct H-polynomials of the graphs whose polynomial deck equals `d`,
  /// in canonical-text order.
  std::vector<Polynomial> candidates(const PolyDeck& d) {
    if (d.n != n_) {
      throw MalformedInput("deck is for n = " + std::to_string(d.n) +
                           " but the index covers n = " + std::to_string(n_));
    }
    if (static_cast<std::int64_t>(d.cards.size()) != d.n) return {};
    std::vector<int> key;
    for (const auto& card : d.cards) {
      auto it = ids_.find(to_canonical_text(card));
      if (it == ids_.end()) return {};
      key.push_back(it->second);
    }
    std::sort(key.begin(), key.end());
    auto it = by_deck_.find(key);
    if (it == by_deck_.end()) return {};
    std::map<std::string, Polynomial> distinct;
    for (std::uint64_t mask : it->second) {
      const Polynomial& h = full_polynomial(mask);
      distinct.emplace(to_canonical_text(h), h);
    }
    std::vector<Polynomial> out;
    for (auto& [text, h] : distinct) out.push_back(std::move(h));
    return out;
  }

  /// Every group of labeled graphs sharing one polynomial deck.
  const std::map<std::vector<int>, std::vector<std::uint64_t>>& groups() const noexcept {
    return by_deck_;
  }

  const Polynomial& full_polynomial(std::uint64_t mask) {
    auto it = full_.find(mask);
    if (it == full_.end()) {
      it = full_.emplace(mask, scp_subset(corpus::labeled_graph(n_, mask))).first;
    }
    return it->second;
  }

 private:
  int intern(std::string text) {
    auto [it, inserted] = ids_.try_emplace(std::move(text), static_cast<int>(ids_.size()));
    return it->second;
  }

  // restrictions_[u][k]: index of pair k of K_n in K_{n-1} after deleting
  // vertex u + 1 and closing the gap, or -1 if the pair touches it.
  void build_restrictions() {
    const auto big = corpus::vertex_pairs(n_);
    const auto small = corpus::vertex_pairs(n_ - 1);
    std::map<std::pair<Vertex, Vertex>, int> small_index;
    for (std::size_t k = 0; k < small.size(); ++k) small_index[small[k]] = static_cast<int>(k);
    restrictions_.assign(static_cast<std::size_t>(n_), std::vector<int>(big.size(), -1));
    for (Vertex u = 1; u <= n_; ++u) {
      for (std::size_t k = 0; k < big.size(); ++k) {
        auto [a, b] = big[k];
        if (a == u || b == u) continue;
        if (a > u) --a;
        if (b > u) --b;
        restrictions_[static_cast<std::size_t>(u - 1)][k] = small_index.at({a, b});
      }
    }
  }

  std::vector<int> deck_key(std::uint64_t mask) const {
    std::vector<int> key;
    key.reserve(static_cast<std::size_t>(n_));
    for (const auto& restriction : restrictions_) {
      std::uint64_t card = 0;
      for (std::size_t k = 0; k < restriction.size(); ++k) {
        if (((mask >> k) & 1U) && restriction[k] >= 0) {
          card |= std::uint64_t{1} << restriction[k];
        }
      }
      key.push_back(card_ids_[card]);
    }
    std::sort(key.begin(), key.end());
    return key;
  }

  int n_;
  std::unordered_map<std::string, int> ids_;
  std::vector<int> card_ids_;
  std::vector<std::vector<int>> restrictions_;
  std::map<std::vector<int>, std::vector<std::uint64_t>> by_deck_;
  std::unordered_map<std::uint64_t, Polynomial> full_;
};

/// Distinct H-polynomials among all labeled simple graphs on d.n vertices
/// whose polynomial deck equals d. At most one for simple graphs with n >= 3.
inline std::vector<Polynomial> brute_force_reconstruct_check(const PolyDeck& d) {
  if (d.n < 1 || d.n > ReconstructionIndex::kMaxVertices) {
    throw SizeGuardExceeded("brute-force reconstruction supports 1 <= n <= " +
                            std::to_string(ReconstructionIndex::kMaxVertices));
  }
  ReconstructionIndex index(static_cast<int>(d.n));
  return index.candidates(d);
}

/// d(G, i) for every degree i that occurs, plus |E| and |V|.
struct DegreeHistogram {
  std::map<std::int64_t, std::int64_t> counts;
  std::int64_t edge_count = 0;
  std::int64_t vertex_count = 0;

  friend bool operator==(const DegreeHistogram&, const DegreeHistogram&) = default;
};

/// Histogram computed directly from the graph.
inline DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram out;
  for (Vertex u : g.vertices()) ++out.counts[static_cast<std::int64_t>(degree(g, u))];
  out.edge_count = static_cast<std::int64_t>(g.edge_count());
  out.vertex_count = static_cast<std::int64_t>(g.vertex_count());
  return out;
}

/// Reads the degree histogram off R = P~(G; v + 1, 1, z), where
/// R = sum over W ⊆ V of v^|W| z^|E(G - W)|: |E| = deg_z R and
/// d(G, i) = [v^1 z^(|E| - i)] R.
inline DegreeHistogram degree_histogram_from_tcp(const Polynomial& tcp) {
  if (tcp.is_zero()) throw MalformedInput("P~ of a graph is never zero");
  if (tcp.mentions(Var::V)) throw MalformedInput("P~ must not contain v");
  using namespace vars;
  const Polynomial r = substitute(tcp, {{Var::X, v() + 1}, {Var::Y, 1}});
  if (!r.is_polynomial() || r.mentions(Var::X) || r.mentions(Var::Y)) {
    throw MalformedInput("P~(v+1, 1, z) must be a polynomial in v and z");
  }
  const std::int32_t m = degree_in(r, Var::Z);
  if (coefficient_of(r, {{Var::V, 0}}) != Polynomial::variable(Var::Z, m)) {
    throw MalformedInput("v^0 stratum of P~(v+1, 1, z) is not z^" + std::to_string(m));
  }
  DegreeHistogram out;
  out.edge_count = m;
  out.vertex_count = degree_in(r, Var::V);
  std::int64_t total = 0;
  const Polynomial linear = coefficient_of(r, {{Var::V, 1}});
  for (const auto& [exps, c] : linear.terms()) {
    const std::int64_t i = m - exps[Var::Z];
    if (c <= 0 || i < 0) {
      throw MalformedInput("v^1 stratum of P~(v+1, 1, z) has an invalid term");
    }
    const auto count = c.convert_to<std::int64_t>();
    out.counts[i] = count;
    total += count;
  }
  if (total != out.vertex_count) {
    throw MalformedInput("degree counts sum to " + std::to_string(total) +
                         ", expected " + std::to_string(out.vertex_count) + " vertices");
  }
  return out;
}

// Deck file: line 1 "n", then n lines of canonical polynomial text.

inline std::string write_deck(const PolyDeck& d) {
  std::string out = std::to_string(d.n) + "\n";
  for (const auto& card : d.cards) out += to_canonical_text(card) + "\n";
  return out;
}

inline PolyDeck read_deck(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos) {
    lines.pop_back();
  }
  if (lines.empty()) throw ParseError("empty deck file", 1, 0);
  PolyDeck d;
  try {
    d.n = std::stoll(std::string(lines[0]));
  } catch (const std::exception&) {
    throw ParseError("first line must be the vertex count", 1, 0);
  }
  if (d.n < 0 || static_cast<std::size_t>(d.n) != lines.size() - 1) {
    throw ParseError("expected " + std::to_string(d.n) + " polynomial lines, found " +
                         std::to_string(lines.size() - 1),
                     lines.size(), 0);
  }
  for (std::size_t k = 1; k < lines.size(); ++k) {
    try {
      d.cards.push_back(parse_polynomial(lines[k]));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), k + 1, e.column());
    }
  }
  return d;
}

}  // namespace gpoly
