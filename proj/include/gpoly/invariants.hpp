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
 * @file invariants.hpp
 * @brief Graph polynomials, each computed by an edge recurrence and by
 * direct enumeration.
 *
 * Variable roles:
 *
 *   eep      xi(G; x, y, z)      edge elimination polynomial
 *   potts    Z(G; x, y)          sum over A ⊆ E of x^k(V,A) y^|A|
 *   scp      H(G; v, x, y)       sum over subgraphs (W,F) of v^|W| x^k y^|F|
 *   tcp      P~(G; x, y, z)      colorings weighted by z per edge that is
 *                                monochromatic in one of the first y colors
 *   badcol   chi~(G; x, z)       colorings weighted by z per monochromatic edge
 *   bivchrom P(G; x, y)          P~ at z = 0
 *   scomp    Q(G; v, x)          sum over W ⊆ V of v^|W| x^k(G[W])
 *
 * All recurrences terminate on edgeless graphs: one factor per isolated
 * vertex and 1 for the empty graph.
 */

#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "gpoly/errors.hpp"
#include "gpoly/graph.hpp"
#include "gpoly/polynomial.hpp"

namespace gpoly {

/// Upper bounds on input size for the exponential algorithms.
struct SizeGuard {
  std::size_t max_vertices = 12;
  std::size_t max_edges = 16;

  /// Defaults, with GP_SIZE_GUARD (if set to a nonnegative integer)
  /// replacing the edge bound.
  static SizeGuard from_environment() {
    SizeGuard guard;
    if (const char* raw = std::getenv("GP_SIZE_GUARD")) {
      char* end = nullptr;
      const long value = std::strtol(raw, &end, 10);
      if (end != raw && *end == '\0' && value >= 0) {
        guard.max_edges = static_cast<std::size_t>(value);
      }
    }
    return guard;
  }

  void check(const Graph& g, const char* what) const {
    if (g.vertex_count() > max_vertices || g.edge_count() > max_edges) {
      throw SizeGuardExceeded(
          std::string(what) + ": graph with " +
          std::to_string(g.vertex_count()) + " vertices and " +
          std::to_string(g.edge_count()) + " edges exceeds the guard (" +
          std::to_string(max_vertices) + " vertices, " +
          std::to_string(max_edges) + " edges)");
    }
  }
};

/// Which edge a recurrence eliminates next.
enum class PivotRule { kFirst, kLast, kRandom };

struct RecurrenceOptions {
  SizeGuard guard{};
  PivotRule pivot = PivotRule::kFirst;
  std::uint64_t seed = 0;  // used by PivotRule::kRandom
};

/// Coefficients of a linear deletion/contraction/extraction recurrence
///   P(G) = P(G - e) + c * P(G / e) + d * P(G † e)
/// with c, d allowed to depend on whether e is a loop.
struct RecurrenceWeights {
  Polynomial vertex;  // P(K1)
  Polynomial contract_link;
  Polynomial contract_loop;
  Polynomial extract_link;
  Polynomial extract_loop;
};

namespace detail {

class RecurrenceRunner {
 public:
  RecurrenceRunner(const RecurrenceWeights& weights,
                   const RecurrenceOptions& options)
      : weights_(weights), options_(options), rng_(options.seed) {}

  Polynomial run(const Graph& g) {
    if (g.empty()) return 1;

    std::vector<bool> touched(g.vertex_count(), false);
    for (const Edge& e : g.edges()) {
      touched[g.index_of(e.u)] = true;
      touched[g.index_of(e.w)] = true;
    }
    std::uint32_t isolated = 0;
    for (bool t : touched) isolated += t ? 0 : 1;
    if (isolated > 0) {
      std::vector<Vertex> kept;
      for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (touched[i]) kept.push_back(g.vertices()[i]);
      }
      Graph rest(std::move(kept), {g.edges().begin(), g.edges().end()});
      return vertex_power(isolated) * run(rest);
    }

    const EdgeRef e{pick(g.edge_count())};
    const bool loop = g.edge(e).is_loop();
    Polynomial result = run(delete_edge(g, e));
    const Polynomial& c = loop ? weights_.contract_loop : weights_.contract_link;
    if (!c.is_zero()) result += c * run(contract_edge(g, e));
    const Polynomial& d = loop ? weights_.extract_loop : weights_.extract_link;
    if (!d.is_zero()) result += d * run(extract_edge(g, e));
    return result;
  }

 private:
  std::size_t pick(std::size_t edge_count) {
    switch (options_.pivot) {
      case PivotRule::kFirst:
        return 0;
      case PivotRule::kLast:
        return edge_count - 1;
      case PivotRule::kRandom:
        return std::uniform_int_distribution<std::size_t>(0, edge_count - 1)(rng_);
    }
    return 0;
  }

  const Polynomial& vertex_power(std::uint32_t k) {
    auto it = powers_.find(k);
    if (it == powers_.end()) it = powers_.emplace(k, weights_.vertex.pow(k)).first;
    return it->second;
  }

  const RecurrenceWeights& weights_;
  const RecurrenceOptions& options_;
  std::mt19937_64 rng_;
  std::map<std::uint32_t, Polynomial> powers_;
};

// Vertex-index pairs of the edges, for the bitmask enumerations.
inline std::vector<std::pair<std::size_t, std::size_t>> indexed_edges(const Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.emplace_back(g.index_of(e.u), g.index_of(e.w));
  return out;
}

// Components of the graph on the vertices in `vertex_mask` (bit i = index i)
// using the edges selected by `edge_mask`.
inline std::size_t masked_components(
    std::size_t n, std::uint64_t vertex_mask,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    std::uint64_t edge_mask) {
  std::size_t parent[64];
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    parent[i] = i;
    if ((vertex_mask >> i) & 1U) ++count;
  }
  auto find = [&](std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (!((edge_mask >> k) & 1U)) continue;
    const std::size_t a = find(edges[k].first);
    const std::size_t b = find(edges[k].second);
    if (a != b) {
      parent[b] = a;
      --count;
    }
  }
  return count;
}

inline void require_enumerable(const Graph& g, const SizeGuard& guard,
                               const char* what) {
  guard.check(g, what);
  if (g.vertex_count() > 30 || g.edge_count() > 40) {
    throw SizeGuardExceeded(std::string(what) +
                            ": graph too large for bitmask enumeration");
  }
}

inline Exponents exps(std::int32_t v, std::int32_t x, std::int32_t y,
                      std::int32_t z) {
  return Exponents{{v, x, y, z}};
}

}  // namespace detail

/// Runs a linear edge recurrence with the given weights.
inline Polynomial run_recurrence(const Graph& g, const RecurrenceWeights& weights,
                                 const RecurrenceOptions& options = {}) {
  detail::RecurrenceRunner runner(weights, options);
  return runner.run(g);
}

// ---------------------------------------------------------------------------
// Edge elimination polynomial

inline RecurrenceWeights eep_weights() {
  using namespace vars;
  return {x(), y(), y(), z(), z()};
}

/// xi(G) = xi(G - e) + y xi(G / e) + z xi(G † e), xi(K1) = x, multiplicative.
inline Polynomial eep_recurrence(const Graph& g, const RecurrenceOptions& options = {}) {
  options.guard.check(g, "eep_recurrence");
  return run_recurrence(g, eep_weights(), options);
}

// ---------------------------------------------------------------------------
// Potts model

/// Z(G) = sum over edge sub-multisets A of x^k((V,A)) y^|A|.
inline Polynomial potts_subset(const Graph& g, const SizeGuard& guard = {}) {
  detail::require_enumerable(g, guard, "potts_subset");
  const auto edges = detail::indexed_edges(g);
  const std::size_t n = g.vertex_count();
  const std::uint64_t all_vertices = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  std::map<std::pair<std::int32_t, std::int32_t>, std::uint64_t> counts;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << edges.size()); ++a) {
    const auto k = detail::masked_components(n, all_vertices, edges, a);
    ++counts[{static_cast<std::int32_t>(k), std::popcount(a)}];
  }
  Polynomial out;
  for (const auto& [key, count] : counts) {
    out.add_term(detail::exps(0, key.first, key.second, 0), Coefficient(count));
  }
  return out;
}

inline RecurrenceWeights potts_weights() {
  using namespace vars;
  return {x(), y(), y(), 0, 0};
}

/// Z(G) = Z(G - e) + y Z(G / e), Z(K1) = x.
inline Polynomial potts_recurrence(const Graph& g, const RecurrenceOptions& options = {}) {
  options.guard.check(g, "potts_recurrence");
  return run_recurrence(g, potts_weights(), options);
}

// ---------------------------------------------------------------------------
// Bad coloring polynomial chi~(G; x, z)

/// chi~(G; x, z) = Z(G; x, z - 1).
inline Polynomial badcol_subset(const Graph& g, const SizeGuard& guard = {}) {
  return substitute(potts_subset(g, guard), {{Var::Y, vars::z() - 1}});
}

/// chi~(G) = chi~(G - e) + (z - 1) chi~(G / e), chi~(K1) = x.
inline Polynomial badcol_recurrence(const Graph& g, const RecurrenceOptions& options = {}) {
  options.guard.check(g, "badcol_recurrence");
  using namespace vars;
  return run_recurrence(g, {x(), z() - 1, z() - 1, 0, 0}, options);
}

// ---------------------------------------------------------------------------
// Subgraph counting polynomial H(G; v, x, y)

/// Direct sum over all subgraphs (W, F), F ⊆ E(G[W]).
inline Polynomial scp_subset(const Graph& g, const SizeGuard& guard = {}) {
  detail::require_enumerable(g, guard, "scp_subset");
  const auto edges = detail::indexed_edges(g);
  const std::size_t n = g.vertex_count();
  std::map<std::tuple<std::int32_t, std::int32_t, std::int32_t>, std::uint64_t> counts;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    std::uint64_t allowed = 0;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (((w >> edges[k].first) & 1U) && ((w >> edges[k].second) & 1U)) {
        allowed |= std::uint64_t{1} << k;
      }
    }
    const std::int32_t size = std::popcount(w);
    // Walk every submask of `allowed`, including 0.
    std::uint64_t f = allowed;
    for (;;) {
      const auto k = detail::masked_components(n, w, edges, f);
      ++counts[{size, static_cast<std::int32_t>(k), std::popcount(f)}];
      if (f == 0) break;
      f = (f - 1) & allowed;
    }
  }
  Polynomial out;
  for (const auto& [key, count] : counts) {
    const auto& [v, x, y] = key;
    out.add_term(detail::exps(v, x, y, 0), Coefficient(count));
  }
  return out;
}

/// H(G) = sum over W ⊆ V of v^|W| Z(G[W]).
inline Polynomial scp_induced(const Graph& g, const SizeGuard& guard = {}) {
  detail::require_enumerable(g, guard, "scp_induced");
  const std::size_t n = g.vertex_count();
  Polynomial out;
  std::vector<Vertex> w;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    w.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) w.push_back(g.vertices()[i]);
    }
    const Polynomial z = potts_subset(induced_subgraph(g, w), guard);
    out += z.times_monomial(1, unit_exponents(Var::V, static_cast<std::int32_t>(w.size())));
  }
  return out;
}

inline RecurrenceWeights scp_weights() {
  using namespace vars;
  const Polynomial vy = v() * y();
  return {1 + v() * x(), vy, y(), -vy, -y()};
}

/// H(G) = H(G - e) + v^(|e|-1) y (H(G / e) - H(G † e)), H(K1) = 1 + vx,
/// where |e| = 2 for a link and 1 for a loop.
inline Polynomial scp_recurrence(const Graph& g, const RecurrenceOptions& options = {}) {
  options.guard.check(g, "scp_recurrence");
  return run_recurrence(g, scp_weights(), options);
}

// ---------------------------------------------------------------------------
// Trivariate chromatic polynomial P~(G; x, y, z)

/// P~(G) = sum over W ⊆ V of (x - y)^|W| chi~(G - W; y, z).
inline Polynomial tcp_expansion(const Graph& g, const SizeGuard& guard = {}) {
  detail::require_enumerable(g, guard, "tcp_expansion");
  using namespace vars;
  const std::size_t n = g.vertex_count();
  const Polynomial x_minus_y = x() - y();
  std::vector<Polynomial> powers{Polynomial(1)};
  for (std::size_t i = 1; i <= n; ++i) powers.push_back(powers.back() * x_minus_y);
  const Bindings to_badcol{{Var::X, y()}, {Var::Y, z() - 1}};

  Polynomial out;
  std::vector<Vertex> rest;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    rest.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (!((mask >> i) & 1U)) rest.push_back(g.vertices()[i]);
    }
    const Polynomial badcol =
        substitute(potts_subset(induced_subgraph(g, rest), guard), to_badcol);
    out += powers[static_cast<std::size_t>(std::popcount(mask))] * badcol;
  }
  return out;
}

inline RecurrenceWeights tcp_weights() {
  using namespace vars;
  const Polynomial z1 = z() - 1;
  const Polynomial extract = (1 - z()) * (x() - y());
  return {x(), z1, z1, extract, extract};
}

/// P~(G) = P~(G - e) + (z - 1) P~(G / e) + (1 - z)(x - y) P~(G † e).
inline Polynomial tcp_recurrence(const Graph& g, const RecurrenceOptions& options = {}) {
  options.guard.check(g, "tcp_recurrence");
  return run_recurrence(g, tcp_weights(), options);
}

/// Colorings allowed by the enumeration oracle (palette^|V|).
inline constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

/// Enumerates all colorings V -> {1..palette} and returns the polynomial in z
/// counting them by the number of edges monochromatic in a color <= special.
/// A loop is monochromatic by definition.
inline Polynomial tcp_coloring_oracle(const Graph& g, std::int64_t palette,
                                      std::int64_t special,
                                      std::uint64_t guard = kDefaultEnumerationGuard) {
  if (palette < 0 || special < 0 || special > palette) {
    throw InvalidPalette("require 0 <= y <= x, got x=" + std::to_string(palette) +
                         ", y=" + std::to_string(special));
  }
  const std::size_t n = g.vertex_count();
  if (n == 0) return 1;
  if (palette == 0) return 0;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > guard / static_cast<std::uint64_t>(palette)) {
      throw EnumerationGuardExceeded(std::to_string(palette) + "^" +
                                     std::to_string(n) +
                                     " colorings exceed the enumeration guard");
    }
    total *= static_cast<std::uint64_t>(palette);
  }
  const auto edges = detail::indexed_edges(g);
  std::vector<std::uint64_t> by_bad(edges.size() + 1, 0);
  std::vector<std::int64_t> color(n, 1);
  for (;;) {
    std::size_t bad = 0;
    for (const auto& [a, b] : edges) {
      if (color[a] == color[b] && color[a] <= special) ++bad;
    }
    ++by_bad[bad];
    std::size_t i = 0;
    while (i < n && color[i] == palette) color[i++] = 1;
    if (i == n) break;
    ++color[i];
  }
  Polynomial out;
  for (std::size_t k = 0; k < by_bad.size(); ++k) {
    out.add_term(detail::exps(0, 0, 0, static_cast<std::int32_t>(k)),
                 Coefficient(by_bad[k]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bivariate chromatic polynomial P(G; x, y)

/// P(G; x, y) = P~(G; x, y, 0).
inline Polynomial bivariate_chromatic(const Graph& g, const SizeGuard& guard = {}) {
  return substitute(tcp_expansion(g, guard), {{Var::Z, 0}});
}

/// P(G) = P(G - e) - P(G / e) + (x - y) P(G † e), P(K1) = x.
inline Polynomial bivariate_chromatic_recurrence(const Graph& g,
                                                 const RecurrenceOptions& options = {}) {
  options.guard.check(g, "bivariate_chromatic_recurrence");
  using namespace vars;
  const Polynomial xy = x() - y();
  return run_recurrence(g, {x(), -1, -1, xy, xy}, options);
}

// ---------------------------------------------------------------------------
// Subgraph component polynomial Q(G; v, x)

/// Q(G) = sum over W ⊆ V of v^|W| x^k(G[W]).
inline Polynomial scomp_subset(const Graph& g, const SizeGuard& guard = {}) {
  detail::require_enumerable(g, guard, "scomp_subset");
  const auto edges = detail::indexed_edges(g);
  const std::size_t n = g.vertex_count();
  std::map<std::pair<std::int32_t, std::int32_t>, std::uint64_t> counts;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    std::uint64_t inside = 0;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (((w >> edges[k].first) & 1U) && ((w >> edges[k].second) & 1U)) {
        inside |= std::uint64_t{1} << k;
      }
    }
    const auto k = detail::masked_components(n, w, edges, inside);
    ++counts[{std::popcount(w), static_cast<std::int32_t>(k)}];
  }
  Polynomial out;
  for (const auto& [key, count] : counts) {
    out.add_term(detail::exps(key.first, key.second, 0, 0), Coefficient(count));
  }
  return out;
}

}  // namespace gpoly
