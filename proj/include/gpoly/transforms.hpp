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
 * @file transforms.hpp
 * @brief Substitutions converting between equivalent graph polynomials.
 *
 *   H(G; v, x, y)  = v^n xi(G; v^-1 + x, y, -y v^-1)
 *   xi(G; x, y, z) = (-z/y)^n H(G; -y/z, x + z/y, y)
 *   P~(G; x, y, z) = xi(G; x, z - 1, (1 - z)(x - y))
 *   xi(G; x, y, z) = P~(G; x, x + z/y, y + 1)
 *
 * and, for forests only,
 *
 *   H(F; v, x, y) = Q(F; v(x + y), x / (x + y))
 *   Q(F; v, x)    = H(F; v, x, 1 - x)
 *
 * Intermediate results may be Laurent polynomials; every transform checks
 * that its final result is a true polynomial.
 */

#pragma once

#include <cstdint>
#include <string>

#include "gpoly/errors.hpp"
#include "gpoly/polynomial.hpp"

namespace gpoly {

namespace detail {

inline Polynomial require_polynomial(Polynomial p, const char* what) {
  if (!p.is_polynomial()) {
    throw NonPolynomialResult(std::string(what) +
                              ": result has negative exponents: " +
                              to_canonical_text(p));
  }
  return p;
}

inline void require_free_of(const Polynomial& p, Var var, const char* what) {
  if (p.mentions(var)) {
    throw MalformedInput(std::string(what) + ": input must not contain " +
                         name_of(var));
  }
}

inline void require_vertex_count(std::int64_t n, const char* what) {
  if (n < 0 || n > std::numeric_limits<std::int32_t>::max()) {
    throw MalformedInput(std::string(what) + ": vertex count out of range");
  }
}

}  // namespace detail

/// H from xi and the vertex count n.
inline Polynomial scp_from_eep(const Polynomial& xi, std::int64_t n) {
  detail::require_vertex_count(n, "scp_from_eep");
  detail::require_free_of(xi, Var::V, "scp_from_eep");
  using namespace vars;
  const Polynomial v_inv = Polynomial::variable(Var::V, -1);
  const Polynomial h = substitute(xi, {{Var::X, v_inv + x()},
                                       {Var::Z, -(y() * v_inv)}});
  return detail::require_polynomial(
      h.times_monomial(1, unit_exponents(Var::V, static_cast<std::int32_t>(n))),
      "scp_from_eep");
}

/// xi from H and the vertex count n.
inline Polynomial eep_from_scp(const Polynomial& h, std::int64_t n) {
  detail::require_vertex_count(n, "eep_from_scp");
  detail::require_free_of(h, Var::Z, "eep_from_scp");
  using namespace vars;
  const Polynomial y_inv = Polynomial::variable(Var::Y, -1);
  const Polynomial z_inv = Polynomial::variable(Var::Z, -1);
  const Polynomial xi = substitute(h, {{Var::V, -(y() * z_inv)},
                                       {Var::X, x() + z() * y_inv}});
  // (-z/y)^n
  const auto power = static_cast<std::int32_t>(n);
  Exponents prefactor;
  prefactor[Var::Y] = -power;
  prefactor[Var::Z] = power;
  return detail::require_polynomial(
      xi.times_monomial(n % 2 == 0 ? 1 : -1, prefactor), "eep_from_scp");
}

/// P~ from xi.
inline Polynomial tcp_from_eep(const Polynomial& xi) {
  detail::require_free_of(xi, Var::V, "tcp_from_eep");
  using namespace vars;
  return detail::require_polynomial(
      substitute(xi, {{Var::Y, z() - 1}, {Var::Z, (1 - z()) * (x() - y())}}),
      "tcp_from_eep");
}

/// xi from P~.
inline Polynomial eep_from_tcp(const Polynomial& tcp) {
  detail::require_free_of(tcp, Var::V, "eep_from_tcp");
  using namespace vars;
  const Polynomial y_inv = Polynomial::variable(Var::Y, -1);
  return detail::require_polynomial(
      substitute(tcp, {{Var::Y, x() + z() * y_inv}, {Var::Z, y() + 1}}),
      "eep_from_tcp");
}

/// H of a forest from its Q: v^a x^b -> v^a x^b (x + y)^(a - b).
inline Polynomial scp_from_scomp_forest(const Polynomial& q) {
  using namespace vars;
  const Polynomial x_plus_y = x() + y();
  Polynomial out;
  for (const auto& [exps, c] : q.terms()) {
    if (exps[Var::Y] != 0 || exps[Var::Z] != 0 || exps.has_negative()) {
      throw MalformedQ("Q must be a polynomial in v and x only, found term " +
                       to_canonical_text(Polynomial::monomial(c, exps)));
    }
    const std::int32_t a = exps[Var::V];
    const std::int32_t b = exps[Var::X];
    if (b > a) {
      throw MalformedQ("term " + to_canonical_text(Polynomial::monomial(c, exps)) +
                       " has more components than vertices");
    }
    out += x_plus_y.pow(static_cast<std::uint32_t>(a - b)).times_monomial(c, exps);
  }
  return out;
}

/// Q of a forest from its H.
inline Polynomial scomp_from_scp_forest(const Polynomial& h) {
  detail::require_free_of(h, Var::Z, "scomp_from_scp_forest");
  return substitute(h, {{Var::Y, 1 - vars::x()}});
}

}  // namespace gpoly
