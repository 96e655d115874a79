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
 * @file polynomial.hpp
 * @brief Sparse Laurent polynomials in the four variables v, x, y, z.
 *
 * Coefficients are arbitrary-precision integers and exponents are signed
 * 32-bit integers. A Polynomial is kept in canonical sparse form: a map from
 * exponent tuples to nonzero coefficients, so structural equality is
 * polynomial equality.
 */

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gpoly/errors.hpp"

namespace gpoly {

using Coefficient = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The four indeterminates, totally ordered V < X < Y < Z.
enum class Var : std::uint8_t { V = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<Var, 4> kAllVars = {Var::V, Var::X, Var::Y,
                                                Var::Z};

constexpr std::size_t index_of(Var var) noexcept {
  return static_cast<std::size_t>(var);
}

constexpr char name_of(Var var) noexcept {
  constexpr char names[] = {'v', 'x', 'y', 'z'};
  return names[index_of(var)];
}

/// Exponent vector (e_v, e_x, e_y, e_z). Ordered lexicographically.
struct Exponents {
  std::array<std::int32_t, 4> e{};

  constexpr std::int32_t operator[](Var var) const noexcept {
    return e[index_of(var)];
  }
  constexpr std::int32_t& operator[](Var var) noexcept {
    return e[index_of(var)];
  }

  std::int64_t total_degree() const noexcept {
    std::int64_t sum = 0;
    for (auto a : e) sum += a;
    return sum;
  }

  bool is_zero() const noexcept {
    return std::all_of(e.begin(), e.end(), [](auto a) { return a == 0; });
  }

  bool has_negative() const noexcept {
    return std::any_of(e.begin(), e.end(), [](auto a) { return a < 0; });
  }

  friend constexpr auto operator<=>(const Exponents&,
                                    const Exponents&) = default;
  friend constexpr bool operator==(const Exponents&,
                                   const Exponents&) = default;
};

namespace detail {

inline std::int32_t checked_exponent(std::int64_t value) {
  if (value > std::numeric_limits<std::int32_t>::max() ||
      value < std::numeric_limits<std::int32_t>::min()) {
    throw ArithmeticCapacityError("exponent " + std::to_string(value) +
                                  " outside the signed 32-bit range");
  }
  return static_cast<std::int32_t>(value);
}

}  // namespace detail

inline Exponents operator+(const Exponents& a, const Exponents& b) {
  Exponents out;
  for (std::size_t i = 0; i < 4; ++i) {
    out.e[i] = detail::checked_exponent(std::int64_t{a.e[i]} + b.e[i]);
  }
  return out;
}

/// Exponent vector with a single nonzero entry.
inline Exponents unit_exponents(Var var, std::int32_t power = 1) {
  Exponents out;
  out[var] = power;
  return out;
}

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Coefficient>;

  /// The zero polynomial.
  Polynomial() = default;

  /// Constant polynomial.
  Polynomial(Coefficient constant) {  // NOLINT(google-explicit-constructor)
    add_term(Exponents{}, std::move(constant));
  }
  Polynomial(int constant)  // NOLINT(google-explicit-constructor)
      : Polynomial(Coefficient(constant)) {}

  static Polynomial monomial(Coefficient coefficient, Exponents exponents) {
    Polynomial p;
    p.add_term(exponents, std::move(coefficient));
    return p;
  }

  static Polynomial variable(Var var, std::int32_t power = 1) {
    return monomial(1, unit_exponents(var, power));
  }

  /// Builds from (exponents, coefficient) pairs; repeated keys accumulate.
  static Polynomial from_terms(
      std::initializer_list<std::pair<Exponents, Coefficient>> terms) {
    Polynomial p;
    for (const auto& [exps, c] : terms) p.add_term(exps, c);
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  bool is_constant() const noexcept {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_zero());
  }

  /// True when no term carries a negative exponent.
  bool is_polynomial() const noexcept {
    return std::none_of(terms_.begin(), terms_.end(),
                        [](const auto& t) { return t.first.has_negative(); });
  }

  bool mentions(Var var) const noexcept {
    return std::any_of(terms_.begin(), terms_.end(),
                       [var](const auto& t) { return t.first[var] != 0; });
  }

  /// Coefficient of one exact monomial (0 when absent).
  Coefficient coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Coefficient(0) : it->second;
  }

  /// Adds c * m, pruning the entry if it cancels.
  void add_term(const Exponents& exps, const Coefficient& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& other) {
    for (const auto& [exps, c] : other.terms_) add_term(exps, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    for (const auto& [exps, c] : other.terms_) add_term(exps, -c);
    return *this;
  }

  Polynomial& operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }

  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }

  friend Polynomial operator-(Polynomial a) {
    for (auto& [exps, c] : a.terms_) c = -c;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add_term(ea + eb, ca * cb);
      }
    }
    return out;
  }

  /// Multiplies by c * m for a single monomial m.
  Polynomial times_monomial(const Coefficient& c, const Exponents& exps) const {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) {
      out.terms_.emplace_hint(out.terms_.end(), e + exps, coeff * c);
    }
    return out;
  }

  /// Nonnegative integer power by repeated squaring.
  Polynomial pow(std::uint32_t exponent) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (exponent != 0) {
      if (exponent & 1U) result *= base;
      exponent >>= 1U;
      if (exponent != 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  TermMap terms_;
};

namespace vars {

inline Polynomial v() { return Polynomial::variable(Var::V); }
inline Polynomial x() { return Polynomial::variable(Var::X); }
inline Polynomial y() { return Polynomial::variable(Var::Y); }
inline Polynomial z() { return Polynomial::variable(Var::Z); }

}  // namespace vars

using Bindings = std::map<Var, Polynomial>;
using Constraints = std::map<Var, std::int32_t>;
using Point = std::map<Var, Coefficient>;

namespace detail {

// Memoized powers of one binding; negative powers only for monomials.
class PowerTable {
 public:
  PowerTable(Var var, Polynomial base) : var_(var), base_(std::move(base)) {}

  const Polynomial& get(std::int32_t exponent) {
    auto it = cache_.find(exponent);
    if (it != cache_.end()) return it->second;
    Polynomial value;
    if (exponent >= 0) {
      value = base_.pow(static_cast<std::uint32_t>(exponent));
    } else {
      value = inverse().pow(static_cast<std::uint32_t>(-std::int64_t{exponent}));
    }
    return cache_.emplace(exponent, std::move(value)).first->second;
  }

 private:
  Polynomial inverse() const {
    if (!base_.is_monomial()) {
      throw NegativePowerOfNonMonomial(
          std::string("variable ") + name_of(var_) +
          " occurs with a negative exponent but its binding has " +
          std::to_string(base_.term_count()) + " terms");
    }
    const auto& [exps, c] = *base_.terms().begin();
    if (c != 1 && c != -1) {
      throw NegativePowerOfNonMonomial(
          std::string("binding for ") + name_of(var_) +
          " has a coefficient that is not a unit, so its inverse is not "
          "integral");
    }
    Exponents neg;
    for (std::size_t i = 0; i < 4; ++i) {
      neg.e[i] = checked_exponent(-std::int64_t{exps.e[i]});
    }
    return Polynomial::monomial(c, neg);
  }

  Var var_;
  Polynomial base_;
  std::map<std::int32_t, Polynomial> cache_;
};

}  // namespace detail

/// Simultaneous substitution of Laurent polynomials for variables.
/// Unbound variables are left unchanged.
inline Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
  if (bindings.empty()) return p;
  std::array<std::optional<detail::PowerTable>, 4> tables;
  for (const auto& [var, value] : bindings) {
    tables[index_of(var)].emplace(var, value);
  }
  Polynomial out;
  for (const auto& [exps, c] : p.terms()) {
    // Unbound variables stay as a monomial factor.
    Exponents kept;
    for (Var var : kAllVars) {
      if (!tables[index_of(var)]) kept[var] = exps[var];
    }
    Polynomial term = Polynomial::monomial(c, kept);
    for (Var var : kAllVars) {
      auto& table = tables[index_of(var)];
      if (!table || exps[var] == 0) continue;
      term *= table->get(exps[var]);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

/// Collects the terms whose exponents match every constraint exactly and
/// drops the constrained variables from them.
inline Polynomial coefficient_of(const Polynomial& p,
                                 const Constraints& constraints) {
  Polynomial out;
  for (const auto& [exps, c] : p.terms()) {
    bool match = true;
    Exponents rest = exps;
    for (const auto& [var, power] : constraints) {
      if (exps[var] != power) {
        match = false;
        break;
      }
      rest[var] = 0;
    }
    if (match) out.add_term(rest, c);
  }
  return out;
}

/// Highest exponent of `var`; throws ZeroPolynomialError for p = 0.
inline std::int32_t degree_in(const Polynomial& p, Var var) {
  if (p.is_zero()) {
    throw ZeroPolynomialError("degree of the zero polynomial is undefined");
  }
  std::int32_t best = std::numeric_limits<std::int32_t>::min();
  for (const auto& [exps, c] : p.terms()) best = std::max(best, exps[var]);
  return best;
}

/// Lowest exponent of `var`; throws ZeroPolynomialError for p = 0.
inline std::int32_t low_degree_in(const Polynomial& p, Var var) {
  if (p.is_zero()) {
    throw ZeroPolynomialError("degree of the zero polynomial is undefined");
  }
  std::int32_t best = std::numeric_limits<std::int32_t>::max();
  for (const auto& [exps, c] : p.terms()) best = std::min(best, exps[var]);
  return best;
}

/// Exact evaluation at an integer point.
inline Rational evaluate(const Polynomial& p, const Point& point) {
  Rational sum = 0;
  for (const auto& [exps, c] : p.terms()) {
    Rational term = Rational(c);
    for (Var var : kAllVars) {
      const std::int32_t power = exps[var];
      if (power == 0) continue;
      auto it = point.find(var);
      if (it == point.end()) {
        throw UnboundVariableError(std::string("variable ") + name_of(var) +
                                   " is not bound");
      }
      if (power < 0 && it->second == 0) {
        throw DivisionByZeroError(std::string("variable ") + name_of(var) +
                                  " has a negative exponent and is bound to 0");
      }
      const auto magnitude =
          static_cast<unsigned>(power < 0 ? -std::int64_t{power} : power);
      Coefficient factor = boost::multiprecision::pow(it->second, magnitude);
      if (power < 0) {
        term /= Rational(factor);
      } else {
        term *= Rational(factor);
      }
    }
    sum += term;
  }
  return sum;
}

/// Terms in rendering order: total degree descending, then exponent tuple
/// descending lexicographically in (v, x, y, z).
inline std::vector<std::pair<Exponents, Coefficient>> ordered_terms(
    const Polynomial& p) {
  std::vector<std::pair<Exponents, Coefficient>> out(p.terms().begin(),
                                                     p.terms().end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const auto da = a.first.total_degree();
    const auto db = b.first.total_degree();
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return out;
}

inline std::string to_canonical_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, c] : ordered_terms(p)) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const Coefficient magnitude = negative ? Coefficient(-c) : c;
    std::string factors;
    for (Var var : kAllVars) {
      const std::int32_t power = exps[var];
      if (power == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += name_of(var);
      if (power != 1) factors += '^' + std::to_string(power);
    }
    if (factors.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += magnitude.str() + '*' + factors;
    }
  }
  return out;
}

}  // namespace gpoly
