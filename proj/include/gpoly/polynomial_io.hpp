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

// Reading polynomials back from canonical text, and the JSON rendering.

#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gpoly/errors.hpp"
#include "gpoly/polynomial.hpp"

namespace gpoly {

namespace detail {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial out;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
      skip_space();
    } else if (peek() == '+') {
      ++pos_;
      skip_space();
    }
    for (;;) {
      auto [exps, c] = parse_term();
      out.add_term(exps, negative ? Coefficient(-c) : c);
      skip_space();
      if (at_end()) break;
      if (peek() == '+') {
        negative = false;
      } else if (peek() == '-') {
        negative = true;
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      ++pos_;
      skip_space();
    }
    return out;
  }

 private:
  std::pair<Exponents, Coefficient> parse_term() {
    Coefficient coefficient = 1;
    Exponents exps;
    bool expect_factor = true;
    while (expect_factor) {
      skip_space();
      if (at_end()) fail("expected a factor");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coefficient *= parse_unsigned();
      } else if (c == 'v' || c == 'x' || c == 'y' || c == 'z') {
        const Var var = c == 'v'   ? Var::V
                        : c == 'x' ? Var::X
                        : c == 'y' ? Var::Y
                                   : Var::Z;
        ++pos_;
        std::int64_t power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          bool negative = false;
          if (!at_end() && peek() == '-') {
            negative = true;
            ++pos_;
          }
          const Coefficient magnitude = parse_unsigned();
          if (magnitude > std::numeric_limits<std::int32_t>::max()) {
            fail("exponent too large");
          }
          power = static_cast<std::int64_t>(magnitude);
          if (negative) power = -power;
        }
        exps[var] = checked_exponent(std::int64_t{exps[var]} + power);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_space();
      expect_factor = !at_end() && peek() == '*';
      if (expect_factor) ++pos_;
    }
    return {exps, coefficient};
  }

  Coefficient parse_unsigned() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (start == pos_) fail("expected digits");
    return Coefficient(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 0, pos_ + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the canonical text form. Term order and repeated monomials are not
/// required to be canonical; the result is normalized.
inline Polynomial parse_polynomial(std::string_view text) {
  return detail::PolynomialParser(text).parse();
}

/// JSON rendering: [{"e":[v,x,y,z],"c":"<decimal>"}, ...] in canonical order.
inline nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [exps, c] : ordered_terms(p)) {
    out.push_back({{"e", {exps.e[0], exps.e[1], exps.e[2], exps.e[3]}},
                   {"c", c.str()}});
  }
  return out;
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected a JSON array of terms", 0, 0);
  Polynomial out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("e") || !term.contains("c")) {
      throw ParseError("term must be an object with \"e\" and \"c\"", 0, 0);
    }
    const auto& e = term.at("e");
    if (!e.is_array() || e.size() != 4) {
      throw ParseError("\"e\" must hold four exponents", 0, 0);
    }
    Exponents exps;
    for (std::size_t i = 0; i < 4; ++i) {
      if (!e[i].is_number_integer()) {
        throw ParseError("exponents must be integers", 0, 0);
      }
      exps.e[i] = detail::checked_exponent(e[i].get<std::int64_t>());
    }
    const auto& c = term.at("c");
    if (!c.is_string()) {
      throw ParseError("\"c\" must be a decimal string", 0, 0);
    }
    try {
      out.add_term(exps, Coefficient(c.get<std::string>()));
    } catch (const std::runtime_error&) {
      throw ParseError("invalid coefficient \"" + c.get<std::string>() + "\"",
                       0, 0);
    }
  }
  return out;
}

}  // namespace gpoly
