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

#include "gpoly/polynomial.hpp"

#include <limits>
#include <random>
#include <set>
#include <string>

#include "gpoly/polynomial_io.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace gpoly {
namespace {

using namespace vars;
using testing::random_polynomial;

Polynomial P(const char* text) { return parse_polynomial(text); }

TEST(PolyAdd, Examples) {
  EXPECT_EQ(to_canonical_text(x() + y()), "x + y");
  const Polynomial cancelled = x() + (-x());
  EXPECT_TRUE(cancelled.is_zero());
  EXPECT_EQ(cancelled.term_count(), 0u);
  EXPECT_EQ(to_canonical_text(x() * x() + x() * y() + z()), "x^2 + x*y + z");
}

TEST(PolyMul, Examples) {
  EXPECT_EQ((x() + y()) * (x() - y()), x() * x() - y() * y());
  const Polynomial one_vx = 1 + v() * x();
  EXPECT_EQ(one_vx * one_vx, 1 + 2 * v() * x() + v() * v() * x() * x());
  EXPECT_EQ(Polynomial::variable(Var::V, -1) * v(), Polynomial(1));
}

TEST(PolyMul, ExponentOverflowIsReported) {
  const auto big = Polynomial::variable(Var::X, std::numeric_limits<std::int32_t>::max());
  EXPECT_THROW(big * x(), ArithmeticCapacityError);
  const auto small = Polynomial::variable(Var::Y, std::numeric_limits<std::int32_t>::min());
  EXPECT_THROW(small * Polynomial::variable(Var::Y, -1), ArithmeticCapacityError);
}

TEST(PolyMul, CoefficientsDoNotOverflow) {
  // (1 + x)^200 has central coefficients far beyond 64 bits.
  const Polynomial p = (1 + x()).pow(200);
  const Coefficient c = p.coefficient(unit_exponents(Var::X, 100));
  EXPECT_GT(c, Coefficient(std::numeric_limits<std::uint64_t>::max()));
  EXPECT_EQ(c.str(), "90548514656103281165404177077484163874504589675413336841320");
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(P("x^2 + x*y + z"), {{Var::Y, z() - 1}, {Var::Z, 0}}),
            P("x^2 + x*z - x"));
  EXPECT_EQ(substitute(x(), {}), x());
  EXPECT_EQ(substitute(v() * z(), {{Var::V, -(y() * Polynomial::variable(Var::Z, -1))}}),
            -y());
}

TEST(Substitute, IsSimultaneous) {
  // Swapping x and y must not chain.
  EXPECT_EQ(substitute(P("x^2*y"), {{Var::X, y()}, {Var::Y, x()}}), P("x*y^2"));
}

TEST(Substitute, NegativePowerNeedsMonomialBinding) {
  EXPECT_THROW(substitute(Polynomial::variable(Var::X, -1), {{Var::X, 1 + y()}}),
               NegativePowerOfNonMonomial);
  // Positive powers of the same binding are fine.
  EXPECT_EQ(substitute(x() * x(), {{Var::X, 1 + y()}}), P("y^2 + 2*y + 1"));
  // -x is a unit multiple of a monomial.
  EXPECT_EQ(substitute(Polynomial::variable(Var::X, -2), {{Var::X, -y()}}),
            Polynomial::variable(Var::Y, -2));
}

TEST(CoefficientOf, Examples) {
  EXPECT_EQ(coefficient_of(P("1 + 2*v*x + v^2*x^2 + v^2*x*y"), {{Var::V, 2}}), P("x^2 + x*y"));
  EXPECT_EQ(coefficient_of(x(), {{Var::V, 0}}), x());
  EXPECT_TRUE(coefficient_of(Polynomial(), {{Var::Z, 3}}).is_zero());
  EXPECT_EQ(coefficient_of(P("v*x*z + v*z + x"), {{Var::V, 1}, {Var::Z, 1}}), P("x + 1"));
}

TEST(DegreeIn, Examples) {
  EXPECT_EQ(degree_in(P("x^2 + x*y + z"), Var::X), 2);
  EXPECT_EQ(degree_in(P("1 + v*x"), Var::V), 1);
  EXPECT_EQ(degree_in(P("v*z^2 + v^3"), Var::Z), 2);
  EXPECT_THROW(degree_in(Polynomial(), Var::X), ZeroPolynomialError);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(P("x^2 + x*y + z"), {{Var::X, 3}, {Var::Y, 0}, {Var::Z, 0}}), Rational(9));
  EXPECT_EQ(evaluate(P("1 + v*x"), {{Var::V, 1}, {Var::X, 4}}), Rational(5));
  EXPECT_EQ(evaluate(P("v^-1*y"), {{Var::V, 2}, {Var::Y, 6}}), Rational(3));
  EXPECT_EQ(evaluate(P("v^-1"), {{Var::V, 2}}), Rational(1, 2));
}

TEST(Evaluate, Errors) {
  EXPECT_THROW(evaluate(P("v^-1*y"), {{Var::V, 0}, {Var::Y, 6}}), DivisionByZeroError);
  EXPECT_THROW(evaluate(P("x + y"), {{Var::X, 1}}), UnboundVariableError);
  // Unused bindings and unbound-but-absent variables are fine.
  EXPECT_EQ(evaluate(P("3"), {}), Rational(3));
}

TEST(CanonicalText, Examples) {
  EXPECT_EQ(to_canonical_text(P("1 + 2*v*x + v^2*x^2 + v^2*x*y")),
            "v^2*x^2 + v^2*x*y + 2*v*x + 1");
  EXPECT_EQ(to_canonical_text(Polynomial()), "0");
  EXPECT_EQ(to_canonical_text(x()), "x");
  EXPECT_EQ(to_canonical_text(P("-1 + y*z - y + x^2")), "x^2 + y*z - y - 1");
  EXPECT_EQ(to_canonical_text(P("-x")), "-x");
  EXPECT_EQ(to_canonical_text(P("-3*v^-1*z")), "-3*v^-1*z");
}

TEST(CanonicalText, ParseErrors) {
  EXPECT_THROW(parse_polynomial(""), ParseError);
  EXPECT_THROW(parse_polynomial("x +"), ParseError);
  EXPECT_THROW(parse_polynomial("2*w"), ParseError);
  EXPECT_THROW(parse_polynomial("x^"), ParseError);
  try {
    parse_polynomial("x + q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(Json, Rendering) {
  const auto j = to_json(P("v^2*x^2 + 2*v*x + 1"));
  EXPECT_EQ(j.dump(),
            R"([{"c":"1","e":[2,2,0,0]},{"c":"2","e":[1,1,0,0]},{"c":"1","e":[0,0,0,0]}])");
  EXPECT_EQ(to_json(Polynomial()).dump(), "[]");
  EXPECT_THROW(polynomial_from_json(nlohmann::json::parse(R"([{"e":[1,2],"c":"1"}])")),
               ParseError);
}

// Property tests over seeded random Laurent polynomials.

class PolynomialProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240611};
};

TEST_F(PolynomialProperties, RingLaws) {
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_polynomial(rng, 4, 2, true);
    const auto b = random_polynomial(rng, 4, 2, true);
    const auto c = random_polynomial(rng, 4, 2, true);
    ASSERT_EQ(a + (b + c), (a + b) + c);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_TRUE((a - a).is_zero());
    const Polynomial combined = a * b + c;
    for (const auto& [e, coeff] : combined.terms()) ASSERT_NE(coeff, 0);
  }
}

TEST_F(PolynomialProperties, SubstitutionIsARingHomomorphism) {
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = random_polynomial(rng, 3, 2, false);
    const auto b = random_polynomial(rng, 3, 2, false);
    const Bindings bindings{{Var::X, random_polynomial(rng, 2, 1, true)},
                            {Var::Z, random_polynomial(rng, 2, 1, false)}};
    ASSERT_EQ(substitute(a + b, bindings), substitute(a, bindings) + substitute(b, bindings));
    ASSERT_EQ(substitute(a * b, bindings), substitute(a, bindings) * substitute(b, bindings));
    const Bindings identity{{Var::V, v()}, {Var::X, x()}, {Var::Y, y()}, {Var::Z, z()}};
    ASSERT_EQ(substitute(a, identity), a);
  }
}

TEST_F(PolynomialProperties, EvaluationCommutesWithSubstitution) {
  std::uniform_int_distribution<int> value(-3, 3);
  for (int trial = 0; trial < 150; ++trial) {
    const auto p = random_polynomial(rng, 4, 2, false);
    const Bindings bindings{{Var::V, random_polynomial(rng, 2, 1, false)},
                            {Var::Y, random_polynomial(rng, 2, 1, false)}};
    const Point point{{Var::V, value(rng)}, {Var::X, value(rng)}, {Var::Y, value(rng)},
                      {Var::Z, value(rng)}};
    // point ∘ bindings
    Point composed = point;
    for (const auto& [var, b] : bindings) {
      const Rational r = evaluate(b, point);
      ASSERT_EQ(denominator(r), 1);
      composed[var] = numerator(r);
    }
    ASSERT_EQ(evaluate(substitute(p, bindings), point), evaluate(p, composed));
  }
}

TEST_F(PolynomialProperties, CanonicalTextIsInjectiveAndParsesBack) {
  std::set<std::string> texts;
  std::vector<Polynomial> seen;
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_polynomial(rng, 3, 2, true);
    const std::string text = to_canonical_text(p);
    ASSERT_EQ(parse_polynomial(text), p) << text;
    ASSERT_EQ(polynomial_from_json(to_json(p)), p);
    for (const auto& q : seen) {
      ASSERT_EQ(to_canonical_text(q) == text, q == p);
    }
    seen.push_back(p);
  }
}

}  // namespace
}  // namespace gpoly
