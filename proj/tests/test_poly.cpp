#include "doctest.h"

#include "gds/error.hpp"
#include "gds/parse.hpp"
#include "gds/poly.hpp"
#include "support/generators.hpp"

using namespace gds;

namespace {

const FieldPtr Q = Field::rationals();
Poly P(const char* text) { return parse_poly(Q, text); }

}  // namespace

TEST_CASE("ring arithmetic") {
  CHECK((P("X + 1") * P("X - 1")) == P("X^2 - 1"));
  CHECK((P("Z^2") * P("Z")) == P("Z^3"));
  // Oracle: dense expansion of X^2 * h(X^4) term by term.
  const Poly h = P("X^5 + 2*X^4 + X^2 - 2");
  Poly expanded(Q);
  for (const auto& [m, c] : h.terms()) expanded.add_term({2 + 4 * m.x, 0, 0}, c);
  CHECK(expanded == P("X^22 + 2*X^18 + X^10 - 2*X^2"));
  CHECK((expanded * P("1")) == expanded);
  CHECK((P("X") - P("X")).is_zero());
}

TEST_CASE("canonical printing") {
  CHECK(P("Y*X^2 - Y").to_string() == "(X^2 - 1)*Y");
  CHECK(P("X^2*Y").to_string() == "X^2*Y");
  CHECK(P("-X^2*Y - Y").to_string() == "-(X^2 + 1)*Y");
  CHECK(P("Y*Z + X").to_string() == "Y*Z + X");
  CHECK(P("3/2*X - 1/2").to_string() == "3/2*X - 1/2");
  CHECK(P("0").to_string() == "0");
  CHECK(P("Z + X^3 + 2 + Z^2").to_string() == "Z^2 + Z + X^3 + 2");
  const FieldPtr k = parse_modulus("t^2 + 1");
  CHECK(parse_poly(k, "(t + 1)*X + t*Y").to_string() == "t*Y + (t + 1)*X");
  CHECK(parse_poly(k, "-t*X").to_string() == "-t*X");
}

TEST_CASE("parse errors carry positions") {
  try {
    (void)P("X + * 2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
  try {
    (void)P("X +\n  W");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(P("X / Y"), ParseError);
  CHECK_THROWS_AS(P("X / 0"), ParseError);
  CHECK_THROWS_AS(P("(X + 1"), ParseError);
  CHECK_THROWS_AS(P("x"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK(P("(X + 1)/2") == P("1/2*X + 1/2"));
  CHECK(P("  X ^ 2 ") == P("X^2"));
}

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(P("Z^3 + Z + 1"), Var::Z) == P("3*Z^2 + 1"));
  CHECK(partial_derivative(P("X^2*Y"), Var::X) == P("2*X*Y"));
  CHECK(partial_derivative(P("Z^2"), Var::Z) == P("2*Z"));
  CHECK(partial_derivative(P("X^2"), Var::Y).is_zero());
}

TEST_CASE("substitution") {
  const FieldPtr q = Q;
  CHECK(substitute(P("X^2"), {{Var::X, P("-X")}}) == P("X^2"));
  const Poly g = P("X^2 - 1");
  // Oracle: binomial expansion built by hand.
  const Poly expected = P("Z^2") + P("2*Z") * g + g * g;
  CHECK(substitute(P("Z^2"), {{Var::Z, P("Z") + g}}) == expected);
  CHECK(substitute(P("X"), {{Var::X, P("X")}}) == P("X"));
  (void)q;
}

TEST_CASE("exact division") {
  CHECK(divide_exact(P("X^2 - 1"), P("X - 1")) == P("X + 1"));
  const Poly g = P("X^2 - 1");
  CHECK(divide_exact(P("2*Z") * g + g * g, g) == P("2*Z") + g);
  try {
    (void)divide_exact(P("X"), P("X^2 - 1"));
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
    CHECK(e.detail().find("remainder X") != std::string::npos);
  }
  try {
    (void)divide_exact(P("X"), P("0"));
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("division in Z") {
  auto [q1, r1] = divmod_in_Z(P("Z^3"), P("Z^2"));
  CHECK(q1 == P("Z"));
  CHECK(r1.is_zero());
  const Poly p = P("Z^2 + X*Z"), q = P("Z^2 - X*Y");
  auto [q2, r2] = divmod_in_Z(p, q);
  CHECK(q2 == P("1"));
  CHECK(r2 == P("X*Z + X*Y"));
  CHECK(p == q2 * q + r2);
  auto [q3, r3] = divmod_in_Z(P("X^2"), P("Z - 1"));
  CHECK(q3.is_zero());
  CHECK(r3 == P("X^2"));
  try {
    (void)divmod_in_Z(P("Z"), P("2*Z^2"));
    FAIL("expected NotMonicInZ");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMonicInZ);
  }
  CHECK_THROWS_AS(divmod_in_Z(P("Z"), P("X*Z^2")), Error);
}

TEST_CASE("property: divmod_in_Z round trip") {
  testing::Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    const Poly p = testing::random_poly(rng, Q, {3, 2, 5, 6});
    const auto d = static_cast<std::uint32_t>(testing::uniform(rng, 1, 3));
    Poly q = testing::random_poly(rng, Q, {2, 2, d - 1, 3});
    q.add_term({0, 0, d}, FieldElement(Q, 1));
    const auto [quot, rem] = divmod_in_Z(p, q);
    CHECK(p == quot * q + rem);
    CHECK(rem.degree(Var::Z) < static_cast<long>(d));
  }
}

TEST_CASE("property: Leibniz rule and substitution homomorphism") {
  testing::Rng rng(7);
  const FieldPtr k = Field::cyclotomic(3);
  for (int i = 0; i < 100; ++i) {
    const Poly p = testing::random_poly(rng, k, {3, 2, 2, 4}), q = testing::random_poly(rng, k, {3, 2, 2, 4});
    for (Var v : {Var::X, Var::Y, Var::Z}) {
      CHECK(partial_derivative(p * q, v) == p * partial_derivative(q, v) + q * partial_derivative(p, v));
    }
    const std::map<Var, Poly> images{{Var::X, testing::random_poly(rng, k, {2, 1, 1, 3})},
                                     {Var::Z, testing::random_poly(rng, k, {2, 1, 1, 3})}};
    CHECK(substitute(p * q, images) == substitute(p, images) * substitute(q, images));
    CHECK(substitute(p + q, images) == substitute(p, images) + substitute(q, images));
  }
}

TEST_CASE("property: printed polynomials re-parse") {
  testing::Rng rng(29);
  for (const FieldPtr& k : {Q, Field::cyclotomic(4), parse_modulus("t^3 - t - 1")}) {
    for (int i = 0; i < 100; ++i) {
      const Poly p = testing::random_poly(rng, k, {4, 2, 3, 7});
      CHECK(parse_poly(k, p.to_string()) == p);
      CHECK(parse_poly(k, p.to_expanded_string()) == p);
    }
  }
}
