#include "doctest.h"

#include "gds/error.hpp"
#include "gds/filtration.hpp"
#include "gds/parse.hpp"
#include "support/generators.hpp"

using namespace gds;
using testing::sigma0;
using testing::sigma1;

namespace {

const FieldPtr Q = Field::rationals();
Poly P(const char* text) { return parse_poly(Q, text); }
BElement E(const Surface& s, const char* text) { return normalize(s, parse_poly(s->field(), text)); }

}  // namespace

TEST_CASE("f-adic expansion") {
  const Surface s = sigma0();
  const FAdicExpansion e = fadic_expand(s, P("X^3"));
  REQUIRE(e.digits.size() == 2);
  CHECK(e.digits.at(0) == P("X"));
  CHECK(e.digits.at(1) == P("X"));
  CHECK(fadic_reconstruct(s, e) == P("X^3"));
  const FAdicExpansion e1 = fadic_expand(s, P("X"));
  CHECK(e1.digits.size() == 1);
  CHECK(e1.digits.at(0) == P("X"));
  const FAdicExpansion e2 = fadic_expand(s, P("(X^2 - 1)^2"));
  CHECK(e2.digits.size() == 1);
  CHECK(e2.digits.at(2) == P("1"));
  CHECK_THROWS_AS(fadic_expand(s, P("0")), Error);
}

TEST_CASE("property: f-adic round trip") {
  testing::Rng rng(61);
  for (const Surface& s : {sigma0(), sigma1()}) {
    for (int i = 0; i < 50; ++i) {
      const Poly p = testing::random_univariate(rng, Q, static_cast<unsigned>(testing::uniform(rng, 0, 20)));
      const FAdicExpansion e = fadic_expand(s, p);
      CHECK(fadic_reconstruct(s, e) == p);
      for (const auto& [n, digit] : e.digits) {
        CHECK(digit.degree(Var::X) <= static_cast<long>(s->r()) - 1);
        CHECK_FALSE(digit.is_zero());
      }
    }
  }
}

TEST_CASE("embedding into T") {
  const Surface s0 = sigma0();
  const TElement ey = embed_in_T(BElement::y(s0));
  CHECK(ey.num() == P("Z^2"));
  CHECK(ey.denom_exp() == 1);
  const TElement exz = embed_in_T(E(s0, "X*Z"));
  CHECK(exz.num() == P("X*Z"));
  CHECK(exz.denom_exp() == 0);
  const Surface s1 = sigma1();
  const TElement ey1 = embed_in_T(BElement::y(s1));
  CHECK(ey1.num() == P("Z^3 + Z + 1"));
  CHECK(ey1.denom_exp() == 1);
  // f*y = phi lands back in K[x, z].
  CHECK(embed_in_T(E(s0, "(X^2 - 1)*Y")).num() == P("Z^2"));
  CHECK(embed_in_T(E(s0, "(X^2 - 1)*Y")).denom_exp() == 0);
}

TEST_CASE("weights") {
  const Surface s = sigma0();
  const WeightAssignment w{1, 5};
  CHECK(weight(embed_in_T(E(s, "X^3")), w) == 3);
  CHECK(weight(embed_in_T(BElement::y(s)), w) == 8);
  CHECK(weight(TElement::make(s, P("1"), 1), w) == -2);
  // x^3/f = x + x/f: indices 1 and -1.
  CHECK(weight(TElement::make(s, P("X^3"), 1), {1, 0}) == 1);
  CHECK_THROWS_AS(weight(TElement::make(s, P("0"), 0), w), Error);
  CHECK_THROWS_AS(weight(embed_in_T(BElement::x(s)), {0, 1}), Error);
}

TEST_CASE("basis decomposition matches the C_n definition") {
  const Surface s = sigma1();
  // x^5 / f^2 with r = 22: n = -2*22 + 5.
  const auto terms = basis_decompose(TElement::make(s, P("X^5*Z"), 2));
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].index == -39);
  CHECK(terms[0].z_power == 1);
}

TEST_CASE("leading forms") {
  const Surface s0 = sigma0();
  CHECK(leading_form(embed_in_T(BElement::y(s0)), {1, 100}) == TElement::make(s0, P("Z^2"), 1));
  const Surface s1 = sigma1();
  CHECK(leading_form(embed_in_T(BElement::y(s1)), {1, 100}) == TElement::make(s1, P("Z^3"), 1));
  CHECK(leading_form(embed_in_T(E(s0, "X + X^3")), {1, 1}) == TElement::make(s0, P("X^3"), 0));
  CHECK(leading_form(embed_in_T(BElement::y(s0)), {1, 5}).to_string() == "(Z^2)/(X^2 - 1)");
}

TEST_CASE("property: embedding is a homomorphism") {
  testing::Rng rng(67);
  for (const Surface& s : {sigma0(), sigma1()}) {
    for (int i = 0; i < 40; ++i) {
      const BElement a = testing::random_b(rng, s, 4, 2, 4), b = testing::random_b(rng, s, 4, 2, 4);
      CHECK(embed_in_T(a * b) == embed_in_T(a) * embed_in_T(b));
      CHECK(embed_in_T(a + b) == embed_in_T(a) + embed_in_T(b));
    }
  }
}

TEST_CASE("property: weights add and leading forms multiply") {
  testing::Rng rng(71);
  for (const Surface& s : {sigma0(), sigma1()}) {
    for (const WeightAssignment w : {WeightAssignment{1, 1}, WeightAssignment{1, 7}, WeightAssignment{2, -3}}) {
      for (int i = 0; i < 25; ++i) {
        const TElement a = embed_in_T(testing::random_nonzero_b(rng, s, 4, 2, 4));
        const TElement b = embed_in_T(testing::random_nonzero_b(rng, s, 4, 2, 4));
        CHECK(weight(a * b, w) == weight(a, w) + weight(b, w));
        CHECK(leading_form(a * b, w) == leading_form(leading_form(a, w) * leading_form(b, w), w));
      }
    }
  }
}
