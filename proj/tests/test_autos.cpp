#include "doctest.h"

#include <numeric>

#include "gds/autos.hpp"
#include "gds/error.hpp"
#include "gds/parse.hpp"
#include "support/generators.hpp"

using namespace gds;
using testing::sigma0;
using testing::sigma1;

namespace {

const FieldPtr Q = Field::rationals();
Poly P(const char* text) { return parse_poly(Q, text); }
BElement E(const Surface& s, const char* text) { return normalize(s, parse_poly(s->field(), text)); }
FieldElement q(long v) { return FieldElement(Q, v); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

// Brute force: largest s such that every exponent is congruent to the
// smallest one modulo s.
unsigned brute_force_s(const Poly& g) {
  const auto top = static_cast<unsigned>(g.degree(Var::X));
  unsigned lo = top;
  for (const auto& [m, c] : g.terms()) lo = std::min(lo, m.x);
  for (unsigned s = top; s >= 1; --s) {
    bool ok = true;
    for (const auto& [m, c] : g.terms()) ok = ok && (m.x - lo) % s == 0;
    if (ok) return s;
  }
  return 1;
}

}  // namespace

TEST_CASE("unity_decompose") {
  const UnityDecomposition u = unity_decompose(P("X^22 + 2*X^18 + X^10 - 2*X^2"));
  CHECK(u.i == 2);
  CHECK(u.s == 4);
  CHECK(u.h == P("X^5 + 2*X^4 + X^2 - 2"));
  const UnityDecomposition u2 = unity_decompose(P("X^2 - 1"));
  CHECK(u2.i == 0);
  CHECK(u2.s == 2);
  CHECK(u2.h == P("X - 1"));
  const UnityDecomposition u3 = unity_decompose(P("X^3 - X"));
  CHECK(u3.i == 1);
  CHECK(u3.s == brute_force_s(P("X^3 - X")));
  CHECK(u3.s == 2);
  CHECK(u3.h == P("X - 1"));
  CHECK(kind_of([] { unity_decompose(P("X^4")); }) == ErrorKind::NotApplicable);
  CHECK(kind_of([] { unity_decompose(P("X^3 + X^2 + 1")); }) == ErrorKind::NotCentered);
  CHECK(kind_of([] { unity_decompose(P("2*X^3 + 1")); }) == ErrorKind::NotMonic);
  CHECK(kind_of([] { unity_decompose(P("X")); }) == ErrorKind::NotApplicable);
}

TEST_CASE("property: unity_decompose reconstructs and is maximal") {
  testing::Rng rng(59);
  for (int n = 0; n < 100; ++n) {
    const auto deg = static_cast<unsigned>(testing::uniform(rng, 2, 12));
    Poly g = testing::random_univariate(rng, Q, deg, true);
    g.add_term({deg - 1, 0, 0}, -g.coefficient({deg - 1, 0, 0}));
    if (g.num_terms() == 1) continue;
    const UnityDecomposition u = unity_decompose(g);
    CHECK(substitute(u.h, {{Var::X, Poly::variable(Q, Var::X, u.s)}}).shifted({u.i, 0, 0}) == g);
    CHECK(u.s == brute_force_s(g));
  }
}

TEST_CASE("center") {
  const Centering c0 = center(sigma0());
  CHECK(c0.surface->f() == P("X^2 - 1"));
  CHECK(c0.a.is_zero());
  CHECK(c0.b.is_zero());
  const Centering c1 = center(make_surface(Q, P("X^2 + 2*X + 1"), P("Z^2")));
  CHECK(c1.surface->f() == P("X^2"));
  CHECK(c1.b == q(1));
  CHECK(kind_of([&] { make_H(c1.surface, P("1")); }) == ErrorKind::NotApplicable);
  const Centering c2 = center(make_surface(Q, P("X^2 - 1"), P("Z^2 + 2*Z")));
  CHECK(c2.surface->phi() == P("Z^2 - 1"));
  CHECK(c2.a == q(1));
  CHECK(kind_of([] { center(make_surface(Q, P("X^2 - 1"), P("Z^2 + X"))); }) == ErrorKind::PhiDependsOnX);
}

TEST_CASE("make_H") {
  const Surface s0 = sigma0();
  const Morphism H1 = make_H(s0, P("1"));
  CHECK(H1.tx() == BElement::x(s0));
  CHECK(H1.tz() == E(s0, "Z + X^2 - 1"));
  // (phi(z + f) - phi(z)) / f = 2z + f
  CHECK(H1.ty() == E(s0, "Y + 2*Z + X^2 - 1"));
  CHECK(morphism_equal(make_H(s0, P("0")), identity(s0)));
  const Surface s1 = sigma1();
  const Morphism H = make_H(s1, P("X^2 + 1"));
  CHECK(H.tz() == E(s1, "Z + X^24 + X^22 + 2*X^20 + 2*X^18 + X^12 + X^10 - 2*X^4 - 2*X^2"));
  CHECK(relation_residue(s1, H.tx(), H.ty(), H.tz()).is_zero());
  CHECK(kind_of([] { make_H(make_surface(Q, P("X^2 - 1"), P("Z^2 + X")), P("1")); }) == ErrorKind::PhiDependsOnX);
  CHECK(kind_of([&] { make_H(s0, P("Y")); }) == ErrorKind::WrongVariables);
}

TEST_CASE("make_T") {
  const Surface s0 = sigma0();
  const Morphism T = make_T(s0, q(-1));
  CHECK(T.tx() == E(s0, "-X"));
  CHECK(T.ty() == BElement::y(s0));
  CHECK(T.tz() == BElement::z(s0));
  CHECK(kind_of([&] { make_T(s0, q(2)); }) == ErrorKind::NotRootOfUnity);
  CHECK(kind_of([&] { make_T(s0, q(0)); }) == ErrorKind::NotRootOfUnity);

  const FieldPtr k = Field::cyclotomic(4);
  const Surface s1 = sigma1(k);
  const FieldElement t = FieldElement::generator(k);
  const Morphism Ti = make_T(s1, t);
  CHECK(Ti.ty() == BElement::y(s1).scaled(FieldElement(k, -1)));
  // f(lambda X) = lambda^2 f(X), checked on the polynomial itself.
  const Poly fl = substitute(s1->f(), {{Var::X, Poly::variable(k, Var::X).scaled(t)}});
  CHECK(fl == s1->f().scaled(t * t));
  CHECK(kind_of([&] { make_T(s1, t.pow(2) * FieldElement(k, 2)); }) == ErrorKind::NotRootOfUnity);
}

TEST_CASE("make_T: lambda must be 1 when s = 1") {
  // X^3 + X + 1: exponents 3, 1, 0 give s = 1.
  const FieldPtr k = Field::cyclotomic(3);
  const Surface s = make_surface(k, parse_poly(k, "X^3 + X + 1"), parse_poly(k, "Z^2"));
  CHECK(unity_decompose(s->f()).s == 1);
  CHECK(morphism_equal(make_T(s, FieldElement(k, 1)), identity(s)));
  CHECK(kind_of([&] { make_T(s, FieldElement::generator(k)); }) == ErrorKind::NotRootOfUnity);
  CHECK(kind_of([&] { make_T(s, FieldElement(k, -1)); }) == ErrorKind::NotRootOfUnity);
}

TEST_CASE("make_R and make_S") {
  const Surface s0 = sigma0();
  const Morphism R3 = make_R(s0, q(3));
  CHECK(R3.ty() == E(s0, "9*Y"));
  CHECK(R3.tz() == E(s0, "3*Z"));
  CHECK(morphism_equal(make_R(s0, q(1)), identity(s0)));
  CHECK(kind_of([] { make_R(sigma1(), FieldElement(Q, 2)); }) == ErrorKind::NotApplicable);
  CHECK(kind_of([&] { make_R(s0, q(0)); }) == ErrorKind::DivisionByZero);

  const Morphism S = make_S(s0, q(-1));
  CHECK(S.tz() == E(s0, "-Z"));
  CHECK(S.ty() == BElement::y(s0));
  CHECK(morphism_equal(make_S(s0, q(1)), identity(s0)));
  CHECK(kind_of([] { make_S(sigma1(), FieldElement(Q, -1)); }) == ErrorKind::NotApplicable);
  CHECK(kind_of([&] { make_S(s0, q(2)); }) == ErrorKind::NotRootOfUnity);
  // phi = Z^4 + Z = Z (Z^3 + 1): i = 1, m = 3
  const FieldPtr k = Field::cyclotomic(3);
  const Surface s = make_surface(k, parse_poly(k, "X^2 - 1"), parse_poly(k, "Z^4 + Z"));
  const PhiSymmetry sym = phi_symmetry(s);
  CHECK(sym.i == 1);
  CHECK(sym.m == 3);
  const FieldElement w = FieldElement::generator(k);
  const Morphism Sw = make_S(s, w);
  CHECK(Sw.ty() == BElement::y(s).scaled(w));
}

TEST_CASE("compose, invert, equal") {
  const Surface s0 = sigma0();
  CHECK(morphism_equal(compose(make_H(s0, P("1")), make_H(s0, P("X"))), make_H(s0, P("X + 1"))));
  CHECK(morphism_equal(compose(make_T(s0, q(-1)), make_T(s0, q(-1))), identity(s0)));
  const Morphism M = make_R(s0, q(3));
  CHECK(morphism_equal(compose(identity(s0), M), M));
  const Morphism Hinv = invert(make_H(s0, P("1")));
  CHECK(morphism_equal(Hinv, make_H(s0, P("-1"))));
  CHECK(morphism_equal(compose(make_H(s0, P("1")), Hinv), identity(s0)));
  CHECK(morphism_equal(invert(identity(s0)), identity(s0)));
  CHECK(morphism_equal(invert(M), make_R(s0, FieldElement(Q, Rational(1, 3)))));
  CHECK_FALSE(morphism_equal(make_H(s0, P("1")), make_H(s0, P("-1"))));
  const Morphism raw = make_morphism(s0, BElement::x(s0), BElement::y(s0), -BElement::z(s0));
  CHECK(kind_of([&] { invert(raw); }) == ErrorKind::NotInvertibleRecord);
  CHECK(kind_of([&] { make_morphism(s0, BElement::x(s0), BElement::y(s0), BElement::z(s0).scaled(q(2))); }) ==
        ErrorKind::RelationViolated);
  CHECK(kind_of([&] { morphism_equal(M, identity(sigma1())); }) == ErrorKind::SurfaceMismatch);
}

TEST_CASE("word parsing and application order") {
  const Surface s0 = sigma0();
  const Word w = parse_word(Q, "H[h=1]; T[lambda=-1]");
  REQUIRE(w.size() == 2);
  CHECK(word_to_string(w) == "H[h=1];T[lambda=-1]");
  // H is applied first: z -> z + f -> z + f(-x) = z + f.
  const Morphism m = from_word(s0, w);
  CHECK(apply(m, BElement::x(s0)) == E(s0, "-X"));
  CHECK(morphism_equal(m, compose(make_T(s0, q(-1)), make_H(s0, P("1")))));
  CHECK(parse_word(Q, "id").empty());
  CHECK(parse_generator(Q, "S[mu=-1]").to_string() == "S[mu=-1]");
  CHECK_THROWS_AS(parse_word(Q, "H[lambda=1]"), ParseError);
  CHECK_THROWS_AS(parse_word(Q, "Q[h=1]"), ParseError);
  try {
    (void)parse_word(Q, "H[h=1];T[lambda=1+]");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 19);
  }
}

TEST_CASE("lemma shape of generators") {
  const Surface s0 = sigma0();
  const auto shape = lemma_shape(from_word(s0, parse_word(Q, "H[h=X];T[lambda=-1];S[mu=-1];R[lambda=2]")));
  REQUIRE(shape.has_value());
  CHECK(shape->lambda == q(-1));
  CHECK(shape->alpha == q(-2));
  // x -> x, y -> 0, z -> 0 respects the relation but is no automorphism.
  const Morphism collapse = make_morphism(s0, BElement::x(s0), BElement::zero(s0), BElement::zero(s0));
  CHECK_FALSE(lemma_shape(collapse).has_value());
}
