#pragma once

// Hand-rolled random generators for property tests. Seeds are fixed by the
// callers so every run sees the same inputs.

#include <random>
#include <string>

#include "gds/parse.hpp"
#include "gds/poly.hpp"
#include "gds/surface.hpp"

namespace gds::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng, long span = 3, long max_den = 3) {
  Rational q(uniform(rng, -span, span), uniform(rng, 1, max_den));
  q.canonicalize();
  return q;
}

inline Rational nonzero_rational(Rng& rng, long span = 3, long max_den = 3) {
  for (;;) {
    Rational q = small_rational(rng, span, max_den);
    if (q != 0) return q;
  }
}

inline FieldElement random_element(Rng& rng, const FieldPtr& k) {
  std::vector<Rational> c(k->degree());
  for (auto& q : c) q = small_rational(rng);
  return FieldElement::from_coeffs(k, c);
}

struct PolyShape {
  unsigned max_x = 4;
  unsigned max_y = 0;
  unsigned max_z = 0;
  unsigned max_terms = 5;
};

inline Poly random_poly(Rng& rng, const FieldPtr& k, PolyShape shape) {
  Poly p(k);
  const long n = uniform(rng, 0, shape.max_terms);
  for (long i = 0; i < n; ++i) {
    Monomial m{static_cast<std::uint32_t>(uniform(rng, 0, shape.max_x)),
               static_cast<std::uint32_t>(uniform(rng, 0, shape.max_y)),
               static_cast<std::uint32_t>(uniform(rng, 0, shape.max_z))};
    p.add_term(m, random_element(rng, k));
  }
  return p;
}

inline Poly random_nonzero_poly(Rng& rng, const FieldPtr& k, PolyShape shape) {
  for (;;) {
    Poly p = random_poly(rng, k, shape);
    if (!p.is_zero()) return p;
  }
}

/// Random univariate polynomial in X of exact degree `deg`.
inline Poly random_univariate(Rng& rng, const FieldPtr& k, unsigned deg, bool monic = false) {
  Poly p(k);
  for (unsigned e = 0; e < deg; ++e) p.add_term({e, 0, 0}, FieldElement(k, small_rational(rng)));
  p.add_term({deg, 0, 0}, monic ? FieldElement(k, 1) : FieldElement(k, nonzero_rational(rng)));
  return p;
}

/// Random element of B with representative of bounded shape.
inline BElement random_b(Rng& rng, const Surface& s, unsigned max_x = 4, unsigned max_y = 2, unsigned max_terms = 5) {
  return normalize(s, random_poly(rng, s->field(), {max_x, max_y, s->d() - 1, max_terms}));
}

inline BElement random_nonzero_b(Rng& rng, const Surface& s, unsigned max_x = 4, unsigned max_y = 2,
                                 unsigned max_terms = 5) {
  for (;;) {
    BElement b = random_b(rng, s, max_x, max_y, max_terms);
    if (!b.is_zero()) return b;
  }
}

/// X^2 - 1, Z^2 over Q.
inline Surface sigma0() {
  const FieldPtr q = Field::rationals();
  return make_surface(q, parse_poly(q, "X^2 - 1"), parse_poly(q, "Z^2"));
}

/// X^22 + 2X^18 + X^10 - 2X^2, Z^3 + Z + 1 over `k` (Q by default).
inline Surface sigma1(FieldPtr k = Field::rationals()) {
  return make_surface(k, parse_poly(k, "X^22 + 2*X^18 + X^10 - 2*X^2"), parse_poly(k, "Z^3 + Z + 1"));
}

/// f monic of degree r, phi monic in Z of degree d with coefficients in
/// K[X] of degree <= 2; all coefficients drawn from {-3..3}.
inline Surface random_surface(Rng& rng, unsigned r, unsigned d) {
  const FieldPtr q = Field::rationals();
  Poly f(q), phi(q);
  for (unsigned e = 0; e < r; ++e) f.add_term({e, 0, 0}, FieldElement(q, uniform(rng, -3, 3)));
  f.add_term({r, 0, 0}, FieldElement(q, 1));
  for (unsigned e = 0; e < d; ++e) {
    for (unsigned xe = 0; xe <= 2; ++xe) phi.add_term({xe, 0, e}, FieldElement(q, uniform(rng, -3, 3)));
  }
  phi.add_term({0, 0, d}, FieldElement(q, 1));
  return make_surface(q, f, phi);
}

}  // namespace gds::testing
