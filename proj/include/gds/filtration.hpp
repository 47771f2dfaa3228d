#pragma once

#include <map>
#include <string>
#include <vector>

#include "gds/surface.hpp"

namespace gds {

/// p = sum_n digits[n] * f^n with every digit of degree <= r - 1.
struct FAdicExpansion {
  std::map<unsigned, Poly> digits;
};

/// Base-f expansion of a nonzero p in K[X]. Throws ZeroPolynomial.
FAdicExpansion fadic_expand(const Surface& s, const Poly& p);
Poly fadic_reconstruct(const Surface& s, const FAdicExpansion& e);

/// Element num / f^denom_exp of T = K[x, f(x)^-1, z], kept with f not
/// dividing num unless denom_exp = 0.
class TElement {
 public:
  /// Reduces the fraction. num must not involve Y.
  static TElement make(const Surface& s, const Poly& num, unsigned denom_exp);

  const Surface& surface() const noexcept { return surface_; }
  const Poly& num() const noexcept { return num_; }
  unsigned denom_exp() const noexcept { return denom_exp_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  TElement& operator+=(const TElement& o);
  TElement& operator-=(const TElement& o);
  TElement& operator*=(const TElement& o);
  friend TElement operator+(TElement a, const TElement& b) { return a += b; }
  friend TElement operator-(TElement a, const TElement& b) { return a -= b; }
  friend TElement operator*(TElement a, const TElement& b) { return a *= b; }

  friend bool operator==(const TElement& a, const TElement& b);
  friend bool operator!=(const TElement& a, const TElement& b) { return !(a == b); }

  /// `num` alone, or `(num)/f^k`.
  std::string to_string() const;

 private:
  TElement(Surface s, Poly num, unsigned e) : surface_(std::move(s)), num_(std::move(num)), denom_exp_(e) {}

  Surface surface_;
  Poly num_;
  unsigned denom_exp_;
};

/// Substitutes y = phi(x, z) / f(x).
TElement embed_in_T(const BElement& b);

struct WeightAssignment {
  long mu = 1;  ///< weight of x, >= 1
  long nu = 0;  ///< weight of z
};

/// One summand c * x^i / f^j * z^k of the C_n-decomposition; `index` is n
/// (n >= 0: c x^n, j = 0; n < 0: n = -j r + i with 0 <= i < r).
struct BasisTerm {
  long index;
  unsigned z_power;
  FieldElement coeff;
};

/// Unique decomposition of e over the basis {C_n z^k}.
std::vector<BasisTerm> basis_decompose(const TElement& e);

/// Maximal weight n*mu + k*nu over the basis terms. Throws ZeroElement.
long weight(const TElement& e, const WeightAssignment& w);
/// Sum of the basis terms of maximal weight. Throws ZeroElement.
TElement leading_form(const TElement& e, const WeightAssignment& w);

}  // namespace gds
