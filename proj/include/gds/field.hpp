#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace gds {

using Rational = mpq_class;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The base field K = Q[t]/(m(t)) for a monic m of degree >= 1.
///
/// Irreducibility of m is the caller's claim. It is never tested up front;
/// an inversion that runs into a nontrivial gcd with m raises
/// ZeroDivisorInField naming the factor it found.
class Field {
 public:
  /// K = Q, encoded as m(t) = t.
  static FieldPtr rationals();
  /// `modulus` lists coefficients of m from t^0 upwards and must be monic.
  static FieldPtr make(std::vector<Rational> modulus);
  /// Q(zeta_n) via the n-th cyclotomic polynomial.
  static FieldPtr cyclotomic(unsigned n);

  std::size_t degree() const noexcept { return modulus_.size() - 1; }
  const std::vector<Rational>& modulus() const noexcept { return modulus_; }
  bool is_rationals() const noexcept { return degree() == 1 && modulus_[0] == 0; }

  /// m(t) printed in the shared grammar, e.g. `t^2 + 1`.
  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.modulus_ == b.modulus_; }

 private:
  explicit Field(std::vector<Rational> modulus) : modulus_(std::move(modulus)) {}

  std::vector<Rational> modulus_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b);

/// An element of K, stored as its reduced representative in t.
class FieldElement {
 public:
  explicit FieldElement(FieldPtr field);
  FieldElement(FieldPtr field, const Rational& value);
  FieldElement(FieldPtr field, long value) : FieldElement(std::move(field), Rational(value)) {}

  /// Reduces `coeffs` (t^0 upwards, any length) modulo m.
  static FieldElement from_coeffs(FieldPtr field, std::vector<Rational> coeffs);
  /// The class of t.
  static FieldElement generator(FieldPtr field);

  const FieldPtr& field() const noexcept { return field_; }
  /// Always exactly degree(m) entries.
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in Q (no t-dependence).
  bool is_rational() const;
  const Rational& constant_term() const { return coeffs_[0]; }
  /// Number of nonzero t-coefficients.
  std::size_t num_terms() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inverse() const;
  /// Negative exponents invert first.
  FieldElement pow(long exponent) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  FieldElement(FieldPtr field, std::vector<Rational> reduced, int);

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

/// True iff a^n = 1 exactly.
bool is_root_of_unity(const FieldElement& a, unsigned n);

}  // namespace gds
