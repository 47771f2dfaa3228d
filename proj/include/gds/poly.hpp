#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "gds/field.hpp"

namespace gds {

enum class Var { X, Y, Z };

char var_name(Var v);

struct Monomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t z = 0;

  std::uint32_t exponent(Var v) const { return v == Var::X ? x : v == Var::Y ? y : z; }
  std::uint32_t& exponent(Var v) { return v == Var::X ? x : v == Var::Y ? y : z; }
  bool is_one() const { return x == 0 && y == 0 && z == 0; }

  friend Monomial operator*(Monomial a, Monomial b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Lex with Z > Y > X, largest first. This is the canonical iteration and
/// printing order and also the monomial order used by exact division.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return std::tie(a.z, a.y, a.x) > std::tie(b.z, b.y, b.x);
  }
};

/// Sparse polynomial in X, Y, Z over K. No stored coefficient is zero.
class Poly {
 public:
  using TermMap = std::map<Monomial, FieldElement, TermOrder>;

  explicit Poly(FieldPtr field) : field_(std::move(field)) {}

  static Poly constant(const FieldElement& c);
  static Poly constant(FieldPtr field, const Rational& c);
  static Poly variable(FieldPtr field, Var v, std::uint32_t power = 1);
  static Poly term(const FieldElement& c, Monomial m);

  const FieldPtr& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }

  /// -1 for the zero polynomial.
  long degree(Var v) const;
  /// Total degree, -1 for zero.
  long total_degree() const;
  bool involves(Var v) const;
  /// True when no variable other than `v` occurs (constants qualify).
  bool only_involves(Var v) const;
  bool is_constant() const;

  FieldElement coefficient(Monomial m) const;
  /// Coefficient of v^k viewed as a polynomial in the remaining variables.
  Poly coefficient_of(Var v, std::uint32_t k) const;
  /// Leading term in TermOrder; precondition: nonzero.
  const std::pair<const Monomial, FieldElement>& leading_term() const { return *terms_.begin(); }

  void add_term(Monomial m, const FieldElement& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const FieldElement& c) const;
  Poly shifted(Monomial m) const;
  Poly pow(std::uint32_t e) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Canonical text: terms grouped by their (Z, Y) part, each group's
  /// X-coefficient parenthesised when it has several terms, e.g.
  /// `(X^2 - 1)*Y + Z + 2*X`.
  std::string to_string() const;
  /// One term per monomial, no grouping.
  std::string to_expanded_string() const;

 private:
  FieldPtr field_;
  TermMap terms_;
};

Poly partial_derivative(const Poly& p, Var v);

/// Simultaneous substitution; variables absent from `images` are kept.
Poly substitute(const Poly& p, const std::map<Var, Poly>& images);

/// s with p = q * s. Throws NotDivisible (message carries the remainder of
/// the lex division) or DivisionByZero.
Poly divide_exact(const Poly& p, const Poly& q);

struct DivMod {
  Poly quot;
  Poly rem;
};

/// Division by q monic in Z over K[X, Y]; deg_Z(rem) < deg_Z(q).
DivMod divmod_in_Z(const Poly& p, const Poly& q);

/// Division by a univariate q in X with any nonzero leading coefficient;
/// Y and Z in p are treated as parameters. deg_X(rem) < deg_X(q).
DivMod divmod_in_X(const Poly& p, const Poly& q);

}  // namespace gds
