#pragma once

#include <memory>
#include <optional>
#include <string>

#include "gds/field.hpp"
#include "gds/poly.hpp"

namespace gds {

/// Defining data of B = K[X,Y,Z]/(f(X)Y - phi(X,Z)).
///
/// f is monic in X of degree r > 1, phi is monic in Z of degree d > 1 with
/// coefficients in K[X]. Derived polynomials used by every other module are
/// computed once here.
class SurfaceSpec {
 public:
  const FieldPtr& field() const noexcept { return field_; }
  const Poly& f() const noexcept { return f_; }
  const Poly& phi() const noexcept { return phi_; }
  unsigned r() const noexcept { return r_; }
  unsigned d() const noexcept { return d_; }
  const Poly& phi_z() const noexcept { return phi_z_; }
  const Poly& phi_x() const noexcept { return phi_x_; }
  const Poly& f_prime() const noexcept { return f_prime_; }
  /// F = f(X)Y - phi(X,Z).
  const Poly& relation() const noexcept { return relation_; }
  /// phi - f Y, monic in Z; dividing by it yields normal forms.
  const Poly& reducer() const noexcept { return reducer_; }

  bool phi_depends_on_x() const { return phi_.involves(Var::X); }

  friend bool operator==(const SurfaceSpec& a, const SurfaceSpec& b) {
    return same_field(a.field_, b.field_) && a.f_ == b.f_ && a.phi_ == b.phi_;
  }

 private:
  friend std::shared_ptr<const SurfaceSpec> make_surface(const FieldPtr&, const Poly&, const Poly&);
  SurfaceSpec(FieldPtr field, Poly f, Poly phi);

  FieldPtr field_;
  Poly f_, phi_;
  unsigned r_ = 0, d_ = 0;
  Poly phi_z_, phi_x_, f_prime_, relation_, reducer_;
};

using Surface = std::shared_ptr<const SurfaceSpec>;

/// Validates and builds a surface. Errors: WrongVariables, DegreeTooSmall,
/// NotMonic, FieldMismatch.
Surface make_surface(const FieldPtr& field, const Poly& f, const Poly& phi);

bool same_surface(const Surface& a, const Surface& b);
void require_same_surface(const Surface& a, const Surface& b);

/// Residue class in B, held as its unique representative with deg_Z < d.
class BElement {
 public:
  static BElement zero(const Surface& s);
  static BElement constant(const Surface& s, const FieldElement& c);
  static BElement constant(const Surface& s, long c);
  static BElement x(const Surface& s);
  static BElement y(const Surface& s);
  static BElement z(const Surface& s);

  const Surface& surface() const noexcept { return surface_; }
  const Poly& rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }

  BElement operator-() const;
  BElement& operator+=(const BElement& o);
  BElement& operator-=(const BElement& o);
  BElement& operator*=(const BElement& o);
  friend BElement operator+(BElement a, const BElement& b) { return a += b; }
  friend BElement operator-(BElement a, const BElement& b) { return a -= b; }
  friend BElement operator*(BElement a, const BElement& b) { return a *= b; }

  BElement scaled(const FieldElement& c) const;
  BElement pow(unsigned e) const;

  /// Equal iff same surface and identical representatives.
  friend bool operator==(const BElement& a, const BElement& b);
  friend bool operator!=(const BElement& a, const BElement& b) { return !(a == b); }

  std::string to_string() const { return rep_.to_string(); }

 private:
  friend BElement normalize(const Surface& s, const Poly& p);
  BElement(Surface s, Poly rep) : surface_(std::move(s)), rep_(std::move(rep)) {}

  Surface surface_;
  Poly rep_;
};

/// The unique representative of the class of p, with deg_Z < d.
BElement normalize(const Surface& s, const Poly& p);

/// The univariate polynomial when b lies in K[x], otherwise empty.
std::optional<Poly> in_kx(const BElement& b);

/// Image of b under the K-algebra map X -> x_img, Y -> y_img, Z -> z_img,
/// evaluated with B-arithmetic throughout.
BElement evaluate(const BElement& b, const BElement& x_img, const BElement& y_img, const BElement& z_img);
/// Same for an arbitrary polynomial, which need not be reduced.
BElement evaluate(const Surface& s, const Poly& p, const BElement& x_img, const BElement& y_img,
                  const BElement& z_img);

/// Maps a polynomial in X only onto K[x] inside B.
BElement from_kx(const Surface& s, const Poly& p);

}  // namespace gds
