#include "gds/surface.hpp"

#include <vector>

#include "gds/error.hpp"

namespace gds {

SurfaceSpec::SurfaceSpec(FieldPtr field, Poly f, Poly phi)
    : field_(std::move(field)),
      f_(std::move(f)),
      phi_(std::move(phi)),
      r_(static_cast<unsigned>(f_.degree(Var::X))),
      d_(static_cast<unsigned>(phi_.degree(Var::Z))),
      phi_z_(partial_derivative(phi_, Var::Z)),
      phi_x_(partial_derivative(phi_, Var::X)),
      f_prime_(partial_derivative(f_, Var::X)),
      relation_(f_ * Poly::variable(field_, Var::Y) - phi_),
      reducer_(-relation_) {}

Surface make_surface(const FieldPtr& field, const Poly& f, const Poly& phi) {
  require_same_field(field, f.field());
  require_same_field(field, phi.field());
  if (!f.only_involves(Var::X)) throw Error(ErrorKind::WrongVariables, "f must be a polynomial in X only");
  if (phi.involves(Var::Y)) throw Error(ErrorKind::WrongVariables, "phi must not involve Y");
  if (f.degree(Var::X) <= 1) {
    throw Error(ErrorKind::DegreeTooSmall, "deg_X f = " + std::to_string(f.degree(Var::X)) + ", need > 1");
  }
  if (phi.degree(Var::Z) <= 1) {
    throw Error(ErrorKind::DegreeTooSmall, "deg_Z phi = " + std::to_string(phi.degree(Var::Z)) + ", need > 1");
  }
  if (!f.leading_term().second.is_one()) throw Error(ErrorKind::NotMonic, "f = " + f.to_string() + " is not monic");
  const auto d = static_cast<std::uint32_t>(phi.degree(Var::Z));
  if (phi.coefficient_of(Var::Z, d) != Poly::constant(field, 1)) {
    throw Error(ErrorKind::NotMonic, "phi = " + phi.to_string() + " is not monic in Z");
  }
  return Surface(new SurfaceSpec(field, f, phi));
}

bool same_surface(const Surface& a, const Surface& b) { return a == b || *a == *b; }

void require_same_surface(const Surface& a, const Surface& b) {
  if (!same_surface(a, b)) throw Error(ErrorKind::SurfaceMismatch, "operands belong to different surfaces");
}

BElement normalize(const Surface& s, const Poly& p) {
  require_same_field(s->field(), p.field());
  if (p.degree(Var::Z) < static_cast<long>(s->d())) return BElement(s, p);
  return BElement(s, divmod_in_Z(p, s->reducer()).rem);
}

BElement BElement::zero(const Surface& s) { return normalize(s, Poly(s->field())); }
BElement BElement::constant(const Surface& s, const FieldElement& c) { return normalize(s, Poly::constant(c)); }
BElement BElement::constant(const Surface& s, long c) { return normalize(s, Poly::constant(s->field(), c)); }
BElement BElement::x(const Surface& s) { return normalize(s, Poly::variable(s->field(), Var::X)); }
BElement BElement::y(const Surface& s) { return normalize(s, Poly::variable(s->field(), Var::Y)); }
BElement BElement::z(const Surface& s) { return normalize(s, Poly::variable(s->field(), Var::Z)); }

BElement BElement::operator-() const { return BElement(surface_, -rep_); }

BElement& BElement::operator+=(const BElement& o) {
  require_same_surface(surface_, o.surface_);
  rep_ += o.rep_;
  return *this;
}

BElement& BElement::operator-=(const BElement& o) {
  require_same_surface(surface_, o.surface_);
  rep_ -= o.rep_;
  return *this;
}

BElement& BElement::operator*=(const BElement& o) {
  require_same_surface(surface_, o.surface_);
  *this = normalize(surface_, rep_ * o.rep_);
  return *this;
}

BElement BElement::scaled(const FieldElement& c) const { return BElement(surface_, rep_.scaled(c)); }

BElement BElement::pow(unsigned e) const {
  BElement result = constant(surface_, 1);
  BElement base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const BElement& a, const BElement& b) {
  return same_surface(a.surface_, b.surface_) && a.rep_ == b.rep_;
}

std::optional<Poly> in_kx(const BElement& b) {
  if (!b.rep().only_involves(Var::X)) return std::nullopt;
  return b.rep();
}

BElement from_kx(const Surface& s, const Poly& p) {
  if (!p.only_involves(Var::X)) throw Error(ErrorKind::WrongVariables, p.to_string() + " is not in K[X]");
  return normalize(s, p);
}

BElement evaluate(const BElement& b, const BElement& x_img, const BElement& y_img, const BElement& z_img) {
  return evaluate(b.surface(), b.rep(), x_img, y_img, z_img);
}

BElement evaluate(const Surface& s, const Poly& p, const BElement& x_img, const BElement& y_img,
                  const BElement& z_img) {
  require_same_field(s->field(), p.field());
  require_same_surface(s, x_img.surface());
  require_same_surface(s, y_img.surface());
  require_same_surface(s, z_img.surface());
  struct PowerCache {
    std::vector<BElement> p;
    const BElement& get(std::uint32_t k) {
      while (p.size() <= k) p.push_back(p.back() * p[1]);
      return p[k];
    }
  };
  const BElement one = BElement::constant(s, 1);
  PowerCache px{{one, x_img}}, py{{one, y_img}}, pz{{one, z_img}};
  // Group by (Z, Y) part so the X-polynomial is multiplied in once per group.
  Poly acc(s->field());
  const auto& terms = p.terms();
  auto it = terms.begin();
  while (it != terms.end()) {
    const std::uint32_t zy_z = it->first.z, zy_y = it->first.y;
    BElement xpart = BElement::zero(s);
    for (; it != terms.end() && it->first.z == zy_z && it->first.y == zy_y; ++it) {
      xpart += px.get(it->first.x).scaled(it->second);
    }
    BElement t = xpart;
    if (zy_y) t *= py.get(zy_y);
    if (zy_z) t *= pz.get(zy_z);
    acc += t.rep();
  }
  return normalize(s, acc);
}

}  // namespace gds
