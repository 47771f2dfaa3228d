#include "gds/lnd.hpp"

#include "gds/error.hpp"

namespace gds {

namespace {

BElement as_element(const Surface& s, const Poly& p) { return normalize(s, p); }

}  // namespace

BElement relation_image(const Surface& s, const BElement& dx, const BElement& dy, const BElement& dz) {
  require_same_surface(s, dx.surface());
  require_same_surface(s, dy.surface());
  require_same_surface(s, dz.surface());
  const BElement y = BElement::y(s);
  return as_element(s, s->f_prime()) * dx * y + as_element(s, s->f()) * dy - as_element(s, s->phi_x()) * dx -
         as_element(s, s->phi_z()) * dz;
}

Derivation make_derivation(const Surface& s, const BElement& dx, const BElement& dy, const BElement& dz) {
  const BElement image = relation_image(s, dx, dy, dz);
  if (!image.is_zero()) {
    throw Error(ErrorKind::RelationViolated, "image of f(X)Y - phi(X,Z) is " + image.to_string());
  }
  return Derivation(s, dx, dy, dz);
}

Derivation canonical_D(const Surface& s) {
  return make_derivation(s, BElement::zero(s), as_element(s, s->phi_z()), as_element(s, s->f()));
}

Derivation scale(const BElement& h, const Derivation& D) {
  return make_derivation(D.surface(), h * D.dx(), h * D.dy(), h * D.dz());
}

BElement apply(const Derivation& D, const BElement& b) {
  const Surface& s = D.surface();
  require_same_surface(s, b.surface());
  const Poly& rep = b.rep();
  BElement out = BElement::zero(s);
  if (!D.dx().is_zero()) out += as_element(s, partial_derivative(rep, Var::X)) * D.dx();
  if (!D.dy().is_zero()) out += as_element(s, partial_derivative(rep, Var::Y)) * D.dy();
  if (!D.dz().is_zero()) out += as_element(s, partial_derivative(rep, Var::Z)) * D.dz();
  return out;
}

BElement apply_power(const Derivation& D, const BElement& b, unsigned n) {
  BElement cur = b;
  for (unsigned i = 0; i < n && !cur.is_zero(); ++i) cur = apply(D, cur);
  return cur;
}

std::optional<unsigned> nilpotency_index(const Derivation& D, const BElement& b, unsigned cap) {
  if (cap == 0) throw Error(ErrorKind::InvalidArgument, "nilpotency cap must be >= 1");
  BElement cur = b;
  for (unsigned n = 0; n <= cap; ++n) {
    if (cur.is_zero()) return n;
    if (n == cap) break;
    cur = apply(D, cur);
  }
  return std::nullopt;
}

std::string_view to_string(LndClass::Kind kind) {
  switch (kind) {
    case LndClass::Kind::Zero: return "Zero";
    case LndClass::Kind::LndWithH: return "LND_with_h";
    case LndClass::Kind::NotLnd: return "NotLND";
  }
  return "?";
}

LndClass classify_lnd(const Derivation& D) {
  if (D.is_zero()) return {LndClass::Kind::Zero, std::nullopt, {}};
  const Surface& s = D.surface();
  auto reject = [](std::string why) { return LndClass{LndClass::Kind::NotLnd, std::nullopt, std::move(why)}; };
  if (!D.dx().is_zero()) return reject("D(x) = " + D.dx().to_string() + " is nonzero");
  const auto dz = in_kx(D.dz());
  if (!dz) return reject("D(z) = " + D.dz().to_string() + " is not in K[x]");
  const DivMod qr = divmod_in_X(*dz, s->f());
  if (!qr.rem.is_zero()) return reject("f(x) does not divide D(z) = " + D.dz().to_string());
  const Poly& h = qr.quot;
  if (D.dy() != normalize(s, h * s->phi_z())) {
    return reject("D(y) = " + D.dy().to_string() + " differs from h(x)*phi_Z with h = " + h.to_string());
  }
  if (h.is_zero()) return reject("D(z) = 0 but D(y) is nonzero");
  return {LndClass::Kind::LndWithH, h, {}};
}

bool kernel_member(const Derivation& D, const BElement& b) {
  const LndClass c = classify_lnd(D);
  if (c.kind != LndClass::Kind::LndWithH) {
    throw Error(ErrorKind::NotAnLND, "derivation classified as " + std::string(to_string(c.kind)));
  }
  const bool in_k = in_kx(b).has_value();
  const bool killed = apply(D, b).is_zero();
  if (in_k != killed) {
    throw Error(ErrorKind::InternalError, "kernel test disagrees with K[x] membership for " + b.to_string());
  }
  return in_k;
}

bool InvariantsReport::verified() const {
  return witness_well_defined && witness_h == Poly::constant(witness_h.field(), 1) && kernel_mismatches == 0 &&
         sample_size > 0 && y_nilpotency.has_value() && *y_nilpotency == witness.surface()->d() + 1;
}

InvariantsReport invariants_report(const Surface& s) {
  const Derivation D = canonical_D(s);
  const LndClass c = classify_lnd(D);
  InvariantsReport rep{.ml_invariant = "K[x]",
                       .hd_invariant = "K[x]",
                       .witness = D,
                       .witness_well_defined = relation_image(s, D.dx(), D.dy(), D.dz()).is_zero(),
                       .witness_h = c.h.value_or(Poly(s->field())),
                       .y_nilpotency = std::nullopt};
  const BElement x = BElement::x(s), y = BElement::y(s), z = BElement::z(s);
  // Deterministic sample: monomials x^a y^b z^c plus a few mixed sums.
  std::vector<BElement> sample;
  for (unsigned a = 0; a <= 3; ++a) {
    for (unsigned b = 0; b <= 2; ++b) {
      for (unsigned e = 0; e <= 2; ++e) sample.push_back(x.pow(a) * y.pow(b) * z.pow(e));
    }
  }
  sample.push_back(x.pow(5) - BElement::constant(s, 3));
  sample.push_back(y * z + x);
  sample.push_back(normalize(s, s->relation()) + x);
  sample.push_back(z.pow(s->d()) - y * normalize(s, s->f()));
  for (const BElement& b : sample) {
    const bool killed = apply(D, b).is_zero();
    const bool in_k = in_kx(b).has_value();
    rep.sample_in_kernel += killed;
    rep.sample_in_kx += in_k;
    rep.kernel_mismatches += (killed != in_k);
  }
  rep.sample_size = sample.size();
  rep.y_nilpotency = nilpotency_index(D, y);
  return rep;
}

}  // namespace gds
