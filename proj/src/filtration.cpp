#include "gds/filtration.hpp"

#include <algorithm>

#include "gds/error.hpp"

namespace gds {

namespace {

void require_mu(const WeightAssignment& w) {
  if (w.mu < 1) throw Error(ErrorKind::InvalidArgument, "weight of x must be >= 1");
}

Poly f_power(const Surface& s, unsigned k) { return s->f().pow(k); }

// Element of T described by a single basis term.
TElement basis_element(const Surface& s, const BasisTerm& t) {
  const auto r = static_cast<long>(s->r());
  const auto k = t.z_power;
  if (t.index >= 0) {
    return TElement::make(s, Poly::term(t.coeff, {static_cast<std::uint32_t>(t.index), 0, k}), 0);
  }
  // index = -j r + i, 0 <= i < r
  const long j = (-t.index + r - 1) / r;
  const long i = t.index + j * r;
  return TElement::make(s, Poly::term(t.coeff, {static_cast<std::uint32_t>(i), 0, k}), static_cast<unsigned>(j));
}

}  // namespace

FAdicExpansion fadic_expand(const Surface& s, const Poly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "f-adic expansion of 0");
  if (!p.only_involves(Var::X)) throw Error(ErrorKind::WrongVariables, p.to_string() + " is not in K[X]");
  FAdicExpansion out;
  Poly cur = p;
  for (unsigned n = 0; !cur.is_zero(); ++n) {
    DivMod qr = divmod_in_X(cur, s->f());
    if (!qr.rem.is_zero()) out.digits.emplace(n, std::move(qr.rem));
    cur = std::move(qr.quot);
  }
  return out;
}

Poly fadic_reconstruct(const Surface& s, const FAdicExpansion& e) {
  Poly out(s->field());
  for (const auto& [n, digit] : e.digits) out += digit * f_power(s, n);
  return out;
}

TElement TElement::make(const Surface& s, const Poly& num, unsigned denom_exp) {
  if (num.involves(Var::Y)) throw Error(ErrorKind::WrongVariables, "T-numerators live in K[X, Z]");
  Poly n = num;
  if (n.is_zero()) return TElement(s, std::move(n), 0);
  while (denom_exp > 0) {
    DivMod qr = divmod_in_X(n, s->f());
    if (!qr.rem.is_zero()) break;
    n = std::move(qr.quot);
    --denom_exp;
  }
  return TElement(s, std::move(n), denom_exp);
}

TElement& TElement::operator+=(const TElement& o) {
  require_same_surface(surface_, o.surface_);
  const unsigned e = std::max(denom_exp_, o.denom_exp_);
  const Poly sum = num_ * f_power(surface_, e - denom_exp_) + o.num_ * f_power(surface_, e - o.denom_exp_);
  return *this = make(surface_, sum, e);
}

TElement& TElement::operator-=(const TElement& o) {
  require_same_surface(surface_, o.surface_);
  return *this += TElement(o.surface_, -o.num_, o.denom_exp_);
}

TElement& TElement::operator*=(const TElement& o) {
  require_same_surface(surface_, o.surface_);
  return *this = make(surface_, num_ * o.num_, denom_exp_ + o.denom_exp_);
}

bool operator==(const TElement& a, const TElement& b) {
  return same_surface(a.surface_, b.surface_) && a.denom_exp_ == b.denom_exp_ && a.num_ == b.num_;
}

std::string TElement::to_string() const {
  if (denom_exp_ == 0) return num_.to_string();
  std::string den = "(" + surface_->f().to_string() + ")";
  if (denom_exp_ > 1) den += "^" + std::to_string(denom_exp_);
  return "(" + num_.to_string() + ")/" + den;
}

TElement embed_in_T(const BElement& b) {
  const Surface& s = b.surface();
  const Poly& rep = b.rep();
  const long top = rep.degree(Var::Y);
  if (top <= 0) return TElement::make(s, rep, 0);
  // y^k -> phi^k / f^k, over the common denominator f^top.
  const auto K = static_cast<unsigned>(top);
  Poly num(s->field());
  for (unsigned k = 0; k <= K; ++k) {
    const Poly c = rep.coefficient_of(Var::Y, k);
    if (c.is_zero()) continue;
    num += c * s->phi().pow(k) * f_power(s, K - k);
  }
  return TElement::make(s, num, K);
}

std::vector<BasisTerm> basis_decompose(const TElement& e) {
  const Surface& s = e.surface();
  const auto r = static_cast<long>(s->r());
  const unsigned E = e.denom_exp();
  std::vector<BasisTerm> out;
  const long top_z = e.num().degree(Var::Z);
  for (long k = top_z; k >= 0; --k) {
    const Poly a = e.num().coefficient_of(Var::Z, static_cast<std::uint32_t>(k));
    if (a.is_zero()) continue;
    // a / f^E = sum_n g_n f^(n-E); the n >= E part is an ordinary polynomial.
    Poly polynomial_part(s->field());
    std::vector<BasisTerm> fractional;
    for (const auto& [n, g] : fadic_expand(s, a).digits) {
      if (n >= E) {
        polynomial_part += g * f_power(s, n - E);
        continue;
      }
      const long j = static_cast<long>(E - n);
      for (const auto& [m, c] : g.terms()) {
        fractional.push_back({-j * r + static_cast<long>(m.x), static_cast<unsigned>(k), c});
      }
    }
    for (const auto& [m, c] : polynomial_part.terms()) out.push_back({static_cast<long>(m.x), static_cast<unsigned>(k), c});
    out.insert(out.end(), fractional.begin(), fractional.end());
  }
  return out;
}

long weight(const TElement& e, const WeightAssignment& w) {
  require_mu(w);
  if (e.is_zero()) throw Error(ErrorKind::ZeroElement, "weight of 0 is undefined");
  long best = 0;
  bool first = true;
  for (const BasisTerm& t : basis_decompose(e)) {
    const long wt = t.index * w.mu + static_cast<long>(t.z_power) * w.nu;
    best = first ? wt : std::max(best, wt);
    first = false;
  }
  return best;
}

TElement leading_form(const TElement& e, const WeightAssignment& w) {
  const long top = weight(e, w);
  const Surface& s = e.surface();
  TElement out = TElement::make(s, Poly(s->field()), 0);
  for (const BasisTerm& t : basis_decompose(e)) {
    if (t.index * w.mu + static_cast<long>(t.z_power) * w.nu == top) out += basis_element(s, t);
  }
  return out;
}

}  // namespace gds
