#include "gds/field.hpp"

#include <sstream>

#include "gds/error.hpp"

namespace gds {

namespace {

// Dense univariate polynomials over Q in t, lowest degree first, no trailing zeros.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long deg(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Division with remainder by a nonzero divisor.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (deg(a) >= deg(b)) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

std::string qpoly_to_string(const QPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = deg(p); k >= 0; --k) {
    const Rational& c = p[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "t";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace

FieldPtr Field::rationals() {
  static const FieldPtr q{new Field({Rational(0), Rational(1)})};
  return q;
}

FieldPtr Field::make(std::vector<Rational> modulus) {
  trim(modulus);
  if (modulus.size() < 2) throw Error(ErrorKind::InvalidArgument, "field modulus must have degree >= 1");
  if (modulus.back() != 1) throw Error(ErrorKind::NotMonic, "field modulus must be monic");
  if (modulus.size() == 2 && modulus[0] == 0) return rationals();
  return FieldPtr{new Field(std::move(modulus))};
}

FieldPtr Field::cyclotomic(unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
  // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<QPoly> phi(n + 1);
  for (unsigned k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    QPoly p(k + 1, Rational(0));
    p[0] = -1;
    p[k] = 1;
    for (unsigned d = 1; d < k; ++d) {
      if (k % d == 0) p = divmod(p, phi[d]).first;
    }
    phi[k] = p;
  }
  if (n == 1) return make({Rational(-1), Rational(1)});
  return make(phi[n]);
}

std::string Field::to_string() const { return qpoly_to_string(modulus_); }

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || *a == *b; }

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) {
    throw Error(ErrorKind::FieldMismatch, "operands live over Q[t]/(" + a->to_string() + ") and Q[t]/(" +
                                              b->to_string() + ")");
  }
}

FieldElement::FieldElement(FieldPtr field) : field_(std::move(field)), coeffs_(field_->degree(), Rational(0)) {}

FieldElement::FieldElement(FieldPtr field, const Rational& value) : FieldElement(std::move(field)) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> reduced, int)
    : field_(std::move(field)), coeffs_(std::move(reduced)) {
  coeffs_.resize(field_->degree(), Rational(0));
}

FieldElement FieldElement::from_coeffs(FieldPtr field, std::vector<Rational> coeffs) {
  for (auto& c : coeffs) c.canonicalize();
  trim(coeffs);
  if (coeffs.size() > field->degree()) coeffs = divmod(std::move(coeffs), field->modulus()).second;
  return FieldElement(std::move(field), std::move(coeffs), 0);
}

FieldElement FieldElement::generator(FieldPtr field) {
  return from_coeffs(std::move(field), {Rational(0), Rational(1)});
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool FieldElement::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::size_t FieldElement::num_terms() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += (c != 0);
  return n;
}

FieldElement FieldElement::operator-() const {
  FieldElement out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same_field(field_, o.field_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  require_same_field(field_, o.field_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  require_same_field(field_, o.field_);
  if (field_->degree() == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  QPoly a = coeffs_, b = o.coeffs_;
  trim(a);
  trim(b);
  QPoly prod = mul(a, b);
  if (deg(prod) >= static_cast<long>(field_->degree())) prod = divmod(std::move(prod), field_->modulus()).second;
  coeffs_ = std::move(prod);
  coeffs_.resize(field_->degree(), Rational(0));
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in K");
  if (field_->degree() == 1) return FieldElement(field_, 1 / coeffs_[0]);
  // Extended Euclid on (m, a), tracking only the cofactor of a.
  QPoly r0 = field_->modulus(), r1 = coeffs_;
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (deg(r0) > 0) {
    const Rational lead = r0.back();
    for (auto& c : r0) c /= lead;
    throw Error(ErrorKind::ZeroDivisorInField, "gcd(" + to_string() + ", m) = " + qpoly_to_string(r0) +
                                                   "; modulus " + field_->to_string() + " is reducible");
  }
  const Rational g = r0[0];
  for (auto& c : s0) c /= g;
  return from_coeffs(field_, std::move(s0));
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result(field_, Rational(1));
  FieldElement base(*this);
  auto e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
}

std::string FieldElement::to_string() const {
  QPoly p = coeffs_;
  trim(p);
  return qpoly_to_string(p);
}

bool is_root_of_unity(const FieldElement& a, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "root-of-unity order must be >= 1");
  return a.pow(static_cast<long>(n)).is_one();
}

}  // namespace gds
