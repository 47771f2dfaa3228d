#include "gds/poly.hpp"

#include <sstream>
#include <vector>

#include "gds/error.hpp"

namespace gds {

char var_name(Var v) { return v == Var::X ? 'X' : v == Var::Y ? 'Y' : 'Z'; }

namespace {

std::string monomial_string(Monomial m) {
  std::string out;
  auto emit = [&out](char name, std::uint32_t e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  emit('X', m.x);
  emit('Y', m.y);
  emit('Z', m.z);
  return out;
}

// A coefficient is "signed" when it prints as a single term whose sign can be
// pulled out front.
bool prints_negative(const FieldElement& c) {
  if (c.num_terms() != 1) return false;
  for (const auto& q : c.coeffs()) {
    if (q != 0) return q < 0;
  }
  return false;
}

void append_signed(std::ostringstream& os, bool& first, bool negative, const std::string& body) {
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  first = false;
  os << body;
}

void append_term(std::ostringstream& os, bool& first, const FieldElement& c, const std::string& mono) {
  const bool negative = prints_negative(c);
  const FieldElement mag = negative ? -c : c;
  std::string body;
  if (mono.empty()) {
    body = mag.to_string();
  } else if (mag.is_one()) {
    body = mono;
  } else if (mag.num_terms() > 1) {
    body = "(" + mag.to_string() + ")*" + mono;
  } else {
    body = mag.to_string() + "*" + mono;
  }
  append_signed(os, first, negative, body);
}

}  // namespace

Poly Poly::constant(const FieldElement& c) {
  Poly p(c.field());
  p.add_term({}, c);
  return p;
}

Poly Poly::constant(FieldPtr field, const Rational& c) { return constant(FieldElement(std::move(field), c)); }

Poly Poly::variable(FieldPtr field, Var v, std::uint32_t power) {
  Monomial m;
  m.exponent(v) = power;
  return term(FieldElement(field, Rational(1)), m);
}

Poly Poly::term(const FieldElement& c, Monomial m) {
  Poly p(c.field());
  p.add_term(m, c);
  return p;
}

long Poly::degree(Var v) const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.exponent(v)));
  return d;
}

long Poly::total_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.x + m.y + m.z));
  return d;
}

bool Poly::involves(Var v) const {
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) != 0) return true;
  }
  return false;
}

bool Poly::only_involves(Var v) const {
  for (Var w : {Var::X, Var::Y, Var::Z}) {
    if (w != v && involves(w)) return false;
  }
  return true;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

FieldElement Poly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement(field_) : it->second;
}

Poly Poly::coefficient_of(Var v, std::uint32_t k) const {
  Poly out(field_);
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) != k) continue;
    Monomial rest = m;
    rest.exponent(v) = 0;
    out.terms_.emplace(rest, c);
  }
  return out;
}

void Poly::add_term(Monomial m, const FieldElement& c) {
  require_same_field(field_, c.field());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_field(field_, o.field_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_field(field_, o.field_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_);
  Poly out(a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = out.terms_.try_emplace(ma * mb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const FieldElement& c) const {
  Poly out(field_);
  if (c.is_zero()) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

Poly Poly::shifted(Monomial s) const {
  Poly out(field_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m * s, c);
  return out;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly result = constant(field_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_field(a.field_, b.field_) || a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (!(m == ib->first) || c != ib->second) return false;
    ++ib;
  }
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto it = terms_.begin();
  while (it != terms_.end()) {
    const std::uint32_t z = it->first.z, y = it->first.y;
    auto end = it;
    std::size_t count = 0;
    while (end != terms_.end() && end->first.z == z && end->first.y == y) {
      ++end;
      ++count;
    }
    const std::string outer = monomial_string({0, y, z});
    if (outer.empty() || count == 1) {
      for (; it != end; ++it) append_term(os, first, it->second, monomial_string(it->first));
      continue;
    }
    // Grouped X-coefficient, with a leading minus pulled out.
    const bool negative = prints_negative(it->second);
    Poly inner(field_);
    for (; it != end; ++it) {
      inner.terms_.emplace(Monomial{it->first.x, 0, 0}, negative ? -it->second : it->second);
    }
    append_signed(os, first, negative, "(" + inner.to_expanded_string() + ")*" + outer);
  }
  return os.str();
}

std::string Poly::to_expanded_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) append_term(os, first, c, monomial_string(m));
  return os.str();
}

Poly partial_derivative(const Poly& p, Var v) {
  Poly out(p.field());
  for (const auto& [m, c] : p.terms()) {
    const std::uint32_t e = m.exponent(v);
    if (e == 0) continue;
    Monomial dm = m;
    dm.exponent(v) = e - 1;
    out.add_term(dm, c * FieldElement(p.field(), Rational(e)));
  }
  return out;
}

Poly substitute(const Poly& p, const std::map<Var, Poly>& images) {
  for (const auto& [v, img] : images) require_same_field(p.field(), img.field());
  // powers[v][k] = image(v)^k, filled lazily.
  std::map<Var, std::vector<Poly>> powers;
  auto power_of = [&](Var v, std::uint32_t k) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) {
      cache.push_back(Poly::constant(p.field(), 1));
      auto it = images.find(v);
      cache.push_back(it != images.end() ? it->second : Poly::variable(p.field(), v));
    }
    while (cache.size() <= k) cache.push_back(cache.back() * cache[1]);
    return cache[k];
  };
  Poly out(p.field());
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::constant(c);
    for (Var v : {Var::X, Var::Y, Var::Z}) {
      if (m.exponent(v) != 0) t *= power_of(v, m.exponent(v));
    }
    out += t;
  }
  return out;
}

Poly divide_exact(const Poly& p, const Poly& q) {
  require_same_field(p.field(), q.field());
  if (q.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact division by the zero polynomial");
  const auto& [qm, qc] = q.leading_term();
  const FieldElement qinv = qc.inverse();
  Poly cur = p, quot(p.field()), rem(p.field());
  while (!cur.is_zero()) {
    const auto [m, c] = cur.leading_term();
    if (m.x >= qm.x && m.y >= qm.y && m.z >= qm.z) {
      const Monomial s{m.x - qm.x, m.y - qm.y, m.z - qm.z};
      const FieldElement k = c * qinv;
      quot.add_term(s, k);
      cur -= q.shifted(s).scaled(k);
    } else {
      rem.add_term(m, c);
      cur -= Poly::term(c, m);
    }
  }
  if (!rem.is_zero()) {
    throw Error(ErrorKind::NotDivisible,
                "(" + p.to_string() + ") / (" + q.to_string() + ") leaves remainder " + rem.to_string());
  }
  return quot;
}

DivMod divmod_in_Z(const Poly& p, const Poly& q) {
  require_same_field(p.field(), q.field());
  const long d = q.degree(Var::Z);
  if (d < 0 || q.coefficient_of(Var::Z, static_cast<std::uint32_t>(d)) != Poly::constant(q.field(), 1)) {
    throw Error(ErrorKind::NotMonicInZ, q.to_string() + " is not monic in Z");
  }
  DivMod out{Poly(p.field()), p};
  for (long top = out.rem.degree(Var::Z); top >= d; top = out.rem.degree(Var::Z)) {
    const Poly t = out.rem.coefficient_of(Var::Z, static_cast<std::uint32_t>(top))
                       .shifted({0, 0, static_cast<std::uint32_t>(top - d)});
    out.rem -= t * q;
    out.quot += t;
  }
  return out;
}

DivMod divmod_in_X(const Poly& p, const Poly& q) {
  require_same_field(p.field(), q.field());
  if (q.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  if (!q.only_involves(Var::X)) throw Error(ErrorKind::WrongVariables, q.to_string() + " is not univariate in X");
  const long n = q.degree(Var::X);
  const FieldElement inv = q.leading_term().second.inverse();
  DivMod out{Poly(p.field()), p};
  for (long top = out.rem.degree(Var::X); top >= n; top = out.rem.degree(Var::X)) {
    const Poly t = out.rem.coefficient_of(Var::X, static_cast<std::uint32_t>(top))
                       .shifted({static_cast<std::uint32_t>(top - n), 0, 0})
                       .scaled(inv);
    out.rem -= t * q;
    out.quot += t;
  }
  return out;
}

}  // namespace gds
