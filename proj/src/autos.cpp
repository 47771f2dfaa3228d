#include "gds/autos.hpp"

#include <numeric>

#include "gds/error.hpp"
#include "gds/parse.hpp"

namespace gds {

namespace {

// The automorphism constructors all assume phi in K[Z], f with a nonzero
// root, and both polynomials centered.
void require_automorphism_setting(const Surface& s) {
  if (s->phi_depends_on_x()) throw Error(ErrorKind::PhiDependsOnX, "phi = " + s->phi().to_string() + " involves X");
  if (s->f().num_terms() == 1) {
    throw Error(ErrorKind::NotApplicable,
                "f = X^" + std::to_string(s->r()) + " has no nonzero root; that case is the classical one");
  }
  if (!s->f().coefficient({s->r() - 1, 0, 0}).is_zero()) {
    throw Error(ErrorKind::NotCentered, "f has an X^" + std::to_string(s->r() - 1) + " term; use center first");
  }
  if (!s->phi().coefficient({0, 0, s->d() - 1}).is_zero()) {
    throw Error(ErrorKind::NotCentered, "phi has a Z^" + std::to_string(s->d() - 1) + " term; use center first");
  }
}

BElement element(const Surface& s, const Poly& p) { return normalize(s, p); }

std::string_view family_name(Generator::Family f) {
  switch (f) {
    case Generator::Family::H: return "H";
    case Generator::Family::T: return "T";
    case Generator::Family::R: return "R";
    case Generator::Family::S: return "S";
  }
  return "?";
}

std::string trim_ws(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Generator Generator::H(const Poly& h) {
  if (!h.only_involves(Var::X)) throw Error(ErrorKind::WrongVariables, "H needs h in K[X], got " + h.to_string());
  return {Family::H, h, FieldElement(h.field())};
}
Generator Generator::T(const FieldElement& lambda) { return {Family::T, Poly(lambda.field()), lambda}; }
Generator Generator::R(const FieldElement& lambda) { return {Family::R, Poly(lambda.field()), lambda}; }
Generator Generator::S(const FieldElement& mu) { return {Family::S, Poly(mu.field()), mu}; }

Generator Generator::inverse() const {
  if (family == Family::H) return H(-h);
  return {family, h, scalar.inverse()};
}

std::string Generator::to_string() const {
  std::string out(family_name(family));
  switch (family) {
    case Family::H: return out + "[h=" + h.to_string() + "]";
    case Family::T:
    case Family::R: return out + "[lambda=" + scalar.to_string() + "]";
    case Family::S: return out + "[mu=" + scalar.to_string() + "]";
  }
  return out;
}

Generator parse_generator(const FieldPtr& field, std::string_view text) {
  const std::string src = trim_ws(text);
  const auto open = src.find('[');
  if (src.size() < 4 || open != 1 || src.back() != ']') {
    throw ParseError("expected H[h=...], T[lambda=...], R[lambda=...] or S[mu=...], got '" + src + "'", 1, 1);
  }
  const std::string body = src.substr(2, src.size() - 3);
  const auto eq = body.find('=');
  if (eq == std::string::npos) throw ParseError("missing '=' in generator descriptor", 1, 3);
  const std::string key = trim_ws(std::string_view(body).substr(0, eq));
  const std::string value = body.substr(eq + 1);
  const std::size_t value_col = 2 + eq + 2;
  const char fam = src[0];
  const std::string expected = fam == 'H' ? "h" : fam == 'S' ? "mu" : "lambda";
  if (fam != 'H' && fam != 'T' && fam != 'R' && fam != 'S') {
    throw ParseError(std::string("unknown generator family '") + fam + "'", 1, 1);
  }
  if (key != expected) throw ParseError("generator " + std::string(1, fam) + " takes '" + expected + "='", 1, 3);
  try {
    switch (fam) {
      case 'H': return Generator::H(parse_poly(field, value));
      case 'T': return Generator::T(parse_field_element(field, value));
      case 'R': return Generator::R(parse_field_element(field, value));
      default: return Generator::S(parse_field_element(field, value));
    }
  } catch (const ParseError& e) {
    throw ParseError(e.detail().substr(e.detail().find(": ") + 2), 1, value_col + e.column() - 1);
  }
}

Word parse_word(const FieldPtr& field, std::string_view text) {
  Word word;
  const std::string src = trim_ws(text);
  if (src.empty() || src == "id") return word;
  std::size_t start = 0;
  for (;;) {
    const auto sep = src.find(';', start);
    const std::string_view piece = std::string_view(src).substr(start, sep == std::string::npos ? sep : sep - start);
    try {
      word.push_back(parse_generator(field, piece));
    } catch (const ParseError& e) {
      throw ParseError(e.detail().substr(e.detail().find(": ") + 2), e.line(), start + e.column());
    }
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  return word;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ";";
    out += w[i].to_string();
  }
  return out;
}

BElement relation_residue(const Surface& s, const BElement& tx, const BElement& ty, const BElement& tz) {
  return evaluate(s, s->relation(), tx, ty, tz);
}

Morphism make_morphism(const Surface& s, const BElement& tx, const BElement& ty, const BElement& tz,
                       std::optional<Word> word) {
  const BElement residue = relation_residue(s, tx, ty, tz);
  if (!residue.is_zero()) {
    throw Error(ErrorKind::RelationViolated, "f(T x) T y - phi(T x, T z) = " + residue.to_string());
  }
  return Morphism(s, tx, ty, tz, std::move(word));
}

Morphism identity(const Surface& s) {
  return make_morphism(s, BElement::x(s), BElement::y(s), BElement::z(s), Word{});
}

BElement apply(const Morphism& m, const BElement& b) {
  require_same_surface(m.surface(), b.surface());
  return evaluate(b, m.tx(), m.ty(), m.tz());
}

Morphism compose(const Morphism& a, const Morphism& b) {
  require_same_surface(a.surface(), b.surface());
  std::optional<Word> word;
  if (a.word() && b.word()) {
    word = *b.word();
    word->insert(word->end(), a.word()->begin(), a.word()->end());
  }
  return make_morphism(a.surface(), apply(a, b.tx()), apply(a, b.ty()), apply(a, b.tz()), std::move(word));
}

Morphism invert(const Morphism& m) {
  if (!m.word()) throw Error(ErrorKind::NotInvertibleRecord, "morphism was built from raw images");
  Word inv;
  for (auto it = m.word()->rbegin(); it != m.word()->rend(); ++it) inv.push_back(it->inverse());
  Morphism out = from_word(m.surface(), inv);
  if (!morphism_equal(compose(m, out), identity(m.surface()))) {
    throw Error(ErrorKind::InternalError, "inverse word does not compose to the identity");
  }
  return out;
}

bool morphism_equal(const Morphism& a, const Morphism& b) {
  require_same_surface(a.surface(), b.surface());
  return a.tx() == b.tx() && a.ty() == b.ty() && a.tz() == b.tz();
}

UnityDecomposition unity_decompose(const Poly& g) {
  if (!g.only_involves(Var::X)) throw Error(ErrorKind::WrongVariables, g.to_string() + " is not univariate in X");
  const long deg = g.degree(Var::X);
  if (deg < 2) throw Error(ErrorKind::NotApplicable, "degree of " + g.to_string() + " is below 2");
  if (!g.leading_term().second.is_one()) throw Error(ErrorKind::NotMonic, g.to_string() + " is not monic");
  if (g.num_terms() == 1) throw Error(ErrorKind::NotApplicable, g.to_string() + " has no nonzero root");
  if (!g.coefficient({static_cast<std::uint32_t>(deg - 1), 0, 0}).is_zero()) {
    throw Error(ErrorKind::NotCentered, g.to_string() + " has a nonzero X^" + std::to_string(deg - 1) + " term");
  }
  UnityDecomposition out{0, 0, Poly(g.field())};
  out.i = std::prev(g.terms().end())->first.x;
  for (const auto& [m, c] : g.terms()) out.s = std::gcd(out.s, m.x - out.i);
  for (const auto& [m, c] : g.terms()) out.h.add_term({(m.x - out.i) / out.s, 0, 0}, c);
  return out;
}

PhiSymmetry phi_symmetry(const Surface& s) {
  if (s->phi_depends_on_x()) throw Error(ErrorKind::PhiDependsOnX, "phi = " + s->phi().to_string() + " involves X");
  const Poly& phi = s->phi();
  if (phi.num_terms() == 1) return {0, s->d()};
  PhiSymmetry out{std::prev(phi.terms().end())->first.z, 0};
  for (const auto& [m, c] : phi.terms()) out.m = std::gcd(out.m, m.z - out.i);
  if (out.m < 2) {
    throw Error(ErrorKind::NotApplicable,
                "phi = " + phi.to_string() + " is not of the form Z^i psi(Z^m) with m >= 2");
  }
  return out;
}

Centering center(const Surface& s) {
  if (s->phi_depends_on_x()) throw Error(ErrorKind::PhiDependsOnX, "phi = " + s->phi().to_string() + " involves X");
  const FieldPtr& k = s->field();
  const FieldElement a = s->phi().coefficient({0, 0, s->d() - 1}) / FieldElement(k, Rational(s->d()));
  const FieldElement b = s->f().coefficient({s->r() - 1, 0, 0}) / FieldElement(k, Rational(s->r()));
  const Poly f = substitute(s->f(), {{Var::X, Poly::variable(k, Var::X) - Poly::constant(b)}});
  const Poly phi = substitute(s->phi(), {{Var::Z, Poly::variable(k, Var::Z) - Poly::constant(a)}});
  return {make_surface(k, f, phi), a, b};
}

Morphism make_H(const Surface& s, const Poly& h) {
  require_automorphism_setting(s);
  const Generator g = Generator::H(h);
  const FieldPtr& k = s->field();
  const Poly z = Poly::variable(k, Var::Z);
  const Poly shift = h * s->f();
  const Poly diff = substitute(s->phi(), {{Var::Z, z + shift}}) - s->phi();
  const Poly ty = Poly::variable(k, Var::Y) + divide_exact(diff, s->f());
  return make_morphism(s, BElement::x(s), element(s, ty), element(s, z + shift), Word{g});
}

Morphism make_T(const Surface& s, const FieldElement& lambda) {
  require_automorphism_setting(s);
  const UnityDecomposition ud = unity_decompose(s->f());
  if (lambda.is_zero() || !is_root_of_unity(lambda, ud.s)) {
    throw Error(ErrorKind::NotRootOfUnity, "lambda = " + lambda.to_string() + " but lambda^" + std::to_string(ud.s) +
                                               " must be 1");
  }
  // f(lambda X) = lambda^j f(X), so y must scale by lambda^-j.
  const BElement ty = BElement::y(s).scaled(lambda.pow(-static_cast<long>(ud.i)));
  return make_morphism(s, BElement::x(s).scaled(lambda), ty, BElement::z(s), Word{Generator::T(lambda)});
}

Morphism make_R(const Surface& s, const FieldElement& lambda) {
  require_automorphism_setting(s);
  if (s->phi() != Poly::variable(s->field(), Var::Z, s->d())) {
    throw Error(ErrorKind::NotApplicable, "R needs phi = Z^" + std::to_string(s->d()));
  }
  if (lambda.is_zero()) throw Error(ErrorKind::DivisionByZero, "R needs lambda != 0");
  const BElement ty = BElement::y(s).scaled(lambda.pow(s->d()));
  return make_morphism(s, BElement::x(s), ty, BElement::z(s).scaled(lambda), Word{Generator::R(lambda)});
}

Morphism make_S(const Surface& s, const FieldElement& mu) {
  require_automorphism_setting(s);
  const PhiSymmetry sym = phi_symmetry(s);
  if (mu.is_zero() || !is_root_of_unity(mu, sym.m)) {
    throw Error(ErrorKind::NotRootOfUnity, "mu = " + mu.to_string() + " but mu^" + std::to_string(sym.m) +
                                               " must be 1");
  }
  const BElement ty = BElement::y(s).scaled(mu.pow(sym.i));
  return make_morphism(s, BElement::x(s), ty, BElement::z(s).scaled(mu), Word{Generator::S(mu)});
}

Morphism make_generator(const Surface& s, const Generator& g) {
  require_same_field(s->field(), g.scalar.field());
  switch (g.family) {
    case Generator::Family::H: return make_H(s, g.h);
    case Generator::Family::T: return make_T(s, g.scalar);
    case Generator::Family::R: return make_R(s, g.scalar);
    case Generator::Family::S: return make_S(s, g.scalar);
  }
  throw Error(ErrorKind::InternalError, "unknown generator family");
}

Morphism from_word(const Surface& s, const Word& w) {
  Morphism m = identity(s);
  for (const Generator& g : w) m = compose(make_generator(s, g), m);
  return m;
}

std::optional<LemmaShape> lemma_shape(const Morphism& m) {
  const Surface& s = m.surface();
  const FieldPtr& k = s->field();
  const Poly& tx = m.tx().rep();
  if (tx.num_terms() != 1 || !(tx.leading_term().first == Monomial{1, 0, 0})) return std::nullopt;
  const FieldElement lambda = tx.leading_term().second;

  FieldElement alpha(k);
  Poly b(k);
  for (const auto& [mono, c] : m.tz().rep().terms()) {
    if (mono == Monomial{0, 0, 1}) {
      alpha = c;
    } else if (mono.y == 0 && mono.z == 0) {
      b.add_term(mono, c);
    } else {
      return std::nullopt;
    }
  }
  if (alpha.is_zero()) return std::nullopt;
  if (!b.is_zero() && !divmod_in_X(b, s->f()).rem.is_zero()) return std::nullopt;

  const Poly x = Poly::variable(k, Var::X), z = Poly::variable(k, Var::Z);
  if (substitute(s->f(), {{Var::X, x.scaled(lambda)}}) != s->f().scaled(lambda.pow(s->r()))) return std::nullopt;
  if (s->f().num_terms() > 1 && s->f().coefficient({s->r() - 1, 0, 0}).is_zero()) {
    if (!is_root_of_unity(lambda, unity_decompose(s->f()).s)) return std::nullopt;
  }
  if (!s->phi_depends_on_x() &&
      substitute(s->phi(), {{Var::Z, z.scaled(alpha)}}) != s->phi().scaled(alpha.pow(s->d()))) {
    return std::nullopt;
  }
  return LemmaShape{lambda, alpha, b};
}

}  // namespace gds
