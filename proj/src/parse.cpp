#include "gds/parse.hpp"

#include <cctype>
#include <functional>
#include <string>

#include "gds/error.hpp"

namespace gds {

namespace {

// Upper bound on a single `^` exponent; keeps a typo from exhausting memory.
constexpr unsigned long kMaxExponent = 100000;

using LeafResolver = std::function<std::optional<Poly>(char)>;

class Parser {
 public:
  Parser(std::string_view text, FieldPtr field, LeafResolver leaf)
      : text_(text), field_(std::move(field)), leaf_(std::move(leaf)) {}

  Poly parse() {
    skip_ws();
    if (at_end()) fail("empty expression", pos_);
    Poly p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        const Poly divisor = unary();
        if (!divisor.is_constant()) fail("division by a non-constant", at);
        if (divisor.is_zero()) fail("division by zero", at);
        acc = acc.scaled(divisor.leading_term().second.inverse());
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      const std::string digits = integer_literal();
      if (digits.empty()) fail("expected a nonnegative integer exponent", at);
      if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) fail("exponent too large", at);
      base = base.pow(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    return base;
  }

  std::string integer_literal() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
    return digits;
  }

  Poly primary() {
    skip_ws();
    if (at_end()) fail("unexpected end of input", pos_);
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer_literal());
      return Poly::constant(field_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      if (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        fail("unknown identifier starting with '" + std::string(1, c) + "'", at);
      }
      if (auto p = leaf_(c)) return *p;
      fail(std::string("variable '") + c + "' is not allowed here", at);
    }
    fail(std::string("unexpected '") + c + "'", at);
  }

  std::string_view text_;
  FieldPtr field_;
  LeafResolver leaf_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const FieldPtr& field, std::string_view text) {
  return Parser(text, field, [&field](char c) -> std::optional<Poly> {
           switch (c) {
             case 'X': return Poly::variable(field, Var::X);
             case 'Y': return Poly::variable(field, Var::Y);
             case 'Z': return Poly::variable(field, Var::Z);
             case 't': return Poly::constant(FieldElement::generator(field));
             default: return std::nullopt;
           }
         })
      .parse();
}

FieldElement parse_field_element(const FieldPtr& field, std::string_view text) {
  const Poly p = Parser(text, field, [&field](char c) -> std::optional<Poly> {
                   if (c == 't') return Poly::constant(FieldElement::generator(field));
                   return std::nullopt;
                 }).parse();
  return p.coefficient({});
}

FieldPtr parse_modulus(std::string_view text) {
  const FieldPtr q = Field::rationals();
  // t is read as X over Q, then the X-coefficients become m(t).
  const Poly p = Parser(text, q, [&q](char c) -> std::optional<Poly> {
                   if (c == 't') return Poly::variable(q, Var::X);
                   return std::nullopt;
                 }).parse();
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(0L, p.degree(Var::X) + 1)), Rational(0));
  for (const auto& [m, c] : p.terms()) coeffs[m.x] = c.constant_term();
  return Field::make(std::move(coeffs));
}

}  // namespace gds
