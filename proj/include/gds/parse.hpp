#pragma once

#include <string_view>

#include "gds/field.hpp"
#include "gds/poly.hpp"

namespace gds {

// Shared text grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'X' | 'Y' | 'Z' | 't' | '(' expr ')'
//
// `/` only divides by nonzero constants, so `3/2*X` and `(X + 1)/2` are
// accepted. Whitespace is insignificant; names are case-sensitive.

/// Polynomial in X, Y, Z; `t` denotes the generator of K.
Poly parse_poly(const FieldPtr& field, std::string_view text);

/// Constant expression in `t` only.
FieldElement parse_field_element(const FieldPtr& field, std::string_view text);

/// Modulus m(t) over Q, e.g. `t^2 + 1`; must be monic of degree >= 1.
FieldPtr parse_modulus(std::string_view text);

}  // namespace gds
