#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gds/surface.hpp"

namespace gds {

/// One of the generator families of Aut(B) for phi in K[Z].
struct Generator {
  enum class Family { H, T, R, S };

  Family family;
  /// H only: the multiplier h(X) in z -> z + h(x) f(x).
  Poly h;
  /// T, R: lambda. S: mu.
  FieldElement scalar;

  static Generator H(const Poly& h);
  static Generator T(const FieldElement& lambda);
  static Generator R(const FieldElement& lambda);
  static Generator S(const FieldElement& mu);

  Generator inverse() const;
  /// `H[h=...]`, `T[lambda=...]`, `R[lambda=...]`, `S[mu=...]`.
  std::string to_string() const;
};

using Word = std::vector<Generator>;

/// Generators separated by `;`, applied left to right. `id` is the empty word.
Word parse_word(const FieldPtr& field, std::string_view text);
Generator parse_generator(const FieldPtr& field, std::string_view text);
std::string word_to_string(const Word& w);

/// A K-algebra endomorphism of B given by the images of x, y, z.
///
/// Morphisms built from generators remember the word that produced them
/// (in application order) so they can be inverted; raw morphisms cannot.
class Morphism {
 public:
  const Surface& surface() const noexcept { return surface_; }
  const BElement& tx() const noexcept { return tx_; }
  const BElement& ty() const noexcept { return ty_; }
  const BElement& tz() const noexcept { return tz_; }
  const std::optional<Word>& word() const noexcept { return word_; }

 private:
  friend Morphism make_morphism(const Surface&, const BElement&, const BElement&, const BElement&,
                                std::optional<Word>);
  Morphism(Surface s, BElement tx, BElement ty, BElement tz, std::optional<Word> word)
      : surface_(std::move(s)), tx_(std::move(tx)), ty_(std::move(ty)), tz_(std::move(tz)), word_(std::move(word)) {}

  Surface surface_;
  BElement tx_, ty_, tz_;
  std::optional<Word> word_;
};

/// f(tx) ty - phi(tx, tz) in B; zero iff the images define an endomorphism.
BElement relation_residue(const Surface& s, const BElement& tx, const BElement& ty, const BElement& tz);

/// Validates the images (RelationViolated otherwise).
Morphism make_morphism(const Surface& s, const BElement& tx, const BElement& ty, const BElement& tz,
                       std::optional<Word> word = std::nullopt);

Morphism identity(const Surface& s);
BElement apply(const Morphism& m, const BElement& b);

/// (a o b): b is applied first.
Morphism compose(const Morphism& a, const Morphism& b);
/// Inverse of a generator word. NotInvertibleRecord for raw morphisms.
Morphism invert(const Morphism& m);
bool morphism_equal(const Morphism& a, const Morphism& b);

/// g = X^i h(X^s) with s maximal.
struct UnityDecomposition {
  unsigned i = 0;
  unsigned s = 1;
  Poly h;
};

/// For g monic in X, deg >= 2, with a nonzero root and no X^{deg-1} term.
/// Errors: NotMonic, NotApplicable, NotCentered, WrongVariables.
UnityDecomposition unity_decompose(const Poly& g);

/// phi(Z) = Z^i psi(Z^m) with m maximal; for phi = Z^d this is (0, d).
/// NotApplicable when phi depends on X or m < 2.
struct PhiSymmetry {
  unsigned i = 0;
  unsigned m = 1;
};
PhiSymmetry phi_symmetry(const Surface& s);

/// Substitutes Z -> Z - a and X -> X - b so that phi has no Z^{d-1} term and
/// f no X^{r-1} term.
struct Centering {
  Surface surface;
  FieldElement a;  ///< Z shift
  FieldElement b;  ///< X shift
};
Centering center(const Surface& s);

Morphism make_H(const Surface& s, const Poly& h);
Morphism make_T(const Surface& s, const FieldElement& lambda);
Morphism make_R(const Surface& s, const FieldElement& lambda);
Morphism make_S(const Surface& s, const FieldElement& mu);
Morphism make_generator(const Surface& s, const Generator& g);
/// Composite of the word, first generator applied first.
Morphism from_word(const Surface& s, const Word& w);

/// Every automorphism has x -> lambda x with lambda^s = 1 and
/// z -> alpha z + b(x) with f | b and phi(alpha z) = alpha^d phi(z).
struct LemmaShape {
  FieldElement lambda;
  FieldElement alpha;
  Poly b;
};
/// Empty when any part of the shape fails.
std::optional<LemmaShape> lemma_shape(const Morphism& m);

}  // namespace gds
