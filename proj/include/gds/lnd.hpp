#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gds/surface.hpp"

namespace gds {

/// A K-derivation of B, determined by the images of x, y, z.
///
/// Construction checks that the images respect the defining relation, i.e.
/// f'(x) dx y + f(x) dy - phi_X dx - phi_Z dz = 0 in B.
class Derivation {
 public:
  const Surface& surface() const noexcept { return surface_; }
  const BElement& dx() const noexcept { return dx_; }
  const BElement& dy() const noexcept { return dy_; }
  const BElement& dz() const noexcept { return dz_; }
  bool is_zero() const { return dx_.is_zero() && dy_.is_zero() && dz_.is_zero(); }

 private:
  friend Derivation make_derivation(const Surface&, const BElement&, const BElement&, const BElement&);
  Derivation(Surface s, BElement dx, BElement dy, BElement dz)
      : surface_(std::move(s)), dx_(std::move(dx)), dy_(std::move(dy)), dz_(std::move(dz)) {}

  Surface surface_;
  BElement dx_, dy_, dz_;
};

/// Image of the relation F under the would-be derivation; zero iff well defined.
BElement relation_image(const Surface& s, const BElement& dx, const BElement& dy, const BElement& dz);

/// Throws RelationViolated carrying the nonzero relation image.
Derivation make_derivation(const Surface& s, const BElement& dx, const BElement& dy, const BElement& dz);

/// x -> 0, y -> phi_Z(x, z), z -> f(x).
Derivation canonical_D(const Surface& s);

/// h * D for h in B.
Derivation scale(const BElement& h, const Derivation& D);

/// D(b) by the Leibniz rule on the canonical representative.
BElement apply(const Derivation& D, const BElement& b);

/// D^n(b).
BElement apply_power(const Derivation& D, const BElement& b, unsigned n);

inline constexpr unsigned kDefaultNilpotencyCap = 64;

/// Least n with D^n(b) = 0, or empty when `cap` applications did not reach 0.
std::optional<unsigned> nilpotency_index(const Derivation& D, const BElement& b, unsigned cap = kDefaultNilpotencyCap);

struct LndClass {
  enum class Kind { Zero, LndWithH, NotLnd };
  Kind kind;
  /// Set for LndWithH: D = h * canonical_D.
  std::optional<Poly> h;
  /// Short reason for NotLnd.
  std::string reason;
};

std::string_view to_string(LndClass::Kind kind);

/// Exact decision: D is a nonzero LND iff dx = 0, dz = h(x) f(x) for some
/// h in K[x], and dy = h(x) phi_Z(x, z).
LndClass classify_lnd(const Derivation& D);

/// Whether b is in ker D, for a nonzero LND D. Throws NotAnLND otherwise.
bool kernel_member(const Derivation& D, const BElement& b);

/// Machine-checked statement that ML(B) = HD(B) = K[x].
struct InvariantsReport {
  std::string ml_invariant;
  std::string hd_invariant;
  Derivation witness;
  bool witness_well_defined = false;
  /// h recovered by classify_lnd on the witness; 1 for the canonical D.
  Poly witness_h;
  std::size_t sample_size = 0;
  std::size_t sample_in_kernel = 0;
  std::size_t sample_in_kx = 0;
  /// Elements where "D(b) = 0" and "b in K[x]" disagreed (must be 0).
  std::size_t kernel_mismatches = 0;
  /// y reaches zero after exactly d + 1 steps.
  std::optional<unsigned> y_nilpotency;

  bool verified() const;
};

InvariantsReport invariants_report(const Surface& s);

}  // namespace gds
