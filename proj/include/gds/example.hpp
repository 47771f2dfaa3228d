#pragma once

#include <string>

#include "gds/surface.hpp"

namespace gds::example {

// Worked example: f = X^2 h(X^4) with h = X^5 + 2X^4 + X^2 - 2,
// phi = Z^3 + Z + 1 over Q, and the automorphism H with multiplier X^2 + 1.
inline constexpr const char* kF = "X^22 + 2*X^18 + X^10 - 2*X^2";
inline constexpr const char* kPhi = "Z^3 + Z + 1";
inline constexpr const char* kMultiplier = "X^2 + 1";

/// H(z) as displayed in the published example, with the leading `Z +`.
inline constexpr const char* kPublishedHz =
    "Z + X^24 + X^22 + 2*X^20 + 2*X^18 + X^12 + X^10 - 2*X^4 - 2*X^2";

/// H(y) as displayed in the published example.
inline constexpr const char* kPublishedHy =
    "Y + (1 + X^2)*(1 + 4*X^4 + 8*X^6 + 4*X^8 - 4*X^12 - 8*X^14 - 4*X^16"
    " - 7*X^20 - 14*X^22 - 11*X^24 - 8*X^26 + 8*X^30 + 6*X^32 + 4*X^34"
    " + 6*X^36 + 8*X^38 + 8*X^40 + 8*X^42 + 5*X^44 + 2*X^46 + X^48 - 6*X^2*Z - 6*X^4*Z"
    " + 3*X^10*Z + 3*X^12*Z + 6*X^18*Z + 6*X^20*Z + 3*X^22*Z + 3*X^24*Z + 3*Z^2)";

/// Frozen canonical H(y); cross-checked against an independent CAS expansion.
inline constexpr const char* kGoldenHy =
    "(3*X^2 + 3)*Z^2 + (3*X^26 + 6*X^24 + 9*X^22 + 12*X^20 + 6*X^18 + 3*X^14 + 6*X^12 + 3*X^10"
    " - 6*X^6 - 12*X^4 - 6*X^2)*Z + Y + X^50 + 3*X^48 + 7*X^46 + 13*X^44 + 16*X^42 + 16*X^40"
    " + 14*X^38 + 10*X^36 + 10*X^34 + 14*X^32 + 8*X^30 - 8*X^28 - 19*X^26 - 25*X^24 - 21*X^22"
    " - 7*X^20 - 4*X^18 - 12*X^16 - 12*X^14 - 4*X^12 + 4*X^10 + 12*X^8 + 12*X^6 + 4*X^4 + X^2 + 1";

Surface surface();

struct CheckResult {
  std::string hz;
  std::string hy;
  std::string residue;
  bool hz_matches_published = false;
  bool hy_matches_golden = false;
  bool relation_residue_zero = false;
  /// Informational only: the published H(y) is not authoritative.
  bool hy_matches_published = false;
  std::string published_hy_difference;

  bool passed() const { return hz_matches_published && hy_matches_golden && relation_residue_zero; }
};

CheckResult run_check();

}  // namespace gds::example
