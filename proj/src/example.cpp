#include "gds/example.hpp"

#include "gds/autos.hpp"
#include "gds/parse.hpp"

namespace gds::example {

Surface surface() {
  const FieldPtr q = Field::rationals();
  return make_surface(q, parse_poly(q, kF), parse_poly(q, kPhi));
}

CheckResult run_check() {
  const Surface s = surface();
  const FieldPtr& k = s->field();
  const Morphism H = make_H(s, parse_poly(k, kMultiplier));
  CheckResult out;
  out.hz = H.tz().to_string();
  out.hy = H.ty().to_string();
  const BElement residue = relation_residue(s, H.tx(), H.ty(), H.tz());
  out.residue = residue.to_string();
  out.relation_residue_zero = residue.is_zero();
  out.hz_matches_published = H.tz() == normalize(s, parse_poly(k, kPublishedHz));
  out.hy_matches_golden = H.ty() == normalize(s, parse_poly(k, kGoldenHy)) && out.hy == kGoldenHy;
  const BElement published = normalize(s, parse_poly(k, kPublishedHy));
  out.hy_matches_published = H.ty() == published;
  if (!out.hy_matches_published) out.published_hy_difference = (H.ty() - published).to_string();
  return out;
}

}  // namespace gds::example
