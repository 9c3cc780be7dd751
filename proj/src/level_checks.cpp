// SPDX-License-Identifier: Apache-2.0
#include "s3fam/level_checks.hpp"

namespace s3fam {

SurfaceMesh extract_member(const FamilyParameter& param, int resolution,
                           const FamilyOptions& options, unsigned workers) {
  FamilyField field(param, options);
  ExtractOptions eo;
  eo.resolution = resolution;
  eo.workers = workers;
  eo.lipschitz = field.ambient_lipschitz_bound();
  return extract_levelset([&](const Eigen::Vector4d& p) { return field.evaluate_r4(p); }, eo);
}

PoincareHopfReport poincare_hopf_check(const FamilyParameter& param, int resolution,
                                       const FamilyOptions& options, unsigned workers) {
  PoincareHopfReport out;
  if (!rho_supported(param.a, options.delta0)) {
    out.skipped = true;
    out.reason = "rho vanishes identically; the identity applies to the bump regime";
    return out;
  }
  FamilyField field(param, options);
  SmoothZeroOptions zo;
  zo.n_samples = options.alpha_grid;
  RestrictedFunction rf = f_az(field, zo);
  out.zero_count = static_cast<int>(rf.zeros.multiset.zeros.size());
  for (const auto& z : rf.zeros.multiset.zeros) {
    if (z.order != 1) {
      out.skipped = true;
      out.reason = "restricted function has a zero of order > 1";
      return out;
    }
  }
  SurfaceMesh mesh = extract_member(param, resolution, options, workers);
  out.chi = euler_characteristic(mesh);
  out.holds = (out.chi == 4 - out.zero_count);
  return out;
}

}  // namespace s3fam
