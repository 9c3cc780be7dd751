// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "s3fam/extract.hpp"
#include "s3fam/family.hpp"

namespace s3fam {

struct PoincareHopfReport {
  bool skipped = false;
  std::string reason;
  int zero_count = 0;
  int chi = 0;
  bool holds = false;  // chi == 4 - zero_count
};

/// Cross-check of the zero census against the mesh: for a parameter whose
/// restricted function has only order-1 zeros, the extracted level set must
/// satisfy chi = 4 - #zeros.
PoincareHopfReport poincare_hopf_check(const FamilyParameter& param, int resolution,
                                       const FamilyOptions& options = {},
                                       unsigned workers = 0);

/// Extraction of the zero set of a family member (rotated by `rotation` if
/// given) at the stated resolution.
SurfaceMesh extract_member(const FamilyParameter& param, int resolution,
                           const FamilyOptions& options = {}, unsigned workers = 0);

}  // namespace s3fam
