// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <stdexcept>

#include "s3fam/mesh.hpp"

namespace s3fam {

class LevelsetSingular : public std::runtime_error {
 public:
  explicit LevelsetSingular(const std::string& what) : std::runtime_error(what) {}
};

struct ExtractStats {
  int suspect_vertices = 0;   // gradient too small to trust the crossing
  int bad_edges = 0;
  int bad_vertices = 0;
  double suspect_fraction = 0.0;
};

struct ExtractOptions {
  int resolution = 128;       // cells per axis on each cube facet
  unsigned workers = 0;       // 0 = hardware concurrency
  double max_defect_fraction = 0.01;
  double singular_sensitivity = 1.0;
  bool throw_on_defects = true;
  /// When positive: an upper bound for |grad F| over S^3. Blocks whose
  /// center value exceeds lipschitz * block radius provably contain no
  /// zeros and are skipped without evaluating their lattice points.
  double lipschitz = 0.0;
  ExtractStats* stats = nullptr;
};

/// Extracts {F = 0} on S^3 by marching tetrahedra. The sphere is tessellated
/// by centrally projecting the boundary of [-1,1]^4 (8 cube facets, each a
/// res^3 grid of cubes split into 6 Kuhn tetrahedra); the shared-face
/// diagonals agree across facets, so the extracted mesh is watertight
/// wherever the level set is regular at this resolution. Crossing vertices
/// are deduplicated by their lattice edge and projected back to the sphere.
///
/// Throws LevelsetSingular when the defect census exceeds
/// max_defect_fraction of the vertex count (the level set is genuinely
/// singular at this resolution).
SurfaceMesh extract_levelset(const std::function<double(const Eigen::Vector4d&)>& F,
                             const ExtractOptions& options = {});

}  // namespace s3fam
