// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace s3fam {

/// Triangle mesh with vertices on S^3 (unit norm within 1e-9).
struct SurfaceMesh {
  std::vector<Eigen::Vector4d> vertices;
  std::vector<std::array<int, 3>> triangles;
  bool excised = false;  // defects were cut out and capped
};

struct MeshDefects {
  std::vector<std::pair<int, int>> bad_edges;  // incident triangle count != 2
  std::vector<int> bad_vertices;               // link is not a single cycle
  bool clean() const { return bad_edges.empty() && bad_vertices.empty(); }
};

MeshDefects find_defects(const SurfaceMesh& mesh);

/// chi = V - E + F over the whole mesh (only referenced vertices count).
int euler_characteristic(const SurfaceMesh& mesh);

/// Number of edge-connected triangle components.
int components(const SurfaceMesh& mesh);

class MeshNotWatertight : public std::runtime_error {
 public:
  explicit MeshNotWatertight(const std::string& what) : std::runtime_error(what) {}
};

/// Sum over closed orientable components of (2 - chi_i)/2. Throws
/// MeshNotWatertight when defects are present (run excise_and_cap first).
int genus(const SurfaceMesh& mesh);

/// Removes the one-ring of every defect vertex and fan-caps the resulting
/// boundary loops. Best effort; the output carries excised = true.
SurfaceMesh excise_and_cap(const SurfaceMesh& mesh);

/// chi, components and genus from one topology pass. genus is -1 (and
/// watertight false) when the mesh has defects.
struct MeshSummary {
  int chi = 0;
  int components = 0;
  int genus = -1;
  bool watertight = false;
  int bad_edges = 0;
  int bad_vertices = 0;
};

MeshSummary analyze_mesh(const SurfaceMesh& mesh);

/// OBJ export of the stereographic projection from the given pole (a unit
/// 4-vector; the projection is from pole to the orthogonal hyperplane).
void write_obj(const SurfaceMesh& mesh, const std::string& path,
               const Eigen::Vector4d& pole = {0, 0, 0, 1});

/// CSV of the raw 4-D vertex coordinates plus the triangle index list.
void write_csv(const SurfaceMesh& mesh, const std::string& path);

}  // namespace s3fam
