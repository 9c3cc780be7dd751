// SPDX-License-Identifier: Apache-2.0
#include "s3fam/extract.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>

#include <Eigen/LU>

#include "s3fam/parallel.hpp"

namespace s3fam {

namespace {

struct EdgeKey {
  std::uint64_t a, b;
  bool operator==(const EdgeKey& o) const { return a == o.a && b == o.b; }
};

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& k) const {
    std::uint64_t h = k.a * 0x9e3779b97f4a7c15ULL ^ (k.b + 0x7f4a7c15ULL + (k.a << 6));
    h ^= h >> 31;
    return static_cast<std::size_t>(h);
  }
};

// Lattice ids: one packed integer per boundary lattice point of [0,res]^4.
std::uint64_t pack(int i, int j, int k, int l) {
  return (static_cast<std::uint64_t>(i) << 33) | (static_cast<std::uint64_t>(j) << 22) |
         (static_cast<std::uint64_t>(k) << 11) | static_cast<std::uint64_t>(l);
}

const int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

constexpr int kBlock = 8;  // pruning granularity in cells

}  // namespace

SurfaceMesh extract_levelset(const std::function<double(const Eigen::Vector4d&)>& F,
                             const ExtractOptions& options) {
  const int res = options.resolution;
  if (res < 2 || res > 2000) throw std::invalid_argument("extract_levelset: bad resolution");
  const int np = res + 1;
  const int nblocks = (res + kBlock - 1) / kBlock;

  SurfaceMesh mesh;
  std::unordered_map<EdgeKey, int, EdgeKeyHash> crossing;

  std::vector<double> coord_table(np);
  for (int v = 0; v < np; ++v) coord_table[v] = -1.0 + 2.0 * v / res;
  auto lattice_coord = [&](int v) { return coord_table[v]; };

  // Radial projection from the cube boundary to the sphere is non-expanding
  // (|p| >= 1 there), so cube-space radii certify sphere-space exclusion:
  // |F(center)| > L * radius means the block is free of zeros.
  const double h = 2.0 / res;
  const double block_radius =
      0.5 * h * std::sqrt(2.0 * kBlock * kBlock + 1.0) * 1.01;
  const bool prune = options.lipschitz > 0.0;

  auto crossing_vertex = [&](std::uint64_t ga, const Eigen::Vector4d& pa, double fa,
                             std::uint64_t gb, const Eigen::Vector4d& pb, double fb) {
    EdgeKey key = ga < gb ? EdgeKey{ga, gb} : EdgeKey{gb, ga};
    auto it = crossing.find(key);
    if (it != crossing.end()) return it->second;
    double t = fa / (fa - fb);
    t = std::min(1.0 - 1e-6, std::max(1e-6, t));
    Eigen::Vector4d p = (1.0 - t) * pa + t * pb;
    p.normalize();
    int idx = static_cast<int>(mesh.vertices.size());
    mesh.vertices.push_back(p);
    crossing.emplace(key, idx);
    return idx;
  };

  auto march_tet = [&](const std::array<std::uint64_t, 4>& gid,
                       const std::array<Eigen::Vector4d, 4>& pos,
                       const std::array<double, 4>& val) {
    std::array<bool, 4> neg;
    int nneg = 0;
    for (int i = 0; i < 4; ++i) {
      neg[i] = val[i] < 0.0;
      if (neg[i]) ++nneg;
    }
    if (nneg == 0 || nneg == 4) return;

    auto emit = [&](int a, int b, int c) {
      Eigen::Vector4d pneg = Eigen::Vector4d::Zero(), ppos = Eigen::Vector4d::Zero();
      int cn = 0, cp = 0;
      for (int i = 0; i < 4; ++i) {
        if (neg[i]) {
          pneg += pos[i];
          ++cn;
        } else {
          ppos += pos[i];
          ++cp;
        }
      }
      Eigen::Vector4d dir4 = ppos / cp - pneg / cn;
      const Eigen::Vector4d &va = mesh.vertices[a], &vb = mesh.vertices[b],
                            &vc = mesh.vertices[c];
      Eigen::Matrix4d m;
      m.col(0) = vb - va;
      m.col(1) = vc - va;
      m.col(2) = dir4;
      m.col(3) = va;
      if (m.determinant() < 0.0)
        mesh.triangles.push_back({a, c, b});
      else
        mesh.triangles.push_back({a, b, c});
    };

    if (nneg == 1 || nneg == 3) {
      int lone = -1;
      for (int i = 0; i < 4; ++i)
        if (neg[i] == (nneg == 1)) lone = i;
      int others[3], o = 0;
      for (int i = 0; i < 4; ++i)
        if (i != lone) others[o++] = i;
      int c0 = crossing_vertex(gid[lone], pos[lone], val[lone], gid[others[0]], pos[others[0]],
                               val[others[0]]);
      int c1 = crossing_vertex(gid[lone], pos[lone], val[lone], gid[others[1]], pos[others[1]],
                               val[others[1]]);
      int c2 = crossing_vertex(gid[lone], pos[lone], val[lone], gid[others[2]], pos[others[2]],
                               val[others[2]]);
      emit(c0, c1, c2);
    } else {
      int a = -1, b = -1, c = -1, d = -1;
      for (int i = 0; i < 4; ++i) {
        if (neg[i]) (a < 0 ? a : b) = i;
        else (c < 0 ? c : d) = i;
      }
      int q0 = crossing_vertex(gid[a], pos[a], val[a], gid[c], pos[c], val[c]);
      int q1 = crossing_vertex(gid[a], pos[a], val[a], gid[d], pos[d], val[d]);
      int q2 = crossing_vertex(gid[b], pos[b], val[b], gid[d], pos[d], val[d]);
      int q3 = crossing_vertex(gid[b], pos[b], val[b], gid[c], pos[c], val[c]);
      emit(q0, q1, q2);
      emit(q0, q2, q3);
    }
  };

  for (int d = 0; d < 4; ++d) {
    int free_axes[3], fa = 0;
    for (int a = 0; a < 4; ++a)
      if (a != d) free_axes[fa++] = a;
    for (int side : {0, res}) {
      auto point_at = [&](double u0, double u1, double u2) {
        double g[4];
        g[d] = lattice_coord(side);
        g[free_axes[0]] = -1.0 + 2.0 * u0 / res;
        g[free_axes[1]] = -1.0 + 2.0 * u1 / res;
        g[free_axes[2]] = -1.0 + 2.0 * u2 / res;
        return Eigen::Vector4d(g[0], g[1], g[2], g[3]);
      };

      // Value slabs (lattice layers along the third free axis) with lazy,
      // pruning-aware evaluation.
      std::vector<double> slabs[2] = {std::vector<double>(np * np),
                                      std::vector<double>(np * np)};
      std::vector<std::uint8_t> filled[2] = {std::vector<std::uint8_t>(np * np, 0),
                                             std::vector<std::uint8_t>(np * np, 0)};
      int slab_layer[2] = {-1, -1};

      // Near/far flags per cube layer, probed at block centers.
      std::vector<std::uint8_t> near_block(nblocks * nblocks);
      auto probe_layer = [&](int k) {
        if (!prune) {
          std::fill(near_block.begin(), near_block.end(), 1);
          return;
        }
        parallel_for(static_cast<std::size_t>(nblocks) * nblocks, options.workers,
                     [&](std::size_t idx) {
                       int bi = static_cast<int>(idx) / nblocks, bj = static_cast<int>(idx) % nblocks;
                       double ci = bi * kBlock + kBlock * 0.5;
                       double cj = bj * kBlock + kBlock * 0.5;
                       Eigen::Vector4d c = point_at(ci, cj, k + 0.5).normalized();
                       near_block[idx] =
                           std::fabs(F(c)) <= options.lipschitz * block_radius ? 1 : 0;
                     },
                     8);
      };

      auto fill_needed = [&](int slab_idx, int layer) {
        if (slab_layer[slab_idx] != layer) {
          std::fill(filled[slab_idx].begin(), filled[slab_idx].end(), 0);
          slab_layer[slab_idx] = layer;
        }
        // Mark the lattice points of all near blocks in this cube layer.
        std::vector<int> todo;
        for (int bi = 0; bi < nblocks; ++bi) {
          for (int bj = 0; bj < nblocks; ++bj) {
            if (!near_block[bi * nblocks + bj]) continue;
            int i0 = bi * kBlock, i1 = std::min(res, i0 + kBlock);
            int j0 = bj * kBlock, j1 = std::min(res, j0 + kBlock);
            for (int i = i0; i <= i1; ++i) {
              for (int j = j0; j <= j1; ++j) {
                if (!filled[slab_idx][i * np + j]) {
                  filled[slab_idx][i * np + j] = 1;
                  todo.push_back(i * np + j);
                }
              }
            }
          }
        }
        auto& values = slabs[slab_idx];
        parallel_for(todo.size(), options.workers,
                     [&](std::size_t t) {
                       int idx = todo[t];
                       values[idx] = F(point_at(idx / np, idx % np, layer).normalized());
                     },
                     64);
      };

      for (int k = 0; k < res; ++k) {
        probe_layer(k);
        fill_needed(k % 2, k);
        fill_needed((k + 1) % 2, k + 1);
        const std::vector<double>& lo = slabs[k % 2];
        const std::vector<double>& hi = slabs[(k + 1) % 2];

        for (int bi = 0; bi < nblocks; ++bi) {
          for (int bj = 0; bj < nblocks; ++bj) {
            if (!near_block[bi * nblocks + bj]) continue;
            int i0 = bi * kBlock, i1 = std::min(res, i0 + kBlock);
            int j0 = bj * kBlock, j1 = std::min(res, j0 + kBlock);
            for (int i = i0; i < i1; ++i) {
              for (int j = j0; j < j1; ++j) {
                // Corner index: di*4 + dj*2 + dk.
                double cval[8];
                bool any_neg = false, any_pos = false;
                for (int c = 0; c < 8; ++c) {
                  int di = c >> 2, dj = (c >> 1) & 1, dk = c & 1;
                  double val = (dk ? hi : lo)[(i + di) * np + (j + dj)];
                  cval[c] = val;
                  (val < 0.0 ? any_neg : any_pos) = true;
                }
                if (!any_neg || !any_pos) continue;

                std::uint64_t cgid[8];
                Eigen::Vector4d cpos[8];
                for (int c = 0; c < 8; ++c) {
                  int g[4];
                  g[d] = side;
                  g[free_axes[0]] = i + (c >> 2);
                  g[free_axes[1]] = j + ((c >> 1) & 1);
                  g[free_axes[2]] = k + (c & 1);
                  cgid[c] = pack(g[0], g[1], g[2], g[3]);
                  cpos[c] = {lattice_coord(g[0]), lattice_coord(g[1]), lattice_coord(g[2]),
                             lattice_coord(g[3])};
                }

                for (const auto& perm : kPerms) {
                  // Corner chain 0 -> +e_{perm0} -> +e_{perm1} -> +e_{perm2}.
                  int c0 = 0;
                  int c1 = c0 | (perm[0] == 0 ? 4 : perm[0] == 1 ? 2 : 1);
                  int c2 = c1 | (perm[1] == 0 ? 4 : perm[1] == 1 ? 2 : 1);
                  int c3 = 7;
                  std::array<std::uint64_t, 4> gid = {cgid[c0], cgid[c1], cgid[c2], cgid[c3]};
                  std::array<Eigen::Vector4d, 4> pos = {cpos[c0], cpos[c1], cpos[c2], cpos[c3]};
                  std::array<double, 4> val = {cval[c0], cval[c1], cval[c2], cval[c3]};
                  march_tet(gid, pos, val);
                }
              }
            }
          }
        }
      }
    }
  }

  if (!mesh.triangles.empty()) {
    // Singularity census: a crossing is trustworthy only when |grad F| at the
    // vertex dominates the gradient variation across a cell; near a singular
    // point of the level set the ratio degrades to O(1).
    const double step = 0.25 * h;
    std::vector<Eigen::Vector4d> grads(mesh.vertices.size());
    parallel_for(mesh.vertices.size(), options.workers, [&](std::size_t i) {
      const Eigen::Vector4d& v = mesh.vertices[i];
      Eigen::Vector4d g;
      for (int dd = 0; dd < 4; ++dd) {
        Eigen::Vector4d e = Eigen::Vector4d::Unit(dd);
        g[dd] = (F((v + step * e).normalized()) - F((v - step * e).normalized())) / (2 * step);
      }
      grads[i] = g;
    }, 64);
    std::vector<double> variation(mesh.vertices.size(), 0.0);
    for (const auto& tri : mesh.triangles) {
      for (int e = 0; e < 3; ++e) {
        int a = tri[e], b = tri[(e + 1) % 3];
        double dv = (grads[a] - grads[b]).norm();
        variation[a] = std::max(variation[a], dv);
        variation[b] = std::max(variation[b], dv);
      }
    }
    int suspects = 0;
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
      if (grads[i].norm() < options.singular_sensitivity * variation[i]) ++suspects;
    }

    // Marching over a tessellated closed 3-manifold cannot produce bad edges
    // or pinched links on its own, so the structural census is left to
    // analyze_mesh/find_defects; the gradient census is the singularity gate.
    double fraction = static_cast<double>(suspects) / static_cast<double>(mesh.vertices.size());
    if (options.stats) {
      options.stats->suspect_vertices = suspects;
      options.stats->bad_edges = 0;
      options.stats->bad_vertices = 0;
      options.stats->suspect_fraction = fraction;
    }
    if (options.throw_on_defects && fraction > options.max_defect_fraction) {
      throw LevelsetSingular("extract_levelset: " + std::to_string(suspects) +
                             " suspect vertices at resolution " + std::to_string(res));
    }
  } else if (options.stats) {
    *options.stats = ExtractStats{};
  }
  return mesh;
}

}  // namespace s3fam
