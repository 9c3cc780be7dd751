// SPDX-License-Identifier: Apache-2.0
#include "s3fam/mesh.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>
#include <unordered_set>

namespace s3fam {

namespace {

using Edge = std::pair<int, int>;

std::uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

Edge unpack_edge(std::uint64_t k) {
  return {static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu)};
}

// Per-edge incidence; two slots cover the edge-manifold case, count tracks
// overflow.
struct EdgeRec {
  int count = 0;
  int t0 = -1, t1 = -1;
};

struct Topology {
  std::unordered_map<std::uint64_t, EdgeRec> edges;
  // CSR triangle incidence per vertex.
  std::vector<int> offsets;
  std::vector<int> incident;
  int max_vertex = -1;
};

Topology build_topology(const SurfaceMesh& mesh) {
  Topology topo;
  topo.edges.reserve(mesh.triangles.size() * 2);
  for (int t = 0; t < static_cast<int>(mesh.triangles.size()); ++t) {
    const auto& tri = mesh.triangles[t];
    for (int e = 0; e < 3; ++e) {
      EdgeRec& rec = topo.edges[edge_key(tri[e], tri[(e + 1) % 3])];
      if (rec.count == 0) rec.t0 = t;
      else if (rec.count == 1) rec.t1 = t;
      rec.count++;
      topo.max_vertex = std::max(topo.max_vertex, tri[e]);
    }
  }
  int nv = topo.max_vertex + 1;
  topo.offsets.assign(nv + 1, 0);
  for (const auto& tri : mesh.triangles)
    for (int v : tri) topo.offsets[v + 1]++;
  for (int v = 0; v < nv; ++v) topo.offsets[v + 1] += topo.offsets[v];
  topo.incident.resize(mesh.triangles.size() * 3);
  std::vector<int> cursor(topo.offsets.begin(), topo.offsets.end() - 1);
  for (int t = 0; t < static_cast<int>(mesh.triangles.size()); ++t)
    for (int v : mesh.triangles[t]) topo.incident[cursor[v]++] = t;
  return topo;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

UnionFind triangle_components(const SurfaceMesh& mesh, const Topology& topo) {
  UnionFind uf(static_cast<int>(mesh.triangles.size()));
  bool overflow = false;
  for (const auto& [key, rec] : topo.edges) {
    if (rec.count >= 2) uf.unite(rec.t0, rec.t1);
    if (rec.count > 2) overflow = true;
  }
  if (overflow) {
    std::unordered_map<std::uint64_t, int> rep;
    rep.reserve(topo.edges.size());
    for (int t = 0; t < static_cast<int>(mesh.triangles.size()); ++t) {
      const auto& tri = mesh.triangles[t];
      for (int e = 0; e < 3; ++e) {
        std::uint64_t k = edge_key(tri[e], tri[(e + 1) % 3]);
        auto it = rep.find(k);
        if (it == rep.end()) rep.emplace(k, t);
        else uf.unite(it->second, t);
      }
    }
  }
  return uf;
}

MeshDefects find_defects_impl(const SurfaceMesh& mesh, const Topology& topo) {
  MeshDefects out;
  for (const auto& [key, rec] : topo.edges)
    if (rec.count != 2) out.bad_edges.push_back(unpack_edge(key));

  // Vertex links: for every vertex, glue the incident triangles along the
  // edges at that vertex; a manifold vertex yields one component.
  int nv = topo.max_vertex + 1;
  std::vector<int> local_parent;
  std::vector<std::pair<int, int>> wings;  // (other endpoint, local triangle)
  for (int v = 0; v < nv; ++v) {
    int begin = topo.offsets[v], end = topo.offsets[v + 1];
    int deg = end - begin;
    if (deg == 0) continue;
    if (deg < 2) {
      out.bad_vertices.push_back(v);
      continue;
    }
    local_parent.assign(deg, 0);
    for (int i = 0; i < deg; ++i) local_parent[i] = i;
    auto find_local = [&](int a) {
      while (local_parent[a] != a) a = local_parent[a] = local_parent[local_parent[a]];
      return a;
    };
    wings.clear();
    for (int i = 0; i < deg; ++i) {
      const auto& tri = mesh.triangles[topo.incident[begin + i]];
      for (int e = 0; e < 3; ++e) {
        int a = tri[e], b = tri[(e + 1) % 3];
        if (a == v) wings.emplace_back(b, i);
        else if (b == v) wings.emplace_back(a, i);
      }
    }
    std::sort(wings.begin(), wings.end());
    for (std::size_t i = 1; i < wings.size(); ++i) {
      if (wings[i].first == wings[i - 1].first) {
        int ra = find_local(wings[i].second), rb = find_local(wings[i - 1].second);
        local_parent[ra] = rb;
      }
    }
    int root = find_local(0);
    for (int i = 1; i < deg; ++i) {
      if (find_local(i) != root) {
        out.bad_vertices.push_back(v);
        break;
      }
    }
  }
  return out;
}

}  // namespace

MeshDefects find_defects(const SurfaceMesh& mesh) {
  if (mesh.triangles.empty()) return {};
  Topology topo = build_topology(mesh);
  return find_defects_impl(mesh, topo);
}

int euler_characteristic(const SurfaceMesh& mesh) {
  if (mesh.triangles.empty()) return 0;
  Topology topo = build_topology(mesh);
  int verts = 0;
  for (int v = 0; v <= topo.max_vertex; ++v)
    if (topo.offsets[v + 1] > topo.offsets[v]) ++verts;
  return verts - static_cast<int>(topo.edges.size()) +
         static_cast<int>(mesh.triangles.size());
}

int components(const SurfaceMesh& mesh) {
  int n = static_cast<int>(mesh.triangles.size());
  if (n == 0) return 0;
  Topology topo = build_topology(mesh);
  UnionFind uf = triangle_components(mesh, topo);
  std::unordered_set<int> roots;
  for (int t = 0; t < n; ++t) roots.insert(uf.find(t));
  return static_cast<int>(roots.size());
}

int genus(const SurfaceMesh& mesh) {
  int n = static_cast<int>(mesh.triangles.size());
  if (n == 0) return 0;
  Topology topo = build_topology(mesh);
  MeshDefects defects = find_defects_impl(mesh, topo);
  if (!defects.clean())
    throw MeshNotWatertight("genus: mesh has " + std::to_string(defects.bad_edges.size()) +
                            " bad edges and " + std::to_string(defects.bad_vertices.size()) +
                            " bad vertices");
  UnionFind uf = triangle_components(mesh, topo);

  // Per-component chi without building per-component sets: a vertex belongs
  // to the component of any incident triangle, an edge to that of t0.
  std::unordered_map<int, std::array<int, 3>> counts;  // root -> (V, E, F)
  for (int t = 0; t < n; ++t) counts[uf.find(t)][2]++;
  for (int v = 0; v <= topo.max_vertex; ++v) {
    if (topo.offsets[v + 1] > topo.offsets[v])
      counts[uf.find(topo.incident[topo.offsets[v]])][0]++;
  }
  for (const auto& [key, rec] : topo.edges) counts[uf.find(rec.t0)][1]++;

  int total = 0;
  for (const auto& [root, vef] : counts) {
    int chi = vef[0] - vef[1] + vef[2];
    if ((2 - chi) % 2 != 0)
      throw MeshNotWatertight("genus: component with odd Euler characteristic");
    total += std::max(0, (2 - chi) / 2);
  }
  return total;
}

MeshSummary analyze_mesh(const SurfaceMesh& mesh) {
  MeshSummary out;
  int n = static_cast<int>(mesh.triangles.size());
  if (n == 0) {
    out.chi = 0;
    out.components = 0;
    out.genus = 0;
    out.watertight = true;
    return out;
  }
  Topology topo = build_topology(mesh);
  MeshDefects defects = find_defects_impl(mesh, topo);
  out.bad_edges = static_cast<int>(defects.bad_edges.size());
  out.bad_vertices = static_cast<int>(defects.bad_vertices.size());
  out.watertight = defects.clean();

  UnionFind uf = triangle_components(mesh, topo);
  std::unordered_map<int, std::array<int, 3>> counts;
  for (int t = 0; t < n; ++t) counts[uf.find(t)][2]++;
  for (int v = 0; v <= topo.max_vertex; ++v) {
    if (topo.offsets[v + 1] > topo.offsets[v])
      counts[uf.find(topo.incident[topo.offsets[v]])][0]++;
  }
  for (const auto& [key, rec] : topo.edges) counts[uf.find(rec.t0)][1]++;

  out.components = static_cast<int>(counts.size());
  int chi = 0, total_genus = 0;
  bool genus_ok = out.watertight;
  for (const auto& [root, vef] : counts) {
    int c = vef[0] - vef[1] + vef[2];
    chi += c;
    if ((2 - c) % 2 != 0) genus_ok = false;
    else total_genus += std::max(0, (2 - c) / 2);
  }
  out.chi = chi;
  out.genus = genus_ok ? total_genus : -1;
  return out;
}

SurfaceMesh excise_and_cap(const SurfaceMesh& mesh) {
  MeshDefects defects = find_defects(mesh);
  std::unordered_set<int> bad(defects.bad_vertices.begin(), defects.bad_vertices.end());
  for (const auto& e : defects.bad_edges) {
    bad.insert(e.first);
    bad.insert(e.second);
  }
  SurfaceMesh out;
  out.vertices = mesh.vertices;
  out.excised = true;
  for (const auto& tri : mesh.triangles) {
    if (bad.count(tri[0]) || bad.count(tri[1]) || bad.count(tri[2])) continue;
    out.triangles.push_back(tri);
  }

  // Boundary loops of the trimmed mesh, fan-capped at their centroids.
  std::unordered_map<std::uint64_t, int> boundary_count;
  std::unordered_map<std::uint64_t, std::array<int, 2>> directed;
  for (const auto& tri : out.triangles) {
    for (int e = 0; e < 3; ++e) {
      int a = tri[e], b = tri[(e + 1) % 3];
      std::uint64_t key = edge_key(a, b);
      boundary_count[key]++;
      directed[key] = {a, b};
    }
  }
  std::unordered_map<int, int> next_on_boundary;
  for (const auto& [key, cnt] : boundary_count) {
    if (cnt != 1) continue;
    auto [a, b] = directed[key];
    next_on_boundary[b] = a;  // reversed orientation closes the hole
  }
  std::unordered_set<int> used;
  for (const auto& [start, _] : next_on_boundary) {
    if (used.count(start)) continue;
    std::vector<int> loop;
    int cur = start;
    while (!used.count(cur) && next_on_boundary.count(cur)) {
      used.insert(cur);
      loop.push_back(cur);
      cur = next_on_boundary[cur];
    }
    if (loop.size() < 3 || cur != start) continue;
    Eigen::Vector4d centroid = Eigen::Vector4d::Zero();
    for (int v : loop) centroid += out.vertices[v];
    centroid.normalize();
    int cid = static_cast<int>(out.vertices.size());
    out.vertices.push_back(centroid);
    for (std::size_t i = 0; i < loop.size(); ++i) {
      out.triangles.push_back({loop[i], loop[(i + 1) % loop.size()], cid});
    }
  }
  return out;
}

void write_obj(const SurfaceMesh& mesh, const std::string& path, const Eigen::Vector4d& pole) {
  FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_obj: cannot open " + path);
  Eigen::Vector4d n = pole.normalized();
  // Orthonormal frame of the hyperplane orthogonal to the pole.
  Eigen::Matrix<double, 4, 3> frame;
  int col = 0;
  for (int i = 0; i < 4 && col < 3; ++i) {
    Eigen::Vector4d e = Eigen::Vector4d::Unit(i);
    e -= e.dot(n) * n;
    for (int j = 0; j < col; ++j) e -= e.dot(frame.col(j)) * frame.col(j);
    if (e.norm() > 1e-6) frame.col(col++) = e.normalized();
  }
  for (const auto& v : mesh.vertices) {
    double denom = 1.0 - v.dot(n);
    if (std::fabs(denom) < 1e-9) denom = denom < 0 ? -1e-9 : 1e-9;
    Eigen::Vector3d p = frame.transpose() * v / denom;
    std::fprintf(f, "v %.9g %.9g %.9g\n", p[0], p[1], p[2]);
  }
  for (const auto& t : mesh.triangles)
    std::fprintf(f, "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
  std::fclose(f);
}

void write_csv(const SurfaceMesh& mesh, const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_csv: cannot open " + path);
  std::fprintf(f, "x1,x2,x3,x4\n");
  for (const auto& v : mesh.vertices)
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g\n", v[0], v[1], v[2], v[3]);
  std::fprintf(f, "# triangles i,j,k\n");
  for (const auto& t : mesh.triangles) std::fprintf(f, "%d,%d,%d\n", t[0], t[1], t[2]);
  std::fclose(f);
}

}  // namespace s3fam
