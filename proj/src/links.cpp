// SPDX-License-Identifier: Apache-2.0
#include <Eigen/Geometry>

#include "s3fam/links.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "s3fam/chart.hpp"

namespace s3fam {

namespace {

void push_point(PolylineLoop& loop, const Eigen::Vector4d& p) {
  if (!loop.points.empty() && (loop.points.back() - p).norm() < 1e-12) return;
  loop.points.push_back(p);
}

void close_loop(PolylineLoop& loop) {
  while (loop.points.size() > 1 &&
         (loop.points.back() - loop.points.front()).norm() < 1e-12) {
    loop.points.pop_back();
  }
}

// Chord {x0 + t*dir : |x0 + t*dir| <= 1} at angle alpha, as points on S^3.
// dir is (1,1) or (1,-1); returns n_subdiv+1 points from t- to t+.
std::vector<Eigen::Vector4d> chord_points(const Eigen::Vector2d& x0, bool plus_label,
                                          double alpha, int n_subdiv) {
  Eigen::Vector2d dir(1.0, plus_label ? 1.0 : -1.0);
  // |x0 + t dir|^2 = 1: 2 t^2 + 2 (x0.dir) t + |x0|^2 - 1 = 0
  double b = x0.dot(dir), c = x0.squaredNorm() - 1.0;
  double disc = b * b - 2.0 * c;
  double t_minus = (-b - std::sqrt(disc)) / 2.0;
  double t_plus = (-b + std::sqrt(disc)) / 2.0;
  std::vector<Eigen::Vector4d> out;
  out.reserve(n_subdiv + 1);
  double ca = std::cos(alpha), sa = std::sin(alpha);
  for (int i = 0; i <= n_subdiv; ++i) {
    double t = t_minus + (t_plus - t_minus) * i / n_subdiv;
    Eigen::Vector2d x = x0 + t * dir;
    double s2 = 1.0 - x.squaredNorm();
    double sg = s2 > 0.0 ? std::sqrt(s2) : 0.0;
    out.push_back({x[0], x[1], sg * ca, sg * sa});
  }
  return out;
}

// Arc on the great circle C from angle phi_a to phi_b, the shorter way
// (counterclockwise on a tie). Excludes both endpoints.
std::vector<Eigen::Vector4d> boundary_arc(double phi_a, double phi_b, int n_subdiv) {
  double d = wrap_angle(phi_b - phi_a);
  if (d > kPi + 1e-12) d -= kTwoPi;  // go the short way (negative direction)
  std::vector<Eigen::Vector4d> out;
  if (std::fabs(d) < 1e-12) return out;
  int n = std::max(1, static_cast<int>(std::ceil(std::fabs(d) / (kTwoPi / n_subdiv))));
  for (int i = 1; i < n; ++i) {
    double phi = phi_a + d * i / n;
    out.push_back({std::cos(phi), std::sin(phi), 0.0, 0.0});
  }
  return out;
}

// One label's loop: two clipped chords joined by boundary arcs.
PolylineLoop label_loop(const Eigen::Vector2d& x0a, const Eigen::Vector2d& x0b,
                        bool plus_label, double alpha_a, double alpha_b, int n_subdiv) {
  auto chord_a = chord_points(x0a, plus_label, alpha_a, n_subdiv);
  auto chord_b = chord_points(x0b, plus_label, alpha_b, n_subdiv);
  auto phi = [](const Eigen::Vector4d& p) { return std::atan2(p[1], p[0]); };

  PolylineLoop loop;
  for (const auto& p : chord_a) push_point(loop, p);
  for (const auto& p : boundary_arc(phi(chord_a.back()), phi(chord_b.back()), n_subdiv))
    push_point(loop, p);
  for (auto it = chord_b.rbegin(); it != chord_b.rend(); ++it) push_point(loop, *it);
  for (const auto& p : boundary_arc(phi(chord_b.front()), phi(chord_a.front()), n_subdiv))
    push_point(loop, p);
  close_loop(loop);
  return loop;
}

// Signed solid angle of the spherical triangle (a, b, c).
double triangle_solid_angle(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                            const Eigen::Vector3d& c) {
  double la = a.norm(), lb = b.norm(), lc = c.norm();
  double num = a.dot(b.cross(c));
  double den = la * lb * lc + a.dot(b) * lc + b.dot(c) * la + c.dot(a) * lb;
  return 2.0 * std::atan2(num, den);
}

double segment_distance(const Eigen::Vector3d& p1, const Eigen::Vector3d& p2,
                        const Eigen::Vector3d& q1, const Eigen::Vector3d& q2) {
  // Standard closest-approach of two segments.
  Eigen::Vector3d d1 = p2 - p1, d2 = q2 - q1, r = p1 - q1;
  double a = d1.squaredNorm(), e = d2.squaredNorm(), f = d2.dot(r);
  double s = 0, t = 0;
  if (a <= 1e-30 && e <= 1e-30) return r.norm();
  if (a <= 1e-30) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    double c = d1.dot(r);
    if (e <= 1e-30) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      double b = d1.dot(d2), denom = a * e - b * b;
      if (denom > 1e-30) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
      t = (b * s + f) / e;
      if (t < 0) {
        t = 0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1) {
        t = 1;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return (p1 + s * d1 - (q1 + t * d2)).norm();
}

std::vector<Eigen::Vector3d> stereographic(const PolylineLoop& loop,
                                           const Eigen::Vector4d& pole) {
  Eigen::Vector4d n = pole.normalized();
  Eigen::Matrix<double, 4, 3> frame;
  int col = 0;
  for (int i = 0; i < 4 && col < 3; ++i) {
    Eigen::Vector4d e = Eigen::Vector4d::Unit(i);
    e -= e.dot(n) * n;
    for (int j = 0; j < col; ++j) e -= e.dot(frame.col(j)) * frame.col(j);
    if (e.norm() > 1e-6) frame.col(col++) = e.normalized();
  }
  std::vector<Eigen::Vector3d> out;
  out.reserve(loop.points.size());
  for (const auto& p : loop.points) out.push_back(frame.transpose() * p / (1.0 - p.dot(n)));
  return out;
}

}  // namespace

PolylineLoop standard_hopf_plus(int n_points) {
  PolylineLoop loop;
  for (int i = 0; i < n_points; ++i) {
    double t = i * kTwoPi / n_points;
    loop.points.push_back({std::cos(t), std::sin(t), 0.0, 0.0});
  }
  return loop;
}

PolylineLoop standard_hopf_minus(int n_points) {
  PolylineLoop loop;
  for (int i = 0; i < n_points; ++i) {
    double t = i * kTwoPi / n_points;
    loop.points.push_back({0.0, 0.0, std::cos(t), std::sin(t)});
  }
  return loop;
}

std::pair<PolylineLoop, PolylineLoop> hopf_link_pl(const Config4& c, int n_subdiv) {
  Eigen::Vector2d origin(0.0, 0.0);
  PolylineLoop plus =
      label_loop(origin, origin, true, c.mu_plus[0], c.mu_plus[1], n_subdiv);
  PolylineLoop minus =
      label_loop(origin, origin, false, c.mu_minus[0], c.mu_minus[1], n_subdiv);
  return {plus, minus};
}

std::pair<PolylineLoop, PolylineLoop> upsilon_link(const FamilyField& field,
                                                   const UpsilonOptions& options) {
  SmoothZeroOptions zo;
  RestrictedFunction rf = f_az(field, zo);
  Config4 c = config_from_function(rf.zeros);

  auto offset = [&](double alpha) -> Eigen::Vector2d {
    return options.homotopy_s * critical_point_at(field, alpha);
  };
  PolylineLoop plus = label_loop(offset(c.mu_plus[0]), offset(c.mu_plus[1]), true,
                                 c.mu_plus[0], c.mu_plus[1], options.n_subdiv);
  PolylineLoop minus = label_loop(offset(c.mu_minus[0]), offset(c.mu_minus[1]), false,
                                  c.mu_minus[0], c.mu_minus[1], options.n_subdiv);

  if (options.check_signs) {
    auto worst_sign = [&](const PolylineLoop& loop, double sign) {
      double worst = 1e300;
      for (std::size_t i = 0; i < loop.points.size(); ++i) {
        const Eigen::Vector4d& a = loop.points[i];
        const Eigen::Vector4d& b = loop.points[(i + 1) % loop.points.size()];
        Eigen::Vector4d mid = (0.5 * (a + b)).normalized();
        worst = std::min(worst, sign * field.evaluate_r4(a));
        worst = std::min(worst, sign * field.evaluate_r4(mid));
      }
      return worst;
    };
    if (worst_sign(plus, +1.0) <= 0.0)
      throw SignViolation("upsilon_link: beta+ leaves {F > 0}");
    if (worst_sign(minus, -1.0) <= 0.0)
      throw SignViolation("upsilon_link: beta- leaves {F < 0}");
  }
  return {plus, minus};
}

LinkingResult linking_number(const PolylineLoop& l1, const PolylineLoop& l2,
                             double min_separation) {
  if (l1.points.size() < 3 || l2.points.size() < 3)
    throw std::invalid_argument("linking_number: degenerate loop");

  // Pole selection: the candidate axis direction furthest from both loops.
  Eigen::Vector4d pole = Eigen::Vector4d::Unit(3);
  double best = -1.0;
  for (int i = 0; i < 4; ++i) {
    for (double sign : {1.0, -1.0}) {
      for (int j = i; j < 4; ++j) {
        for (double sj : {1.0, -1.0}) {
          Eigen::Vector4d cand = sign * Eigen::Vector4d::Unit(i);
          if (j != i) cand = (cand + sj * Eigen::Vector4d::Unit(j)).normalized();
          double dist = 1e300;
          for (const auto& p : l1.points) dist = std::min(dist, (p - cand).norm());
          for (const auto& p : l2.points) dist = std::min(dist, (p - cand).norm());
          if (dist > best) {
            best = dist;
            pole = cand;
          }
        }
      }
    }
  }
  if (best < 1e-3)
    throw std::invalid_argument("linking_number: no stereographic pole clears the loops");

  std::vector<Eigen::Vector3d> a = stereographic(l1, pole);
  std::vector<Eigen::Vector3d> b = stereographic(l2, pole);

  double min_dist = 1e300;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& p1 = a[i];
    const auto& p2 = a[(i + 1) % a.size()];
    for (std::size_t j = 0; j < b.size(); ++j) {
      min_dist = std::min(min_dist, segment_distance(p1, p2, b[j], b[(j + 1) % b.size()]));
    }
  }
  if (min_dist < min_separation)
    throw std::invalid_argument("linking_number: loops are not separated");

  double omega = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Eigen::Vector3d& a1 = a[i];
    const Eigen::Vector3d& a2 = a[(i + 1) % a.size()];
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Eigen::Vector3d& b1 = b[j];
      const Eigen::Vector3d& b2 = b[(j + 1) % b.size()];
      // Gauss-map image of the segment pair: a spherical quadrilateral.
      Eigen::Vector3d r00 = a1 - b1, r10 = a2 - b1, r11 = a2 - b2, r01 = a1 - b2;
      omega += triangle_solid_angle(r00, r10, r11) + triangle_solid_angle(r00, r11, r01);
    }
  }
  LinkingResult out;
  out.raw = omega / (4.0 * kPi);
  out.value = static_cast<int>(std::lround(out.raw));
  if (std::fabs(out.raw - out.value) >= 0.05)
    throw RefineNeeded("linking_number: raw value " + std::to_string(out.raw) +
                       " is not close to an integer; refine the subdivision");
  return out;
}

void write_loops_csv(const std::vector<PolylineLoop>& loops, const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_loops_csv: cannot open " + path);
  std::fprintf(f, "loop,x1,x2,x3,x4\n");
  for (std::size_t k = 0; k < loops.size(); ++k)
    for (const auto& p : loops[k].points)
      std::fprintf(f, "%zu,%.17g,%.17g,%.17g,%.17g\n", k, p[0], p[1], p[2], p[3]);
  std::fclose(f);
}

void write_loops_obj(const std::vector<PolylineLoop>& loops, const std::string& path,
                     const Eigen::Vector4d& pole) {
  FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_loops_obj: cannot open " + path);
  int base = 1;
  for (const auto& loop : loops) {
    auto pts = stereographic(loop, pole);
    for (const auto& p : pts) std::fprintf(f, "v %.9g %.9g %.9g\n", p[0], p[1], p[2]);
    std::fprintf(f, "l");
    for (std::size_t i = 0; i < pts.size(); ++i) std::fprintf(f, " %d", base + static_cast<int>(i));
    std::fprintf(f, " %d\n", base);
    base += static_cast<int>(pts.size());
  }
  std::fclose(f);
}

}  // namespace s3fam
