// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "s3fam/config4.hpp"
#include "s3fam/family.hpp"

namespace s3fam {

/// Closed polyline on S^3; the segment from the last point back to the first
/// is implicit. Consecutive points are distinct.
struct PolylineLoop {
  std::vector<Eigen::Vector4d> points;
};

/// The standard Hopf link: beta+ = C = {(x1,x2,0,0)}, beta- = C-perp.
PolylineLoop standard_hopf_plus(int n_points = 64);
PolylineLoop standard_hopf_minus(int n_points = 64);

/// The piecewise-linear link of a labeled configuration: per label, the two
/// diagonal chords {(t,+-t, alpha)} through the chart, clipped to the disc
/// and closed up along the great circle C by the shorter boundary arcs.
std::pair<PolylineLoop, PolylineLoop> hopf_link_pl(const Config4& c, int n_subdiv = 64);

class SignViolation : public std::runtime_error {
 public:
  explicit SignViolation(const std::string& what) : std::runtime_error(what) {}
};

struct UpsilonOptions {
  int n_subdiv = 64;
  double homotopy_s = 1.0;  // chords offset by s * x_a(alpha)
  bool check_signs = true;
};

/// The link bounded by a boundary family member with 4 simple zeros: chords
/// through (the homotopy scaling of) the critical curve at the positive and
/// negative midpoints, bridged pairwise along C. Verifies beta+ in {F > 0}
/// and beta- in {F < 0} by sampling; throws SignViolation otherwise.
std::pair<PolylineLoop, PolylineLoop> upsilon_link(const FamilyField& field,
                                                   const UpsilonOptions& options = {});

class RefineNeeded : public std::runtime_error {
 public:
  explicit RefineNeeded(const std::string& what) : std::runtime_error(what) {}
};

struct LinkingResult {
  double raw = 0.0;
  int value = 0;
};

/// Gauss linking number of two disjoint loops on S^3: both are projected
/// stereographically from a pole far from the link, and the integral is the
/// exact per-segment-pair solid-angle sum. Throws std::invalid_argument when
/// the loops come closer than min_separation, RefineNeeded when the raw sum
/// is further than 0.05 from an integer.
LinkingResult linking_number(const PolylineLoop& l1, const PolylineLoop& l2,
                             double min_separation = 1e-6);

/// CSV export: one loop per block, columns x1..x4.
void write_loops_csv(const std::vector<PolylineLoop>& loops, const std::string& path);
/// OBJ export (line elements) of the stereographic projection.
void write_loops_obj(const std::vector<PolylineLoop>& loops, const std::string& path,
                     const Eigen::Vector4d& pole = {0, 0, 0, 1});

}  // namespace s3fam
