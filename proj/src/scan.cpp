// SPDX-License-Identifier: Apache-2.0
#include "s3fam/scan.hpp"

#include <fstream>

#include "s3fam/cutoffs.hpp"
#include "s3fam/parallel.hpp"
#include "s3fam/rng.hpp"

namespace s3fam {

ScanRegion scan_region_from_name(const std::string& name) {
  if (name == "boundary") return ScanRegion::kBoundary;
  if (name == "interior") return ScanRegion::kInterior;
  if (name == "rho0" || name == "rho-zero") return ScanRegion::kRhoZero;
  throw std::invalid_argument("unknown scan region: " + name);
}

FamilyParameter scan_parameter(ScanRegion region, std::uint64_t master_seed,
                               std::uint64_t index, double delta0) {
  Rng rng = Rng::stream(master_seed, index);
  if (region == ScanRegion::kRhoZero) {
    for (int attempt = 0; attempt < 256; ++attempt) {
      Vector6d raw = rng.unit_vector<6>();
      ProjParam a = ProjParam::from(raw);
      if (std::fabs(a[5]) < 1e-6) continue;  // keep the implicit branch
      if (rho_supported(a, delta0)) continue;
      return {a, DiscParam::polar(std::sqrt(rng.uniform(0.0, 1.0)), rng.angle())};
    }
    throw std::runtime_error("scan_parameter: no rho-zero draw found");
  }

  // Near-singular member: a = [a1 a2 + e0 : a1 : a2 : e3 : e4 : 1] with the
  // offsets inside the second cut-off's support.
  double s = rng.uniform(0.0, 0.7);
  double phi = rng.angle();
  double a1 = std::sqrt(s) * std::cos(phi), a2 = std::sqrt(s) * std::sin(phi);
  double ds = delta_bump(s, delta0);
  double lambda = 0.4 * rng.uniform(0.0, 1.0);
  double e0 = lambda * ds * rng.uniform(-1.0, 1.0);
  double dir = rng.angle();
  double mag = lambda * ds * rng.uniform(0.0, 1.0);
  Vector6d raw;
  raw << a1 * a2 + e0, a1, a2, mag * std::cos(dir), mag * std::sin(dir), 1.0;
  double r = (region == ScanRegion::kBoundary) ? 1.0 : std::sqrt(rng.uniform(0.0, 0.999));
  return {ProjParam::from(raw), DiscParam::polar(r, rng.angle())};
}

FamilyParameter four_zero_boundary_parameter(std::uint64_t master_seed, std::uint64_t index,
                                             double delta0) {
  Rng rng = Rng::stream(master_seed ^ 0xf0f0f0f0ULL, index);
  double s = rng.uniform(0.0, 0.5);
  double phi = rng.angle();
  double a1 = std::sqrt(s) * std::cos(phi), a2 = std::sqrt(s) * std::sin(phi);
  double ds = delta_bump(s, delta0);
  // Offsets well below the bump amplitude keep the degree-2 term dominant:
  // 4 simple zeros.
  double e0 = 0.15 * ds * rng.uniform(-1.0, 1.0);
  double dir = rng.angle();
  double mag = 0.15 * ds * rng.uniform(0.0, 1.0);
  Vector6d raw;
  raw << a1 * a2 + e0, a1, a2, mag * std::cos(dir), mag * std::sin(dir), 1.0;
  return {ProjParam::from(raw), DiscParam::polar(1.0, rng.angle())};
}

nlohmann::ordered_json ScanRecord::to_json() const {
  nlohmann::ordered_json j;
  j["index"] = index;
  j["a"] = {a[0], a[1], a[2], a[3], a[4], a[5]};
  j["r"] = r;
  j["theta"] = theta;
  j["branch"] = branch;
  j["genus"] = genus;
  j["zero_count"] = zero_count;
  if (unresolved) j["unresolved"] = true;
  if (!error.empty()) j["error"] = error;
  return j;
}

nlohmann::ordered_json ScanSummary::to_json() const {
  nlohmann::ordered_json j;
  const char* names[] = {"boundary", "interior", "rho0"};
  j["summary"] = {{"region", names[static_cast<int>(region)]},
                  {"count", count},
                  {"solver_failures", solver_failures},
                  {"genus_max", genus_max},
                  {"zero_count_max", zero_count_max},
                  {"bound_violations", bound_violations}};
  return j;
}

std::vector<ScanRecord> run_scan(ScanRegion region, int n, const RunConfig& config) {
  std::vector<ScanRecord> records(n);
  FamilyOptions fo;
  fo.delta0 = config.delta0;
  fo.alpha_grid = config.grid("alpha_grid");
  parallel_for(
      static_cast<std::size_t>(n), config.workers,
      [&](std::size_t i) {
        ScanRecord& rec = records[i];
        rec.index = static_cast<int>(i);
        try {
          FamilyParameter p = scan_parameter(region, config.seed, i, fo.delta0);
          rec.a = p.a.a;
          rec.r = p.z.r;
          rec.theta = p.z.theta;
          GenusRecord g = psi_genus(p, fo);
          rec.genus = g.genus;
          rec.zero_count = g.zero_count;
          rec.unresolved = g.unresolved;
          rec.branch = g.branch == GenusRecord::kImplicit
                           ? "implicit"
                           : (g.branch == GenusRecord::kRhoZero ? "rho0" : "phi5");
        } catch (const std::exception& e) {
          rec.error = e.what();
        }
      },
      1);
  return records;
}

ScanSummary summarize_scan(ScanRegion region, const std::vector<ScanRecord>& records) {
  ScanSummary s;
  s.region = region;
  s.count = static_cast<int>(records.size());
  int genus_bound = region == ScanRegion::kBoundary ? 1 : (region == ScanRegion::kInterior ? 2 : 0);
  int zero_bound = region == ScanRegion::kBoundary ? 4 : 6;
  for (const auto& rec : records) {
    if (!rec.error.empty()) {
      s.solver_failures++;
      continue;
    }
    s.genus_max = std::max(s.genus_max, rec.genus);
    s.zero_count_max = std::max(s.zero_count_max, rec.zero_count);
    if (rec.genus > genus_bound) s.bound_violations++;
    if (rec.branch == "implicit" && rec.zero_count > zero_bound) s.bound_violations++;
  }
  return s;
}

void write_scan_jsonl(const std::vector<ScanRecord>& records, const ScanSummary& summary,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scan output: " + path);
  for (const auto& rec : records) out << rec.to_json().dump() << "\n";
  out << summary.to_json().dump() << "\n";
}

}  // namespace s3fam
