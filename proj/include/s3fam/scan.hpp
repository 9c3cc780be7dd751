// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "s3fam/family.hpp"
#include "s3fam/report.hpp"

namespace s3fam {

enum class ScanRegion { kBoundary, kInterior, kRhoZero };

ScanRegion scan_region_from_name(const std::string& name);

/// Deterministic parameter draw for a scan slot: near-singular members (with
/// the bump active) for boundary/interior scans, generic members with a
/// vanishing bump for the rho-zero scan.
FamilyParameter scan_parameter(ScanRegion region, std::uint64_t master_seed,
                               std::uint64_t index, double delta0);

/// A boundary parameter tuned to have exactly 4 simple zeros (used by the
/// link and proximity checks); drawn from the same stream family.
FamilyParameter four_zero_boundary_parameter(std::uint64_t master_seed, std::uint64_t index,
                                             double delta0);

struct ScanRecord {
  int index = 0;
  Vector6d a = Vector6d::Zero();
  double r = 0.0;
  double theta = 0.0;
  std::string branch;
  int genus = -1;
  int zero_count = -1;
  bool unresolved = false;
  std::string error;

  nlohmann::ordered_json to_json() const;
};

struct ScanSummary {
  ScanRegion region = ScanRegion::kBoundary;
  int count = 0;
  int solver_failures = 0;
  int genus_max = -1;
  int zero_count_max = -1;
  int bound_violations = 0;  // genus/zero-count bounds of the region

  nlohmann::ordered_json to_json() const;
};

/// Runs a genus/zero scan over `n` parameters (worker pool sized by
/// config.workers; records ordered by index). Individual solver failures are
/// recorded, not fatal.
std::vector<ScanRecord> run_scan(ScanRegion region, int n, const RunConfig& config);

ScanSummary summarize_scan(ScanRegion region, const std::vector<ScanRecord>& records);

/// JSON-lines output: one record per line followed by a summary line.
void write_scan_jsonl(const std::vector<ScanRecord>& records, const ScanSummary& summary,
                      const std::string& path);

}  // namespace s3fam
