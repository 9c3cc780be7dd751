// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace s3fam {

/// Run configuration: seed, tolerances, grid sizes, output. Two runs with the
/// same configuration produce byte-identical reports apart from the
/// timestamp and per-check runtimes, which live in dedicated fields.
struct RunConfig {
  std::uint64_t seed = 7;
  double delta0 = 1e-4;       // bump amplitude for zero-census work
  double mesh_delta0 = 2e-3;  // bump amplitude for mesh-facing runs
  unsigned workers = 0;       // 0 = hardware concurrency
  std::string out_path;
  std::map<std::string, double> tolerances;
  std::map<std::string, int> grids;

  static RunConfig defaults();
  static RunConfig from_file(const std::string& path);
  void set_entry(const std::string& key, const std::string& value);

  double tol(const std::string& name) const;
  int grid(const std::string& name) const;

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

enum class CheckStatus { kPass, kFail, kSkip };

/// One verification check. The first entry of `measured` is compared against
/// `tolerance`: FAIL iff it exceeds the tolerance. Further entries carry
/// auxiliary values (raw minima, counts).
struct CheckReport {
  std::string id;
  std::string anchor;  // "<suite>/<check-id>"
  CheckStatus status = CheckStatus::kPass;
  std::vector<double> measured;
  double tolerance = 0.0;
  double runtime_ms = 0.0;
  std::string note;

  nlohmann::ordered_json to_json() const;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckReport> checks;
  double runtime_ms = 0.0;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
};

struct ReportDocument {
  int schema = 1;
  std::string timestamp;
  RunConfig config;
  std::vector<SuiteReport> suites;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
  void write(const std::string& path) const;
};

std::string current_timestamp();

/// Strips the volatile fields (timestamp, runtime_ms) for comparisons.
nlohmann::ordered_json strip_volatile(const nlohmann::ordered_json& doc);

}  // namespace s3fam
