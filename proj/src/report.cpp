// SPDX-License-Identifier: Apache-2.0
#include "s3fam/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace s3fam {

RunConfig RunConfig::defaults() {
  RunConfig c;
  c.tolerances = {
      {"closure", 1e-9},
      {"relation", 1e-12},
      {"equivariance", 1e-10},
      {"rho_symmetry", 1e-12},
      {"zero_sum", 1e-8},
      {"zminus_proximity", 1e-3},
      {"smooth_match", 1e-7},
      {"witness_residual", 1e-10},
      {"sigma_min", 1e-3},
      {"nonvanish", 1e-3},
      {"holomorphy", 1e-7},
      {"link_round", 0.05},
      {"mu_sum", 1e-9},
  };
  c.grids = {
      {"equivariance_samples", 1000},
      {"trigpoly_samples", 1000},
      {"constructed_polys", 200},
      {"scan_params", 1000},
      {"regression_params", 40},
      {"mesh_resolution", 256},
      {"alpha_grid", 4096},
      {"link_params", 100},
      {"witness_samples", 100},
      {"link_subdiv", 64},
  };
  return c;
}

double RunConfig::tol(const std::string& name) const {
  auto it = tolerances.find(name);
  if (it == tolerances.end()) throw std::invalid_argument("unknown tolerance: " + name);
  return it->second;
}

int RunConfig::grid(const std::string& name) const {
  auto it = grids.find(name);
  if (it == grids.end()) throw std::invalid_argument("unknown grid size: " + name);
  return it->second;
}

void RunConfig::set_entry(const std::string& key, const std::string& value) {
  auto starts_with = [](const std::string& s, const std::string& p) {
    return s.rfind(p, 0) == 0;
  };
  if (key == "seed") {
    seed = std::stoull(value);
  } else if (key == "delta0") {
    delta0 = std::stod(value);
  } else if (key == "mesh_delta0") {
    mesh_delta0 = std::stod(value);
  } else if (key == "workers") {
    workers = static_cast<unsigned>(std::stoul(value));
  } else if (key == "out") {
    out_path = value;
  } else if (starts_with(key, "tol.")) {
    std::string name = key.substr(4);
    if (!tolerances.count(name)) throw std::invalid_argument("unknown tolerance: " + name);
    tolerances[name] = std::stod(value);
  } else if (starts_with(key, "grid.")) {
    std::string name = key.substr(5);
    if (!grids.count(name)) throw std::invalid_argument("unknown grid size: " + name);
    grids[name] = std::stoi(value);
  } else {
    throw std::invalid_argument("unknown configuration key: " + key);
  }
}

RunConfig RunConfig::from_file(const std::string& path) {
  RunConfig c = defaults();
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed;
    for (char ch : line) {
      if (ch == '#') break;
      trimmed.push_back(ch);
    }
    auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      bool blank = trimmed.find_first_not_of(" \t\r") == std::string::npos;
      if (!blank)
        throw std::runtime_error("config parse error at line " + std::to_string(lineno));
      continue;
    }
    auto strip = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    c.set_entry(strip(trimmed.substr(0, eq)), strip(trimmed.substr(eq + 1)));
  }
  return c;
}

std::string RunConfig::to_text() const {
  std::ostringstream os;
  os.precision(17);
  os << "seed = " << seed << "\n";
  os << "delta0 = " << delta0 << "\n";
  os << "mesh_delta0 = " << mesh_delta0 << "\n";
  os << "workers = " << workers << "\n";
  if (!out_path.empty()) os << "out = " << out_path << "\n";
  for (const auto& [k, v] : tolerances) os << "tol." << k << " = " << v << "\n";
  for (const auto& [k, v] : grids) os << "grid." << k << " = " << v << "\n";
  return os.str();
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["delta0"] = delta0;
  j["mesh_delta0"] = mesh_delta0;
  j["workers"] = workers;
  j["tolerances"] = tolerances;
  j["grids"] = grids;
  return j;
}

namespace {
const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    default: return "SKIP";
  }
}
}  // namespace

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["anchor"] = anchor;
  j["status"] = status_name(status);
  j["measured"] = measured;
  j["tolerance"] = tolerance;
  j["runtime_ms"] = runtime_ms;
  if (!note.empty()) j["note"] = note;
  return j;
}

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::kFail) return false;
  return true;
}

nlohmann::ordered_json SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["status"] = all_pass() ? "PASS" : "FAIL";
  j["runtime_ms"] = runtime_ms;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) j["checks"].push_back(c.to_json());
  return j;
}

bool ReportDocument::all_pass() const {
  for (const auto& s : suites)
    if (!s.all_pass()) return false;
  return true;
}

nlohmann::ordered_json ReportDocument::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = schema;
  j["timestamp"] = timestamp;
  j["status"] = all_pass() ? "PASS" : "FAIL";
  j["config"] = config.to_json();
  j["suites"] = nlohmann::ordered_json::array();
  for (const auto& s : suites) j["suites"].push_back(s.to_json());
  return j;
}

void ReportDocument::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report: " + path);
  out << to_json().dump(2) << "\n";
}

std::string current_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[64];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

nlohmann::ordered_json strip_volatile(const nlohmann::ordered_json& doc) {
  nlohmann::ordered_json out = doc;
  if (out.is_object()) {
    out.erase("timestamp");
    out.erase("runtime_ms");
    for (auto& [key, value] : out.items()) value = strip_volatile(value);
  } else if (out.is_array()) {
    for (auto& value : out) value = strip_volatile(value);
  }
  return out;
}

}  // namespace s3fam
