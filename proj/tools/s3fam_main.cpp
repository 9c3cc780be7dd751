// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: named verification suites, parameter scans,
// level-set extraction and link construction, with machine-readable reports.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "s3fam/config4.hpp"
#include "s3fam/family.hpp"
#include "s3fam/level_checks.hpp"
#include "s3fam/links.hpp"
#include "s3fam/report.hpp"
#include "s3fam/scan.hpp"
#include "s3fam/suites.hpp"
#include "s3fam/witness.hpp"

using namespace s3fam;

namespace {

FamilyParameter parse_parameter(const std::vector<double>& a, double r, double theta) {
  if (a.size() != 6) throw CLI::ValidationError("--a needs exactly 6 values");
  Vector6d v;
  for (int i = 0; i < 6; ++i) v[i] = a[i];
  return {ProjParam::from(v), DiscParam::polar(r, theta)};
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  ReportDocument doc;
  doc.timestamp = current_timestamp();
  doc.config = cfg;
  if (suite == "all") {
    doc = run_all_suites(cfg);
  } else {
    doc.suites.push_back(run_suite(suite, cfg));
  }
  nlohmann::ordered_json j = doc.to_json();
  if (cfg.out_path.empty()) {
    std::cout << j.dump(2) << std::endl;
  } else {
    doc.write(cfg.out_path);
  }
  for (const auto& s : doc.suites) {
    for (const auto& c : s.checks) {
      const char* status = c.status == CheckStatus::kPass
                               ? "PASS"
                               : (c.status == CheckStatus::kFail ? "FAIL" : "SKIP");
      std::fprintf(stderr, "%-4s %s\n", status, c.anchor.c_str());
    }
  }
  return doc.all_pass() ? 0 : 1;
}

int cmd_scan(const RunConfig& cfg, const std::string& what, const std::string& region_name,
             int count) {
  ScanRegion region = scan_region_from_name(region_name);
  RunConfig local = cfg;
  if (count > 0) local.grids["scan_params"] = count;
  int n = local.grid("scan_params");
  auto records = run_scan(region, n, local);
  ScanSummary summary = summarize_scan(region, records);
  if (what == "zeros") {
    // Same records; the zero-count field is the payload either way.
  }
  if (cfg.out_path.empty()) {
    for (const auto& rec : records) std::cout << rec.to_json().dump() << "\n";
    std::cout << summary.to_json().dump() << std::endl;
  } else {
    write_scan_jsonl(records, summary, cfg.out_path);
  }
  return summary.bound_violations == 0 ? 0 : 1;
}

int cmd_extract(const RunConfig& cfg, const FamilyParameter& param, int resolution,
                const std::string& out_prefix) {
  if (std::fabs(param.a[5]) < 1e-12) {
    Phi5Class cls = classify_phi5(param.a);
    if (cls.kind == Phi5Class::kEmpty) {
      std::fprintf(stderr, "EMPTY_LEVELSET: the linear member misses the sphere\n");
      return 1;
    }
  }
  FamilyOptions fo;
  fo.delta0 = cfg.mesh_delta0;
  SurfaceMesh mesh;
  try {
    mesh = extract_member(param, resolution, fo, cfg.workers);
  } catch (const LevelsetSingular& e) {
    std::fprintf(stderr, "DEFECT_EXCEEDED: %s\n", e.what());
    return 1;
  }
  if (mesh.triangles.empty()) {
    std::fprintf(stderr, "EMPTY_LEVELSET: no zero crossings at resolution %d\n", resolution);
    return 1;
  }
  MeshSummary summary = analyze_mesh(mesh);
  write_obj(mesh, out_prefix + ".obj");
  write_csv(mesh, out_prefix + ".csv");
  nlohmann::ordered_json j;
  j["vertices"] = mesh.vertices.size();
  j["triangles"] = mesh.triangles.size();
  j["chi"] = summary.chi;
  j["components"] = summary.components;
  j["genus"] = summary.genus;
  j["watertight"] = summary.watertight;
  std::cout << j.dump(2) << std::endl;
  return 0;
}

int cmd_link(const RunConfig& cfg, const FamilyParameter& param, const std::string& out_prefix) {
  FamilyOptions fo;
  fo.delta0 = cfg.delta0;
  FamilyField field(param, fo);
  UpsilonOptions uo;
  uo.n_subdiv = cfg.grid("link_subdiv");
  auto [plus, minus] = upsilon_link(field, uo);
  auto lk = linking_number(plus, minus);
  if (!out_prefix.empty()) {
    write_loops_csv({plus, minus}, out_prefix + ".csv");
    write_loops_obj({plus, minus}, out_prefix + ".obj");
  }
  nlohmann::ordered_json j;
  j["linking_raw"] = lk.raw;
  j["linking"] = lk.value;
  j["beta_plus_points"] = plus.points.size();
  j["beta_minus_points"] = minus.points.size();
  std::cout << j.dump(2) << std::endl;
  return std::abs(lk.value) == 1 ? 0 : 1;
}

int cmd_enumerate(const RunConfig& cfg) {
  auto pts = enumerate_z_alpha3();
  FILE* f = cfg.out_path.empty() ? stdout : std::fopen(cfg.out_path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open " + cfg.out_path);
  std::fprintf(f, "theta,l,m,z1_re,z1_im,z2_re,z2_im\n");
  for (const auto& p : pts) {
    std::fprintf(f, "%.17g,%d,%d,%.17g,%.17g,%.17g,%.17g\n", p.theta, p.l, p.m, p.z1.real(),
                 p.z1.imag(), p.z2.real(), p.z2.imag());
  }
  if (f != stdout) std::fclose(f);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for implicit surface families on the 3-sphere"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg = RunConfig::defaults();
  std::string config_file;
  app.add_option("--config", config_file, "flat key=value configuration file")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", cfg.seed, "master RNG seed");
  app.add_option("--out", cfg.out_path, "output path (reports, scans, CSV)");
  app.add_option("--workers", cfg.workers, "worker threads (0 = hardware)");
  app.add_option("--delta0", cfg.delta0, "bump amplitude for zero-census work");
  app.add_option("--mesh-delta0", cfg.mesh_delta0, "bump amplitude for mesh-facing runs");
  for (auto& [name, value] : cfg.tolerances)
    app.add_option("--tol." + name, value, "tolerance override");
  for (auto& [name, value] : cfg.grids)
    app.add_option("--grid." + name, value, "grid size override");

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite = "all";
  std::vector<std::string> valid = suite_names();
  valid.push_back("all");
  verify->add_option("suite", suite, "suite name")->check(CLI::IsMember(valid));

  auto* scan = app.add_subcommand("scan", "stream genus/zero records over a parameter draw");
  std::string scan_what = "genus", scan_region = "boundary";
  int scan_count = 0;
  scan->add_option("what", scan_what, "genus or zeros")
      ->check(CLI::IsMember({"genus", "zeros"}));
  scan->add_option("--region", scan_region, "boundary | interior | rho0")
      ->check(CLI::IsMember({"boundary", "interior", "rho0"}));
  scan->add_option("--n", scan_count, "number of parameters");

  auto* extract = app.add_subcommand("extract", "extract a family member as a mesh");
  std::vector<double> a_coords = {0, 0, 0, 0, 0, 1};
  double r = 0.0, theta = 0.0;
  int resolution = 128;
  std::string prefix = "member";
  extract->add_option("--a", a_coords, "six projective coordinates")->expected(6);
  extract->add_option("--r", r, "disc radius");
  extract->add_option("--theta", theta, "disc angle");
  extract->add_option("--res", resolution, "cells per facet axis");
  extract->add_option("--prefix", prefix, "output prefix (.obj/.csv)");

  auto* link = app.add_subcommand("link", "build the link of a boundary member");
  std::vector<double> la = {0, 0, 0, 0, 0, 1};
  double ltheta = 0.0;
  std::string lprefix;
  link->add_option("--a", la, "six projective coordinates")->expected(6);
  link->add_option("--theta", ltheta, "boundary angle");
  link->add_option("--prefix", lprefix, "output prefix (.csv/.obj)");

  app.add_subcommand("enumerate", "write the 336 witness points as CSV");
  app.add_subcommand("print-config", "print the effective configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // configuration errors exit 2
  }

  try {
    if (!config_file.empty()) {
      RunConfig file_cfg = RunConfig::from_file(config_file);
      // Command-line values win over the file: re-parse on top.
      std::swap(cfg.tolerances, file_cfg.tolerances);
      std::swap(cfg.grids, file_cfg.grids);
      cfg.seed = file_cfg.seed;
      cfg.delta0 = file_cfg.delta0;
      cfg.mesh_delta0 = file_cfg.mesh_delta0;
      for (const auto* opt : app.get_options()) {
        if (opt->count() == 0) continue;
        std::string name = opt->get_name();
        if (name.rfind("--tol.", 0) == 0)
          cfg.tolerances[name.substr(6)] = std::stod(opt->results().front());
        else if (name.rfind("--grid.", 0) == 0)
          cfg.grids[name.substr(7)] = std::stoi(opt->results().front());
        else if (name == "--seed")
          cfg.seed = std::stoull(opt->results().front());
        else if (name == "--delta0")
          cfg.delta0 = std::stod(opt->results().front());
        else if (name == "--mesh-delta0")
          cfg.mesh_delta0 = std::stod(opt->results().front());
        else if (name == "--workers")
          cfg.workers = static_cast<unsigned>(std::stoul(opt->results().front()));
        else if (name == "--out")
          cfg.out_path = opt->results().front();
      }
    }

    if (app.got_subcommand("verify")) return cmd_verify(cfg, suite);
    if (app.got_subcommand("scan")) return cmd_scan(cfg, scan_what, scan_region, scan_count);
    if (app.got_subcommand("extract"))
      return cmd_extract(cfg, parse_parameter(a_coords, r, theta), resolution, prefix);
    if (app.got_subcommand("link"))
      return cmd_link(cfg, parse_parameter(la, 1.0, ltheta), lprefix);
    if (app.got_subcommand("enumerate")) return cmd_enumerate(cfg);
    if (app.got_subcommand("print-config")) {
      std::cout << cfg.to_text();
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
