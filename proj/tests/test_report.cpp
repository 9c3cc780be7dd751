// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "s3fam/report.hpp"
#include "s3fam/serialize.hpp"
#include "s3fam/scan.hpp"
#include "s3fam/suites.hpp"

using namespace s3fam;

TEST_CASE("config defaults, overrides, and file round trip") {
  RunConfig c = RunConfig::defaults();
  CHECK(c.tol("equivariance") == 1e-10);
  CHECK(c.grid("scan_params") == 1000);

  c.set_entry("seed", "123");
  c.set_entry("tol.equivariance", "1e-9");
  c.set_entry("grid.scan_params", "50");
  CHECK(c.seed == 123);
  CHECK(c.tol("equivariance") == 1e-9);
  CHECK(c.grid("scan_params") == 50);
  CHECK_THROWS_AS(c.set_entry("tol.nonsense", "1"), std::invalid_argument);
  CHECK_THROWS_AS(c.set_entry("frobnicate", "1"), std::invalid_argument);

  std::string path = "test_config.cfg";
  {
    std::ofstream out(path);
    out << c.to_text();
  }
  RunConfig d = RunConfig::from_file(path);
  CHECK(d.seed == c.seed);
  CHECK(d.tol("equivariance") == c.tol("equivariance"));
  CHECK(d.grid("scan_params") == c.grid("scan_params"));
  std::remove(path.c_str());
}

TEST_CASE("check report: FAIL iff measured exceeds tolerance") {
  CheckReport c;
  c.id = "x";
  c.measured = {2.0};
  c.tolerance = 1.0;
  c.status = c.measured[0] <= c.tolerance ? CheckStatus::kPass : CheckStatus::kFail;
  auto j = c.to_json();
  CHECK(j["status"] == "FAIL");
  CHECK(j["measured"][0] == 2.0);
}

TEST_CASE("strip_volatile removes timestamps and runtimes recursively") {
  nlohmann::ordered_json j = {
      {"timestamp", "now"},
      {"suites", {{{"runtime_ms", 3.0}, {"checks", {{{"runtime_ms", 1.0}, {"id", "a"}}}}}}},
  };
  auto s = strip_volatile(j);
  CHECK(!s.contains("timestamp"));
  CHECK(!s["suites"][0].contains("runtime_ms"));
  CHECK(!s["suites"][0]["checks"][0].contains("runtime_ms"));
  CHECK(s["suites"][0]["checks"][0]["id"] == "a");
}

TEST_CASE("suite reports are deterministic per seed and carry resolvable anchors") {
  RunConfig cfg = RunConfig::defaults();
  cfg.seed = 7;
  cfg.workers = 2;
  for (const std::string& name : {std::string("groups"), std::string("trigpoly")}) {
    SuiteReport r1 = run_suite(name, cfg);
    SuiteReport r2 = run_suite(name, cfg);
    CHECK(strip_volatile(r1.to_json()).dump() == strip_volatile(r2.to_json()).dump());
    for (const auto& c : r1.checks) {
      CHECK(c.anchor.rfind(name + "/", 0) == 0);
    }
  }
}

TEST_CASE("wire formats for polynomials, zero data, and parameters") {
  TrigPoly t = TrigPoly::make({0.5, 0.1, 1.0}, {0.0, 0.3, 1.2});
  auto j = to_json(t);
  CHECK(j["k"] == 2);
  CHECK(j["b"].size() == 3);
  CHECK(j["theta"].size() == 2);
  TrigPoly back = trigpoly_from_json(j);
  for (double a : {0.0, 1.0, 2.7}) CHECK(back.evaluate(a) == doctest::Approx(t.evaluate(a)));

  auto data = analyze_signs(companion_zeros(t), [&](double a) { return t.evaluate(a); });
  auto jd = to_json(data);
  CHECK(jd["zeros"].size() == data.multiset.zeros.size());
  CHECK(jd.contains("neg_midpoints"));

  FamilyParameter p{ProjParam::from({0, 0, 0, 0, 0, 1}), DiscParam::polar(0.5, 1.25)};
  auto jp = to_json(p);
  CHECK(jp["a"].size() == 6);
  FamilyParameter q = family_parameter_from_json(jp);
  CHECK(q.a.proj_distance(p.a) < 1e-15);
  CHECK(q.z.r == doctest::Approx(0.5));
}

TEST_CASE("scan records and summaries honor the bounds") {
  RunConfig cfg = RunConfig::defaults();
  cfg.seed = 11;
  cfg.workers = 2;
  auto records = run_scan(ScanRegion::kBoundary, 40, cfg);
  REQUIRE(records.size() == 40);
  ScanSummary s = summarize_scan(ScanRegion::kBoundary, records);
  CHECK(s.bound_violations == 0);
  CHECK(s.solver_failures == 0);
  CHECK(s.genus_max <= 1);
  for (const auto& rec : records) {
    if (rec.branch == "implicit") CHECK(rec.zero_count <= 4);
  }
  // Determinism of the draw.
  auto again = run_scan(ScanRegion::kBoundary, 40, cfg);
  for (int i = 0; i < 40; ++i) {
    CHECK(records[i].genus == again[i].genus);
    CHECK(records[i].a == again[i].a);
  }

  std::string path = "test_scan.jsonl";
  write_scan_jsonl(records, s, path);
  std::ifstream in(path);
  int lines = 0;
  std::string line;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 41);
  std::remove(path.c_str());
}
