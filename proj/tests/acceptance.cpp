// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one line per criterion, exit 1 on any failure.
// Usage: acceptance [path-to-cli]  (the CLI path enables the determinism
// criterion; it is skipped with a note when absent).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "s3fam/quadric.hpp"
#include "s3fam/report.hpp"
#include "s3fam/rng.hpp"
#include "s3fam/suites.hpp"

using namespace s3fam;

namespace {

struct CriterionResult {
  bool pass = true;
  double seconds = 0.0;
  std::string detail;
};

int g_failures = 0;

void print_line(int index, const std::string& title, const CriterionResult& r,
                double time_limit_s) {
  bool in_time = time_limit_s <= 0.0 || r.seconds < time_limit_s;
  bool ok = r.pass && in_time;
  if (!ok) ++g_failures;
  std::printf("%s criterion %d: %-42s [%6.1f s%s]%s%s\n", ok ? "PASS" : "FAIL", index,
              title.c_str(), r.seconds,
              time_limit_s > 0 ? ("/" + std::to_string(static_cast<int>(time_limit_s))).c_str()
                               : "",
              r.detail.empty() ? "" : "  -- ", r.detail.c_str());
  std::fflush(stdout);
}

// Collects failures of the given checks from a suite run.
CriterionResult from_suite(const SuiteReport& suite, const std::vector<std::string>& ids) {
  CriterionResult r;
  for (const auto& id : ids) {
    bool found = false;
    for (const auto& c : suite.checks) {
      if (c.id != id) continue;
      found = true;
      if (c.status == CheckStatus::kFail) {
        r.pass = false;
        char buf[160];
        if (c.measured.size() > 2) {
          // at-least checks record (shortfall, value, threshold)
          std::snprintf(buf, sizeof(buf), "%s value=%.6g threshold=%.3g; ", c.id.c_str(),
                        c.measured[1], c.measured[2]);
        } else {
          std::snprintf(buf, sizeof(buf), "%s measured=%.6g tol=%.3g; ", c.id.c_str(),
                        c.measured[0], c.tolerance);
        }
        r.detail += buf;
      }
    }
    if (!found) {
      r.pass = false;
      r.detail += id + " missing; ";
    }
  }
  return r;
}

template <class F>
CriterionResult timed(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r = fn();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path = argc > 1 ? argv[1] : "";
  RunConfig cfg = RunConfig::defaults();
  cfg.seed = 7;

  // 1. Group orders and relations.
  print_line(1, "group orders 24/48/96 and relations", timed([&] {
               SuiteReport s = run_suite("groups", cfg);
               return from_suite(s, {"closure-d24", "closure-q48", "closure-param-96",
                                     "d24-relations", "h-relations", "double-cover-kernel"});
             }),
             1.0);

  // 2. Equivariance of F and the rho symmetry.
  print_line(2, "equivariance residuals", timed([&] {
               SuiteReport s = run_suite("equivariance", cfg);
               return from_suite(s, {"f-equivariance-g1", "f-equivariance-g2",
                                     "rho-symmetry-g1", "rho-symmetry-g2"});
             }),
             10.0);

  // 3. Trigonometric polynomial invariants.
  print_line(3, "trig-poly zero invariants", timed([&] {
               SuiteReport s = run_suite("trigpoly", cfg);
               return from_suite(s, {"ord-le-2k-violations", "zero-sum-formula",
                                     "zminus-branch-formula", "z-equals-2zminus"});
             }),
             5.0);

  // 4. Genus spot values, scans, and the mesh regression grid.
  print_line(4, "genus bounds and mesh regression", timed([&] {
               SuiteReport s = run_suite("genus", cfg);
               return from_suite(
                   s, {"central-genus-2", "boundary-genus-1-all-8", "linear-branch-genus-0",
                       "boundary-scan-violations", "interior-scan-violations",
                       "rho-zero-scan-violations", "mesh-vs-zero-genus-mismatches",
                       "chi-identity-mismatches", "regression-solver-failures"});
             }),
             600.0);

  // 5 and 8 share the links suite; run it once and split the checks.
  SuiteReport links_report;
  CriterionResult links_time = timed([&] {
    links_report = run_suite("links", cfg);
    return CriterionResult{};
  });
  {
    CriterionResult r5 = from_suite(links_report, {"zminus-proximity"});
    r5.seconds = links_time.seconds;
    print_line(5, "Z-minus proximity to -theta", r5, 30.0);
  }

  // 6. Quadric critical point counts against the descent oracle.
  print_line(6, "quadric critical point counts", timed([&] {
               CriterionResult r;
               auto one = critical_count(QuadricCase::kSaddle, {0, 0, 0});
               auto three = critical_count(QuadricCase::kSaddle, {0, 0, 10});
               if (one.count() != 1 || three.count() != 3) {
                 r.pass = false;
                 r.detail += "closed-form counts wrong; ";
               }
               if (!s3fam_test::same_point_set(
                       three.points, s3fam_test::saddle_critical_oracle({0, 0, 10}, 12.0, 48),
                       1e-6)) {
                 r.pass = false;
                 r.detail += "saddle oracle mismatch; ";
               }
               Rng rng(cfg.seed + 60);
               for (int i = 0; i < 10000; ++i) {
                 Eigen::Vector3d b(rng.uniform(-20, 20), rng.uniform(-20, 20),
                                   rng.uniform(-20, 20));
                 if (critical_count(QuadricCase::kSaddle, b).count() > 9 ||
                     critical_count(QuadricCase::kHyperbolaCylinder, b).count() > 9) {
                   r.pass = false;
                   r.detail = "count exceeded 9; ";
                   break;
                 }
               }
               return r;
             }),
             30.0);

  // 7. Witness enumeration. The two epsilon-limited sub-checks fail by the
  // sharp margin sin(3 pi eps/7)/4 ~ 1.66e-4 < 1e-3; see the report note.
  print_line(7, "witness set: count, residuals, orbits", timed([&] {
               SuiteReport s = run_suite("witnesses", cfg);
               return from_suite(s, {"witness-count", "v-residual", "pairwise-distance",
                                     "nonvanish-w4", "nonvanish-w6", "v-gradient-sigma-min",
                                     "f-gradient-sigma-min", "orbits-under-order-48",
                                     "sign-table-v", "sign-table-f"});
             }),
             10.0);

  {
    CriterionResult r8 = from_suite(links_report,
                                    {"standard-hopf-linking", "upsilon-sign-violations",
                                     "linking-not-unit", "draw-failures", "mu-sum-identity"});
    r8.seconds = links_time.seconds;
    print_line(8, "links: sign test and unit linking", r8, 30.0);
  }

  // 9. Determinism of the CLI report.
  if (cli_path.empty()) {
    std::printf("SKIP criterion 9: determinism (no CLI path given)\n");
  } else {
    print_line(9, "verify all --seed 7 is deterministic", timed([&] {
                 CriterionResult r;
                 std::string out1 = "acceptance_run1.json", out2 = "acceptance_run2.json";
                 for (const std::string& out : {out1, out2}) {
                   std::string cmd = cli_path + " verify all --seed 7 --workers 2 --out " + out +
                                     " 2>/dev/null >/dev/null";
                   int rc = std::system(cmd.c_str());
                   // Exit 1 is expected: the witness suite carries the two
                   // epsilon-limited FAILs. Only exit 2 (config) or a crash
                   // breaks the criterion.
                   if (rc == -1 || WEXITSTATUS(rc) > 1) {
                     r.pass = false;
                     r.detail = "CLI run failed; ";
                     return r;
                   }
                 }
                 std::ifstream f1(out1), f2(out2);
                 nlohmann::ordered_json j1, j2;
                 f1 >> j1;
                 f2 >> j2;
                 if (strip_volatile(j1).dump() != strip_volatile(j2).dump()) {
                   r.pass = false;
                   r.detail = "reports differ beyond timestamps; ";
                 }
                 return r;
               }),
               0.0);
  }

  std::printf("%s: %d criterion failure(s)\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
