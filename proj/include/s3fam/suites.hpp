// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "s3fam/report.hpp"

namespace s3fam {

/// The named verification suites behind `verify <suite>`.
std::vector<std::string> suite_names();

SuiteReport run_suite(const std::string& name, const RunConfig& config);

/// All suites, in the canonical order.
ReportDocument run_all_suites(const RunConfig& config);

}  // namespace s3fam
