// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVEGROUP_CORE_VERIFICATION_HPP
#define WAVEGROUP_CORE_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace wavegroup::verification
{

struct CheckResult
{
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct SuiteResult
{
  std::string name;
  std::vector<CheckResult> checks;

  bool passed() const;
  double max_residual() const;
};

struct Options
{
  std::uint64_t seed = 1;
  // Test hook: added to every computed residual, so any value above the tolerances makes the
  // report fail. Zero in normal runs.
  double perturbation = 0.0;
};

// Runs the invariant suites of every module (spectral, yosida, kernel, group, tpbvp,
// domains, action) on small randomized instances drawn from the seed.
std::vector<SuiteResult> run_all(const Options &options);

bool all_passed(const std::vector<SuiteResult> &suites);

// {"seed", "passed", "suites": [{"name", "passed", "max_residual", "checks": [...]}]}.
nlohmann::json report_json(const Options &options, const std::vector<SuiteResult> &suites);

}  // namespace wavegroup::verification

#endif  // WAVEGROUP_CORE_VERIFICATION_HPP
