// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "core/verification.hpp"

namespace wavegroup::verification
{
namespace
{

TEST(Verification, DefaultRunPasses)
{
  const Options opts;
  const auto suites = run_all(opts);
  EXPECT_TRUE(all_passed(suites));
  std::set<std::string> names;
  for (const auto &s : suites)
  {
    names.insert(s.name);
    EXPECT_FALSE(s.checks.empty()) << s.name;
    for (const auto &c : s.checks)
    {
      EXPECT_TRUE(c.passed) << s.name << "/" << c.name << " residual " << c.residual;
    }
  }
  EXPECT_EQ(names, (std::set<std::string>{"spectral", "yosida", "kernel", "group", "tpbvp",
                                          "domains", "action"}));
  const auto j = report_json(opts, suites);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["suites"].size(), suites.size());
}

TEST(Verification, PerturbationFailsEverySuite)
{
  const Options opts{3, 1.0};
  const auto suites = run_all(opts);
  EXPECT_FALSE(all_passed(suites));
  for (const auto &s : suites)
  {
    EXPECT_FALSE(s.passed()) << s.name;
    EXPECT_GE(s.max_residual(), 1.0);
  }
  EXPECT_FALSE(report_json(opts, suites)["passed"].get<bool>());
}

TEST(Verification, OtherSeedsPass)
{
  for (std::uint64_t seed : {2u, 99u})
  {
    EXPECT_TRUE(all_passed(run_all(Options{seed, 0.0}))) << seed;
  }
}

}  // namespace
}  // namespace wavegroup::verification
