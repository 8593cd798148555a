// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "core/domains.hpp"
#include "core/error.hpp"
#include "core/tpbvp.hpp"

namespace wavegroup
{
namespace
{

constexpr double kPi = std::numbers::pi;

TEST(Solve, SingleModeExamples)
{
  const auto y = build_yosida(make_mode_set({1.0}), 0.0);
  const auto m = y->modes();
  const auto pi0 = tpbvp::solve(SpectralField::zero(m), SpectralField(m, {1.0}), kPi / 3.0, y);
  EXPECT_NEAR(pi0[0], 1.0 / std::sin(kPi / 3.0), 1e-12);
  EXPECT_EQ(pi0.basis(), Basis::kX);
  const auto zero = tpbvp::solve(SpectralField::zero(m), SpectralField::zero(m), 0.8, y);
  EXPECT_EQ(zero[0], 0.0);
}

TEST(Solve, MatchesOscillatorOracle)
{
  // In X1 position coordinates the exact flow gives pi0 = (z - x cos(w t)) / sin(w t).
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> lam(0.5, 50.0);
  std::uniform_real_distribution<double> tt(0.05, 3.0);
  int done = 0;
  while (done < 100)
  {
    const auto y = build_yosida(make_mode_set({lam(rng)}), 0.0);
    const double t = tt(rng);
    if (admissibility(t, *y) < 1e-3)
    {
      continue;
    }
    const auto m = y->modes();
    const double x = u(rng), z = u(rng);
    const double w = y->omega(0);
    const double expected = (z - x * std::cos(w * t)) / std::sin(w * t);
    const auto pi0 = tpbvp::solve(SpectralField(m, {x}), SpectralField(m, {z}), t, y);
    EXPECT_NEAR(pi0[0], expected, 1e-12 * std::max(1.0, std::abs(expected)));
    done++;
  }
}

TEST(Solve, RejectsInvalidInput)
{
  const auto y = build_yosida(make_mode_set({1.0}), 0.0);
  const auto m = y->modes();
  const auto x = SpectralField::zero(m);
  try
  {
    tpbvp::solve(x, x, kPi / 2.0, y);
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.code(), ErrorCode::kInadmissible);
    EXPECT_NE(std::string(e.what()).find("nearest admissible"), std::string::npos);
  }
  EXPECT_THROW(tpbvp::solve(x, x, -0.3, y), Error);
  EXPECT_THROW(tpbvp::solve(x, SpectralField::zero(make_mode_set({3.0})), 0.3, y), Error);
  EXPECT_THROW(tpbvp::solve(x, SpectralField::zero(m, Basis::kX), 0.3, y), Error);
}

TEST(Verify, EndpointErrorSmall)
{
  std::vector<double> l;
  for (int n = 1; n <= 32; n++)
  {
    l.push_back(n * n * kPi * kPi);
  }
  const auto m = make_mode_set(l);
  std::vector<double> a(32), b(32);
  for (int n = 0; n < 32; n++)
  {
    a[n] = std::sin(1.0 + n) / (1.0 + n);
    b[n] = std::cos(2.0 * n) / (1.0 + n * n);
  }
  const SpectralField x(m, a), z(m, b);
  EXPECT_LE(tpbvp::verify(x, z, 0.41, build_yosida(m, 0.0)), 1e-10);
  EXPECT_LE(tpbvp::verify(x, z, 0.41, build_yosida(m, 0.05)), 1e-10);
}

TEST(Verify, SquareDemo)
{
  const domains::DomainBasis basis{domains::DomainKind::kSquare, 16, 0};
  const auto m = domains::build_modes(basis, 256);
  ASSERT_EQ(m->size(), 256u);
  const auto z = domains::default_terminal_state(basis, m);
  const auto x = SpectralField::zero(m);
  const double t = kPi / 3.0;
  EXPECT_LE(tpbvp::verify(x, z, t, build_yosida(m, 0.0)), 1e-9);
  EXPECT_LE(tpbvp::verify(x, z, t, build_yosida(m, 0.05)), 1e-8);
}

TEST(MuStudy, ConvergesQuadratically)
{
  const auto m = domains::build_modes(domains::DomainBasis{domains::DomainKind::kInterval, 0, 0}, 16);
  std::vector<double> c(16);
  for (int n = 1; n <= 16; n++)
  {
    c[n - 1] = std::exp(-1.0 * n * n);
  }
  const SpectralField x = SpectralField::zero(m);
  const SpectralField z(m, c);
  const double t = std::numbers::sqrt2 / 4.0;
  std::vector<double> mus;
  for (int i = 2; i <= 10; i++)
  {
    mus.push_back(std::ldexp(1.0, -i));
  }
  const auto rows = tpbvp::mu_study(x, z, t, m, mus);
  ASSERT_EQ(rows.size(), mus.size());
  for (std::size_t i = 1; i < rows.size(); i++)
  {
    EXPECT_LT(rows[i].error, rows[i - 1].error);
  }
  EXPECT_LE(rows.back().error, 1e-5);
  // Halving mu divides the error by four in the asymptotic regime.
  for (std::size_t i = rows.size() - 3; i < rows.size(); i++)
  {
    const double ratio = rows[i - 1].error / rows[i].error;
    EXPECT_GE(ratio, 3.5);
    EXPECT_LE(ratio, 4.5);
  }
  const std::vector<double> zero{0.0};
  EXPECT_EQ(tpbvp::mu_study(x, z, t, m, zero)[0].error, 0.0);
}

TEST(Trajectory, EndpointsAndEnergy)
{
  const domains::DomainBasis basis{domains::DomainKind::kInterval, 0, 0};
  const auto m = domains::build_modes(basis, 16);
  const auto z = domains::default_terminal_state(basis, m);
  const auto x = SpectralField::zero(m);
  const auto y = build_yosida(m, 0.05);
  const double t = 0.45;
  const auto samples = tpbvp::trajectory(x, z, t, y, 100);
  ASSERT_EQ(samples.size(), 101u);
  EXPECT_EQ(samples.front().s, 0.0);
  EXPECT_DOUBLE_EQ(samples.back().s, t);
  for (std::size_t n = 0; n < m->size(); n++)
  {
    EXPECT_EQ(samples.front().state->position()[n], 0.0);
    EXPECT_NEAR(samples.back().state->position()[n], z[n], 1e-10);
  }
  EXPECT_LE(tpbvp::energy_drift(samples), 1e-12);
}

TEST(PropagateSamples, FlagsAndNudgesInadmissibleTimes)
{
  const auto y = build_yosida(make_mode_set({1.0}), 0.25);
  const auto m = y->modes();
  const PhaseState st(SpectralField(m, {1.0}), SpectralField::zero(m, Basis::kX));
  // w t = pi / 2 lands exactly on sample 2 of 4.
  const double t = kPi / y->omega(0);
  const auto plain = tpbvp::propagate_samples(st, t, y, 4);
  EXPECT_FALSE(plain[2].admissible);
  EXPECT_FALSE(plain[2].state.has_value());
  EXPECT_TRUE(plain[1].state.has_value());
  const auto nudged = tpbvp::propagate_samples(st, t, y, 4, 1e-6, 1e-4);
  EXPECT_TRUE(nudged[2].nudged);
  ASSERT_TRUE(nudged[2].state.has_value());
  EXPECT_NEAR(std::abs(nudged[2].s - nudged[2].requested_s), 1e-4, 1e-15);
  EXPECT_LE(tpbvp::energy_drift(nudged), 1e-12);
}

}  // namespace
}  // namespace wavegroup
