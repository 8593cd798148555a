// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "core/action_kernel.hpp"
#include "core/error.hpp"

namespace wavegroup
{
namespace
{

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

ErrorCode code_of(const std::function<void()> &f)
{
  try
  {
    f();
  }
  catch (const Error &e)
  {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kIo;
}

YosidaPtr unit_oscillator() { return build_yosida(make_mode_set({1.0}), 0.0); }

ModeSetPtr interval_modes(int n)
{
  std::vector<double> l;
  for (int k = 1; k <= n; k++)
  {
    l.push_back(k * k * kPi * kPi);
  }
  return make_mode_set(l);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(Kernel, UnitOscillatorAtPiOverThree)
{
  const auto k = kernel_eigenvalues(kPi / 3.0, unit_oscillator());
  EXPECT_NEAR(k.p[0], -0.5773503, 1e-7);
  EXPECT_NEAR(k.q[0], 1.1547005, 1e-7);
}

TEST(Kernel, DifferenceOfSquaresIdentity)
{
  for (double mu : {0.0, 0.05, 0.3, 1.0})
  {
    const auto y = build_yosida(interval_modes(32), mu);
    for (double t : {0.013, 0.21, 0.77, 2.93})
    {
      const auto k = kernel_eigenvalues(t, y);
      for (std::size_t n = 0; n < k.size(); n++)
      {
        const double w = y->omega(n);
        // Conditioning of q^2 - p^2 degrades as |q| grows relative to 1/w.
        const double tol = 1e-15 * (1.0 + w * w * k.q[n] * k.q[n]);
        EXPECT_LE(rel(k.q[n] * k.q[n] - k.p[n] * k.p[n], 1.0 / (w * w)), tol)
            << "mu " << mu << " t " << t << " n " << n;
      }
    }
  }
}

TEST(Kernel, OddInT)
{
  const auto y = build_yosida(interval_modes(8), 0.2);
  const auto a = kernel_eigenvalues(0.37, y);
  const auto b = kernel_eigenvalues(-0.37, y);
  for (std::size_t n = 0; n < a.size(); n++)
  {
    EXPECT_EQ(a.p[n], -b.p[n]);
    EXPECT_EQ(a.q[n], -b.q[n]);
  }
}

TEST(Kernel, ResonanceNamesMode)
{
  const auto y = build_yosida(make_mode_set({1.0, 4.0, 9.0}), 0.0);
  // w = 2 hits pi at t = pi / 2 before w = 3 does; w = 1 sits on the escape time, not a pole.
  try
  {
    kernel_eigenvalues(kPi / 2.0, y);
    FAIL() << "expected resonance";
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.code(), ErrorCode::kResonance);
    ASSERT_TRUE(e.mode().has_value());
    EXPECT_EQ(*e.mode(), 1u);
  }
  EXPECT_EQ(code_of([&] { kernel_eigenvalues(0.0, y); }), ErrorCode::kArgument);
  EXPECT_NO_THROW(kernel_eigenvalues(kPi / 2.0 + 1e-6, y));
}

TEST(EvalG, Examples)
{
  const auto y = build_yosida(make_mode_set({2.0, 5.0}), 0.1);
  const auto k = kernel_eigenvalues(0.4, y);
  const auto m = y->modes();
  EXPECT_EQ(eval_G(k, SpectralField::zero(m), SpectralField::zero(m)), 0.0);

  const SpectralField xi(m, {0.7, 0.0});
  const SpectralField zeta(m, {-1.3, 0.0});
  const double expected = 0.5 * k.p[0] * (0.49 + 1.69) + k.q[0] * 0.7 * -1.3;
  EXPECT_NEAR(eval_G(k, xi, zeta), expected, 1e-15 * std::abs(expected));

  const SpectralField a(m, {0.3, -2.0});
  const SpectralField b(m, {1.1, 0.4});
  EXPECT_DOUBLE_EQ(eval_G(k, a, b), eval_G(k, b, a));
}

TEST(AuxValue, SmallTimeLimitIsTerminalCost)
{
  const auto y = build_yosida(interval_modes(6), 0.5);
  const auto m = default_m(*y);
  const auto a = aux_value_eigenvalues(1e-10, *y, m);
  for (std::size_t n = 0; n < m.size(); n++)
  {
    EXPECT_NEAR(a.x[n], m[n], 1e-6 * std::abs(m[n]));
    EXPECT_NEAR(a.y[n], -m[n], 1e-6 * std::abs(m[n]));
    EXPECT_NEAR(a.z[n], m[n], 1e-6 * std::abs(m[n]));
  }
}

TEST(AuxValue, AngleExample) { EXPECT_NEAR(aux_angle(1.0, -7.0), 0.1418971, 1e-7); }

TEST(AuxValue, AngleBounds)
{
  for (double mu : {0.05, 0.25, 0.6, 1.0})
  {
    const auto y = build_yosida(interval_modes(16), mu);
    const auto m = default_m(*y);
    for (double f : {0.01, 0.5, 0.999})
    {
      const double t = f * y->concavity_horizon();
      const auto a = aux_value_eigenvalues(t, *y, m);
      for (std::size_t n = 0; n < m.size(); n++)
      {
        EXPECT_GT(a.theta[n], 0.0);
        EXPECT_LT(a.theta[n], kPi / 2.0 - kSqrt2);
        const double phase = y->omega(n) * t + a.theta[n];
        EXPECT_GT(phase, 0.0);
        EXPECT_LT(phase, kPi / 2.0);
      }
    }
  }
}

TEST(AuxValue, RejectsInvalidHorizonAndM)
{
  const auto y = build_yosida(make_mode_set({1.0}), 1.0);
  const std::vector<double> ok{-10.0};
  EXPECT_EQ(code_of([&] { aux_value_eigenvalues(kSqrt2, *y, ok); }), ErrorCode::kHorizon);
  EXPECT_EQ(code_of([&] { aux_value_eigenvalues(0.0, *y, ok); }), ErrorCode::kHorizon);
  // |m| must exceed tan(sqrt 2) / w_1^1, about 8.957 for lambda_1 = 1.
  EXPECT_NEAR(m_magnitude_bound(*y), std::tan(kSqrt2) / std::sqrt(0.5), 1e-12);
  const std::vector<double> weak{-8.0};
  EXPECT_EQ(code_of([&] { aux_value_eigenvalues(0.7, *y, weak); }), ErrorCode::kArgument);
  const auto y2 = build_yosida(make_mode_set({1.0}), 2.0);
  EXPECT_EQ(code_of([&] { aux_value_eigenvalues(0.5, *y2, ok); }), ErrorCode::kHorizon);
}

TEST(AuxValue, DefaultMIsTwiceTheBound)
{
  const auto y = build_yosida(interval_modes(4), 0.4);
  const double w11 = std::sqrt(kPi * kPi / (1.0 + kPi * kPi));
  for (double m : default_m(*y))
  {
    EXPECT_NEAR(m, -2.0 * std::tan(kSqrt2) / w11, 1e-12);
  }
}

// Independent oracle: integrate the Riccati system with classical RK4 from t = 0, where
// (x, y, z) = (m, -m, m), and compare against the closed forms.
TEST(Riccati, ClosedFormsSolveTheSystem)
{
  const auto y = build_yosida(make_mode_set({1.0, 3.0}), 1.0);
  const std::vector<double> m{-10.0, -12.0};
  const double t_end = 0.9;
  const int steps = 20000;
  const double h = t_end / steps;
  for (std::size_t n = 0; n < 2; n++)
  {
    const double l = y->lambda_mu(n);
    std::array<double, 3> s{m[n], -m[n], m[n]};
    auto f = [l](const std::array<double, 3> &u) {
      const auto r = riccati_rhs(l, u[0], u[1]);
      return std::array<double, 3>{r.x, r.y, r.z};
    };
    for (int i = 0; i < steps; i++)
    {
      const auto k1 = f(s);
      std::array<double, 3> u;
      for (int j = 0; j < 3; j++) u[j] = s[j] + 0.5 * h * k1[j];
      const auto k2 = f(u);
      for (int j = 0; j < 3; j++) u[j] = s[j] + 0.5 * h * k2[j];
      const auto k3 = f(u);
      for (int j = 0; j < 3; j++) u[j] = s[j] + h * k3[j];
      const auto k4 = f(u);
      for (int j = 0; j < 3; j++) s[j] += h / 6.0 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
    }
    const auto a = aux_value_eigenvalues(t_end, *y, m);
    EXPECT_NEAR(a.x[n], s[0], 1e-9 * std::abs(s[0]));
    EXPECT_NEAR(a.y[n], s[1], 1e-9 * std::abs(s[1]));
    EXPECT_NEAR(a.z[n], s[2], 1e-9 * std::abs(s[2]));
  }
}

TEST(Riccati, ResidualExampleAndOrder)
{
  const auto y = build_yosida(make_mode_set({1.0}), 1.0);
  const std::vector<double> m{-10.0};
  const auto r = riccati_residual(0.7, *y, m, 1e-4)[0];
  EXPECT_LE(std::max({r.x, r.y, r.z}), 1e-6);
  for (double h : {1e-3, 5e-4})
  {
    const auto a = riccati_residual(0.7, *y, m, h)[0];
    const auto b = riccati_residual(0.7, *y, m, h / 2.0)[0];
    for (auto [ra, rb] : {std::pair{a.x, b.x}, std::pair{a.y, b.y}, std::pair{a.z, b.z}})
    {
      EXPECT_GE(ra / rb, 3.5);
      EXPECT_LE(ra / rb, 4.5);
      EXPECT_LE(rb, 0.3 * ra);
    }
  }
  EXPECT_EQ(code_of([&] { riccati_residual(1e-5, *y, m, 1e-4); }), ErrorCode::kHorizon);
}

TEST(Riccati, InitialRightHandSides)
{
  const double l = 0.4, m = -9.5;
  const auto r = riccati_rhs(l, m, -m);
  EXPECT_DOUBLE_EQ(r.x, 1.0 + l * m * m);
  EXPECT_DOUBLE_EQ(r.y, l * m * -m);
  EXPECT_DOUBLE_EQ(r.z, l * m * m);
}

TEST(Schur, ReducesToKernel)
{
  for (double mu : {0.1, 0.5, 1.0})
  {
    const auto y = build_yosida(interval_modes(24), mu);
    for (double f : {0.05, 0.4, 0.95})
    {
      const double t = f * y->concavity_horizon();
      const auto k = kernel_eigenvalues(t, y);
      const auto a = aux_value_eigenvalues(t, *y, default_m(*y));
      const auto r = schur_reduce(a);
      for (std::size_t n = 0; n < k.size(); n++)
      {
        EXPECT_LE(rel(r.x_hat[n], k.p[n]), 1e-10);
        EXPECT_LE(rel(r.y_hat[n], k.q[n]), 1e-10);
        EXPECT_LE(rel(r.z_hat[n], k.p[n]), 1e-10);
        EXPECT_GE(a.z[n] - a.m[n], t * std::pow(std::sin(kSqrt2), 2));
      }
    }
  }
}

TEST(Schur, SingleModeDirectEvaluation)
{
  // lambda = 1, mu = 1, m = -10, t = 0.5: both sides evaluated from the trig formulas.
  const auto y = build_yosida(make_mode_set({1.0}), 1.0);
  const double w = std::sqrt(0.5), m = -10.0, t = 0.5;
  const double theta = std::atan(-1.0 / (w * m));
  const double ph = w * t + theta;
  const double x = -1.0 / (w * std::tan(ph));
  const double yy = std::cos(theta) / (w * std::sin(ph));
  const double z = -std::cos(theta) * std::cos(theta) / w * (std::tan(theta) + 1.0 / std::tan(ph));
  const double p = -1.0 / (w * std::tan(w * t));
  const double q = 1.0 / (w * std::sin(w * t));
  EXPECT_NEAR(x - yy * yy / (z - m), p, 1e-12 * std::abs(p));
  EXPECT_NEAR(-yy * m / (z - m), q, 1e-12 * std::abs(q));
  const auto r = schur_reduce(aux_value_eigenvalues(t, *y, std::vector<double>{m}));
  EXPECT_NEAR(r.x_hat[0], p, 1e-12 * std::abs(p));
}

TEST(Schur, CoercivityViolation)
{
  AuxValueEigens a;
  a.t = 0.1;
  a.m = {-5.0, -5.0};
  a.x = {1.0, 1.0};
  a.y = {1.0, 1.0};
  a.z = {-4.0, -5.0};
  try
  {
    schur_reduce(a);
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.code(), ErrorCode::kCoercivity);
    EXPECT_EQ(e.mode().value(), 1u);
  }
}

TEST(EvalAction, Examples)
{
  const auto y = build_yosida(make_mode_set({1.0, 4.0}), 0.5);
  const auto m = y->modes();
  const SpectralField x0(m, {0.6, -0.3});
  ControlPath zero{0.5, std::vector<SpectralField>(10, SpectralField::zero(m))};
  const double v_x0 = 0.5 * (0.36 + 0.09);
  EXPECT_NEAR(eval_action(x0, zero, *y, SpectralField::zero(m, Basis::kX)), 0.5 * v_x0, 1e-15);
  EXPECT_EQ(eval_action(SpectralField::zero(m), zero, *y, SpectralField(m, {1.0, 2.0}, Basis::kX)),
            0.0);
}

TEST(EvalAction, ConstantControlHandComputed)
{
  // One mode, lambda = 4, mu = 0.5, two steps of h = 0.25 with w = 1.
  const auto y = build_yosida(make_mode_set({4.0}), 0.5);
  const auto m = y->modes();
  ControlPath path{0.5, {SpectralField(m, {1.0}), SpectralField(m, {1.0})}};
  // States 0, 0.25, 0.5; V = x^2 / 2; T = w^2 (1/4 + 1/4) / 2 = 0.25.
  const double integral = 0.25 * (0.5 * (0.0 + 0.03125) - 0.25) +
                          0.25 * (0.5 * (0.03125 + 0.125) - 0.25);
  const double terminal = 0.5 * 3.0 / std::sqrt(2.0);
  EXPECT_NEAR(eval_action(SpectralField::zero(m), path, *y, SpectralField(m, {3.0}, Basis::kX)),
              integral + terminal, 1e-15);
}

TEST(ValueViaKernel, Examples)
{
  const auto y = build_yosida(make_mode_set({2.0}), 0.4);
  const auto m = y->modes();
  const double t = 0.3;
  const auto zero = value_via_kernel(t, y, SpectralField::zero(m), SpectralField::zero(m, Basis::kX));
  EXPECT_EQ(zero.value, 0.0);
  EXPECT_EQ(zero.zeta_star[0], 0.0);

  const auto k = kernel_eigenvalues(t, y);
  const double xi = 0.8;
  const auto r = value_via_kernel(k, SpectralField(m, {xi}), SpectralField::zero(m, Basis::kX));
  EXPECT_DOUBLE_EQ(r.zeta_star[0], -(k.q[0] / k.p[0]) * xi);
  const double expected = 0.5 * (k.p[0] - k.q[0] * k.q[0] / k.p[0]) * xi * xi;
  EXPECT_NEAR(r.value, expected, 1e-14 * std::abs(expected));
}

TEST(ValueViaKernel, StationarityByFiniteDifferences)
{
  const auto y = build_yosida(make_mode_set({1.0, 2.5, 6.0}), 0.5);
  const auto m = y->modes();
  const auto k = kernel_eigenvalues(0.6, y);
  const SpectralField xi(m, {0.3, -0.7, 1.1});
  const SpectralField v(m, {0.5, 0.2, -0.4}, Basis::kX);
  const auto r = value_via_kernel(k, xi, v);
  auto objective = [&](const std::vector<double> &z) {
    const SpectralField zeta(m, z);
    double psi = 0.0;
    for (std::size_t n = 0; n < z.size(); n++)
    {
      psi += z[n] * v[n] / y->omega(n);
    }
    return eval_G(k, xi, zeta) + psi;
  };
  const double h = 1e-5;
  std::vector<double> z(r.zeta_star.coeffs().begin(), r.zeta_star.coeffs().end());
  EXPECT_NEAR(objective(z), r.value, 1e-13);
  for (std::size_t n = 0; n < z.size(); n++)
  {
    auto zp = z, zm = z;
    zp[n] += h;
    zm[n] -= h;
    EXPECT_LE(std::abs((objective(zp) - objective(zm)) / (2 * h)), 1e-8);
  }
}

TEST(ValueViaKernel, EscapeTime)
{
  // cos(w t) = 0 makes P singular.
  const auto y = build_yosida(make_mode_set({1.0}), 0.0);
  const auto m = y->modes();
  try
  {
    value_via_kernel(kPi / 2.0, y, SpectralField(m, {1.0}), SpectralField::zero(m, Basis::kX));
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.code(), ErrorCode::kEscapeTime);
    EXPECT_EQ(e.mode().value(), 0u);
  }
  EXPECT_THROW(grad_value(kPi / 2.0, y, SpectralField(m, {1.0}), SpectralField::zero(m, Basis::kX)),
               Error);
}

TEST(GradValue, MatchesFiniteDifferencesAndScalarForm)
{
  const auto y = build_yosida(make_mode_set({1.0, 2.5, 6.0}), 0.5);
  const auto m = y->modes();
  const auto k = kernel_eigenvalues(0.6, y);
  const SpectralField v(m, {0.5, 0.2, -0.4}, Basis::kX);
  const std::vector<double> xi{0.3, -0.7, 1.1};
  const auto g = grad_value(k, SpectralField(m, xi), v);
  const double h = 1e-5;
  for (std::size_t n = 0; n < xi.size(); n++)
  {
    auto a = xi, b = xi;
    a[n] += h;
    b[n] -= h;
    const double fd = (value_via_kernel(k, SpectralField(m, a), v).value -
                       value_via_kernel(k, SpectralField(m, b), v).value) /
                      (2 * h);
    EXPECT_NEAR(g[n], fd, 1e-6);
    const double scalar = (k.p[n] - k.q[n] * k.q[n] / k.p[n]) * xi[n] -
                          (k.q[n] / k.p[n]) * (v[n] / y->omega(n));
    EXPECT_NEAR(g[n], scalar, 1e-14 * std::max(1.0, std::abs(scalar)));
  }
  const auto g0 = grad_value(k, SpectralField::zero(m), SpectralField::zero(m, Basis::kX));
  EXPECT_EQ(g0[0], 0.0);
}

TEST(StatIntermediate, Examples)
{
  const auto y = build_yosida(make_mode_set({1.0}), 0.0);
  const auto m = y->modes();
  const double s = 0.4;
  const auto ks = kernel_eigenvalues(s, y);
  const auto zero = stat_intermediate(ks, ks, SpectralField::zero(m), SpectralField::zero(m));
  EXPECT_EQ(zero[0], 0.0);
  const double xi = 0.9;
  const auto eta = stat_intermediate(ks, ks, SpectralField(m, {xi}), SpectralField(m, {xi}));
  EXPECT_NEAR(eta[0], xi / std::cos(s), 1e-15);
}

TEST(StatIntermediate, DefiningEquationHolds)
{
  const auto y = build_yosida(make_mode_set({1.0, 4.0, 7.5}), 0.3);
  const auto m = y->modes();
  const auto ks = kernel_eigenvalues(0.35, y);
  const auto kq = kernel_eigenvalues(0.8, y);
  const SpectralField xi(m, {0.4, -1.2, 0.05});
  const SpectralField zeta(m, {-0.3, 0.6, 2.0});
  const auto eta = stat_intermediate(ks, kq, xi, zeta);
  for (std::size_t n = 0; n < 3; n++)
  {
    const double r = (ks.p[n] + kq.p[n]) * eta[n] + ks.q[n] * xi[n] + kq.q[n] * zeta[n];
    EXPECT_LE(std::abs(r), 4.0 * std::numeric_limits<double>::epsilon() *
                               (std::abs(ks.q[n] * xi[n]) + std::abs(kq.q[n] * zeta[n])));
    // Central-difference gradient in eta of G_s(xi, .) + G_sigma(., zeta).
    auto f = [&](double e) {
      return 0.5 * ks.p[n] * (xi[n] * xi[n] + e * e) + ks.q[n] * xi[n] * e +
             0.5 * kq.p[n] * (e * e + zeta[n] * zeta[n]) + kq.q[n] * e * zeta[n];
    };
    const double h = 1e-5;
    EXPECT_LE(std::abs((f(eta[n] + h) - f(eta[n] - h)) / (2 * h)), 1e-6);
  }
}

TEST(StatIntermediate, ResonantJoin)
{
  const auto y = build_yosida(make_mode_set({1.0}), 0.0);
  const auto m = y->modes();
  const auto ks = kernel_eigenvalues(1.0, y);
  const auto kq = kernel_eigenvalues(kPi - 1.0, y);
  EXPECT_EQ(code_of([&] { stat_intermediate(ks, kq, SpectralField::unit(m, 0), SpectralField::unit(m, 0)); }),
            ErrorCode::kConcatResonance);
  EXPECT_EQ(code_of([&] { concat_kernel(ks, kq); }), ErrorCode::kConcatResonance);
}

TEST(ConcatKernel, MatchesClosedForm)
{
  const auto y = build_yosida(interval_modes(32), 0.3);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.05, 2.0);
  int checked = 0;
  while (checked < 40)
  {
    const double s = u(rng), sigma = u(rng);
    const auto ks = kernel_eigenvalues(s, y);
    const auto kq = kernel_eigenvalues(sigma, y);
    QuadraticKernel direct;
    try
    {
      direct = kernel_eigenvalues(s + sigma, y);
    }
    catch (const Error &)
    {
      continue;
    }
    bool margin_ok = true;
    for (std::size_t n = 0; n < y->size(); n++)
    {
      for (double tt : {s, sigma, s + sigma})
      {
        margin_ok = margin_ok && lattice_distance(y->omega(n) * tt, kPi / 2.0) > 1e-3;
      }
    }
    if (!margin_ok)
    {
      continue;
    }
    const auto j = concat_kernel(ks, kq);
    const auto jr = concat_kernel(kq, ks);
    for (std::size_t n = 0; n < y->size(); n++)
    {
      EXPECT_LE(rel(j.p[n], direct.p[n]), 1e-10);
      EXPECT_LE(rel(j.q[n], direct.q[n]), 1e-10);
      EXPECT_LE(rel(jr.p[n], j.p[n]), 1e-10);
      EXPECT_EQ(j.q[n], jr.q[n]);
    }
    EXPECT_DOUBLE_EQ(j.t, s + sigma);
    checked++;
  }
}

TEST(ConcatKernel, SevenFoldReproducesHorizon)
{
  const auto y = build_yosida(interval_modes(16), 0.3);
  const double t = 2.0;
  const auto step = kernel_eigenvalues(t / 7.0, y);
  auto acc = step;
  for (int i = 1; i < 7; i++)
  {
    acc = concat_kernel(acc, step);
  }
  const auto direct = kernel_eigenvalues(t, y);
  for (std::size_t n = 0; n < y->size(); n++)
  {
    EXPECT_LE(rel(acc.p[n], direct.p[n]), 1e-10);
    EXPECT_LE(rel(acc.q[n], direct.q[n]), 1e-10);
  }
}

TEST(KernelBounds, ExamplesAndGrowth)
{
  const auto b = kernel_bound_check(kernel_eigenvalues(kPi / 3.0, unit_oscillator()));
  EXPECT_NEAR(b.sup_p, 0.5773503, 1e-7);
  EXPECT_NEAR(b.sup_q, 1.1547005, 1e-7);
  EXPECT_TRUE(std::isfinite(b.sup_p) && std::isfinite(b.sup_q));

  // Margins 0.1 and 0.01 from the pole at w t = pi for the unit oscillator.
  const auto wide = kernel_bound_check(kernel_eigenvalues(kPi - 0.1, unit_oscillator()));
  const auto narrow = kernel_bound_check(kernel_eigenvalues(kPi - 0.01, unit_oscillator()));
  EXPECT_GT(narrow.sup_p, wide.sup_p);
  EXPECT_GT(narrow.sup_q, wide.sup_q);
}

TEST(LatticeDistance, Basics)
{
  EXPECT_NEAR(lattice_distance(kPi / 3.0, kPi / 2.0), kPi / 6.0, 1e-15);
  EXPECT_NEAR(lattice_distance(-kPi / 3.0, kPi / 2.0), kPi / 6.0, 1e-15);
  EXPECT_NEAR(lattice_distance(1.9 * kPi / 2.0, kPi / 2.0), 0.1 * kPi / 2.0, 1e-14);
}

}  // namespace
}  // namespace wavegroup
