// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/action_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "core/error.hpp"

namespace wavegroup
{

namespace
{

const double kSqrt2 = std::numbers::sqrt2;

std::string mode_name(const YosidaModes &y, std::size_t k)
{
  return "mode " + std::to_string(k) + " (" + y.modes()->label(k).to_string() + ")";
}

void require_field(const SpectralField &f, const YosidaModes &y, Basis basis, const char *what)
{
  if (!same_modes(f.modes(), y.modes()))
  {
    Fail(ErrorCode::kStructural, std::string(what) + " uses a different mode set");
  }
  if (f.basis() != basis)
  {
    Fail(ErrorCode::kStructural, std::string(what) + " must be given in " + basis_name(basis) +
                                     " coordinates");
  }
}

void require_compatible(const QuadraticKernel &a, const QuadraticKernel &b)
{
  if (!a.yosida || !b.yosida || !same_modes(a.yosida->modes(), b.yosida->modes()) ||
      a.yosida->mu() != b.yosida->mu())
  {
    Fail(ErrorCode::kStructural, "kernels belong to different Yosida mode sets");
  }
}

// p_s + p_sigma, checked against the scale at which it is a genuine zero. The identity
// p_s + p_sigma = -w q_s q_sigma sin(w (s + sigma)) relates the denominator to the phase of
// the joined horizon.
double join_denominator(const QuadraticKernel &ks, const QuadraticKernel &ksigma, std::size_t n)
{
  const auto &y = *ks.yosida;
  const double w = y.omega(n);
  const double d = ks.p[n] + ksigma.p[n];
  const double scale = w * std::abs(ks.q[n] * ksigma.q[n]) *
                       std::max(1.0, w * std::abs(ks.t + ksigma.t)) * kResonanceTolerance;
  if (!(std::abs(d) > scale))
  {
    Fail(ErrorCode::kConcatResonance,
         "joining horizons " + std::to_string(ks.t) + " and " + std::to_string(ksigma.t) +
             " is resonant at " + mode_name(y, n),
         n);
  }
  return d;
}

// P is singular exactly when cos(w t) = -p / q vanishes.
void require_invertible_p(const QuadraticKernel &k, std::size_t n)
{
  const auto &y = *k.yosida;
  const double scale = std::max(1.0, y.omega(n) * std::abs(k.t)) * kResonanceTolerance;
  if (!(std::abs(k.p[n]) > scale * std::abs(k.q[n])))
  {
    Fail(ErrorCode::kEscapeTime,
         "horizon " + std::to_string(k.t) + " is an escape time for " + mode_name(y, n), n);
  }
}

}  // namespace

double lattice_distance(double angle, double period)
{
  const double r = std::fmod(std::abs(angle), period);
  return std::min(r, period - r);
}

QuadraticKernel kernel_eigenvalues(double t, const YosidaPtr &y)
{
  if (!y)
  {
    Fail(ErrorCode::kStructural, "kernel requires Yosida modes");
  }
  if (!std::isfinite(t) || t == 0.0)
  {
    Fail(ErrorCode::kArgument, "kernel horizon must be finite and nonzero");
  }
  QuadraticKernel k{t, y, std::vector<double>(y->size()), std::vector<double>(y->size())};
  for (std::size_t n = 0; n < y->size(); n++)
  {
    const double w = y->omega(n);
    const double phase = w * t;
    if (lattice_distance(phase, std::numbers::pi) <
        kResonanceTolerance * std::max(1.0, std::abs(phase)))
    {
      Fail(ErrorCode::kResonance,
           "horizon " + std::to_string(t) + " is resonant for " + mode_name(*y, n), n);
    }
    k.p[n] = -1.0 / (w * std::tan(phase));
    k.q[n] = 1.0 / (w * std::sin(phase));
  }
  return k;
}

double eval_G(const QuadraticKernel &k, const SpectralField &xi, const SpectralField &zeta)
{
  require_field(xi, *k.yosida, Basis::kX1, "xi");
  require_field(zeta, *k.yosida, Basis::kX1, "zeta");
  double g = 0.0;
  for (std::size_t n = 0; n < k.size(); n++)
  {
    g += 0.5 * k.p[n] * (xi[n] * xi[n] + zeta[n] * zeta[n]) + k.q[n] * xi[n] * zeta[n];
  }
  return g;
}

QuadraticKernel concat_kernel(const QuadraticKernel &ks, const QuadraticKernel &ksigma)
{
  require_compatible(ks, ksigma);
  QuadraticKernel out{ks.t + ksigma.t, ks.yosida, std::vector<double>(ks.size()),
                      std::vector<double>(ks.size())};
  for (std::size_t n = 0; n < ks.size(); n++)
  {
    const double d = join_denominator(ks, ksigma, n);
    out.p[n] = ks.p[n] - ks.q[n] * ks.q[n] / d;
    out.q[n] = -ks.q[n] * ksigma.q[n] / d;
  }
  return out;
}

SpectralField stat_intermediate(const QuadraticKernel &ks, const QuadraticKernel &ksigma,
                                const SpectralField &xi, const SpectralField &zeta)
{
  require_compatible(ks, ksigma);
  require_field(xi, *ks.yosida, Basis::kX1, "xi");
  require_field(zeta, *ks.yosida, Basis::kX1, "zeta");
  std::vector<double> eta(ks.size());
  for (std::size_t n = 0; n < ks.size(); n++)
  {
    const double d = join_denominator(ks, ksigma, n);
    eta[n] = -(ks.q[n] * xi[n] + ksigma.q[n] * zeta[n]) / d;
  }
  return SpectralField(xi.modes(), std::move(eta), Basis::kX1);
}

KernelBounds kernel_bound_check(const QuadraticKernel &k)
{
  KernelBounds b;
  for (std::size_t n = 0; n < k.size(); n++)
  {
    b.sup_p = std::max(b.sup_p, std::abs(k.p[n]));
    b.sup_q = std::max(b.sup_q, std::abs(k.q[n]));
  }
  return b;
}

double m_magnitude_bound(const YosidaModes &y)
{
  const double lambda1 = y.modes()->lambda(0);
  const double omega11 = std::sqrt(lambda1 / (1.0 + lambda1));
  return std::tan(kSqrt2) / omega11;
}

std::vector<double> default_m(const YosidaModes &y)
{
  return std::vector<double>(y.size(), -2.0 * m_magnitude_bound(y));
}

double aux_angle(double omega, double m)
{
  return std::atan(-1.0 / (omega * m));
}

AuxValueEigens aux_value_eigenvalues(double t, const YosidaModes &y, std::span<const double> m)
{
  const double mu = y.mu();
  if (!(mu > 0.0 && mu <= 1.0))
  {
    Fail(ErrorCode::kHorizon, "auxiliary value function requires mu in (0, 1], got " +
                                  std::to_string(mu));
  }
  if (!(t > 0.0 && t < y.concavity_horizon()))
  {
    Fail(ErrorCode::kHorizon, "auxiliary value function requires t in (0, " +
                                  std::to_string(y.concavity_horizon()) + "), got " +
                                  std::to_string(t));
  }
  if (m.size() != y.size())
  {
    Fail(ErrorCode::kStructural, "M has " + std::to_string(m.size()) + " eigenvalues for " +
                                     std::to_string(y.size()) + " modes");
  }
  const double bound = m_magnitude_bound(y);
  AuxValueEigens a;
  a.t = t;
  a.mu = mu;
  a.m.assign(m.begin(), m.end());
  a.theta.resize(y.size());
  a.x.resize(y.size());
  a.y.resize(y.size());
  a.z.resize(y.size());
  for (std::size_t n = 0; n < y.size(); n++)
  {
    if (!std::isfinite(m[n]) || !(-m[n] > bound))
    {
      Fail(ErrorCode::kArgument, "M eigenvalue " + std::to_string(m[n]) + " of " +
                                     mode_name(y, n) + " must be below " +
                                     std::to_string(-bound), n);
    }
    const double w = y.omega(n);
    const double theta = aux_angle(w, m[n]);
    const double phase = w * t + theta;
    const double c = std::cos(theta);
    a.theta[n] = theta;
    a.x[n] = -1.0 / (w * std::tan(phase));
    a.y[n] = c / (w * std::sin(phase));
    a.z[n] = -(c * c / w) * (std::tan(theta) + 1.0 / std::tan(phase));
  }
  return a;
}

RiccatiTriple riccati_rhs(double lambda_mu, double x, double y)
{
  return {1.0 + lambda_mu * x * x, lambda_mu * x * y, lambda_mu * y * y};
}

std::vector<RiccatiTriple> riccati_residual(double t, const YosidaModes &y,
                                            std::span<const double> m, double h)
{
  if (!(h > 0.0) || !(t - h > 0.0) || !(t + h < y.concavity_horizon()))
  {
    Fail(ErrorCode::kHorizon, "finite-difference stencil [t - h, t + h] must lie inside (0, " +
                                  std::to_string(y.concavity_horizon()) + ")");
  }
  const auto lo = aux_value_eigenvalues(t - h, y, m);
  const auto mid = aux_value_eigenvalues(t, y, m);
  const auto hi = aux_value_eigenvalues(t + h, y, m);
  std::vector<RiccatiTriple> res(y.size());
  for (std::size_t n = 0; n < y.size(); n++)
  {
    const auto rhs = riccati_rhs(y.lambda_mu(n), mid.x[n], mid.y[n]);
    res[n].x = std::abs((hi.x[n] - lo.x[n]) / (2.0 * h) - rhs.x);
    res[n].y = std::abs((hi.y[n] - lo.y[n]) / (2.0 * h) - rhs.y);
    res[n].z = std::abs((hi.z[n] - lo.z[n]) / (2.0 * h) - rhs.z);
  }
  return res;
}

SchurReduced schur_reduce(const AuxValueEigens &a)
{
  const auto n_modes = a.m.size();
  SchurReduced r{std::vector<double>(n_modes), std::vector<double>(n_modes),
                 std::vector<double>(n_modes)};
  for (std::size_t n = 0; n < n_modes; n++)
  {
    const double d = a.z[n] - a.m[n];
    if (!(d > 0.0))
    {
      Fail(ErrorCode::kCoercivity,
           "Z - M is not coercive at mode " + std::to_string(n) + " (z - m = " +
               std::to_string(d) + ")",
           n);
    }
    r.x_hat[n] = a.x[n] - a.y[n] * a.y[n] / d;
    r.y_hat[n] = -a.y[n] * a.m[n] / d;
    r.z_hat[n] = -a.m[n] - a.m[n] * a.m[n] / d;
  }
  return r;
}

double eval_action(const SpectralField &x0, const ControlPath &path, const YosidaModes &y,
                   const SpectralField &v)
{
  require_field(x0, y, Basis::kX1, "initial state");
  require_field(v, y, Basis::kX, "terminal velocity");
  if (path.steps() == 0 || !(path.t > 0.0))
  {
    Fail(ErrorCode::kArgument, "control path needs a positive horizon and at least one step");
  }
  for (const auto &w : path.w)
  {
    require_field(w, y, Basis::kX1, "control");
  }
  const double h = path.step();
  const double mu2 = y.mu() * y.mu();
  const auto &modes = *y.modes();
  std::vector<double> x(x0.coeffs().begin(), x0.coeffs().end());
  auto potential = [&x]() {
    double s = 0.0;
    for (double c : x)
    {
      s += c * c;
    }
    return 0.5 * s;
  };

  double integral = 0.0;
  double v_prev = potential();
  for (const auto &w : path.w)
  {
    double kinetic = 0.0;
    for (std::size_t n = 0; n < x.size(); n++)
    {
      kinetic += w[n] * w[n] * (1.0 / modes.lambda(n) + mu2);
      x[n] += h * w[n];
    }
    const double v_next = potential();
    integral += h * (0.5 * (v_prev + v_next) - 0.5 * kinetic);
    v_prev = v_next;
  }
  double terminal = 0.0;
  for (std::size_t n = 0; n < x.size(); n++)
  {
    terminal += x[n] * v[n] / y.omega(n);
  }
  return integral + terminal;
}

KernelValue value_via_kernel(const QuadraticKernel &k, const SpectralField &xi,
                             const SpectralField &v)
{
  const auto &y = *k.yosida;
  require_field(xi, y, Basis::kX1, "xi");
  require_field(v, y, Basis::kX, "v");
  std::vector<double> zeta(k.size());
  double value = 0.0;
  for (std::size_t n = 0; n < k.size(); n++)
  {
    require_invertible_p(k, n);
    const double ev = v[n] / y.omega(n);
    zeta[n] = -(k.q[n] * xi[n] + ev) / k.p[n];
    value += 0.5 * k.p[n] * (xi[n] * xi[n] + zeta[n] * zeta[n]) + k.q[n] * xi[n] * zeta[n] +
             zeta[n] * ev;
  }
  return {value, SpectralField(xi.modes(), std::move(zeta), Basis::kX1)};
}

KernelValue value_via_kernel(double t, const YosidaPtr &y, const SpectralField &xi,
                             const SpectralField &v)
{
  return value_via_kernel(kernel_eigenvalues(t, y), xi, v);
}

SpectralField grad_value(const QuadraticKernel &k, const SpectralField &xi,
                         const SpectralField &v)
{
  const auto &y = *k.yosida;
  require_field(xi, y, Basis::kX1, "xi");
  require_field(v, y, Basis::kX, "v");
  std::vector<double> g(k.size());
  for (std::size_t n = 0; n < k.size(); n++)
  {
    require_invertible_p(k, n);
    const double ratio = k.q[n] / k.p[n];
    g[n] = (k.p[n] - k.q[n] * ratio) * xi[n] - ratio * v[n] / y.omega(n);
  }
  return SpectralField(xi.modes(), std::move(g), Basis::kX1);
}

SpectralField grad_value(double t, const YosidaPtr &y, const SpectralField &xi,
                         const SpectralField &v)
{
  return grad_value(kernel_eigenvalues(t, y), xi, v);
}

}  // namespace wavegroup
