// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/wave_group.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace wavegroup
{

namespace
{

constexpr double kHalfPi = std::numbers::pi / 2.0;

GroupElement blocks_from_kernel(const QuadraticKernel &k, Provenance provenance)
{
  const auto &y = *k.yosida;
  const auto n_modes = k.size();
  std::vector<double> a11(n_modes), a12(n_modes), a21(n_modes), a22(n_modes);
  for (std::size_t n = 0; n < n_modes; n++)
  {
    const double w = y.omega(n);
    const double ratio = k.p[n] / k.q[n];
    // -Q^-1 P, Q^-1 E^-1, -E Q (I - (Q^-1 P)^2), -E P Q^-1 E^-1.
    a11[n] = -ratio;
    a12[n] = 1.0 / (w * k.q[n]);
    a21[n] = -w * k.q[n] * (1.0 - ratio * ratio);
    a22[n] = -ratio;
  }
  return GroupElement(k.t, k.yosida, std::move(a11), std::move(a12), std::move(a21),
                      std::move(a22), provenance);
}

GroupElement identity_element(const YosidaPtr &y, Provenance provenance)
{
  const auto n = y->size();
  return GroupElement(0.0, y, std::vector<double>(n, 1.0), std::vector<double>(n, 0.0),
                      std::vector<double>(n, 0.0), std::vector<double>(n, 1.0), provenance);
}

void require_positive_mu(const YosidaModes &y, const char *what)
{
  if (!(y.mu() > 0.0))
  {
    Fail(ErrorCode::kArgument, std::string(what) + " requires mu > 0");
  }
}

std::size_t worst_mode(double t, const YosidaModes &y)
{
  std::size_t worst = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < y.size(); n++)
  {
    const double d = lattice_distance(y.omega(n) * t, kHalfPi);
    if (d < best)
    {
      best = d;
      worst = n;
    }
  }
  return worst;
}

}  // namespace

const char *provenance_name(Provenance p)
{
  switch (p)
  {
    case Provenance::kExact:
      return "exact";
    case Provenance::kPrototypeShort:
      return "prototype_short";
    case Provenance::kPrototypeLong:
      return "prototype_long";
  }
  return "unknown";
}

GroupElement::GroupElement(double t, YosidaPtr yosida, std::vector<double> a11,
                           std::vector<double> a12, std::vector<double> a21,
                           std::vector<double> a22, Provenance provenance)
  : t_(t), yosida_(std::move(yosida)), a11_(std::move(a11)), a12_(std::move(a12)),
    a21_(std::move(a21)), a22_(std::move(a22)), provenance_(provenance)
{
  const auto n = yosida_ ? yosida_->size() : 0;
  if (a11_.size() != n || a12_.size() != n || a21_.size() != n || a22_.size() != n)
  {
    Fail(ErrorCode::kStructural, "group element blocks do not match the mode count");
  }
}

double GroupElement::rotation_defect() const
{
  double d = 0.0;
  for (std::size_t n = 0; n < size(); n++)
  {
    d = std::max(d, std::abs(a11_[n] * a11_[n] + a12_[n] * a12_[n] - 1.0));
    d = std::max(d, std::abs(a22_[n] - a11_[n]));
    d = std::max(d, std::abs(a21_[n] + a12_[n]));
  }
  return d;
}

double GroupElement::block_discrepancy(const GroupElement &other) const
{
  if (other.size() != size())
  {
    Fail(ErrorCode::kStructural, "group elements have different mode counts");
  }
  double d = 0.0;
  for (std::size_t n = 0; n < size(); n++)
  {
    d = std::max({d, std::abs(a11_[n] - other.a11_[n]), std::abs(a12_[n] - other.a12_[n]),
                  std::abs(a21_[n] - other.a21_[n]), std::abs(a22_[n] - other.a22_[n])});
  }
  return d;
}

double admissibility(double t, const YosidaModes &y)
{
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < y.size(); n++)
  {
    margin = std::min(margin, lattice_distance(y.omega(n) * t, kHalfPi));
  }
  return margin;
}

void require_admissible(double t, const YosidaModes &y, double tolerance)
{
  const double margin = admissibility(t, y);
  if (!(margin >= tolerance))
  {
    const auto n = worst_mode(t, y);
    std::ostringstream msg;
    msg.precision(17);
    msg << "horizon " << t << " is not admissible for mu = " << y.mu() << ": margin " << margin
        << " < " << tolerance << " at mode " << n << " (" << y.modes()->label(n).to_string()
        << ")";
    Fail(ErrorCode::kInadmissible, msg.str(), n);
  }
}

std::vector<double> nearest_admissible(double t, const YosidaModes &y, double tolerance)
{
  const double target = 10.0 * tolerance;
  const double step = std::max(1e-5, 1e-4 * std::abs(t));
  std::vector<double> out;
  for (int dir : {-1, 1})
  {
    for (int k = 1; k <= 100000; k++)
    {
      const double c = t + dir * k * step;
      if (c <= 0.0)
      {
        break;
      }
      if (admissibility(c, y) >= target)
      {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

std::optional<AdmissibilityCounterexample>
find_admissibility_counterexample(const YosidaModes &y, double delta, double t_max,
                                  std::size_t grid)
{
  for (std::size_t i = 1; i <= grid; i++)
  {
    const double s = t_max * static_cast<double>(i) / static_cast<double>(grid);
    const double ms = admissibility(s, y);
    if (!(ms > delta))
    {
      continue;
    }
    for (std::size_t j = i; j <= grid; j++)
    {
      const double sigma = t_max * static_cast<double>(j) / static_cast<double>(grid);
      const double msig = admissibility(sigma, y);
      if (!(msig > delta))
      {
        continue;
      }
      const double msum = admissibility(s + sigma, y);
      if (!(msum > delta))
      {
        return AdmissibilityCounterexample{s, sigma, ms, msig, msum};
      }
    }
  }
  return std::nullopt;
}

GroupElement exact_element(double t, const YosidaPtr &y)
{
  if (!y)
  {
    Fail(ErrorCode::kStructural, "group element requires Yosida modes");
  }
  if (!std::isfinite(t))
  {
    Fail(ErrorCode::kArgument, "horizon must be finite");
  }
  const auto n_modes = y->size();
  std::vector<double> c(n_modes), s(n_modes), ms(n_modes);
  for (std::size_t n = 0; n < n_modes; n++)
  {
    const double phase = y->omega(n) * t;
    c[n] = std::cos(phase);
    s[n] = std::sin(phase);
    ms[n] = -s[n];
  }
  auto c2 = c;
  return GroupElement(t, y, std::move(c), std::move(s), std::move(ms), std::move(c2),
                      Provenance::kExact);
}

GroupElement prototype_short(double t, const YosidaPtr &y, double tolerance)
{
  require_positive_mu(*y, "short-horizon prototype");
  if (t == 0.0)
  {
    return identity_element(y, Provenance::kPrototypeShort);
  }
  if (!(std::abs(t) < y->concavity_horizon()))
  {
    Fail(ErrorCode::kHorizon, "short-horizon prototype requires |t| < " +
                                  std::to_string(y->concavity_horizon()) + ", got " +
                                  std::to_string(t));
  }
  require_admissible(std::abs(t), *y, tolerance);
  return blocks_from_kernel(kernel_eigenvalues(t, y), Provenance::kPrototypeShort);
}

std::size_t long_horizon_segments(double t, double mu)
{
  if (!(mu > 0.0))
  {
    Fail(ErrorCode::kArgument, "long-horizon construction requires mu > 0");
  }
  const double tau_max = 0.5 * mu * std::numbers::sqrt2;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::abs(t) / tau_max)));
}

QuadraticKernel long_horizon_kernel(double t, const YosidaPtr &y)
{
  require_positive_mu(*y, "long-horizon kernel");
  if (!(t > 0.0) || !std::isfinite(t))
  {
    Fail(ErrorCode::kArgument, "long-horizon kernel requires a positive finite horizon");
  }
  const auto segments = long_horizon_segments(t, y->mu());
  const double tau = t / static_cast<double>(segments);
  // Balanced splitting keeps every intermediate horizon a multiple of tau but needs only
  // O(log n) joins, so a partial horizon that happens to sit near a pole contaminates far
  // fewer steps than a left fold would.
  std::map<std::size_t, QuadraticKernel> memo{{1, kernel_eigenvalues(tau, y)}};
  std::function<const QuadraticKernel &(std::size_t)> build =
      [&](std::size_t j) -> const QuadraticKernel & {
    if (auto it = memo.find(j); it != memo.end())
    {
      return it->second;
    }
    const std::size_t half = j / 2;
    auto joined = concat_kernel(build(j - half), build(half));
    return memo.emplace(j, std::move(joined)).first->second;
  };
  auto acc = build(segments);
  acc.t = t;
  return acc;
}

GroupElement prototype_long(double t, const YosidaPtr &y, double tolerance)
{
  require_positive_mu(*y, "long-horizon prototype");
  if (t == 0.0)
  {
    return identity_element(y, Provenance::kPrototypeLong);
  }
  require_admissible(std::abs(t), *y, tolerance);
  auto k = long_horizon_kernel(std::abs(t), y);
  if (t < 0.0)
  {
    // p and q are odd in t.
    for (std::size_t n = 0; n < k.size(); n++)
    {
      k.p[n] = -k.p[n];
      k.q[n] = -k.q[n];
    }
    k.t = t;
  }
  return blocks_from_kernel(k, Provenance::kPrototypeLong);
}

PhaseState propagate(const GroupElement &g, const PhaseState &state)
{
  if (!same_modes(g.yosida()->modes(), state.modes()))
  {
    Fail(ErrorCode::kStructural, "group element and state use different mode sets");
  }
  const auto n_modes = g.size();
  std::vector<double> pos(n_modes), vel(n_modes);
  const auto &x = state.position();
  const auto &p = state.velocity();
  const auto a11 = g.block11();
  const auto a12 = g.block12();
  const auto a21 = g.block21();
  const auto a22 = g.block22();
  for (std::size_t n = 0; n < n_modes; n++)
  {
    pos[n] = a11[n] * x[n] + a12[n] * p[n];
    vel[n] = a21[n] * x[n] + a22[n] * p[n];
  }
  return PhaseState(SpectralField(state.modes(), std::move(pos), Basis::kX1),
                    SpectralField(state.modes(), std::move(vel), Basis::kX));
}

std::vector<double> convergence_defect(double t, const ModeSetPtr &modes,
                                       std::span<const double> mus, const PhaseState &state,
                                       double tolerance)
{
  if (!same_modes(modes, state.modes()))
  {
    Fail(ErrorCode::kStructural, "state uses a different mode set");
  }
  const auto exact_modes = build_yosida(modes, 0.0);
  std::vector<YosidaPtr> approx;
  approx.reserve(mus.size());
  std::vector<double> offending;
  if (admissibility(t, *exact_modes) < tolerance)
  {
    offending.push_back(0.0);
  }
  for (double mu : mus)
  {
    if (!(mu > 0.0))
    {
      Fail(ErrorCode::kArgument, "convergence sweep requires positive mu values");
    }
    approx.push_back(build_yosida(modes, mu));
    if (admissibility(t, *approx.back()) < tolerance)
    {
      offending.push_back(mu);
    }
  }
  if (!offending.empty())
  {
    std::ostringstream msg;
    msg.precision(17);
    msg << "horizon " << t << " is not admissible for mu =";
    for (double mu : offending)
    {
      msg << ' ' << mu;
    }
    Fail(ErrorCode::kInadmissible, msg.str());
  }

  const auto reference = propagate(exact_element(t, exact_modes), state);
  std::vector<double> defects(mus.size());
  parallel_for(mus.size(), [&](std::size_t i) {
    const auto moved = propagate(prototype_long(t, approx[i], tolerance), state);
    double s = 0.0;
    for (std::size_t n = 0; n < modes->size(); n++)
    {
      const double dx = moved.position()[n] - reference.position()[n];
      const double dp = moved.velocity()[n] - reference.velocity()[n];
      s += dx * dx + dp * dp;
    }
    defects[i] = std::sqrt(s);
  });
  return defects;
}

ControlPath optimal_control_path(double t, const YosidaPtr &y, const SpectralField &xi,
                                 const SpectralField &v, std::size_t steps)
{
  if (steps == 0 || !(t > 0.0))
  {
    Fail(ErrorCode::kArgument, "optimal control path needs t > 0 and at least one step");
  }
  const auto pi0 = apply_diagonal(op_E(*y), grad_value(t, y, xi, v));
  const PhaseState initial(xi, pi0);
  const double h = t / static_cast<double>(steps);

  ControlPath path{t, {}};
  path.w.reserve(steps);
  auto prev = initial.position();
  for (std::size_t k = 1; k <= steps; k++)
  {
    const auto next = propagate(exact_element(h * static_cast<double>(k), y), initial).position();
    std::vector<double> w(xi.size());
    for (std::size_t n = 0; n < w.size(); n++)
    {
      w[n] = (next[n] - prev[n]) / h;
    }
    path.w.emplace_back(xi.modes(), std::move(w), Basis::kX1);
    prev = next;
  }
  return path;
}

}  // namespace wavegroup
