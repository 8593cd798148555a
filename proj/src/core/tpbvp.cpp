// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/tpbvp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/action_kernel.hpp"
#include "core/error.hpp"
#include "core/parallel.hpp"

namespace wavegroup::tpbvp
{

namespace
{

void require_inputs(const SpectralField &x, const SpectralField &z, const YosidaModes &y)
{
  if (!same_modes(x.modes(), y.modes()) || !same_modes(z.modes(), y.modes()))
  {
    Fail(ErrorCode::kStructural, "boundary data and Yosida modes use different mode sets");
  }
  if (x.basis() != Basis::kX1 || z.basis() != Basis::kX1)
  {
    Fail(ErrorCode::kStructural, "boundary data must be given in X1 coordinates");
  }
}

void require_admissible_with_hint(double t, const YosidaModes &y, double tolerance)
{
  try
  {
    require_admissible(t, y, tolerance);
  }
  catch (const Error &e)
  {
    std::ostringstream msg;
    msg.precision(17);
    msg << e.what();
    const auto near = nearest_admissible(t, y, tolerance);
    if (!near.empty())
    {
      msg << "; nearest admissible horizons:";
      for (double c : near)
      {
        msg << ' ' << c;
      }
    }
    Fail(ErrorCode::kInadmissible, msg.str(), e.mode());
  }
}

GroupElement group_for(double s, const YosidaPtr &y, double tolerance)
{
  return y->mu() == 0.0 ? exact_element(s, y) : prototype_long(s, y, tolerance);
}

}  // namespace

SpectralField solve(const SpectralField &x, const SpectralField &z, double t, const YosidaPtr &y,
                    double tolerance)
{
  require_inputs(x, z, *y);
  if (!(t > 0.0) || !std::isfinite(t))
  {
    Fail(ErrorCode::kArgument, "boundary value horizon must be positive and finite");
  }
  require_admissible_with_hint(t, *y, tolerance);
  const auto k = kernel_eigenvalues(t, y);
  std::vector<double> pi0(x.size());
  for (std::size_t n = 0; n < pi0.size(); n++)
  {
    pi0[n] = y->omega(n) * (k.p[n] * x[n] + k.q[n] * z[n]);
  }
  return SpectralField(x.modes(), std::move(pi0), Basis::kX);
}

double verify(const SpectralField &x, const SpectralField &z, double t, const YosidaPtr &y,
              double tolerance)
{
  const auto pi0 = solve(x, z, t, y, tolerance);
  const auto end = propagate(group_for(t, y, tolerance), PhaseState(x, pi0));
  double err = 0.0;
  for (std::size_t n = 0; n < z.size(); n++)
  {
    const double d = end.position()[n] - z[n];
    err += d * d;
  }
  return std::sqrt(err) / std::max(1.0, norm_x1(z));
}

std::vector<MuStudyRow> mu_study(const SpectralField &x, const SpectralField &z, double t,
                                 const ModeSetPtr &modes, std::span<const double> mus,
                                 double tolerance)
{
  const auto reference = solve(x, z, t, build_yosida(modes, 0.0), tolerance);
  std::vector<MuStudyRow> rows(mus.size());
  parallel_for(mus.size(), [&](std::size_t i) {
    rows[i].mu = mus[i];
    if (mus[i] == 0.0)
    {
      rows[i].error = 0.0;
      return;
    }
    const auto pi = solve(x, z, t, build_yosida(modes, mus[i]), tolerance);
    double s = 0.0;
    for (std::size_t n = 0; n < pi.size(); n++)
    {
      const double d = pi[n] - reference[n];
      s += d * d;
    }
    rows[i].error = std::sqrt(s);
  });
  return rows;
}

std::vector<TrajectorySample> propagate_samples(const PhaseState &initial, double t,
                                                const YosidaPtr &y, std::size_t samples,
                                                double tolerance, double nudge)
{
  if (samples == 0)
  {
    Fail(ErrorCode::kArgument, "trajectory needs at least one sample interval");
  }
  if (!std::isfinite(t) || t < 0.0)
  {
    Fail(ErrorCode::kArgument, "trajectory horizon must be nonnegative and finite");
  }
  std::vector<TrajectorySample> out(samples + 1);
  for (std::size_t k = 0; k <= samples; k++)
  {
    auto &sample = out[k];
    sample.requested_s = t * static_cast<double>(k) / static_cast<double>(samples);
    sample.s = sample.requested_s;
    if (sample.s == 0.0)
    {
      sample.state = initial;
      continue;
    }
    if (y->mu() > 0.0 && admissibility(sample.s, *y) < tolerance)
    {
      sample.admissible = false;
      if (nudge > 0.0)
      {
        for (double c : {sample.s + nudge, sample.s - nudge})
        {
          if (c > 0.0 && admissibility(c, *y) >= tolerance)
          {
            sample.s = c;
            sample.admissible = true;
            sample.nudged = true;
            break;
          }
        }
      }
      if (!sample.admissible)
      {
        continue;
      }
    }
    sample.state = propagate(group_for(sample.s, y, tolerance), initial);
  }
  return out;
}

std::vector<TrajectorySample> trajectory(const SpectralField &x, const SpectralField &z, double t,
                                         const YosidaPtr &y, std::size_t samples,
                                         double tolerance)
{
  const auto pi0 = solve(x, z, t, y, tolerance);
  return propagate_samples(PhaseState(x, pi0), t, y, samples, tolerance, 0.0);
}

double energy_drift(std::span<const TrajectorySample> samples)
{
  std::optional<double> e0;
  double drift = 0.0;
  for (const auto &s : samples)
  {
    if (!s.state)
    {
      continue;
    }
    const double e = energy(*s.state);
    if (!e0)
    {
      e0 = e;
      continue;
    }
    const double scale = *e0 > 0.0 ? *e0 : 1.0;
    drift = std::max(drift, std::abs(e - *e0) / scale);
  }
  return drift;
}

}  // namespace wavegroup::tpbvp
