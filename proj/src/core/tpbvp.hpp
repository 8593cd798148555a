// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVEGROUP_CORE_TPBVP_HPP
#define WAVEGROUP_CORE_TPBVP_HPP

#include <optional>
#include <span>
#include <vector>

#include "core/spectral.hpp"
#include "core/wave_group.hpp"
#include "core/yosida.hpp"

namespace wavegroup::tpbvp
{

// Initial velocity steering x(0) = x to x(t) = z, in X coordinates:
//   pi_0 = E_mu (P_t x + Q_t z),
// which at mu = 0 is Lambda (P_t x + Q_t z). Throws kInadmissible (with the nearest
// admissible horizons in the message) when t is within tolerance of a resonance.
SpectralField solve(const SpectralField &x, const SpectralField &z, double t, const YosidaPtr &y,
                    double tolerance = kDefaultAdmissibilityTolerance);

// Propagates (x, solve(...)) to horizon t, with the exact group at mu = 0 and the
// long-horizon prototype otherwise, and returns ||x_t - z||_1 / max(1, ||z||_1).
double verify(const SpectralField &x, const SpectralField &z, double t, const YosidaPtr &y,
              double tolerance = kDefaultAdmissibilityTolerance);

struct MuStudyRow
{
  double mu = 0.0;
  double error = 0.0;  // ||pi_0^mu - pi_0^0|| in X
};

std::vector<MuStudyRow> mu_study(const SpectralField &x, const SpectralField &z, double t,
                                 const ModeSetPtr &modes, std::span<const double> mus,
                                 double tolerance = kDefaultAdmissibilityTolerance);

struct TrajectorySample
{
  double requested_s = 0.0;
  double s = 0.0;           // time actually used (differs from requested_s when nudged)
  bool admissible = true;
  bool nudged = false;
  std::optional<PhaseState> state;
};

// States at s_k = k t / samples, k = 0..samples. Sample times that are not admissible for
// the long-horizon prototype are moved by +-nudge when that clears the tolerance, and are
// otherwise flagged and left without a state. mu = 0 uses the exact group throughout.
std::vector<TrajectorySample> propagate_samples(const PhaseState &initial, double t,
                                                const YosidaPtr &y, std::size_t samples,
                                                double tolerance = kDefaultAdmissibilityTolerance,
                                                double nudge = 0.0);

std::vector<TrajectorySample> trajectory(const SpectralField &x, const SpectralField &z, double t,
                                         const YosidaPtr &y, std::size_t samples,
                                         double tolerance = kDefaultAdmissibilityTolerance);

// Largest |E(s) - E(0)| / E(0) over the samples that carry a state (absolute when E(0) = 0).
double energy_drift(std::span<const TrajectorySample> samples);

}  // namespace wavegroup::tpbvp

#endif  // WAVEGROUP_CORE_TPBVP_HPP
