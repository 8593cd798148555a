// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVEGROUP_CORE_WAVE_GROUP_HPP
#define WAVEGROUP_CORE_WAVE_GROUP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/action_kernel.hpp"
#include "core/spectral.hpp"
#include "core/yosida.hpp"

namespace wavegroup
{

// Horizons whose admissibility margin falls below this are rejected by default.
inline constexpr double kDefaultAdmissibilityTolerance = 1e-6;

enum class Provenance
{
  kExact,
  kPrototypeShort,
  kPrototypeLong,
};

const char *provenance_name(Provenance p);

//
// Element of the fundamental solution group acting on phase coordinates. Mode n carries
// the 2x2 block [[a11, a12], [a21, a22]] mapping (position in X1, velocity in X) to the
// same pair at time t. For the exact group this is the rotation by w_n t; the prototypes
// build the four blocks from kernel eigenvalues, so they are rotations only up to
// round-off.
//
class GroupElement
{
public:
  GroupElement(double t, YosidaPtr yosida, std::vector<double> a11, std::vector<double> a12,
               std::vector<double> a21, std::vector<double> a22, Provenance provenance);

  double t() const { return t_; }
  const YosidaPtr &yosida() const { return yosida_; }
  Provenance provenance() const { return provenance_; }
  std::size_t size() const { return a11_.size(); }

  std::span<const double> cos_block() const { return a11_; }
  std::span<const double> sin_block() const { return a12_; }
  std::span<const double> block11() const { return a11_; }
  std::span<const double> block12() const { return a12_; }
  std::span<const double> block21() const { return a21_; }
  std::span<const double> block22() const { return a22_; }

  // Largest deviation from the rotation structure: |a11^2 + a12^2 - 1|, |a22 - a11| and
  // |a21 + a12| over all modes.
  double rotation_defect() const;

  // Largest per-mode, per-block absolute difference.
  double block_discrepancy(const GroupElement &other) const;

private:
  double t_;
  YosidaPtr yosida_;
  std::vector<double> a11_;
  std::vector<double> a12_;
  std::vector<double> a21_;
  std::vector<double> a22_;
  Provenance provenance_;
};

// Minimum over modes of the distance from w_n t to the lattice (pi/2) Z. Zero at a
// resonance or an escape time.
double admissibility(double t, const YosidaModes &y);

// Throws kInadmissible naming the offending mode when the margin is below tolerance.
void require_admissible(double t, const YosidaModes &y, double tolerance);

// Nearest horizons below and above t whose margin clears ten times the tolerance.
std::vector<double> nearest_admissible(double t, const YosidaModes &y, double tolerance);

struct AdmissibilityCounterexample
{
  double s = 0.0;
  double sigma = 0.0;
  double margin_s = 0.0;
  double margin_sigma = 0.0;
  double margin_sum = 0.0;
};

// Grid search for s, sigma in (0, t_max] with both margins above delta while the margin of
// s + sigma is not. The admissible set is not closed under addition at any finite margin.
std::optional<AdmissibilityCounterexample>
find_admissibility_counterexample(const YosidaModes &y, double delta, double t_max,
                                  std::size_t grid = 400);

GroupElement exact_element(double t, const YosidaPtr &y);

// Short-horizon prototype built from the closed-form kernel; requires mu > 0 and
// 0 < |t| < mu sqrt(2).
GroupElement prototype_short(double t, const YosidaPtr &y,
                             double tolerance = kDefaultAdmissibilityTolerance);

// Number of equal subintervals used by the long-horizon construction,
// ceil(|t| / (mu sqrt(2) / 2)).
std::size_t long_horizon_segments(double t, double mu);

// Kernel at horizon t > 0 obtained by concatenating long_horizon_segments(t) copies of the
// kernel at t / n_t.
QuadraticKernel long_horizon_kernel(double t, const YosidaPtr &y);

// Long-horizon prototype defined for any admissible t (negative t by oddness of the
// kernel, t = 0 as the identity); requires mu > 0.
GroupElement prototype_long(double t, const YosidaPtr &y,
                            double tolerance = kDefaultAdmissibilityTolerance);

PhaseState propagate(const GroupElement &g, const PhaseState &state);

// ||U~_t^{mu_i} y - U_t^0 y||_Y for each mu_i. Throws kInadmissible listing every mu (0
// included) for which t is not admissible.
std::vector<double> convergence_defect(double t, const ModeSetPtr &modes,
                                       std::span<const double> mus, const PhaseState &state,
                                       double tolerance = kDefaultAdmissibilityTolerance);

// Optimal control for the short-horizon problem with terminal payoff psi_v, sampled as the
// secant controls of the trajectory obtained by propagating (xi, E grad W(xi)) with the
// exact group, so the node states are exact.
ControlPath optimal_control_path(double t, const YosidaPtr &y, const SpectralField &xi,
                                 const SpectralField &v, std::size_t steps);

}  // namespace wavegroup

#endif  // WAVEGROUP_CORE_WAVE_GROUP_HPP
