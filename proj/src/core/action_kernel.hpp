// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVEGROUP_CORE_ACTION_KERNEL_HPP
#define WAVEGROUP_CORE_ACTION_KERNEL_HPP

#include <span>
#include <vector>

#include "core/spectral.hpp"
#include "core/yosida.hpp"

namespace wavegroup
{

// A mode is treated as resonant when its phase lies within this (scaled) distance of a
// pole of the trigonometric closed forms.
inline constexpr double kResonanceTolerance = 1e-9;

// Distance from angle to the nearest point of the lattice period * Z.
double lattice_distance(double angle, double period);

//
// Bivariate quadratic kernel of the idempotent (max-plus) convolution representation,
//
//   G_t(xi, zeta) = 1/2 sum_n [ p_n (xi_n^2 + zeta_n^2) + 2 q_n xi_n zeta_n ],
//
// with p_n = -1 / (w_n tan(w_n t)) and q_n = 1 / (w_n sin(w_n t)) in X1 coordinates.
//
struct QuadraticKernel
{
  double t = 0.0;
  YosidaPtr yosida;
  std::vector<double> p;
  std::vector<double> q;

  std::size_t size() const { return p.size(); }
};

// Closed-form kernel at horizon t (any nonzero sign). Throws kResonance naming the first
// mode whose phase w_n t sits on a multiple of pi.
QuadraticKernel kernel_eigenvalues(double t, const YosidaPtr &y);

double eval_G(const QuadraticKernel &k, const SpectralField &xi, const SpectralField &zeta);

// Schur complement joining horizons s and sigma:
//   p = p_s - q_s^2 / (p_s + p_sigma),  q = -q_s q_sigma / (p_s + p_sigma).
// Throws kConcatResonance when the denominator vanishes for some mode.
QuadraticKernel concat_kernel(const QuadraticKernel &ks, const QuadraticKernel &ksigma);

// Stationary intermediate state of G_s(xi, .) + G_sigma(., zeta).
SpectralField stat_intermediate(const QuadraticKernel &ks, const QuadraticKernel &ksigma,
                                const SpectralField &xi, const SpectralField &zeta);

struct KernelBounds
{
  double sup_p = 0.0;
  double sup_q = 0.0;
};

KernelBounds kernel_bound_check(const QuadraticKernel &k);

// Auxiliary value function S_t(xi, zeta) = 1/2<xi, X xi> + <xi, Y zeta> + 1/2<zeta, Z zeta>
// with terminal cost 1/2 <x - z, M (x - z)>_1, M diagonal and negative.
struct AuxValueEigens
{
  double t = 0.0;
  double mu = 0.0;
  std::vector<double> m;
  std::vector<double> theta;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> z;
};

// Magnitude bound tan(sqrt 2) / w_1^1 that every entry of M must exceed.
double m_magnitude_bound(const YosidaModes &y);

// Constant M at twice the required magnitude.
std::vector<double> default_m(const YosidaModes &y);

// theta = atan(-1 / (omega m)).
double aux_angle(double omega, double m);

// Requires mu in (0, 1] and t in (0, mu sqrt 2) (kHorizon otherwise) and every m_n finite
// with |m_n| above m_magnitude_bound (kArgument otherwise).
AuxValueEigens aux_value_eigenvalues(double t, const YosidaModes &y, std::span<const double> m);

struct RiccatiTriple
{
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Right-hand sides (1 + l x^2, l x y, l y^2) of the scalar Riccati system.
RiccatiTriple riccati_rhs(double lambda_mu, double x, double y);

// Absolute per-mode differences between central-difference derivatives of (x, y, z) at t
// and the Riccati right-hand sides.
std::vector<RiccatiTriple> riccati_residual(double t, const YosidaModes &y,
                                            std::span<const double> m, double h);

struct SchurReduced
{
  std::vector<double> x_hat;
  std::vector<double> y_hat;
  std::vector<double> z_hat;
};

// Per-mode semiconvex dual reduction; throws kCoercivity when some z_n - m_n <= 0.
SchurReduced schur_reduce(const AuxValueEigens &a);

// Piecewise-constant control on a uniform partition of [0, t].
struct ControlPath
{
  double t = 0.0;
  std::vector<SpectralField> w;

  std::size_t steps() const { return w.size(); }
  double step() const { return t / static_cast<double>(w.size()); }
};

// Discretized payoff: trapezoidal integral of V(x_s) - T_mu(w_s) plus the linear terminal
// payoff <x_t, E_mu^-1 v>_1, with x_{k+1} = x_k + h w_k. v is given in X coordinates.
double eval_action(const SpectralField &x0, const ControlPath &path, const YosidaModes &y,
                   const SpectralField &v);

struct KernelValue
{
  double value = 0.0;
  SpectralField zeta_star;
};

// Value of the linear-terminal-payoff problem through the kernel: the maximizer
// zeta* = -P^-1 (Q xi + E^-1 v) and W = G(xi, zeta*) + psi_v(zeta*). Throws kEscapeTime
// when P is numerically singular.
KernelValue value_via_kernel(const QuadraticKernel &k, const SpectralField &xi,
                             const SpectralField &v);
KernelValue value_via_kernel(double t, const YosidaPtr &y, const SpectralField &xi,
                             const SpectralField &v);

// grad W = (P - Q P^-1 Q) xi - Q P^-1 E^-1 v, in X1 coordinates.
SpectralField grad_value(const QuadraticKernel &k, const SpectralField &xi,
                         const SpectralField &v);
SpectralField grad_value(double t, const YosidaPtr &y, const SpectralField &xi,
                         const SpectralField &v);

}  // namespace wavegroup

#endif  // WAVEGROUP_CORE_ACTION_KERNEL_HPP
