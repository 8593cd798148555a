// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVEGROUP_CORE_DOMAINS_HPP
#define WAVEGROUP_CORE_DOMAINS_HPP

#include <functional>
#include <span>
#include <vector>

#include "core/spectral.hpp"

namespace wavegroup::domains
{

// Dirichlet Laplacians on the unit interval and the unit square.
//   interval: lambda_n = n^2 pi^2,          phi_n(x) = sqrt(2) / sqrt(lambda_n) sin(n pi x)
//   square:   lambda_nm = (n^2 + m^2) pi^2, phi_nm(x) = 2 / sqrt(lambda_nm) sin(n pi x1) sin(m pi x2)
// Both families are orthonormal in the energy inner product.
enum class DomainKind
{
  kInterval,
  kSquare,
};

const char *domain_name(DomainKind kind);

struct DomainBasis
{
  DomainKind kind = DomainKind::kSquare;
  // Largest index per axis that build_modes may use; 0 leaves it unbounded.
  int cutoff = 0;
  // Midpoint quadrature points per axis for project; 0 selects four times the highest index.
  int quadrature_points = 0;

  int dimension() const { return kind == DomainKind::kInterval ? 1 : 2; }
};

struct GridPoint
{
  double x1 = 0.0;
  double x2 = 0.0;  // ignored on the interval
};

// First `count` eigenpairs by ascending lambda, ties broken by the lexicographic order of
// the multi-index. Throws kArgument for count < 1 or when the cutoff admits fewer modes.
ModeSetPtr build_modes(const DomainBasis &basis, std::size_t count);

double basis_function(const DomainBasis &basis, const ModeLabel &label, const GridPoint &point);

// Sum of c_k phi_k at every point. Throws kArgument for points outside the closed domain.
std::vector<double> evaluate_field(const SpectralField &field, const DomainBasis &basis,
                                   std::span<const GridPoint> points);

// Highest per-axis index appearing in the mode labels.
int max_mode_index(const ModeSet &modes);

// Smallest accepted quadrature resolution (twice the highest index) and the default (four
// times).
int required_resolution(const ModeSet &modes);
int default_resolution(const ModeSet &modes);

// Cell midpoints (i + 1/2) / q per axis; on the square the second coordinate runs fastest.
std::vector<GridPoint> midpoint_grid(const DomainBasis &basis, int q);

// Projects samples taken on midpoint_grid(basis, q) onto the energy-orthonormal basis:
// c_k = lambda_k * (midpoint rule for the integral of f phi_k). Throws kQuadrature naming the
// required resolution when q is too small.
SpectralField project_samples(std::span<const double> samples, int q, const DomainBasis &basis,
                              const ModeSetPtr &modes);

// Samples f on the midpoint grid chosen by basis.quadrature_points and projects.
SpectralField project(const std::function<double(const GridPoint &)> &f, const DomainBasis &basis,
                      const ModeSetPtr &modes);

// Stand-in terminal state for the square demo, a Dirichlet-compatible centered bump
//   sin(pi x1) sin(pi x2) exp(-8 ((x1 - 1/2)^2 + (x2 - 1/2)^2)),
// and sin(pi x) exp(-8 (x - 1/2)^2) on the interval.
double default_terminal_function(const DomainBasis &basis, const GridPoint &point);
SpectralField default_terminal_state(const DomainBasis &basis, const ModeSetPtr &modes);

}  // namespace wavegroup::domains

#endif  // WAVEGROUP_CORE_DOMAINS_HPP
