// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVEGROUP_CORE_YOSIDA_HPP
#define WAVEGROUP_CORE_YOSIDA_HPP

#include <memory>
#include <span>
#include <vector>

#include "core/spectral.hpp"

namespace wavegroup
{

// Per-mode quantities of the Yosida-regularized generator with parameter mu:
//   lambda_mu = lambda / (1 + mu^2 lambda),  omega_mu = sqrt(lambda_mu),
//   i_mu = 1 / (1 + mu^2 lambda).
// mu = 0 reproduces the unregularized frequencies sqrt(lambda) exactly. For mu > 0 every
// frequency lies strictly below 1/mu.
class YosidaModes
{
public:
  YosidaModes(ModeSetPtr modes, double mu);

  double mu() const { return mu_; }
  const ModeSetPtr &modes() const { return modes_; }
  std::size_t size() const { return omega_.size(); }

  std::span<const double> omega() const { return omega_; }
  std::span<const double> lambda_mu() const { return lambda_mu_; }
  std::span<const double> i_mu() const { return i_mu_; }
  double omega(std::size_t k) const { return omega_[k]; }
  double lambda_mu(std::size_t k) const { return lambda_mu_[k]; }

  // Horizon below which the regularized payoff is concave, mu * sqrt(2).
  double concavity_horizon() const;

private:
  ModeSetPtr modes_;
  double mu_;
  std::vector<double> omega_;
  std::vector<double> lambda_mu_;
  std::vector<double> i_mu_;
};

using YosidaPtr = std::shared_ptr<const YosidaModes>;

// Throws kArgument for negative or non-finite mu.
YosidaPtr build_yosida(ModeSetPtr modes, double mu);

// E_mu: X1 -> X with eigenvalues omega_mu.
DiagonalOperator op_E(const YosidaModes &y);

// E_mu^-1: X -> X1 with eigenvalues 1 / omega_mu.
DiagonalOperator op_E_inv(const YosidaModes &y);

// I_mu on X1 with eigenvalues 1 / (1 + mu^2 lambda).
DiagonalOperator op_I_mu(const YosidaModes &y);

}  // namespace wavegroup

#endif  // WAVEGROUP_CORE_YOSIDA_HPP
