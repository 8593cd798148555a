// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/yosida.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace wavegroup
{

YosidaModes::YosidaModes(ModeSetPtr modes, double mu) : modes_(std::move(modes)), mu_(mu)
{
  if (!modes_)
  {
    Fail(ErrorCode::kStructural, "Yosida modes require a mode set");
  }
  if (!std::isfinite(mu) || mu < 0.0)
  {
    Fail(ErrorCode::kArgument, "mu must be nonnegative and finite, got " + std::to_string(mu));
  }
  const auto n = modes_->size();
  omega_.resize(n);
  lambda_mu_.resize(n);
  i_mu_.resize(n);
  const double mu2 = mu * mu;
  for (std::size_t k = 0; k < n; k++)
  {
    const double lambda = modes_->lambda(k);
    const double denom = 1.0 + mu2 * lambda;
    i_mu_[k] = 1.0 / denom;
    lambda_mu_[k] = (mu == 0.0) ? lambda : lambda / denom;
    omega_[k] = std::sqrt(lambda_mu_[k]);
  }
}

double YosidaModes::concavity_horizon() const
{
  return mu_ * std::sqrt(2.0);
}

YosidaPtr build_yosida(ModeSetPtr modes, double mu)
{
  return std::make_shared<const YosidaModes>(std::move(modes), mu);
}

DiagonalOperator op_E(const YosidaModes &y)
{
  return {std::vector<double>(y.omega().begin(), y.omega().end()), Basis::kX1, Basis::kX};
}

DiagonalOperator op_E_inv(const YosidaModes &y)
{
  DiagonalOperator op{std::vector<double>(y.size()), Basis::kX, Basis::kX1};
  for (std::size_t k = 0; k < y.size(); k++)
  {
    op.eigenvalues[k] = 1.0 / y.omega(k);
  }
  return op;
}

DiagonalOperator op_I_mu(const YosidaModes &y)
{
  return {std::vector<double>(y.i_mu().begin(), y.i_mu().end()), Basis::kX1, Basis::kX1};
}

}  // namespace wavegroup
