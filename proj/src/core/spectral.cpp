// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/spectral.hpp"

#include <cmath>
#include <set>

#include "core/error.hpp"

namespace wavegroup
{

std::string ModeLabel::to_string() const
{
  std::string out;
  for (std::size_t i = 0; i < index.size(); i++)
  {
    if (i > 0)
    {
      out += ':';
    }
    out += std::to_string(index[i]);
  }
  return out;
}

ModeSet::ModeSet(std::vector<double> lambdas, std::vector<ModeLabel> labels)
  : lambdas_(std::move(lambdas)), labels_(std::move(labels))
{
  if (lambdas_.empty())
  {
    Fail(ErrorCode::kStructural, "mode set must contain at least one mode");
  }
  if (labels_.empty())
  {
    labels_.reserve(lambdas_.size());
    for (std::size_t k = 0; k < lambdas_.size(); k++)
    {
      labels_.push_back({{static_cast<int>(k + 1)}});
    }
  }
  if (labels_.size() != lambdas_.size())
  {
    Fail(ErrorCode::kStructural, "mode set has " + std::to_string(lambdas_.size()) +
                                     " eigenvalues but " + std::to_string(labels_.size()) +
                                     " labels");
  }
  for (std::size_t k = 0; k < lambdas_.size(); k++)
  {
    if (!std::isfinite(lambdas_[k]) || lambdas_[k] <= 0.0)
    {
      Fail(ErrorCode::kStructural, "eigenvalue of mode " + std::to_string(k) +
                                       " is not strictly positive and finite", k);
    }
    if (k > 0 && lambdas_[k] < lambdas_[k - 1])
    {
      Fail(ErrorCode::kStructural, "eigenvalues must be nondecreasing (mode " +
                                       std::to_string(k) + ")", k);
    }
  }
  std::set<ModeLabel> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size())
  {
    Fail(ErrorCode::kStructural, "mode labels must be pairwise distinct");
  }
}

ModeSetPtr make_mode_set(std::vector<double> lambdas, std::vector<ModeLabel> labels)
{
  return std::make_shared<const ModeSet>(std::move(lambdas), std::move(labels));
}

bool same_modes(const ModeSetPtr &a, const ModeSetPtr &b)
{
  if (!a || !b)
  {
    return false;
  }
  return a == b || *a == *b;
}

const char *basis_name(Basis basis)
{
  return basis == Basis::kX1 ? "X1" : "X";
}

SpectralField::SpectralField(ModeSetPtr modes, std::vector<double> coeffs, Basis basis)
  : modes_(std::move(modes)), coeffs_(std::move(coeffs)), basis_(basis)
{
  if (!modes_)
  {
    Fail(ErrorCode::kStructural, "spectral field requires a mode set");
  }
  if (coeffs_.size() != modes_->size())
  {
    Fail(ErrorCode::kStructural, "spectral field has " + std::to_string(coeffs_.size()) +
                                     " coefficients for " + std::to_string(modes_->size()) +
                                     " modes");
  }
  for (std::size_t k = 0; k < coeffs_.size(); k++)
  {
    if (!std::isfinite(coeffs_[k]))
    {
      Fail(ErrorCode::kStructural, "coefficient " + std::to_string(k) + " is not finite", k);
    }
  }
}

SpectralField SpectralField::zero(ModeSetPtr modes, Basis basis)
{
  const auto n = modes ? modes->size() : 0;
  return SpectralField(std::move(modes), std::vector<double>(n, 0.0), basis);
}

SpectralField SpectralField::unit(ModeSetPtr modes, std::size_t k, Basis basis)
{
  const auto n = modes ? modes->size() : 0;
  if (k >= n)
  {
    Fail(ErrorCode::kArgument, "unit field index out of range");
  }
  std::vector<double> c(n, 0.0);
  c[k] = 1.0;
  return SpectralField(std::move(modes), std::move(c), basis);
}

PhaseState::PhaseState(SpectralField position, SpectralField velocity)
  : position_(std::move(position)), velocity_(std::move(velocity))
{
  if (position_.basis() != Basis::kX1 || velocity_.basis() != Basis::kX)
  {
    Fail(ErrorCode::kStructural,
         "phase state expects an X1 position and an X velocity");
  }
  if (!same_modes(position_.modes(), velocity_.modes()))
  {
    Fail(ErrorCode::kStructural, "position and velocity use different mode sets");
  }
}

PhaseState PhaseState::zero(ModeSetPtr modes)
{
  return PhaseState(SpectralField::zero(modes, Basis::kX1),
                    SpectralField::zero(modes, Basis::kX));
}

namespace
{

void require_same(const SpectralField &a, const SpectralField &b)
{
  if (!same_modes(a.modes(), b.modes()))
  {
    Fail(ErrorCode::kStructural, "fields use different mode sets");
  }
}

double sum_squares(std::span<const double> c)
{
  double s = 0.0;
  for (double v : c)
  {
    s += v * v;
  }
  return s;
}

}  // namespace

double inner_x1(const SpectralField &a, const SpectralField &b)
{
  require_same(a, b);
  if (a.basis() != Basis::kX1 || b.basis() != Basis::kX1)
  {
    Fail(ErrorCode::kStructural, "inner_x1 expects X1 coordinates");
  }
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); k++)
  {
    s += a[k] * b[k];
  }
  return s;
}

double norm_x1(const SpectralField &field)
{
  return std::sqrt(inner_x1(field, field));
}

double norm_x(const SpectralField &field)
{
  if (field.basis() != Basis::kX)
  {
    Fail(ErrorCode::kStructural, "norm_x expects X coordinates");
  }
  return std::sqrt(sum_squares(field.coeffs()));
}

SpectralField x1_to_x_coeffs(const SpectralField &field)
{
  if (field.basis() != Basis::kX1)
  {
    Fail(ErrorCode::kStructural, "x1_to_x_coeffs expects X1 coordinates");
  }
  std::vector<double> c(field.size());
  for (std::size_t k = 0; k < c.size(); k++)
  {
    c[k] = field[k] / std::sqrt(field.modes()->lambda(k));
  }
  return SpectralField(field.modes(), std::move(c), Basis::kX);
}

SpectralField x_to_x1_coeffs(const SpectralField &field)
{
  if (field.basis() != Basis::kX)
  {
    Fail(ErrorCode::kStructural, "x_to_x1_coeffs expects X coordinates");
  }
  std::vector<double> c(field.size());
  for (std::size_t k = 0; k < c.size(); k++)
  {
    c[k] = field[k] * std::sqrt(field.modes()->lambda(k));
  }
  return SpectralField(field.modes(), std::move(c), Basis::kX1);
}

double norm_y(const PhaseState &state)
{
  return std::sqrt(sum_squares(state.position().coeffs()) +
                   sum_squares(state.velocity().coeffs()));
}

double energy(const PhaseState &state)
{
  return 0.5 * sum_squares(state.position().coeffs()) +
         0.5 * sum_squares(state.velocity().coeffs());
}

std::vector<double> apply_diagonal(const DiagonalOperator &op, std::span<const double> coeffs)
{
  if (coeffs.size() != op.eigenvalues.size())
  {
    Fail(ErrorCode::kStructural, "diagonal operator has " +
                                     std::to_string(op.eigenvalues.size()) +
                                     " eigenvalues, input has " +
                                     std::to_string(coeffs.size()) + " coefficients");
  }
  std::vector<double> out(coeffs.size());
  for (std::size_t k = 0; k < out.size(); k++)
  {
    out[k] = op.eigenvalues[k] * coeffs[k];
  }
  return out;
}

SpectralField apply_diagonal(const DiagonalOperator &op, const SpectralField &field)
{
  if (field.basis() != op.domain)
  {
    Fail(ErrorCode::kStructural, std::string("operator expects ") + basis_name(op.domain) +
                                     " coordinates, got " + basis_name(field.basis()));
  }
  return SpectralField(field.modes(), apply_diagonal(op, field.coeffs()), op.codomain);
}

}  // namespace wavegroup
