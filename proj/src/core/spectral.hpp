// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVEGROUP_CORE_SPECTRAL_HPP
#define WAVEGROUP_CORE_SPECTRAL_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace wavegroup
{

//
// Truncated eigenbasis of a positive self-adjoint operator with compact inverse.
//
// Positions live in the energy space X1 (inner product <L^1/2 x, L^1/2 y>) and are stored
// as coefficients against the X1-orthonormal eigenvectors. Velocities live in the base
// space X and are stored against the X-orthonormal eigenvectors, which are the X1 ones
// scaled by sqrt(lambda). Every operator in the library is diagonal in this pair of bases.
//

// Multi-index of an eigenpair, e.g. (n) on an interval or (n, m) on a square.
struct ModeLabel
{
  std::vector<int> index;

  // "3" or "1:2"; used as the mode_label column of CSV output.
  std::string to_string() const;

  auto operator<=>(const ModeLabel &) const = default;
};

class ModeSet
{
public:
  // Throws kStructural unless lambdas are positive, finite and nondecreasing and labels are
  // pairwise distinct. Empty labels are replaced by (1), (2), ...
  ModeSet(std::vector<double> lambdas, std::vector<ModeLabel> labels = {});

  std::size_t size() const { return lambdas_.size(); }
  std::span<const double> lambdas() const { return lambdas_; }
  double lambda(std::size_t k) const { return lambdas_[k]; }
  const std::vector<ModeLabel> &labels() const { return labels_; }
  const ModeLabel &label(std::size_t k) const { return labels_[k]; }

  bool operator==(const ModeSet &other) const = default;

private:
  std::vector<double> lambdas_;
  std::vector<ModeLabel> labels_;
};

using ModeSetPtr = std::shared_ptr<const ModeSet>;

ModeSetPtr make_mode_set(std::vector<double> lambdas, std::vector<ModeLabel> labels = {});

// True when both pointers refer to the same (or an identical) mode set.
bool same_modes(const ModeSetPtr &a, const ModeSetPtr &b);

enum class Basis
{
  kX1,  // X1-orthonormal coordinates (positions)
  kX,   // X-orthonormal coordinates (velocities)
};

const char *basis_name(Basis basis);

class SpectralField
{
public:
  SpectralField(ModeSetPtr modes, std::vector<double> coeffs, Basis basis = Basis::kX1);

  static SpectralField zero(ModeSetPtr modes, Basis basis = Basis::kX1);
  static SpectralField unit(ModeSetPtr modes, std::size_t k, Basis basis = Basis::kX1);

  const ModeSetPtr &modes() const { return modes_; }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](std::size_t k) const { return coeffs_[k]; }
  std::size_t size() const { return coeffs_.size(); }
  Basis basis() const { return basis_; }

private:
  ModeSetPtr modes_;
  std::vector<double> coeffs_;
  Basis basis_;
};

// An element (position, velocity) of the phase space Y = X1 x X.
class PhaseState
{
public:
  PhaseState(SpectralField position, SpectralField velocity);

  static PhaseState zero(ModeSetPtr modes);

  const SpectralField &position() const { return position_; }
  const SpectralField &velocity() const { return velocity_; }
  const ModeSetPtr &modes() const { return position_.modes(); }

private:
  SpectralField position_;
  SpectralField velocity_;
};

// Operator acting by per-mode multiplication, mapping coefficients in one basis to another.
struct DiagonalOperator
{
  std::vector<double> eigenvalues;
  Basis domain = Basis::kX1;
  Basis codomain = Basis::kX1;
};

double inner_x1(const SpectralField &a, const SpectralField &b);
double norm_x1(const SpectralField &field);
double norm_x(const SpectralField &field);

// Same element re-expressed against the X-orthonormal basis: c_k = c~_k / sqrt(lambda_k).
SpectralField x1_to_x_coeffs(const SpectralField &field);
SpectralField x_to_x1_coeffs(const SpectralField &field);

double norm_y(const PhaseState &state);

// Potential plus kinetic energy, 1/2 ||position||_1^2 + 1/2 ||velocity||^2.
double energy(const PhaseState &state);

std::vector<double> apply_diagonal(const DiagonalOperator &op, std::span<const double> coeffs);
SpectralField apply_diagonal(const DiagonalOperator &op, const SpectralField &field);

}  // namespace wavegroup

#endif  // WAVEGROUP_CORE_SPECTRAL_HPP
