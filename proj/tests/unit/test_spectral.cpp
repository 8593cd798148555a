// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "core/error.hpp"
#include "core/spectral.hpp"

namespace wavegroup
{
namespace
{

constexpr double kPi = std::numbers::pi;

ModeSetPtr two_modes() { return make_mode_set({1.0, 4.0}); }

TEST(ModeSet, RejectsInvalidEigenvalues)
{
  EXPECT_THROW(ModeSet({}), Error);
  EXPECT_THROW(ModeSet({1.0, -2.0}), Error);
  EXPECT_THROW(ModeSet({0.0}), Error);
  EXPECT_THROW(ModeSet({2.0, 1.0}), Error);
  EXPECT_THROW(ModeSet({1.0, std::nan("")}), Error);
  EXPECT_THROW(ModeSet({1.0, 2.0}, {ModeLabel{{1}}, ModeLabel{{1}}}), Error);
  EXPECT_THROW(ModeSet({1.0, 2.0}, {ModeLabel{{1}}}), Error);
}

TEST(ModeSet, DefaultLabelsAndRepeatedEigenvalues)
{
  ModeSet m({1.0, 1.0, 3.0});
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m.label(0).to_string(), "1");
  EXPECT_EQ(m.label(2).to_string(), "3");
  EXPECT_EQ((ModeLabel{{1, 2}}).to_string(), "1:2");
}

TEST(SpectralField, ValidatesLengthAndFiniteness)
{
  const auto m = two_modes();
  EXPECT_THROW(SpectralField(m, {1.0}), Error);
  EXPECT_THROW(SpectralField(m, {1.0, INFINITY}), Error);
  try
  {
    SpectralField(m, {1.0});
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.code(), ErrorCode::kStructural);
  }
}

TEST(InnerX1, Examples)
{
  const auto m = two_modes();
  const auto e1 = SpectralField::unit(m, 0);
  const auto e2 = SpectralField::unit(m, 1);
  EXPECT_DOUBLE_EQ(inner_x1(e1, e1), 1.0);
  EXPECT_DOUBLE_EQ(inner_x1(e1, e2), 0.0);
  EXPECT_DOUBLE_EQ(inner_x1(SpectralField(m, {1.0, 2.0}), SpectralField(m, {3.0, -1.0})), 1.0);
}

TEST(InnerX1, MismatchedModesIsStructural)
{
  const auto a = SpectralField::unit(two_modes(), 0);
  const auto b = SpectralField::unit(make_mode_set({1.0, 5.0}), 0);
  try
  {
    (void)inner_x1(a, b);
    FAIL() << "expected a structural error";
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.code(), ErrorCode::kStructural);
  }
  // Identical but separately constructed mode sets are interchangeable.
  EXPECT_DOUBLE_EQ(inner_x1(a, SpectralField::unit(two_modes(), 0)), 1.0);
}

TEST(X1ToX, Examples)
{
  EXPECT_DOUBLE_EQ(x1_to_x_coeffs(SpectralField(make_mode_set({1.0}), {1.0}))[0], 1.0);
  EXPECT_DOUBLE_EQ(x1_to_x_coeffs(SpectralField(make_mode_set({4.0}), {2.0}))[0], 1.0);
  const auto z = x1_to_x_coeffs(SpectralField::zero(two_modes()));
  EXPECT_EQ(z[0], 0.0);
  EXPECT_EQ(z[1], 0.0);
  EXPECT_EQ(z.basis(), Basis::kX);
}

TEST(X1ToX, RoundTripAndScaling)
{
  const auto m = make_mode_set({0.3, 2.0, 17.0, 1e4});
  const SpectralField f(m, {0.7, -1.3, 2.9, 1e-3});
  const auto fx = x1_to_x_coeffs(f);
  const auto back = x_to_x1_coeffs(fx);
  for (std::size_t k = 0; k < f.size(); k++)
  {
    EXPECT_NEAR(fx[k] * std::sqrt(m->lambda(k)), f[k], 1e-14 * std::abs(f[k]));
    EXPECT_NEAR(back[k], f[k], 1e-14 * std::abs(f[k]));
  }
}

TEST(NormY, Examples)
{
  const auto m = make_mode_set({2.0});
  EXPECT_EQ(norm_y(PhaseState::zero(m)), 0.0);
  EXPECT_DOUBLE_EQ(norm_y(PhaseState(SpectralField(m, {1.0}), SpectralField(m, {0.0}, Basis::kX))),
                   1.0);
  EXPECT_DOUBLE_EQ(norm_y(PhaseState(SpectralField(m, {3.0}), SpectralField(m, {4.0}, Basis::kX))),
                   5.0);
}

TEST(PhaseState, RequiresMatchingModesAndBases)
{
  const auto m = two_modes();
  EXPECT_THROW(PhaseState(SpectralField::zero(m), SpectralField::zero(make_mode_set({1.0, 9.0}),
                                                                      Basis::kX)),
               Error);
  EXPECT_THROW(PhaseState(SpectralField::zero(m, Basis::kX), SpectralField::zero(m, Basis::kX)),
               Error);
}

TEST(Energy, Examples)
{
  const auto m = two_modes();
  EXPECT_EQ(energy(PhaseState::zero(m)), 0.0);
  EXPECT_DOUBLE_EQ(energy(PhaseState(SpectralField::unit(m, 0), SpectralField::zero(m, Basis::kX))),
                   0.5);
  EXPECT_DOUBLE_EQ(energy(PhaseState(SpectralField(m, {1.0, 0.0}),
                                     SpectralField(m, {0.0, 1.0}, Basis::kX))),
                   1.0);
}

TEST(Energy, HalfSquaredNorm)
{
  const auto m = make_mode_set({1.0, 3.0, 9.0});
  const PhaseState s(SpectralField(m, {0.3, -2.0, 1.1}), SpectralField(m, {4.0, 0.2, -0.7}, Basis::kX));
  const double n = norm_y(s);
  EXPECT_NEAR(energy(s), 0.5 * n * n, 1e-14 * energy(s));
}

TEST(Parseval, InnerProductIsCoefficientSum)
{
  const auto m = make_mode_set({1.0, 2.0, 3.0, 4.0, 5.0});
  const SpectralField f(m, {0.1, 0.2, -0.3, 0.4, -0.5});
  double sum = 0.0;
  for (double c : f.coeffs())
  {
    sum += c * c;
  }
  EXPECT_EQ(inner_x1(f, f), sum);
  EXPECT_NEAR(norm_x1(f), std::sqrt(sum), 1e-16);
}

TEST(NormX, UsesXCoordinates)
{
  const auto m = make_mode_set({4.0, 16.0});
  EXPECT_DOUBLE_EQ(norm_x(SpectralField(m, {3.0, 4.0}, Basis::kX)), 5.0);
  // The same element through its X1 coordinates: c = c~ / sqrt(lambda).
  EXPECT_DOUBLE_EQ(norm_x(x1_to_x_coeffs(SpectralField(m, {6.0, 16.0}))), 5.0);
  EXPECT_THROW(norm_x(SpectralField(m, {3.0, 4.0})), Error);
}

TEST(ApplyDiagonal, Examples)
{
  const auto m = two_modes();
  const SpectralField f(m, {1.5, -2.0});
  const auto same = apply_diagonal(DiagonalOperator{{1.0, 1.0}, Basis::kX1, Basis::kX1}, f);
  EXPECT_EQ(same[0], 1.5);
  EXPECT_EQ(same[1], -2.0);

  const auto lm = make_mode_set({kPi * kPi});
  const auto g = apply_diagonal(DiagonalOperator{{kPi * kPi}, Basis::kX1, Basis::kX},
                                SpectralField(lm, {1.0}));
  EXPECT_DOUBLE_EQ(g[0], kPi * kPi);
  EXPECT_EQ(g.basis(), Basis::kX);

  const std::vector<double> c{1.0, 2.0};
  EXPECT_THROW(apply_diagonal(DiagonalOperator{{1.0}, Basis::kX1, Basis::kX1}, c), Error);
  EXPECT_THROW(apply_diagonal(DiagonalOperator{{1.0, 1.0}, Basis::kX, Basis::kX1}, f), Error);
}

}  // namespace
}  // namespace wavegroup
