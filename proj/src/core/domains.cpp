// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/domains.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace wavegroup::domains
{

namespace
{

constexpr double kPi = std::numbers::pi;

void require_labels(const ModeSet &modes, const DomainBasis &basis)
{
  const auto dim = static_cast<std::size_t>(basis.dimension());
  for (std::size_t k = 0; k < modes.size(); k++)
  {
    const auto &idx = modes.label(k).index;
    if (idx.size() != dim || std::any_of(idx.begin(), idx.end(), [](int v) { return v < 1; }))
    {
      Fail(ErrorCode::kStructural,
           "mode label " + modes.label(k).to_string() + " does not belong to the " +
               domain_name(basis.kind) + " basis",
           k);
    }
  }
}

bool inside(const DomainBasis &basis, const GridPoint &p)
{
  auto unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  return unit(p.x1) && (basis.kind == DomainKind::kInterval || unit(p.x2));
}

// S[n - 1][i] = sin(n pi x_i) on the midpoint grid.
std::vector<std::vector<double>> sine_table(int max_index, int q)
{
  std::vector<std::vector<double>> s(static_cast<std::size_t>(max_index),
                                     std::vector<double>(static_cast<std::size_t>(q)));
  for (int n = 1; n <= max_index; n++)
  {
    for (int i = 0; i < q; i++)
    {
      s[n - 1][i] = std::sin(n * kPi * (i + 0.5) / q);
    }
  }
  return s;
}

}  // namespace

const char *domain_name(DomainKind kind)
{
  return kind == DomainKind::kInterval ? "interval" : "square";
}

ModeSetPtr build_modes(const DomainBasis &basis, std::size_t count)
{
  if (count < 1)
  {
    Fail(ErrorCode::kArgument, "mode count must be at least 1");
  }
  const std::size_t cap = basis.cutoff > 0 ? static_cast<std::size_t>(basis.cutoff) : 0;
  std::vector<std::pair<long, ModeLabel>> pairs;
  if (basis.kind == DomainKind::kInterval)
  {
    if (cap > 0 && count > cap)
    {
      Fail(ErrorCode::kArgument, "cutoff " + std::to_string(cap) + " admits fewer than " +
                                     std::to_string(count) + " interval modes");
    }
    for (std::size_t n = 1; n <= count; n++)
    {
      const long v = static_cast<long>(n * n);
      pairs.emplace_back(v, ModeLabel{{static_cast<int>(n)}});
    }
  }
  else
  {
    if (cap > 0 && count > cap * cap)
    {
      Fail(ErrorCode::kArgument, "cutoff " + std::to_string(cap) + " admits fewer than " +
                                     std::to_string(count) + " square modes");
    }
    // Grow the radius until the quarter disk n^2 + m^2 <= r^2 (within the cutoff) holds
    // `count` pairs; every pair ranked before the count-th one lies inside it.
    long r = 1;
    for (;;)
    {
      pairs.clear();
      const long lim = cap > 0 ? std::min<long>(r, static_cast<long>(cap)) : r;
      for (long n = 1; n <= lim; n++)
      {
        for (long m = 1; m <= lim; m++)
        {
          if (n * n + m * m <= r * r)
          {
            pairs.emplace_back(n * n + m * m,
                               ModeLabel{{static_cast<int>(n), static_cast<int>(m)}});
          }
        }
      }
      if (pairs.size() >= count)
      {
        break;
      }
      r++;
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.resize(count);
  std::vector<double> lambdas;
  std::vector<ModeLabel> labels;
  lambdas.reserve(count);
  labels.reserve(count);
  for (auto &[v, label] : pairs)
  {
    lambdas.push_back(static_cast<double>(v) * kPi * kPi);
    labels.push_back(std::move(label));
  }
  return make_mode_set(std::move(lambdas), std::move(labels));
}

double basis_function(const DomainBasis &basis, const ModeLabel &label, const GridPoint &point)
{
  if (basis.kind == DomainKind::kInterval)
  {
    const int n = label.index.at(0);
    return std::sqrt(2.0) / (n * kPi) * std::sin(n * kPi * point.x1);
  }
  const int n = label.index.at(0);
  const int m = label.index.at(1);
  const double lambda = static_cast<double>(n * n + m * m) * kPi * kPi;
  return 2.0 / std::sqrt(lambda) * std::sin(n * kPi * point.x1) * std::sin(m * kPi * point.x2);
}

std::vector<double> evaluate_field(const SpectralField &field, const DomainBasis &basis,
                                   std::span<const GridPoint> points)
{
  const auto &modes = *field.modes();
  require_labels(modes, basis);
  if (field.basis() != Basis::kX1)
  {
    Fail(ErrorCode::kStructural, "evaluate_field expects X1 coefficients");
  }
  for (std::size_t i = 0; i < points.size(); i++)
  {
    if (!inside(basis, points[i]))
    {
      Fail(ErrorCode::kArgument,
           "grid point " + std::to_string(i) + " lies outside the " + domain_name(basis.kind));
    }
  }
  std::vector<double> out(points.size(), 0.0);
  parallel_for(points.size(), [&](std::size_t i) {
    double s = 0.0;
    for (std::size_t k = 0; k < modes.size(); k++)
    {
      if (field[k] != 0.0)
      {
        s += field[k] * basis_function(basis, modes.label(k), points[i]);
      }
    }
    out[i] = s;
  });
  return out;
}

int max_mode_index(const ModeSet &modes)
{
  int top = 0;
  for (const auto &label : modes.labels())
  {
    for (int v : label.index)
    {
      top = std::max(top, v);
    }
  }
  return top;
}

int required_resolution(const ModeSet &modes) { return 2 * max_mode_index(modes); }

int default_resolution(const ModeSet &modes) { return 4 * max_mode_index(modes); }

std::vector<GridPoint> midpoint_grid(const DomainBasis &basis, int q)
{
  if (q < 1)
  {
    Fail(ErrorCode::kArgument, "grid resolution must be positive");
  }
  std::vector<GridPoint> pts;
  if (basis.kind == DomainKind::kInterval)
  {
    pts.reserve(static_cast<std::size_t>(q));
    for (int i = 0; i < q; i++)
    {
      pts.push_back({(i + 0.5) / q, 0.0});
    }
    return pts;
  }
  pts.reserve(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  for (int i = 0; i < q; i++)
  {
    for (int j = 0; j < q; j++)
    {
      pts.push_back({(i + 0.5) / q, (j + 0.5) / q});
    }
  }
  return pts;
}

SpectralField project_samples(std::span<const double> samples, int q, const DomainBasis &basis,
                              const ModeSetPtr &modes)
{
  require_labels(*modes, basis);
  const int need = required_resolution(*modes);
  if (q < need)
  {
    Fail(ErrorCode::kQuadrature, "quadrature resolution " + std::to_string(q) +
                                     " per axis is below the required " + std::to_string(need));
  }
  const auto qs = static_cast<std::size_t>(q);
  const std::size_t expected = basis.kind == DomainKind::kInterval ? qs : qs * qs;
  if (samples.size() != expected)
  {
    Fail(ErrorCode::kStructural, "expected " + std::to_string(expected) + " samples, got " +
                                     std::to_string(samples.size()));
  }
  const int top = max_mode_index(*modes);
  const auto s = sine_table(top, q);
  std::vector<double> coeffs(modes->size(), 0.0);
  const double h = 1.0 / q;
  if (basis.kind == DomainKind::kInterval)
  {
    parallel_for(modes->size(), [&](std::size_t k) {
      const int n = modes->label(k).index[0];
      double acc = 0.0;
      for (std::size_t i = 0; i < qs; i++)
      {
        acc += samples[i] * s[n - 1][i];
      }
      const double lambda = modes->lambda(k);
      coeffs[k] = lambda * h * acc * std::sqrt(2.0) / std::sqrt(lambda);
    });
    return SpectralField(modes, std::move(coeffs));
  }
  // Separable sums: partial[n][j] = sum_i f(x_i, x_j) sin(n pi x_i).
  std::vector<std::vector<double>> partial(static_cast<std::size_t>(top),
                                           std::vector<double>(qs, 0.0));
  parallel_for(static_cast<std::size_t>(top), [&](std::size_t n) {
    for (std::size_t i = 0; i < qs; i++)
    {
      const double sn = s[n][i];
      const double *row = samples.data() + i * qs;
      for (std::size_t j = 0; j < qs; j++)
      {
        partial[n][j] += row[j] * sn;
      }
    }
  });
  parallel_for(modes->size(), [&](std::size_t k) {
    const int n = modes->label(k).index[0];
    const int m = modes->label(k).index[1];
    double acc = 0.0;
    for (std::size_t j = 0; j < qs; j++)
    {
      acc += partial[n - 1][j] * s[m - 1][j];
    }
    const double lambda = modes->lambda(k);
    coeffs[k] = lambda * h * h * acc * 2.0 / std::sqrt(lambda);
  });
  return SpectralField(modes, std::move(coeffs));
}

SpectralField project(const std::function<double(const GridPoint &)> &f, const DomainBasis &basis,
                      const ModeSetPtr &modes)
{
  require_labels(*modes, basis);
  const int q = basis.quadrature_points > 0 ? basis.quadrature_points : default_resolution(*modes);
  const int need = required_resolution(*modes);
  if (q < need)
  {
    Fail(ErrorCode::kQuadrature, "quadrature resolution " + std::to_string(q) +
                                     " per axis is below the required " + std::to_string(need));
  }
  const auto pts = midpoint_grid(basis, q);
  std::vector<double> samples(pts.size());
  for (std::size_t i = 0; i < pts.size(); i++)
  {
    samples[i] = f(pts[i]);
  }
  return project_samples(samples, q, basis, modes);
}

double default_terminal_function(const DomainBasis &basis, const GridPoint &p)
{
  const double d1 = p.x1 - 0.5;
  if (basis.kind == DomainKind::kInterval)
  {
    return std::sin(kPi * p.x1) * std::exp(-8.0 * d1 * d1);
  }
  const double d2 = p.x2 - 0.5;
  return std::sin(kPi * p.x1) * std::sin(kPi * p.x2) * std::exp(-8.0 * (d1 * d1 + d2 * d2));
}

SpectralField default_terminal_state(const DomainBasis &basis, const ModeSetPtr &modes)
{
  return project([&](const GridPoint &p) { return default_terminal_function(basis, p); }, basis,
                 modes);
}

}  // namespace wavegroup::domains
