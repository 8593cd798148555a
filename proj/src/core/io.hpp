// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef WAVEGROUP_CORE_IO_HPP
#define WAVEGROUP_CORE_IO_HPP

#include <span>
#include <string>

#include <json.hpp>

#include "core/action_kernel.hpp"
#include "core/domains.hpp"
#include "core/spectral.hpp"
#include "core/tpbvp.hpp"

namespace wavegroup::io
{

// Shortest text with 17 significant digits, '.' decimal point, independent of locale.
std::string format_double(double v);

// {"labels": [[n], ...] or [[n, m], ...], "lambdas": [...], "coeffs": [...]}.
nlohmann::json field_to_json(const SpectralField &field);

// Accepts labels as integer arrays or as "n" / "n:m" strings. Throws kStructural on
// malformed input.
SpectralField field_from_json(const nlohmann::json &j, Basis basis = Basis::kX1);

ModeLabel parse_label(const std::string &text);

// Columns mode_label, lambda, omega_mu, p, q.
std::string kernel_csv(const QuadraticKernel &k);

// Columns s, mode_label, position_coeff, velocity_coeff, one row per sample and mode. A
// sample without a state is written as a single "<s>,inadmissible,," row. The last row is
// "summary,energy,<initial energy>,<max relative drift>".
std::string trajectory_csv(std::span<const tpbvp::TrajectorySample> samples);

nlohmann::json tpbvp_json(double mu, double t, double terminal_error, const SpectralField &pi0);

// Columns mu, error.
std::string study_csv(std::span<const tpbvp::MuStudyRow> rows);

// Columns (x, value) on the interval and (x1, x2, value) on the square.
std::string grid_csv(domains::DomainKind kind, std::span<const domains::GridPoint> points,
                     std::span<const double> values);

// Throws kIo on failure.
std::string read_text(const std::string &path);
void write_text(const std::string &path, const std::string &content);

}  // namespace wavegroup::io

#endif  // WAVEGROUP_CORE_IO_HPP
