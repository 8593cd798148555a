// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace wavegroup::io
{

std::string format_double(double v)
{
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

nlohmann::json field_to_json(const SpectralField &field)
{
  const auto &modes = *field.modes();
  nlohmann::json labels = nlohmann::json::array();
  for (const auto &l : modes.labels())
  {
    labels.push_back(l.index);
  }
  return {
    {"labels", labels},
    {"lambdas", std::vector<double>(modes.lambdas().begin(), modes.lambdas().end())},
    {"coeffs", std::vector<double>(field.coeffs().begin(), field.coeffs().end())},
  };
}

ModeLabel parse_label(const std::string &text)
{
  ModeLabel label;
  std::size_t start = 0;
  while (start <= text.size())
  {
    const auto stop = std::min(text.find(':', start), text.size());
    int v = 0;
    const auto *first = text.data() + start;
    const auto *last = text.data() + stop;
    const auto res = std::from_chars(first, last, v);
    if (first == last || res.ec != std::errc() || res.ptr != last)
    {
      Fail(ErrorCode::kStructural, "malformed mode label '" + text + "'");
    }
    label.index.push_back(v);
    start = stop + 1;
  }
  return label;
}

SpectralField field_from_json(const nlohmann::json &j, Basis basis)
{
  try
  {
    std::vector<double> lambdas = j.at("lambdas").get<std::vector<double>>();
    std::vector<double> coeffs = j.at("coeffs").get<std::vector<double>>();
    std::vector<ModeLabel> labels;
    if (j.contains("labels"))
    {
      for (const auto &l : j.at("labels"))
      {
        labels.push_back(l.is_string() ? parse_label(l.get<std::string>())
                                       : ModeLabel{l.get<std::vector<int>>()});
      }
      if (labels.size() != lambdas.size())
      {
        Fail(ErrorCode::kStructural, "field JSON has mismatched labels and lambdas");
      }
    }
    return SpectralField(make_mode_set(std::move(lambdas), std::move(labels)), std::move(coeffs),
                         basis);
  }
  catch (const nlohmann::json::exception &e)
  {
    Fail(ErrorCode::kStructural, std::string("malformed field JSON: ") + e.what());
  }
}

std::string kernel_csv(const QuadraticKernel &k)
{
  const auto &y = *k.yosida;
  std::ostringstream out;
  out << "mode_label,lambda,omega_mu,p,q\n";
  for (std::size_t n = 0; n < k.size(); n++)
  {
    out << y.modes()->label(n).to_string() << ',' << format_double(y.modes()->lambda(n)) << ','
        << format_double(y.omega(n)) << ',' << format_double(k.p[n]) << ','
        << format_double(k.q[n]) << '\n';
  }
  return out.str();
}

std::string trajectory_csv(std::span<const tpbvp::TrajectorySample> samples)
{
  std::ostringstream out;
  out << "s,mode_label,position_coeff,velocity_coeff\n";
  std::optional<double> e0;
  for (const auto &s : samples)
  {
    if (!s.state)
    {
      out << format_double(s.requested_s) << ",inadmissible,,\n";
      continue;
    }
    if (!e0)
    {
      e0 = energy(*s.state);
    }
    const auto &st = *s.state;
    for (std::size_t n = 0; n < st.position().size(); n++)
    {
      out << format_double(s.s) << ',' << st.modes()->label(n).to_string() << ','
          << format_double(st.position()[n]) << ',' << format_double(st.velocity()[n]) << '\n';
    }
  }
  out << "summary,energy," << format_double(e0.value_or(0.0)) << ','
      << format_double(tpbvp::energy_drift(samples)) << '\n';
  return out.str();
}

nlohmann::json tpbvp_json(double mu, double t, double terminal_error, const SpectralField &pi0)
{
  return {
    {"mu", mu},
    {"t", t},
    {"terminal_error", terminal_error},
    {"pi0_coeffs", std::vector<double>(pi0.coeffs().begin(), pi0.coeffs().end())},
  };
}

std::string study_csv(std::span<const tpbvp::MuStudyRow> rows)
{
  std::ostringstream out;
  out << "mu,error\n";
  for (const auto &r : rows)
  {
    out << format_double(r.mu) << ',' << format_double(r.error) << '\n';
  }
  return out.str();
}

std::string grid_csv(domains::DomainKind kind, std::span<const domains::GridPoint> points,
                     std::span<const double> values)
{
  if (points.size() != values.size())
  {
    Fail(ErrorCode::kStructural, "grid points and values differ in length");
  }
  std::ostringstream out;
  const bool line = kind == domains::DomainKind::kInterval;
  out << (line ? "x,value\n" : "x1,x2,value\n");
  for (std::size_t i = 0; i < points.size(); i++)
  {
    out << format_double(points[i].x1) << ',';
    if (!line)
    {
      out << format_double(points[i].x2) << ',';
    }
    out << format_double(values[i]) << '\n';
  }
  return out.str();
}

std::string read_text(const std::string &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    Fail(ErrorCode::kIo, "cannot open '" + path + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string &path, const std::string &content)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << content) || !out.flush())
  {
    Fail(ErrorCode::kIo, "cannot write '" + path + "'");
  }
}

}  // namespace wavegroup::io
