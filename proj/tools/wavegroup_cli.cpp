// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end over the wavegroup C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wavegroup/wavegroup.h"

namespace
{

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

// Failure carrying the process exit code.
struct CliError
{
  int exit_code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string &message) { throw CliError{kExitUsage, message}; }

int exit_code_for(wg_status s)
{
  switch (s)
  {
    case WG_ERR_ARGUMENT:
    case WG_ERR_STRUCTURAL:
    case WG_ERR_IO:
      return kExitUsage;
    default:
      return kExitNumerical;
  }
}

void check(wg_status s, const std::string &context)
{
  if (s != WG_OK)
  {
    throw CliError{exit_code_for(s), context + ": " + wg_status_name(s) + ": " + wg_last_error()};
  }
}

struct StringDeleter
{
  void operator()(char *p) const { wg_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char *p)
{
  OwnedString owned(p);
  return owned ? std::string(owned.get()) : std::string();
}

struct ModesDeleter
{
  void operator()(wg_modes *p) const { wg_modes_free(p); }
};
struct YosidaDeleter
{
  void operator()(wg_yosida *p) const { wg_yosida_free(p); }
};
using Modes = std::unique_ptr<wg_modes, ModesDeleter>;
using Yosida = std::unique_ptr<wg_yosida, YosidaDeleter>;

Yosida make_yosida(const wg_modes *m, double mu)
{
  wg_yosida *y = nullptr;
  check(wg_yosida_create(m, mu, &y), "mu = " + std::to_string(mu));
  return Yosida(y);
}

std::string fmt(double v)
{
  char *s = nullptr;
  check(wg_format_double(v, &s), "format");
  return take(s);
}

// Settings after merging the config file with command-line overrides.
struct Settings
{
  std::string domain = "square";
  int cutoff = 0;
  int quadrature_points = 0;
  long count = 16;
  std::vector<double> mus;
  double t = std::acos(-1.0) / 3.0;
  double tolerance = 1e-6;
  std::string out;
  std::string format;

  std::string x = "zero";
  std::string z = "default";
  std::string position = "default";
  std::string velocity = "zero";
  bool from_tpbvp = false;
  long samples = 100;
  double nudge = 1e-5;
  int grid = 0;
  std::string grid_out;
  std::vector<double> sweep;
  std::string study_out;
  bool long_kernel = false;
  unsigned long long seed = 1;
  double perturbation = 0.0;

  wg_domain domain_spec() const
  {
    wg_domain d{};
    if (domain == "interval")
    {
      d.kind = WG_DOMAIN_INTERVAL;
    }
    else if (domain == "square")
    {
      d.kind = WG_DOMAIN_SQUARE;
    }
    else
    {
      usage_error("unknown domain '" + domain + "' (expected interval or square)");
    }
    d.cutoff = cutoff;
    d.quadrature_points = quadrature_points;
    return d;
  }

  double first_mu() const { return mus.empty() ? 0.0 : mus.front(); }
};

template <typename T>
void read_key(const json &j, const char *key, T &dst)
{
  if (j.contains(key))
  {
    try
    {
      dst = j.at(key).get<T>();
    }
    catch (const json::exception &e)
    {
      usage_error(std::string("config key '") + key + "': " + e.what());
    }
  }
}

void apply_config(const std::string &path, Settings &s)
{
  std::ifstream in(path);
  if (!in)
  {
    usage_error("cannot open config '" + path + "'");
  }
  json c;
  try
  {
    in >> c;
  }
  catch (const json::exception &e)
  {
    usage_error("config '" + path + "' is not valid JSON: " + e.what());
  }
  if (!c.is_object())
  {
    usage_error("config must be a JSON object");
  }
  if (c.contains("domain"))
  {
    const auto &d = c["domain"];
    if (d.is_string())
    {
      s.domain = d.get<std::string>();
    }
    else
    {
      read_key(d, "kind", s.domain);
      read_key(d, "cutoff", s.cutoff);
      read_key(d, "quadrature_points", s.quadrature_points);
    }
  }
  if (c.contains("modes"))
  {
    const auto &m = c["modes"];
    if (m.is_number())
    {
      s.count = m.get<long>();
    }
    else
    {
      read_key(m, "count", s.count);
    }
  }
  if (c.contains("mu"))
  {
    if (c["mu"].is_array())
    {
      read_key(c, "mu", s.mus);
    }
    else
    {
      double mu = 0.0;
      read_key(c, "mu", mu);
      s.mus = {mu};
    }
  }
  read_key(c, "horizon", s.t);
  read_key(c, "admissibility_tol", s.tolerance);
  if (c.contains("tpbvp"))
  {
    const auto &t = c["tpbvp"];
    read_key(t, "x", s.x);
    read_key(t, "z", s.z);
    read_key(t, "grid", s.grid);
    read_key(t, "grid_out", s.grid_out);
    read_key(t, "sweep", s.sweep);
    read_key(t, "study_out", s.study_out);
  }
  if (c.contains("propagate"))
  {
    const auto &p = c["propagate"];
    read_key(p, "samples", s.samples);
    read_key(p, "nudge", s.nudge);
    read_key(p, "position", s.position);
    read_key(p, "velocity", s.velocity);
    read_key(p, "from_tpbvp", s.from_tpbvp);
  }
  if (c.contains("kernel"))
  {
    read_key(c["kernel"], "long", s.long_kernel);
  }
  if (c.contains("verify"))
  {
    read_key(c["verify"], "seed", s.seed);
    read_key(c["verify"], "inject_perturbation", s.perturbation);
  }
}

void emit(const Settings &s, const std::string &text)
{
  if (s.out.empty() || s.out == "-")
  {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(s.out, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text))
  {
    throw CliError{kExitUsage, "cannot write '" + s.out + "'"};
  }
}

void write_file(const std::string &path, const std::string &text)
{
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text))
  {
    throw CliError{kExitUsage, "cannot write '" + path + "'"};
  }
}

Modes build_modes(const Settings &s)
{
  if (s.count < 1)
  {
    usage_error("--modes must be at least 1");
  }
  wg_modes *m = nullptr;
  check(wg_modes_create_domain(s.domain_spec(), static_cast<size_t>(s.count), &m), "modes");
  return Modes(m);
}

// Field specifications: "zero", "default" (the projected demo bump), "decay:a[:scale]" for
// scale * exp(-a k^2) on the k-th mode, or a path to field JSON over the same modes.
std::vector<double> load_field(const std::string &spec, const Settings &s, const wg_modes *m)
{
  const size_t n = wg_modes_size(m);
  std::vector<double> c(n, 0.0);
  if (spec == "zero")
  {
    return c;
  }
  if (spec == "default")
  {
    check(wg_domain_default_terminal(s.domain_spec(), m, c.data()), "default field");
    return c;
  }
  if (spec.rfind("decay:", 0) == 0)
  {
    double a = 0.0, scale = 1.0;
    const auto rest = spec.substr(6);
    const auto colon = rest.find(':');
    try
    {
      a = std::stod(rest.substr(0, colon));
      if (colon != std::string::npos)
      {
        scale = std::stod(rest.substr(colon + 1));
      }
    }
    catch (const std::exception &)
    {
      usage_error("malformed field specification '" + spec + "'");
    }
    for (size_t k = 0; k < n; k++)
    {
      const double idx = static_cast<double>(k + 1);
      c[k] = scale * std::exp(-a * idx * idx);
    }
    return c;
  }
  std::ifstream in(spec);
  if (!in)
  {
    usage_error("cannot open field '" + spec + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  wg_modes *parsed = nullptr;
  double *coeffs = nullptr;
  check(wg_field_parse(buf.str().c_str(), &parsed, &coeffs), "field '" + spec + "'");
  Modes owned(parsed);
  std::unique_ptr<double, void (*)(double *)> data(coeffs, wg_doubles_free);
  if (wg_modes_size(parsed) != n)
  {
    usage_error("field '" + spec + "' has " + std::to_string(wg_modes_size(parsed)) +
                " modes, expected " + std::to_string(n));
  }
  std::vector<double> a(n), b(n);
  check(wg_modes_lambdas(parsed, a.data()), "field modes");
  check(wg_modes_lambdas(m, b.data()), "modes");
  for (size_t k = 0; k < n; k++)
  {
    if (std::abs(a[k] - b[k]) > 1e-12 * b[k])
    {
      usage_error("field '" + spec + "' uses different eigenvalues than the configured modes");
    }
  }
  std::copy(coeffs, coeffs + n, c.begin());
  return c;
}

std::vector<std::string> labels(const wg_modes *m)
{
  std::vector<std::string> out;
  for (size_t k = 0; k < wg_modes_size(m); k++)
  {
    char *s = nullptr;
    check(wg_modes_label(m, k, &s), "label");
    out.push_back(take(s));
  }
  return out;
}


// Rethrows an inadmissible-horizon failure with the nearby admissible horizons appended.
void check_horizon(wg_status status, const wg_yosida *y, double t, double tol,
                   const std::string &context)
{
  if (status != WG_ERR_INADMISSIBLE)
  {
    check(status, context);
    return;
  }
  std::string message = context + ": " + wg_status_name(status) + ": " + wg_last_error();
  if (message.find("nearest admissible") == std::string::npos)
  {
    double near[2] = {0.0, 0.0};
    size_t count = 0;
    if (wg_nearest_admissible(y, t, tol, near, &count) == WG_OK && count > 0)
    {
      message += "; nearest admissible horizons:";
      for (size_t i = 0; i < count; i++)
      {
        message += " " + fmt(near[i]);
      }
    }
  }
  throw CliError{kExitNumerical, message};
}

std::string format_or(const Settings &s, const char *fallback)
{
  const std::string f = s.format.empty() ? fallback : s.format;
  if (f != "csv" && f != "json")
  {
    usage_error("--format must be csv or json");
  }
  return f;
}

std::vector<double> omega_of(const wg_yosida *y, size_t n)
{
  std::vector<double> w(n);
  check(wg_yosida_omega(y, w.data()), "omega");
  return w;
}

int cmd_modes(const Settings &s)
{
  const auto m = build_modes(s);
  const size_t n = wg_modes_size(m.get());
  const auto mus = s.mus.empty() ? std::vector<double>{0.0} : s.mus;
  std::vector<double> lambdas(n);
  check(wg_modes_lambdas(m.get(), lambdas.data()), "lambdas");
  std::vector<std::vector<double>> omegas;
  for (double mu : mus)
  {
    omegas.push_back(omega_of(make_yosida(m.get(), mu).get(), n));
  }
  const auto names = labels(m.get());
  if (format_or(s, "csv") == "json")
  {
    json j = {{"domain", s.domain}, {"labels", names}, {"lambdas", lambdas}, {"mu", mus},
              {"omega_mu", omegas}};
    emit(s, j.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream out;
  out << "index,mode_label,lambda";
  for (double mu : mus)
  {
    out << ",omega_mu[" << fmt(mu) << "]";
  }
  out << "\n";
  for (size_t k = 0; k < n; k++)
  {
    out << k << ',' << names[k] << ',' << fmt(lambdas[k]);
    for (const auto &w : omegas)
    {
      out << ',' << fmt(w[k]);
    }
    out << "\n";
  }
  emit(s, out.str());
  return kExitOk;
}

int cmd_kernel(const Settings &s)
{
  const auto m = build_modes(s);
  const auto y = make_yosida(m.get(), s.first_mu());
  const size_t n = wg_modes_size(m.get());
  if (format_or(s, "csv") == "csv")
  {
    char *csv = nullptr;
    check_horizon(wg_kernel_csv(y.get(), s.t, s.long_kernel ? 1 : 0, &csv), y.get(), s.t,
                  s.tolerance, "kernel");
    emit(s, take(csv));
    return kExitOk;
  }
  std::vector<double> p(n), q(n);
  check_horizon(s.long_kernel ? wg_kernel_long(y.get(), s.t, p.data(), q.data())
                              : wg_kernel(y.get(), s.t, p.data(), q.data()),
                y.get(), s.t, s.tolerance, "kernel");
  json j = {{"mu", s.first_mu()}, {"t", s.t},       {"long", s.long_kernel},
            {"labels", labels(m.get())}, {"omega_mu", omega_of(y.get(), n)}, {"p", p},
            {"q", q}};
  emit(s, j.dump(2) + "\n");
  return kExitOk;
}

std::vector<double> solve_pi0(const Settings &s, const wg_yosida *y, const std::vector<double> &x,
                              const std::vector<double> &z)
{
  std::vector<double> pi0(x.size());
  check_horizon(wg_tpbvp_solve(y, x.data(), z.data(), s.t, s.tolerance, pi0.data()), y, s.t,
                s.tolerance, "tpbvp");
  return pi0;
}

int cmd_propagate(const Settings &s)
{
  format_or(s, "csv");
  const auto m = build_modes(s);
  const auto y = make_yosida(m.get(), s.first_mu());
  if (s.samples < 1)
  {
    usage_error("--samples must be at least 1");
  }
  std::vector<double> pos, vel, target;
  if (s.from_tpbvp)
  {
    pos = load_field(s.x, s, m.get());
    target = load_field(s.z, s, m.get());
    vel = solve_pi0(s, y.get(), pos, target);
  }
  else
  {
    pos = load_field(s.position, s, m.get());
    vel = load_field(s.velocity, s, m.get());
  }
  char *csv = nullptr;
  double drift = 0.0;
  size_t nudged = 0, skipped = 0;
  check(wg_trajectory_csv(y.get(), pos.data(), vel.data(), s.t, static_cast<size_t>(s.samples),
                          s.tolerance, s.nudge, &csv, &drift, &nudged, &skipped),
        "propagate");
  emit(s, take(csv));
  json summary = {{"mu", s.first_mu()}, {"t", s.t},         {"samples", s.samples},
                  {"energy_drift", drift}, {"nudged", nudged}, {"skipped", skipped}};
  if (s.from_tpbvp)
  {
    double err = 0.0;
    check(wg_tpbvp_verify(y.get(), pos.data(), target.data(), s.t, s.tolerance, &err), "verify");
    summary["terminal_error"] = err;
  }
  if (nudged > 0)
  {
    std::cerr << "warning: " << nudged << " sample time(s) moved by +-" << fmt(s.nudge)
              << " to avoid resonance\n";
  }
  std::cerr << summary.dump() << "\n";
  if (skipped > 0)
  {
    throw CliError{kExitNumerical, "resonance: " + std::to_string(skipped) +
                                       " sample time(s) remain inadmissible after nudging"};
  }
  return kExitOk;
}

int cmd_tpbvp(const Settings &s)
{
  const auto fmt_out = format_or(s, "json");
  const auto m = build_modes(s);
  const size_t n = wg_modes_size(m.get());
  const auto x = load_field(s.x, s, m.get());
  const auto z = load_field(s.z, s, m.get());
  const auto mus = s.mus.empty() ? std::vector<double>{0.0} : s.mus;
  json solutions = json::array();
  std::ostringstream table;
  table << "mu,t,terminal_error\n";
  std::vector<double> first_pi0;
  for (double mu : mus)
  {
    const auto y = make_yosida(m.get(), mu);
    const auto pi0 = solve_pi0(s, y.get(), x, z);
    double err = 0.0;
    check(wg_tpbvp_verify(y.get(), x.data(), z.data(), s.t, s.tolerance, &err), "verify");
    char *text = nullptr;
    check(wg_tpbvp_json(mu, s.t, err, m.get(), pi0.data(), &text), "tpbvp json");
    solutions.push_back(json::parse(take(text)));
    table << fmt(mu) << ',' << fmt(s.t) << ',' << fmt(err) << '\n';
    if (first_pi0.empty())
    {
      first_pi0 = pi0;
    }
  }

  std::string study;
  std::vector<double> study_errors(s.sweep.size());
  if (!s.sweep.empty())
  {
    auto &errs = study_errors;
    check_horizon(wg_mu_study(m.get(), x.data(), z.data(), s.t, s.sweep.data(), s.sweep.size(),
                              s.tolerance, errs.data()),
                  make_yosida(m.get(), 0.0).get(), s.t, s.tolerance, "mu study");
    char *csv = nullptr;
    check(wg_study_csv(s.sweep.data(), errs.data(), errs.size(), &csv), "study csv");
    study = take(csv);
    if (!s.study_out.empty())
    {
      write_file(s.study_out, study);
    }
  }

  if (s.grid > 0)
  {
    // Recovered initial velocity as a function: X coefficients times sqrt(lambda) give the
    // expansion against the energy-normalized eigenfunctions.
    std::vector<double> lambdas(n), c(n);
    check(wg_modes_lambdas(m.get(), lambdas.data()), "lambdas");
    for (size_t k = 0; k < n; k++)
    {
      c[k] = first_pi0[k] * std::sqrt(lambdas[k]);
    }
    const auto d = s.domain_spec();
    const int g = s.grid;
    std::vector<double> pts;
    size_t count = 0;
    for (int i = 0; i < g; i++)
    {
      const double a = g == 1 ? 0.5 : static_cast<double>(i) / (g - 1);
      if (d.kind == WG_DOMAIN_INTERVAL)
      {
        pts.push_back(a);
        count++;
        continue;
      }
      for (int j = 0; j < g; j++)
      {
        pts.push_back(a);
        pts.push_back(g == 1 ? 0.5 : static_cast<double>(j) / (g - 1));
        count++;
      }
    }
    std::vector<double> values(count);
    check(wg_domain_evaluate(d, m.get(), c.data(), pts.data(), count, values.data()), "grid");
    char *csv = nullptr;
    check(wg_grid_csv(d.kind, pts.data(), values.data(), count, &csv), "grid csv");
    write_file(s.grid_out.empty() ? std::string("tpbvp_grid.csv") : s.grid_out, take(csv));
  }

  if (fmt_out == "json")
  {
    json j = solutions.size() == 1 ? solutions[0] : json{{"solutions", solutions}};
    if (!s.sweep.empty())
    {
      json rows = json::array();
      for (size_t i = 0; i < s.sweep.size(); i++)
      {
        rows.push_back({{"mu", s.sweep[i]}, {"error", study_errors[i]}});
      }
      j["mu_study"] = rows;
    }
    emit(s, j.dump(2) + "\n");
  }
  else
  {
    emit(s, study.empty() ? table.str() : table.str() + "\n" + study);
  }
  return kExitOk;
}

int cmd_convergence(const Settings &s)
{
  format_or(s, "csv");
  const auto m = build_modes(s);
  std::vector<double> mus = s.mus;
  if (mus.empty())
  {
    for (int i = 0; i <= 10; i++)
    {
      mus.push_back(std::ldexp(1.0, -i));
    }
  }
  const auto pos = load_field(s.position, s, m.get());
  const auto vel = load_field(s.velocity, s, m.get());
  const auto x = load_field(s.x, s, m.get());
  const auto z = load_field(s.z, s, m.get());
  std::vector<double> defect(mus.size()), err(mus.size());
  const auto y0 = make_yosida(m.get(), 0.0);
  check_horizon(wg_convergence_defect(m.get(), s.t, mus.data(), mus.size(), pos.data(),
                                      vel.data(), s.tolerance, defect.data()),
                y0.get(), s.t, s.tolerance, "convergence");
  check_horizon(wg_mu_study(m.get(), x.data(), z.data(), s.t, mus.data(), mus.size(),
                            s.tolerance, err.data()),
                y0.get(), s.t, s.tolerance, "mu study");
  std::ostringstream out;
  out << "mu,group_defect,tpbvp_error\n";
  for (size_t i = 0; i < mus.size(); i++)
  {
    out << fmt(mus[i]) << ',' << fmt(defect[i]) << ',' << fmt(err[i]) << '\n';
  }
  emit(s, out.str());
  return kExitOk;
}

int cmd_verify(const Settings &s)
{
  if (format_or(s, "json") != "json")
  {
    usage_error("verify writes JSON only");
  }
  char *report = nullptr;
  int passed = 0;
  check(wg_verify_run(s.seed, s.perturbation, &report, &passed), "verify");
  emit(s, take(report) + "\n");
  if (!passed)
  {
    std::cerr << "verification failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Spectral wave-equation propagation, Yosida approximation and two-point boundary "
               "value problems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wg_version()));

  Settings cli;
  std::string config;
  app.add_option("--config", config, "JSON config with domain, modes, mu, horizon sections")
      ->check(CLI::ExistingFile);
  auto *o_domain = app.add_option("--domain", cli.domain, "interval or square")
                       ->check(CLI::IsMember({"interval", "square"}));
  auto *o_cutoff = app.add_option("--cutoff", cli.cutoff, "largest mode index per axis");
  auto *o_quad = app.add_option("--quadrature-points", cli.quadrature_points,
                                "midpoint quadrature points per axis");
  auto *o_modes = app.add_option("--modes", cli.count, "number of modes");
  auto *o_mu = app.add_option("--mu", cli.mus, "Yosida parameter (repeatable)");
  auto *o_t = app.add_option("--t", cli.t, "horizon");
  auto *o_out = app.add_option("--out", cli.out, "output path (default stdout)");
  auto *o_format = app.add_option("--format", cli.format, "csv or json")
                       ->check(CLI::IsMember({"csv", "json"}));
  auto *o_tol = app.add_option("--admissibility-tol", cli.tolerance,
                               "reject horizons whose resonance margin is below this");
  auto *o_x = app.add_option("--x", cli.x, "initial position: zero, default, decay:a[:s], path");
  auto *o_z = app.add_option("--z", cli.z, "terminal position: zero, default, decay:a[:s], path");
  auto *o_pos = app.add_option("--position", cli.position, "initial position for propagate");
  auto *o_vel = app.add_option("--velocity", cli.velocity, "initial velocity for propagate");
  auto *o_from = app.add_flag("--from-tpbvp", cli.from_tpbvp,
                              "propagate from (x, solved initial velocity)");
  auto *o_samples = app.add_option("--samples", cli.samples, "trajectory sample intervals");
  auto *o_nudge = app.add_option("--nudge", cli.nudge, "shift applied to resonant sample times");
  auto *o_grid = app.add_option("--grid", cli.grid, "grid points per axis for the velocity field");
  auto *o_grid_out = app.add_option("--grid-out", cli.grid_out, "grid CSV path");
  auto *o_sweep = app.add_option("--sweep", cli.sweep, "mu values for the mu study (repeatable)");
  auto *o_study_out = app.add_option("--study-out", cli.study_out, "mu study CSV path");
  auto *o_long = app.add_flag("--long", cli.long_kernel, "concatenated long-horizon kernel");
  auto *o_seed = app.add_option("--seed", cli.seed, "verification seed");
  auto *o_perturb = app.add_option("--inject-perturbation", cli.perturbation,
                                   "test hook: add this to every verification residual");

  const std::vector<std::pair<const char *, const char *>> commands = {
      {"modes", "mode table with lambda and omega_mu per mu"},
      {"propagate", "trajectory dump with energy summary"},
      {"tpbvp", "solve and verify the two-point boundary value problem"},
      {"convergence", "group and boundary-value errors over a mu sweep"},
      {"kernel", "kernel eigenvalues p, q at horizon t"},
      {"verify", "run the invariant suites"},
  };
  for (const auto &[name, help] : commands)
  {
    app.add_subcommand(name, help)->fallthrough();
  }

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try
  {
    Settings s;
    if (!config.empty())
    {
      apply_config(config, s);
    }
    auto take_if = [](CLI::Option *o, auto &dst, const auto &src) {
      if (o->count() > 0)
      {
        dst = src;
      }
    };
    take_if(o_domain, s.domain, cli.domain);
    take_if(o_cutoff, s.cutoff, cli.cutoff);
    take_if(o_quad, s.quadrature_points, cli.quadrature_points);
    take_if(o_modes, s.count, cli.count);
    take_if(o_mu, s.mus, cli.mus);
    take_if(o_t, s.t, cli.t);
    take_if(o_out, s.out, cli.out);
    take_if(o_format, s.format, cli.format);
    take_if(o_tol, s.tolerance, cli.tolerance);
    take_if(o_x, s.x, cli.x);
    take_if(o_z, s.z, cli.z);
    take_if(o_pos, s.position, cli.position);
    take_if(o_vel, s.velocity, cli.velocity);
    take_if(o_from, s.from_tpbvp, cli.from_tpbvp);
    take_if(o_samples, s.samples, cli.samples);
    take_if(o_nudge, s.nudge, cli.nudge);
    take_if(o_grid, s.grid, cli.grid);
    take_if(o_grid_out, s.grid_out, cli.grid_out);
    take_if(o_sweep, s.sweep, cli.sweep);
    take_if(o_study_out, s.study_out, cli.study_out);
    take_if(o_long, s.long_kernel, cli.long_kernel);
    take_if(o_seed, s.seed, cli.seed);
    take_if(o_perturb, s.perturbation, cli.perturbation);

    if (!(s.tolerance >= 0.0))
    {
      usage_error("--admissibility-tol must be nonnegative");
    }
    const auto *sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "modes") return cmd_modes(s);
    if (name == "propagate") return cmd_propagate(s);
    if (name == "tpbvp") return cmd_tpbvp(s);
    if (name == "convergence") return cmd_convergence(s);
    if (name == "kernel") return cmd_kernel(s);
    return cmd_verify(s);
  }
  catch (const CliError &e)
  {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
}
