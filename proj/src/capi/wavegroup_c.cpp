// Copyright 2026 The wavegroup Authors
// SPDX-License-Identifier: Apache-2.0

#include "wavegroup/wavegroup.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "core/action_kernel.hpp"
#include "core/domains.hpp"
#include "core/error.hpp"
#include "core/io.hpp"
#include "core/spectral.hpp"
#include "core/tpbvp.hpp"
#include "core/verification.hpp"
#include "core/wave_group.hpp"
#include "core/yosida.hpp"

struct wg_modes
{
  wavegroup::ModeSetPtr modes;
};

struct wg_yosida
{
  wavegroup::YosidaPtr yosida;
};

struct wg_group
{
  wavegroup::GroupElement element;
};

namespace
{

using namespace wavegroup;

thread_local std::string g_last_error;
thread_local long g_last_mode = -1;

wg_status record(wg_status status, const std::string &message, long mode = -1)
{
  g_last_error = message;
  g_last_mode = mode;
  return status;
}

class NullArgument : public std::exception
{
};

template <typename T>
T *need(T *p)
{
  if (p == nullptr)
  {
    throw NullArgument();
  }
  return p;
}

// Runs body and maps exceptions to status codes.
template <typename Body>
wg_status guard(Body &&body)
{
  try
  {
    body();
    g_last_error.clear();
    g_last_mode = -1;
    return WG_OK;
  }
  catch (const Error &e)
  {
    return record(static_cast<wg_status>(e.code()), e.what(),
                  e.mode() ? static_cast<long>(*e.mode()) : -1);
  }
  catch (const NullArgument &)
  {
    return record(WG_ERR_ARGUMENT, "required pointer argument is null");
  }
  catch (const nlohmann::json::exception &e)
  {
    return record(WG_ERR_STRUCTURAL, std::string("JSON error: ") + e.what());
  }
  catch (const std::bad_alloc &)
  {
    return record(WG_ERR_INTERNAL, "out of memory");
  }
  catch (const std::exception &e)
  {
    return record(WG_ERR_INTERNAL, e.what());
  }
  catch (...)
  {
    return record(WG_ERR_INTERNAL, "unknown failure");
  }
}

char *dup_string(const std::string &s)
{
  auto *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr)
  {
    throw std::bad_alloc();
  }
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

SpectralField field(const ModeSetPtr &modes, const double *coeffs, Basis basis)
{
  need(coeffs);
  return SpectralField(modes, std::vector<double>(coeffs, coeffs + modes->size()), basis);
}

void copy_out(std::span<const double> src, double *dst)
{
  need(dst);
  std::copy(src.begin(), src.end(), dst);
}

domains::DomainBasis to_basis(wg_domain d)
{
  if (d.kind != WG_DOMAIN_INTERVAL && d.kind != WG_DOMAIN_SQUARE)
  {
    Fail(ErrorCode::kArgument, "unknown domain kind");
  }
  if (d.cutoff < 0 || d.quadrature_points < 0)
  {
    Fail(ErrorCode::kArgument, "domain cutoff and quadrature points must be nonnegative");
  }
  return {d.kind == WG_DOMAIN_INTERVAL ? domains::DomainKind::kInterval
                                       : domains::DomainKind::kSquare,
          d.cutoff, d.quadrature_points};
}

std::vector<domains::GridPoint> to_points(wg_domain_kind kind, const double *pts, size_t n)
{
  if (n > 0)
  {
    need(pts);
  }
  std::vector<domains::GridPoint> out(n);
  const bool line = kind == WG_DOMAIN_INTERVAL;
  for (size_t i = 0; i < n; i++)
  {
    out[i] = line ? domains::GridPoint{pts[i], 0.0}
                  : domains::GridPoint{pts[2 * i], pts[2 * i + 1]};
  }
  return out;
}

}  // namespace

extern "C" {

const char *wg_version(void) { return "1.0.0"; }

const char *wg_status_name(wg_status status)
{
  switch (status)
  {
    case WG_OK:
      return "ok";
    case WG_ERR_INTERNAL:
      return "internal";
    default:
      if (status >= WG_ERR_ARGUMENT && status <= WG_ERR_IO)
      {
        return ErrorCodeName(static_cast<ErrorCode>(status));
      }
      return "unknown";
  }
}

const char *wg_last_error(void) { return g_last_error.c_str(); }

long wg_last_error_mode(void) { return g_last_mode; }

void wg_string_free(char *s) { std::free(s); }

void wg_doubles_free(double *p) { std::free(p); }

wg_status wg_modes_create(const double *lambdas, size_t n, wg_modes **out)
{
  return guard([&] {
    need(out);
    if (n > 0)
    {
      need(lambdas);
    }
    auto modes = make_mode_set(std::vector<double>(lambdas, lambdas + n));
    *out = new wg_modes{std::move(modes)};
  });
}

wg_status wg_modes_create_domain(wg_domain domain, size_t count, wg_modes **out)
{
  return guard([&] {
    need(out);
    auto modes = domains::build_modes(to_basis(domain), count);
    *out = new wg_modes{std::move(modes)};
  });
}

void wg_modes_free(wg_modes *modes) { delete modes; }

size_t wg_modes_size(const wg_modes *modes) { return modes ? modes->modes->size() : 0; }

wg_status wg_modes_lambdas(const wg_modes *modes, double *out)
{
  return guard([&] { copy_out(need(modes)->modes->lambdas(), out); });
}

wg_status wg_modes_label(const wg_modes *modes, size_t k, char **out)
{
  return guard([&] {
    need(out);
    const auto &m = *need(modes)->modes;
    if (k >= m.size())
    {
      Fail(ErrorCode::kArgument, "mode index out of range");
    }
    *out = dup_string(m.label(k).to_string());
  });
}

wg_status wg_yosida_create(const wg_modes *modes, double mu, wg_yosida **out)
{
  return guard([&] {
    need(out);
    auto y = build_yosida(need(modes)->modes, mu);
    *out = new wg_yosida{std::move(y)};
  });
}

void wg_yosida_free(wg_yosida *y) { delete y; }

wg_status wg_yosida_omega(const wg_yosida *y, double *out)
{
  return guard([&] { copy_out(need(y)->yosida->omega(), out); });
}

wg_status wg_kernel(const wg_yosida *y, double t, double *p, double *q)
{
  return guard([&] {
    need(p);
    need(q);
    const auto k = kernel_eigenvalues(t, need(y)->yosida);
    copy_out(k.p, p);
    copy_out(k.q, q);
  });
}

wg_status wg_kernel_long(const wg_yosida *y, double t, double *p, double *q)
{
  return guard([&] {
    need(p);
    need(q);
    const auto k = long_horizon_kernel(t, need(y)->yosida);
    copy_out(k.p, p);
    copy_out(k.q, q);
  });
}

wg_status wg_kernel_csv(const wg_yosida *y, double t, int long_horizon, char **out)
{
  return guard([&] {
    need(out);
    const auto &yp = need(y)->yosida;
    const auto k = long_horizon ? long_horizon_kernel(t, yp) : kernel_eigenvalues(t, yp);
    *out = dup_string(io::kernel_csv(k));
  });
}

wg_status wg_admissibility(const wg_yosida *y, double t, double *margin)
{
  return guard([&] { *need(margin) = admissibility(t, *need(y)->yosida); });
}

wg_status wg_nearest_admissible(const wg_yosida *y, double t, double tolerance, double out[2],
                                size_t *count)
{
  return guard([&] {
    need(out);
    need(count);
    const auto near = nearest_admissible(t, *need(y)->yosida, tolerance);
    for (size_t i = 0; i < near.size() && i < 2; i++)
    {
      out[i] = near[i];
    }
    *count = std::min<size_t>(near.size(), 2);
  });
}

wg_status wg_group_create(const wg_yosida *y, double t, wg_group_kind kind, double tolerance,
                          wg_group **out)
{
  return guard([&] {
    need(out);
    const auto &yp = need(y)->yosida;
    switch (kind)
    {
      case WG_GROUP_EXACT:
        *out = new wg_group{exact_element(t, yp)};
        return;
      case WG_GROUP_PROTOTYPE_SHORT:
        *out = new wg_group{prototype_short(t, yp, tolerance)};
        return;
      case WG_GROUP_PROTOTYPE_LONG:
        *out = new wg_group{prototype_long(t, yp, tolerance)};
        return;
    }
    Fail(ErrorCode::kArgument, "unknown group kind");
  });
}

void wg_group_free(wg_group *g) { delete g; }

wg_status wg_group_blocks(const wg_group *g, double *a11, double *a12, double *a21, double *a22)
{
  return guard([&] {
    const auto &e = need(g)->element;
    need(a11);
    need(a12);
    need(a21);
    need(a22);
    copy_out(e.block11(), a11);
    copy_out(e.block12(), a12);
    copy_out(e.block21(), a21);
    copy_out(e.block22(), a22);
  });
}

wg_status wg_group_propagate(const wg_group *g, const double *position, const double *velocity,
                             double *position_out, double *velocity_out)
{
  return guard([&] {
    const auto &e = need(g)->element;
    const auto &modes = e.yosida()->modes();
    need(position_out);
    need(velocity_out);
    const auto moved = propagate(e, PhaseState(field(modes, position, Basis::kX1),
                                               field(modes, velocity, Basis::kX)));
    copy_out(moved.position().coeffs(), position_out);
    copy_out(moved.velocity().coeffs(), velocity_out);
  });
}

wg_status wg_energy(const wg_modes *modes, const double *position, const double *velocity,
                    double *out)
{
  return guard([&] {
    need(out);
    const auto &m = need(modes)->modes;
    *out = energy(PhaseState(field(m, position, Basis::kX1), field(m, velocity, Basis::kX)));
  });
}

wg_status wg_convergence_defect(const wg_modes *modes, double t, const double *mus, size_t n_mus,
                                const double *position, const double *velocity,
                                double tolerance, double *defects)
{
  return guard([&] {
    const auto &m = need(modes)->modes;
    if (n_mus > 0)
    {
      need(mus);
      need(defects);
    }
    const auto d = convergence_defect(
        t, m, std::span<const double>(mus, n_mus),
        PhaseState(field(m, position, Basis::kX1), field(m, velocity, Basis::kX)), tolerance);
    std::copy(d.begin(), d.end(), defects);
  });
}

wg_status wg_tpbvp_solve(const wg_yosida *y, const double *x, const double *z, double t,
                         double tolerance, double *pi0)
{
  return guard([&] {
    const auto &yp = need(y)->yosida;
    need(pi0);
    const auto &m = yp->modes();
    const auto sol = tpbvp::solve(field(m, x, Basis::kX1), field(m, z, Basis::kX1), t, yp,
                                  tolerance);
    copy_out(sol.coeffs(), pi0);
  });
}

wg_status wg_tpbvp_verify(const wg_yosida *y, const double *x, const double *z, double t,
                          double tolerance, double *terminal_error)
{
  return guard([&] {
    const auto &yp = need(y)->yosida;
    need(terminal_error);
    const auto &m = yp->modes();
    *terminal_error =
        tpbvp::verify(field(m, x, Basis::kX1), field(m, z, Basis::kX1), t, yp, tolerance);
  });
}

wg_status wg_mu_study(const wg_modes *modes, const double *x, const double *z, double t,
                      const double *mus, size_t n_mus, double tolerance, double *errors)
{
  return guard([&] {
    const auto &m = need(modes)->modes;
    if (n_mus > 0)
    {
      need(mus);
      need(errors);
    }
    const auto rows = tpbvp::mu_study(field(m, x, Basis::kX1), field(m, z, Basis::kX1), t, m,
                                      std::span<const double>(mus, n_mus), tolerance);
    for (size_t i = 0; i < rows.size(); i++)
    {
      errors[i] = rows[i].error;
    }
  });
}

wg_status wg_trajectory_csv(const wg_yosida *y, const double *position, const double *velocity,
                            double t, size_t samples, double tolerance, double nudge,
                            char **csv, double *drift, size_t *nudged, size_t *skipped)
{
  return guard([&] {
    need(csv);
    const auto &yp = need(y)->yosida;
    const auto &m = yp->modes();
    const auto traj = tpbvp::propagate_samples(
        PhaseState(field(m, position, Basis::kX1), field(m, velocity, Basis::kX)), t, yp,
        samples, tolerance, nudge);
    size_t n_nudged = 0, n_skipped = 0;
    for (const auto &s : traj)
    {
      n_nudged += s.nudged ? 1 : 0;
      n_skipped += s.state ? 0 : 1;
    }
    auto text = io::trajectory_csv(traj);
    if (drift)
    {
      *drift = tpbvp::energy_drift(traj);
    }
    if (nudged)
    {
      *nudged = n_nudged;
    }
    if (skipped)
    {
      *skipped = n_skipped;
    }
    *csv = dup_string(text);
  });
}

wg_status wg_domain_evaluate(wg_domain domain, const wg_modes *modes, const double *coeffs,
                             const double *points, size_t n_points, double *values)
{
  return guard([&] {
    const auto basis = to_basis(domain);
    const auto &m = need(modes)->modes;
    const auto pts = to_points(domain.kind, points, n_points);
    if (n_points > 0)
    {
      need(values);
    }
    const auto v = domains::evaluate_field(field(m, coeffs, Basis::kX1), basis, pts);
    std::copy(v.begin(), v.end(), values);
  });
}

wg_status wg_domain_project(wg_domain domain, const wg_modes *modes, wg_scalar_fn f, void *user,
                            double *coeffs)
{
  return guard([&] {
    const auto basis = to_basis(domain);
    const auto &m = need(modes)->modes;
    need(f);
    const auto c = domains::project(
        [&](const domains::GridPoint &p) { return f(p.x1, p.x2, user); }, basis, m);
    copy_out(c.coeffs(), coeffs);
  });
}

wg_status wg_domain_default_terminal(wg_domain domain, const wg_modes *modes, double *coeffs)
{
  return guard([&] {
    const auto c = domains::default_terminal_state(to_basis(domain), need(modes)->modes);
    copy_out(c.coeffs(), coeffs);
  });
}

wg_status wg_field_json(const wg_modes *modes, const double *coeffs, char **out)
{
  return guard([&] {
    need(out);
    const auto &m = need(modes)->modes;
    *out = dup_string(io::field_to_json(field(m, coeffs, Basis::kX1)).dump());
  });
}

wg_status wg_field_parse(const char *json, wg_modes **modes, double **coeffs)
{
  return guard([&] {
    need(json);
    need(modes);
    need(coeffs);
    const auto f = io::field_from_json(nlohmann::json::parse(json));
    auto *buf = static_cast<double *>(std::malloc(sizeof(double) * std::max<size_t>(1, f.size())));
    if (buf == nullptr)
    {
      throw std::bad_alloc();
    }
    std::copy(f.coeffs().begin(), f.coeffs().end(), buf);
    try
    {
      *modes = new wg_modes{f.modes()};
    }
    catch (...)
    {
      std::free(buf);
      throw;
    }
    *coeffs = buf;
  });
}

wg_status wg_tpbvp_json(double mu, double t, double terminal_error, const wg_modes *modes,
                        const double *pi0, char **out)
{
  return guard([&] {
    need(out);
    const auto &m = need(modes)->modes;
    *out = dup_string(io::tpbvp_json(mu, t, terminal_error, field(m, pi0, Basis::kX)).dump(2));
  });
}

wg_status wg_study_csv(const double *mus, const double *errors, size_t n, char **out)
{
  return guard([&] {
    need(out);
    if (n > 0)
    {
      need(mus);
      need(errors);
    }
    std::vector<tpbvp::MuStudyRow> rows(n);
    for (size_t i = 0; i < n; i++)
    {
      rows[i] = {mus[i], errors[i]};
    }
    *out = dup_string(io::study_csv(rows));
  });
}

wg_status wg_grid_csv(wg_domain_kind kind, const double *points, const double *values,
                      size_t n_points, char **out)
{
  return guard([&] {
    need(out);
    if (kind != WG_DOMAIN_INTERVAL && kind != WG_DOMAIN_SQUARE)
    {
      Fail(ErrorCode::kArgument, "unknown domain kind");
    }
    const auto pts = to_points(kind, points, n_points);
    if (n_points > 0)
    {
      need(values);
    }
    *out = dup_string(io::grid_csv(kind == WG_DOMAIN_INTERVAL ? domains::DomainKind::kInterval
                                                              : domains::DomainKind::kSquare,
                                   pts, std::span<const double>(values, n_points)));
  });
}

wg_status wg_format_double(double v, char **out)
{
  return guard([&] { *need(out) = dup_string(io::format_double(v)); });
}

wg_status wg_verify_run(uint64_t seed, double perturbation, char **report, int *passed)
{
  return guard([&] {
    need(report);
    need(passed);
    const verification::Options options{seed, perturbation};
    const auto suites = verification::run_all(options);
    *report = dup_string(verification::report_json(options, suites).dump(2));
    *passed = verification::all_passed(suites) ? 1 : 0;
  });
}

}  // extern "C"
