/*
 * Copyright 2026 The wavegroup Authors
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef WAVEGROUP_WAVEGROUP_H
#define WAVEGROUP_WAVEGROUP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WG_API __declspec(dllexport)
#else
#define WG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Spectral propagation of the abstract wave equation x'' = -L x and its Yosida
 * approximations, built on the max-plus kernel representation of the action principle.
 *
 * Coefficient arrays always have one entry per mode. Positions use X1-orthonormal
 * coordinates and velocities X-orthonormal coordinates. Functions return WG_OK on success.
 * On failure they return a status code, and wg_last_error() / wg_last_error_mode() describe the
 * failure for the calling thread. Pointer outputs are left untouched on failure.
 */

typedef enum wg_status {
  WG_OK = 0,
  WG_ERR_ARGUMENT = 1,
  WG_ERR_STRUCTURAL = 2,
  WG_ERR_RESONANCE = 3,
  WG_ERR_ESCAPE_TIME = 4,
  WG_ERR_HORIZON = 5,
  WG_ERR_COERCIVITY = 6,
  WG_ERR_CONCAT_RESONANCE = 7,
  WG_ERR_INADMISSIBLE = 8,
  WG_ERR_QUADRATURE = 9,
  WG_ERR_IO = 10,
  WG_ERR_INTERNAL = 99
} wg_status;

typedef enum wg_domain_kind {
  WG_DOMAIN_INTERVAL = 0,
  WG_DOMAIN_SQUARE = 1
} wg_domain_kind;

typedef enum wg_group_kind {
  WG_GROUP_EXACT = 0,
  WG_GROUP_PROTOTYPE_SHORT = 1,
  WG_GROUP_PROTOTYPE_LONG = 2
} wg_group_kind;

typedef struct wg_domain {
  wg_domain_kind kind;
  int cutoff;            /* largest index per axis, 0 for unbounded */
  int quadrature_points; /* midpoint points per axis, 0 for the default */
} wg_domain;

typedef struct wg_modes wg_modes;
typedef struct wg_yosida wg_yosida;
typedef struct wg_group wg_group;

WG_API const char *wg_version(void);
WG_API const char *wg_status_name(wg_status status);
WG_API const char *wg_last_error(void);
/* Index of the offending mode of the last failure, or -1. */
WG_API long wg_last_error_mode(void);

/* Strings and arrays allocated by the library. */
WG_API void wg_string_free(char *s);
WG_API void wg_doubles_free(double *p);

/* ---- modes ---- */
WG_API wg_status wg_modes_create(const double *lambdas, size_t n, wg_modes **out);
WG_API wg_status wg_modes_create_domain(wg_domain domain, size_t count, wg_modes **out);
WG_API void wg_modes_free(wg_modes *modes);
WG_API size_t wg_modes_size(const wg_modes *modes);
WG_API wg_status wg_modes_lambdas(const wg_modes *modes, double *out);
WG_API wg_status wg_modes_label(const wg_modes *modes, size_t k, char **out);

/* ---- Yosida modes ---- */
WG_API wg_status wg_yosida_create(const wg_modes *modes, double mu, wg_yosida **out);
WG_API void wg_yosida_free(wg_yosida *y);
WG_API wg_status wg_yosida_omega(const wg_yosida *y, double *out);

/* ---- kernel ---- */
/* Closed-form kernel eigenvalues p, q at horizon t. */
WG_API wg_status wg_kernel(const wg_yosida *y, double t, double *p, double *q);
/* Kernel assembled by repeated concatenation over half the concavity horizon (mu > 0). */
WG_API wg_status wg_kernel_long(const wg_yosida *y, double t, double *p, double *q);
/* CSV (mode_label, lambda, omega_mu, p, q); long != 0 selects the concatenated kernel. */
WG_API wg_status wg_kernel_csv(const wg_yosida *y, double t, int long_horizon, char **out);

/* ---- admissibility ---- */
WG_API wg_status wg_admissibility(const wg_yosida *y, double t, double *margin);
/* Up to two nearby admissible horizons (below, above); *count receives how many. */
WG_API wg_status wg_nearest_admissible(const wg_yosida *y, double t, double tolerance,
                                       double out[2], size_t *count);

/* ---- group ---- */
WG_API wg_status wg_group_create(const wg_yosida *y, double t, wg_group_kind kind,
                                 double tolerance, wg_group **out);
WG_API void wg_group_free(wg_group *g);
WG_API wg_status wg_group_blocks(const wg_group *g, double *a11, double *a12, double *a21,
                                 double *a22);
WG_API wg_status wg_group_propagate(const wg_group *g, const double *position,
                                    const double *velocity, double *position_out,
                                    double *velocity_out);
WG_API wg_status wg_energy(const wg_modes *modes, const double *position,
                           const double *velocity, double *out);
/* ||U_t^{mu_i} y - U_t^0 y|| for each mu_i, via the long-horizon prototype. */
WG_API wg_status wg_convergence_defect(const wg_modes *modes, double t, const double *mus,
                                       size_t n_mus, const double *position,
                                       const double *velocity, double tolerance,
                                       double *defects);

/* ---- two-point boundary value problem ---- */
WG_API wg_status wg_tpbvp_solve(const wg_yosida *y, const double *x, const double *z, double t,
                                double tolerance, double *pi0);
WG_API wg_status wg_tpbvp_verify(const wg_yosida *y, const double *x, const double *z,
                                 double t, double tolerance, double *terminal_error);
WG_API wg_status wg_mu_study(const wg_modes *modes, const double *x, const double *z, double t,
                             const double *mus, size_t n_mus, double tolerance,
                             double *errors);
/*
 * Samples the trajectory from (position, velocity) at k t / samples, k = 0..samples, and
 * writes it as CSV (s, mode_label, position_coeff, velocity_coeff) with a final summary row.
 * Optional outputs (may be NULL): maximal relative energy drift, number of nudged samples
 * and number of skipped samples.
 */
WG_API wg_status wg_trajectory_csv(const wg_yosida *y, const double *position,
                                   const double *velocity, double t, size_t samples,
                                   double tolerance, double nudge, char **csv, double *drift,
                                   size_t *nudged, size_t *skipped);

/* ---- domains ---- */
typedef double (*wg_scalar_fn)(double x1, double x2, void *user);

/* points holds x1 (interval) or x1, x2 (square) per point. */
WG_API wg_status wg_domain_evaluate(wg_domain domain, const wg_modes *modes,
                                    const double *coeffs, const double *points,
                                    size_t n_points, double *values);
WG_API wg_status wg_domain_project(wg_domain domain, const wg_modes *modes, wg_scalar_fn f,
                                   void *user, double *coeffs);
WG_API wg_status wg_domain_default_terminal(wg_domain domain, const wg_modes *modes,
                                            double *coeffs);

/* ---- serialization ---- */
WG_API wg_status wg_field_json(const wg_modes *modes, const double *coeffs, char **out);
/* Parses field JSON; *coeffs is released with wg_doubles_free. */
WG_API wg_status wg_field_parse(const char *json, wg_modes **modes, double **coeffs);
WG_API wg_status wg_tpbvp_json(double mu, double t, double terminal_error, const wg_modes *modes,
                               const double *pi0, char **out);
WG_API wg_status wg_study_csv(const double *mus, const double *errors, size_t n, char **out);
WG_API wg_status wg_grid_csv(wg_domain_kind kind, const double *points, const double *values,
                             size_t n_points, char **out);
WG_API wg_status wg_format_double(double v, char **out);

/* ---- self-verification ---- */
/* Runs every invariant suite; *report receives JSON, *passed 1 iff all suites pass. */
WG_API wg_status wg_verify_run(uint64_t seed, double perturbation, char **report, int *passed);

#ifdef __cplusplus
}
#endif

#endif /* WAVEGROUP_WAVEGROUP_H */
