// Copyright 2026 The hyperradon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the hyperradon library.
 *
 * All entry points return an hr_status. On failure the message is available
 * from hr_last_error(ctx) until the next call on the same context. A context
 * must not be used from two threads at once; create one per thread. */
#ifndef HYPERRADON_H
#define HYPERRADON_H

#include <stddef.h>

#if defined(_WIN32)
#define HR_API __declspec(dllexport)
#elif defined(HR_BUILDING_LIBRARY)
#define HR_API __attribute__((visibility("default")))
#else
#define HR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  HR_OK = 0,
  HR_ERR_INVALID_ARGUMENT = 1,
  HR_ERR_DOMAIN = 2,
  HR_ERR_POLE = 3,
  HR_ERR_NONCONVERGENCE = 4,
  HR_ERR_OUT_OF_RANGE = 5,
  HR_ERR_DEGENERATE = 6,
  HR_ERR_UNDERFLOW = 7,
  HR_ERR_CONFIG = 8,
  HR_ERR_IO = 9,
  HR_ERR_INTERNAL = 10
} hr_status;

typedef enum { HR_CHART_HALF_PLANE = 0, HR_CHART_DISC = 1, HR_CHART_POLAR = 2, HR_CHART_HYPERBOLOID = 3 } hr_chart;
typedef enum { HR_MODEL_HALF_PLANE = 0, HR_MODEL_DISC = 1 } hr_model;
typedef enum {
  HR_SCHEME_IWASAWA = 0,
  HR_SCHEME_NHA = 1,
  HR_SCHEME_NHK = 2,
  HR_SCHEME_EULER_SU11 = 3,
  HR_SCHEME_ADS_SU11 = 4,
  HR_SCHEME_HAH = 5
} hr_scheme;

typedef struct hr_context hr_context;
typedef struct hr_params hr_params;

typedef struct {
  double re, im;
  double abs_error;
  const char* method; /* static string: series, integral-quadrature, asymptotic, closed-form */
} hr_value;

HR_API const char* hr_version(void);
HR_API const char* hr_status_name(hr_status s);

HR_API hr_status hr_context_create(hr_context** out);
HR_API void hr_context_destroy(hr_context* ctx);
HR_API const char* hr_last_error(const hr_context* ctx);
/* Dotted settings keys, e.g. "quad.rel_tol", "tol.intertwine", "threads". */
HR_API hr_status hr_context_set(hr_context* ctx, const char* key, double value);
HR_API hr_status hr_context_get(const hr_context* ctx, const char* key, double* value);
HR_API hr_status hr_context_load_config(hr_context* ctx, const char* path);
HR_API int hr_context_threads(const hr_context* ctx);

/* Named parameters for hr_eval. */
HR_API hr_status hr_params_create(hr_params** out);
HR_API void hr_params_destroy(hr_params* p);
HR_API hr_status hr_params_set(hr_params* p, const char* key, double value);

/* Space-separated list of function names understood by hr_eval. */
HR_API const char* hr_eval_functions(void);
/* Space-separated parameter keys of one function, NULL if unknown. */
HR_API const char* hr_eval_parameters(const char* function);
/* Evaluates a named function at x (n points when xs is an array). */
HR_API hr_status hr_eval(hr_context* ctx, const char* function, const hr_params* params, const double* xs, size_t n,
                         hr_value* out);

/* Geometry */
HR_API hr_status hr_convert(hr_context* ctx, hr_chart from, const double* in, hr_chart to, double* out);
HR_API hr_status hr_distance(hr_context* ctx, hr_chart chart, const double* a, const double* b, double* out);
HR_API hr_status hr_geodesic_point(hr_context* ctx, hr_model model, double a, double xi, int orientation, double sigma,
                                   hr_chart target, double* out);

/* Group: matrices as 8 doubles, row-major (re, im) pairs. */
HR_API hr_status hr_compose(hr_context* ctx, hr_scheme scheme, const double* params, double* matrix);
HR_API hr_status hr_decompose(hr_context* ctx, hr_scheme scheme, const double* matrix, double* params);

/* Radon transform of a mode. Half-plane: mode χ_{k,ν}, geodesic (t = a, ξ).
 * Disc: mode e^{ikφ}P^k_{iν−½}(cosh ρ), geodesic (θ = a, ξ). */
HR_API hr_status hr_radon_mode(hr_context* ctx, hr_model model, double k, double nu, const double* a, const double* xi,
                               size_t n, hr_value* out);
/* Closed form on the disc, leading asymptotic form on the half-plane (η = e^ξ). */
HR_API hr_status hr_radon_reference(hr_context* ctx, hr_model model, double k, double nu, double a, double xi,
                                    hr_value* out);
HR_API hr_status hr_radon_intertwine(hr_context* ctx, hr_model model, double k, double nu, double a, double lo,
                                     double hi, int n, double* residual);
HR_API hr_status hr_radon_antipodal(hr_context* ctx, int k, double nu, int samples, double* deviation,
                                    double* wrong_pairing);
HR_API hr_status hr_radon_fit_theta(hr_context* ctx, double k, double nu, double eta_lo, double eta_hi, int n,
                                    double* theta, double* rms);
HR_API hr_status hr_singular_value(hr_context* ctx, double nu, double* lambda);
HR_API hr_status hr_singular_value_zero(hr_context* ctx, double lo, double hi, double* root);

/* Runs a verification suite ("all" for every suite). theta is an extra
 * extension angle for the spectral suite; pass a NaN to skip it. The JSON
 * report must be released with hr_free_string. */
HR_API hr_status hr_verify(hr_context* ctx, const char* suite, double theta, char** json, int* passed);
HR_API void hr_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif
