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

#include "hyperradon/hyperradon.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hyperradon/geometry.hpp"
#include "hyperradon/liegroup.hpp"
#include "hyperradon/parallel.hpp"
#include "hyperradon/radon.hpp"
#include "hyperradon/settings.hpp"
#include "hyperradon/specfun.hpp"
#include "hyperradon/spectral.hpp"
#include "hyperradon/verify.hpp"

struct hr_context {
  hr::Settings settings;
  std::string last_error;
};

struct hr_params {
  std::map<std::string, double> values;
};

namespace {

using hr::cplx;
using hr::ErrorCode;

hr_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return HR_ERR_INVALID_ARGUMENT;
    case ErrorCode::Domain: return HR_ERR_DOMAIN;
    case ErrorCode::Pole: return HR_ERR_POLE;
    case ErrorCode::NonConvergence: return HR_ERR_NONCONVERGENCE;
    case ErrorCode::OutOfRange: return HR_ERR_OUT_OF_RANGE;
    case ErrorCode::Degenerate: return HR_ERR_DEGENERATE;
    case ErrorCode::Underflow: return HR_ERR_UNDERFLOW;
    case ErrorCode::Config: return HR_ERR_CONFIG;
    case ErrorCode::Io: return HR_ERR_IO;
    case ErrorCode::Internal: return HR_ERR_INTERNAL;
  }
  return HR_ERR_INTERNAL;
}

template <class F>
hr_status guarded(hr_context* ctx, F&& body) {
  if (!ctx) return HR_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    body();
    return HR_OK;
  } catch (const hr::Error& e) {
    ctx->last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
  } catch (...) {
    ctx->last_error = "unknown failure";
  }
  return HR_ERR_INTERNAL;
}

void need(const void* p, const char* what) {
  if (!p) hr::fail(ErrorCode::InvalidArgument, std::string("null ") + what);
}

hr_value pack(const hr::EvalResult& r) { return {r.value.real(), r.value.imag(), r.abs_error, hr::method_name(r.method)}; }
hr_value pack(cplx v, double err, hr::Method m) { return {v.real(), v.imag(), err, hr::method_name(m)}; }

hr::ModelPoint point_of(hr_chart c, const double* v) {
  switch (c) {
    case HR_CHART_HALF_PLANE: return hr::HalfPlane{v[0], v[1]};
    case HR_CHART_DISC: return hr::Disc{v[0], v[1]};
    case HR_CHART_POLAR: return hr::Polar{v[0], v[1]};
    case HR_CHART_HYPERBOLOID: return hr::Hyperboloid{v[0], v[1], v[2]};
  }
  hr::fail(ErrorCode::InvalidArgument, "unknown chart");
}

void write_point(const hr::ModelPoint& p, double* out) {
  std::visit(
      [out](const auto& q) {
        using T = std::decay_t<decltype(q)>;
        out[2] = 0.0;
        if constexpr (std::is_same_v<T, hr::HalfPlane>) out[0] = q.x, out[1] = q.y;
        if constexpr (std::is_same_v<T, hr::Disc>) out[0] = q.X, out[1] = q.Y;
        if constexpr (std::is_same_v<T, hr::Polar>) out[0] = q.rho, out[1] = q.phi;
        if constexpr (std::is_same_v<T, hr::Hyperboloid>) out[0] = q.T, out[1] = q.X, out[2] = q.Y;
      },
      p);
}

hr::Chart chart_of(hr_chart c) {
  if (c < HR_CHART_HALF_PLANE || c > HR_CHART_HYPERBOLOID) hr::fail(ErrorCode::InvalidArgument, "unknown chart");
  return static_cast<hr::Chart>(c);
}

hr::Scheme scheme_of(hr_scheme s) {
  switch (s) {
    case HR_SCHEME_IWASAWA: return hr::Scheme::Iwasawa;
    case HR_SCHEME_NHA: return hr::Scheme::NHA;
    case HR_SCHEME_NHK: return hr::Scheme::NHK;
    case HR_SCHEME_EULER_SU11: return hr::Scheme::EulerSU11;
    case HR_SCHEME_ADS_SU11: return hr::Scheme::AdSSU11;
    case HR_SCHEME_HAH: return hr::Scheme::HAH;
  }
  hr::fail(ErrorCode::InvalidArgument, "unknown decomposition scheme");
}

hr::Geodesic geodesic_of(hr_model m, double a, double xi, int orientation) {
  const int o = orientation >= 0 ? 1 : -1;
  if (m == HR_MODEL_HALF_PLANE) return hr::HalfPlaneGeodesic{a, xi, o};
  if (m == HR_MODEL_DISC) return hr::DiscGeodesic{a, xi, o};
  hr::fail(ErrorCode::InvalidArgument, "unknown model");
}

int as_int(double v, const char* name) {
  if (!(std::abs(v) < 1e9) || v != std::round(v))
    hr::fail(ErrorCode::InvalidArgument, std::string("parameter ") + name + " must be an integer");
  return int(v);
}

hr::RadonOptions radon_options(const hr::Settings& s) {
  hr::RadonOptions o;
  o.sigma_cutoff = s.radon_sigma_cutoff;
  o.rel_tol = s.quad_rel_tol;
  return o;
}

// ---------------------------------------------------------------- eval table
using Args = std::map<std::string, double>;

struct EvalFunction {
  const char* name;
  const char* keys;  // space separated
  Args defaults;
  std::function<hr::EvalResult(const Args&, double)> eval;
};

hr::EvalResult real_result(double v, hr::Method m = hr::Method::ClosedForm) { return {cplx(v), 0.0, m}; }

const std::vector<EvalFunction>& functions() {
  static const std::vector<EvalFunction> table = {
      {"gamma", "im", {{"im", 0.0}}, [](const Args& a, double x) { return hr::gamma_complex(cplx(x, a.at("im"))); }},
      {"besselK", "kappa", {{"kappa", 1.0}}, [](const Args& a, double x) { return hr::bessel_K_imag(a.at("kappa"), x); }},
      {"besselJ", "nu nu_im", {{"nu", 1.0}, {"nu_im", 0.0}},
       [](const Args& a, double x) { return hr::bessel_J(cplx(a.at("nu"), a.at("nu_im")), x); }},
      {"F", "kappa", {{"kappa", 1.0}}, [](const Args& a, double x) { return hr::fgz_functions(cplx(0, a.at("kappa")), x).F; }},
      {"G", "kappa", {{"kappa", 1.0}}, [](const Args& a, double x) { return hr::fgz_functions(cplx(0, a.at("kappa")), x).G; }},
      {"Z", "kappa", {{"kappa", 1.0}}, [](const Args& a, double x) { return hr::fgz_functions(cplx(0, a.at("kappa")), x).Z; }},
      {"conical", "m kappa", {{"m", 0.0}, {"kappa", 1.0}},
       [](const Args& a, double rho) { return hr::conical_P(as_int(a.at("m"), "m"), a.at("kappa"), std::cosh(rho)); }},
      {"E", "k nu", {{"k", 0.0}, {"nu", 1.0}},
       [](const Args& a, double xi) { return hr::modified_conical_EO(as_int(a.at("k"), "k"), a.at("nu"), xi).E; }},
      {"O", "k nu", {{"k", 0.0}, {"nu", 1.0}},
       [](const Args& a, double xi) { return hr::modified_conical_EO(as_int(a.at("k"), "k"), a.at("nu"), xi).O; }},
      {"chi", "k kappa xpos", {{"k", 1.0}, {"kappa", 1.0}, {"xpos", 0.0}},
       [](const Args& a, double y) {
         return hr::EvalResult{hr::chi_mode(hr::HalfPlaneMode{a.at("k"), a.at("kappa")}, hr::HalfPlane{a.at("xpos"), y}),
                               0.0, hr::Method::Series};
       }},
      {"polar", "m kappa phi", {{"m", 0.0}, {"kappa", 1.0}, {"phi", 0.0}},
       [](const Args& a, double rho) {
         return hr::EvalResult{
             hr::polar_mode(hr::PolarMode{as_int(a.at("m"), "m"), a.at("kappa")}, hr::Polar{rho, a.at("phi")}), 0.0,
             hr::Method::IntegralQuadrature};
       }},
      {"bound", "theta k n", {{"theta", 3 * hr::kPi / 4}, {"k", 1.0}, {"n", 0.0}},
       [](const Args& a, double xi) {
         return real_result(hr::liouville_bound({a.at("theta"), a.at("k")}, as_int(a.at("n"), "n"), xi), hr::Method::Series);
       }},
      {"scattering", "theta k kappa", {{"theta", 3 * hr::kPi / 4}, {"k", 1.0}, {"kappa", 1.0}},
       [](const Args& a, double xi) {
         return real_result(hr::liouville_scattering({a.at("theta"), a.at("k")}, a.at("kappa"), xi), hr::Method::Series);
       }},
      {"singular", "", {}, [](const Args&, double nu) { return real_result(hr::singular_value(nu).lambda); }},
      {"singular_continued", "", {}, [](const Args&, double nu) { return real_result(hr::singular_value_continued_sq(nu)); }},
      {"poschl_teller", "k", {{"k", 1.0}},
       [](const Args& a, double nu) { return real_result(hr::poschl_teller_function(as_int(a.at("k"), "k"), nu)); }},
  };
  return table;
}

const EvalFunction* find_function(const char* name) {
  if (!name) return nullptr;
  for (const auto& f : functions())
    if (std::strcmp(f.name, name) == 0) return &f;
  return nullptr;
}

}  // namespace

extern "C" {

const char* hr_version(void) { return "1.0.0"; }

const char* hr_status_name(hr_status s) {
  if (s == HR_OK) return "ok";
  if (s < HR_ERR_INVALID_ARGUMENT || s > HR_ERR_INTERNAL) return "unknown";
  return hr::error_code_name(static_cast<ErrorCode>(s));
}

hr_status hr_context_create(hr_context** out) {
  if (!out) return HR_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) hr_context();
  return *out ? HR_OK : HR_ERR_INTERNAL;
}

void hr_context_destroy(hr_context* ctx) { delete ctx; }

const char* hr_last_error(const hr_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

hr_status hr_context_set(hr_context* ctx, const char* key, double value) {
  return guarded(ctx, [&] {
    need(key, "key");
    ctx->settings.set(key, value);
  });
}

hr_status hr_context_get(const hr_context* ctx, const char* key, double* value) {
  return guarded(const_cast<hr_context*>(ctx), [&] {
    need(key, "key");
    need(value, "output");
    *value = ctx->settings.get(key);
  });
}

hr_status hr_context_load_config(hr_context* ctx, const char* path) {
  return guarded(ctx, [&] {
    need(path, "path");
    ctx->settings.load_file(path);
  });
}

int hr_context_threads(const hr_context* ctx) { return ctx ? ctx->settings.effective_threads() : 1; }

hr_status hr_params_create(hr_params** out) {
  if (!out) return HR_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) hr_params();
  return *out ? HR_OK : HR_ERR_INTERNAL;
}

void hr_params_destroy(hr_params* p) { delete p; }

hr_status hr_params_set(hr_params* p, const char* key, double value) {
  if (!p || !key || !*key) return HR_ERR_INVALID_ARGUMENT;
  if (!std::isfinite(value)) return HR_ERR_INVALID_ARGUMENT;
  p->values[key] = value;
  return HR_OK;
}

const char* hr_eval_functions(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& f : functions()) s += (s.empty() ? "" : " ") + std::string(f.name);
    return s;
  }();
  return names.c_str();
}

const char* hr_eval_parameters(const char* function) {
  const EvalFunction* f = find_function(function);
  return f ? f->keys : nullptr;
}

hr_status hr_eval(hr_context* ctx, const char* function, const hr_params* params, const double* xs, size_t n,
                  hr_value* out) {
  return guarded(ctx, [&] {
    const EvalFunction* f = find_function(function);
    if (!f) hr::fail(ErrorCode::InvalidArgument, std::string("unknown function '") + (function ? function : "") + "'");
    need(xs, "abscissae");
    need(out, "output");
    Args args = f->defaults;
    if (params)
      for (const auto& [k, v] : params->values) {
        if (!args.count(k)) hr::fail(ErrorCode::InvalidArgument, "function " + std::string(f->name) + " has no parameter '" + k + "'");
        args[k] = v;
      }
    hr::parallel_for(n, ctx->settings.effective_threads(), [&](std::size_t i) { out[i] = pack(f->eval(args, xs[i])); });
  });
}

hr_status hr_convert(hr_context* ctx, hr_chart from, const double* in, hr_chart to, double* out) {
  return guarded(ctx, [&] {
    need(in, "input");
    need(out, "output");
    write_point(hr::convert(point_of(from, in), chart_of(to)), out);
  });
}

hr_status hr_distance(hr_context* ctx, hr_chart chart, const double* a, const double* b, double* out) {
  return guarded(ctx, [&] {
    need(a, "point");
    need(b, "point");
    need(out, "output");
    const auto p = point_of(chart, a), q = point_of(chart, b);
    hr::validate(p);
    hr::validate(q);
    *out = hr::distance(p, q);
  });
}

hr_status hr_geodesic_point(hr_context* ctx, hr_model model, double a, double xi, int orientation, double sigma,
                            hr_chart target, double* out) {
  return guarded(ctx, [&] {
    need(out, "output");
    write_point(hr::geodesic_point(geodesic_of(model, a, xi, orientation), sigma, chart_of(target)), out);
  });
}

hr_status hr_compose(hr_context* ctx, hr_scheme scheme, const double* params, double* matrix) {
  return guarded(ctx, [&] {
    need(params, "params");
    need(matrix, "output");
    const auto g = hr::compose(scheme_of(scheme), {params[0], params[1], params[2]});
    for (int i = 0; i < 4; ++i) {
      matrix[2 * i] = g.m(i / 2, i % 2).real();
      matrix[2 * i + 1] = g.m(i / 2, i % 2).imag();
    }
  });
}

hr_status hr_decompose(hr_context* ctx, hr_scheme scheme, const double* matrix, double* params) {
  return guarded(ctx, [&] {
    need(matrix, "matrix");
    need(params, "output");
    const hr::Scheme s = scheme_of(scheme);
    hr::GroupElement g;
    g.flavor = hr::scheme_flavor(s);
    for (int i = 0; i < 4; ++i) g.m(i / 2, i % 2) = cplx(matrix[2 * i], matrix[2 * i + 1]);
    hr::validate(g, 1e-9);
    const auto p = hr::decompose(g, s);
    for (int i = 0; i < 3; ++i) params[i] = p[i];
  });
}

hr_status hr_radon_mode(hr_context* ctx, hr_model model, double k, double nu, const double* a, const double* xi,
                        size_t n, hr_value* out) {
  return guarded(ctx, [&] {
    need(a, "geodesic parameters");
    need(xi, "geodesic parameters");
    need(out, "output");
    std::vector<hr::Geodesic> gs(n);
    for (size_t i = 0; i < n; ++i) gs[i] = geodesic_of(model, a[i], xi[i], 1);
    const hr::Integrand f = model == HR_MODEL_DISC ? hr::mode_integrand(hr::PolarMode{as_int(k, "k"), nu})
                                                   : hr::mode_integrand(hr::HalfPlaneMode{k, nu});
    const auto r = hr::radon_many(f, gs, radon_options(ctx->settings), ctx->settings.effective_threads());
    for (size_t i = 0; i < n; ++i) out[i] = pack(r[i].value, r[i].quadrature_error, hr::Method::IntegralQuadrature);
  });
}

hr_status hr_radon_reference(hr_context* ctx, hr_model model, double k, double nu, double a, double xi, hr_value* out) {
  return guarded(ctx, [&] {
    need(out, "output");
    if (model == HR_MODEL_DISC) {
      *out = pack(hr::radon_disc_closed_form(as_int(k, "k"), nu, xi, a), 0.0, hr::Method::ClosedForm);
    } else if (model == HR_MODEL_HALF_PLANE) {
      const cplx phase = std::exp(cplx(0.0, k * a));
      *out = pack(phase * hr::radon_halfplane_asymptotic(k, nu, std::exp(xi)), 0.0, hr::Method::Asymptotic);
    } else {
      hr::fail(ErrorCode::InvalidArgument, "unknown model");
    }
  });
}

hr_status hr_radon_intertwine(hr_context* ctx, hr_model model, double k, double nu, double a, double lo, double hi,
                              int n, double* residual) {
  return guarded(ctx, [&] {
    need(residual, "output");
    const auto o = radon_options(ctx->settings);
    const double h = ctx->settings.radon_grid_step;
    const int t = ctx->settings.effective_threads();
    if (model == HR_MODEL_DISC)
      *residual = hr::intertwine_residual(hr::PolarMode{as_int(k, "k"), nu}, a, lo, hi, n, h, o, t).residual;
    else if (model == HR_MODEL_HALF_PLANE)
      *residual = hr::intertwine_residual(hr::HalfPlaneMode{k, nu}, a, lo, hi, n, h, o, t).residual;
    else
      hr::fail(ErrorCode::InvalidArgument, "unknown model");
  });
}

hr_status hr_radon_antipodal(hr_context* ctx, int k, double nu, int samples, double* deviation, double* wrong_pairing) {
  return guarded(ctx, [&] {
    need(deviation, "output");
    const auto r = hr::antipodal_check(k, nu, samples, 2.0, 7, radon_options(ctx->settings), ctx->settings.effective_threads());
    *deviation = r.max_deviation;
    if (wrong_pairing) *wrong_pairing = r.wrong_pairing;
  });
}

hr_status hr_radon_fit_theta(hr_context* ctx, double k, double nu, double eta_lo, double eta_hi, int n, double* theta,
                             double* rms) {
  return guarded(ctx, [&] {
    need(theta, "output");
    if (std::abs(k) * (eta_hi - eta_lo) < 3 * 2 * hr::kPi)
      hr::fail(ErrorCode::InvalidArgument, "η window spans fewer than 3 oscillations");
    const auto f = hr::extract_theta(k, nu, eta_lo, eta_hi, n, radon_options(ctx->settings), ctx->settings.effective_threads());
    *theta = f.theta;
    if (rms) *rms = f.rms_residual;
  });
}

hr_status hr_singular_value(hr_context* ctx, double nu, double* lambda) {
  return guarded(ctx, [&] {
    need(lambda, "output");
    if (!(nu > 0.0)) hr::fail(ErrorCode::Domain, "singular value needs ν > 0");
    *lambda = hr::singular_value(nu).lambda;
  });
}

hr_status hr_singular_value_zero(hr_context* ctx, double lo, double hi, double* root) {
  return guarded(ctx, [&] {
    need(root, "output");
    *root = hr::singular_value_zero(lo, hi);
  });
}

hr_status hr_verify(hr_context* ctx, const char* suite, double theta, char** json, int* passed) {
  return guarded(ctx, [&] {
    need(suite, "suite");
    need(json, "output");
    hr::VerifyOptions o;
    o.settings = ctx->settings;
    if (!std::isnan(theta)) o.theta = theta;
    const auto reports = hr::run_verify(suite, o);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();
    const std::string s = hr::report_json(reports);
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) hr::fail(ErrorCode::Internal, "out of memory");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *json = buf;
    if (passed) *passed = ok ? 1 : 0;
  });
}

void hr_free_string(char* s) { std::free(s); }

}  // extern "C"
