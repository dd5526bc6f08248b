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

#include <cmath>
#include <vector>

#include "hyperradon/quad.hpp"
#include "hyperradon/specfun.hpp"

namespace hr {

namespace {

const cplx I1(0.0, 1.0);

struct Series {
  cplx value;
  double error;
};

// Gauss series ₂F₁(a, b; c; w), |w| < 1.
Series hyp2f1(cplx a, cplx b, cplx c, double w) {
  cplx term = 1.0, sum = 1.0;
  double biggest = 1.0;
  for (int n = 0; n < 20000; ++n) {
    term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * w;
    sum += term;
    biggest = std::max(biggest, std::abs(term));
    if (std::abs(term) < 1e-17 * std::abs(sum) && n > 2) return {sum, 4e-16 * biggest + std::abs(term)};
  }
  fail(ErrorCode::NonConvergence, "hypergeometric series did not converge");
}

double abs_gamma_sq(cplx z) { return std::exp(2.0 * lgamma_complex(z).real()); }

// ln cosh ξ without overflow.
double log_cosh(double xi) {
  const double a = std::abs(xi);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

EvalResult conical_integral(int m, double kappa, double x) {
  const double rho = std::acosh(x);
  const cplx nu(-0.5, kappa);
  const double ch = x, sh = std::sinh(rho);
  auto f = [=](double th) {
    const double b = ch + sh * std::cos(th);
    return std::exp(nu * std::log(b)) * std::cos(m * th);
  };
  const int pieces = 1 + int((std::abs(kappa) * rho + m) / 4.0);
  std::vector<double> pts(pieces + 1);
  for (int i = 0; i <= pieces; ++i) pts[i] = kPi * i / pieces;
  const auto q = quad::integrate_pieces(f, pts, 1e-13);
  cplx poch = 1.0;
  for (int j = 1; j <= m; ++j) poch *= nu + double(j);
  EvalResult r;
  r.value = (poch * q.value / kPi).real();
  r.abs_error = std::abs(poch) * q.error / kPi + 1e-16 * std::abs(r.value);
  r.method = Method::IntegralQuadrature;
  return r;
}

// P^m_{iκ−½}(z) = (1−z⁻²)^{−m/2}/√π · 2 Re[2^{iκ−½}Γ(iκ)/Γ(½+iκ−m) z^{iκ−½} F(¼−iκ/2−m/2, ¾−iκ/2−m/2; 1−iκ; z⁻²)]
EvalResult conical_series(int m, double kappa, double x, bool leading_only) {
  if (!(x > 1.0)) fail(ErrorCode::Domain, "conical series needs x > 1");
  if (kappa == 0.0) fail(ErrorCode::Domain, "conical series needs κ ≠ 0");
  const cplx ik(0.0, kappa);
  Series F{1.0, 0.0};
  const double w = 1.0 / (x * x);
  if (!leading_only) F = hyp2f1(0.25 - ik / 2.0 - m / 2.0, 0.75 - ik / 2.0 - m / 2.0, 1.0 - ik, w);
  const cplx coef = std::exp((ik - 0.5) * std::log(2.0 * x) + lgamma_complex(ik)) * rgamma(0.5 + ik - double(m));
  const double lead = std::pow(1.0 - w, -0.5 * m) / std::sqrt(kPi);
  EvalResult r;
  r.value = lead * 2.0 * (coef * F.value).real();
  r.abs_error = lead * 2.0 * std::abs(coef) * (F.error + 1e-16 * std::abs(F.value));
  r.method = leading_only ? Method::Asymptotic : Method::Series;
  return r;
}

// E/O from the series in t = tanh²ξ about ξ = 0.
void eo_series(int k, double nu, double xi, cplx& we, cplx& wo, double& err) {
  const cplx a = (0.5 + k - I1 * nu) / 2.0, b = (0.5 + k + I1 * nu) / 2.0;
  const double t = std::tanh(xi) * std::tanh(xi);
  const Series fe = hyp2f1(a, 0.5 - b, 0.5, t);
  const Series fo = hyp2f1(a + 0.5, 1.0 - b, 1.5, t);
  we = fe.value;
  wo = fo.value;
  err = std::max(fe.error, fo.error);
}

// ₂F₁(A, B; C; t) via the connection to 1 − t (C − A − B = iν, never an integer).
Series connect(cplx A, cplx B, cplx C, double one_minus_t, double log_one_minus_t) {
  const Series f1 = hyp2f1(A, B, A + B - C + 1.0, one_minus_t);
  const Series f2 = hyp2f1(C - A, C - B, C - A - B + 1.0, one_minus_t);
  const cplx g1 = std::exp(lgamma_complex(C) + lgamma_complex(C - A - B)) * rgamma(C - A) * rgamma(C - B);
  const cplx g2 = std::exp(lgamma_complex(C) + lgamma_complex(A + B - C)) * rgamma(A) * rgamma(B);
  const cplx p = std::exp((C - A - B) * log_one_minus_t);
  return {g1 * f1.value + p * g2 * f2.value,
          std::abs(g1) * f1.error + std::abs(g2) * f2.error};
}

void eo_connection(int k, double nu, double xi, cplx& we, cplx& wo, double& err) {
  const cplx a = (0.5 + k - I1 * nu) / 2.0, b = (0.5 + k + I1 * nu) / 2.0;
  const double ax = std::abs(xi);
  const double lc = log_cosh(ax);
  const double s = std::exp(-2.0 * lc);  // sech²ξ = 1 − t
  const Series fe = connect(a, 0.5 - b, 0.5, s, -2.0 * lc);
  const Series fo = connect(a + 0.5, 1.0 - b, 1.5, s, -2.0 * lc);
  we = fe.value;
  wo = fo.value;
  err = std::max(fe.error, fo.error);
}

EOResult eo_assemble(int k, double nu, double xi, const cplx& we, const cplx& wo, double err, Method m) {
  const double ax = std::abs(xi);
  const cplx ch = std::exp((-0.5 + I1 * nu) * log_cosh(ax));
  const double p0 = legendre_at_zero(k, nu), d0 = legendre_deriv_at_zero(k, nu);
  EOResult r;
  r.E.value = p0 * (ch * we).real();
  r.O.value = (xi < 0 ? -1.0 : 1.0) * d0 * std::tanh(ax) * (ch * wo).real();
  r.E.abs_error = std::abs(p0) * std::abs(ch) * err;
  r.O.abs_error = std::abs(d0) * std::abs(ch) * err;
  r.E.method = r.O.method = m;
  return r;
}

}  // namespace

EvalResult conical_P(int m, double kappa, double x, ConicalMethod method) {
  if (!(x >= 1.0)) fail(ErrorCode::Domain, "conical function needs x ≥ 1");
  if (!std::isfinite(kappa)) fail(ErrorCode::InvalidArgument, "κ must be finite");
  kappa = std::abs(kappa);
  if (m < 0) {
    // P^{−m} = Γ(ν−m+1)/Γ(ν+m+1) P^m
    EvalResult r = conical_P(-m, kappa, x, method);
    const cplx nu(-0.5, kappa);
    cplx ratio = 1.0;
    for (int j = m + 1; j <= -m; ++j) ratio /= nu + double(j);
    r.value = (ratio * r.value).real();
    r.abs_error *= std::abs(ratio);
    return r;
  }
  switch (method) {
    case ConicalMethod::Integral: return conical_integral(m, kappa, x);
    case ConicalMethod::Series: return conical_series(m, kappa, x, false);
    case ConicalMethod::Asymptotic: return conical_series(m, kappa, x, true);
    case ConicalMethod::Auto: break;
  }
  if (x < 4.0 || kappa == 0.0) return conical_integral(m, kappa, x);
  return conical_series(m, kappa, x, false);
}

double legendre_at_zero(int k, double nu) {
  return std::pow(2.0, k) * std::sqrt(kPi) / abs_gamma_sq(cplx(0.75 - 0.5 * k, 0.5 * nu));
}

double legendre_deriv_at_zero(int k, double nu) {
  return -std::pow(2.0, k + 1) * std::sqrt(kPi) / abs_gamma_sq(cplx(0.25 - 0.5 * k, 0.5 * nu));
}

EOResult modified_conical_EO(int k, double nu, double xi, EOMethod method) {
  if (!(nu > 0.0)) fail(ErrorCode::Domain, "E/O need ν > 0");
  if (!std::isfinite(xi)) fail(ErrorCode::InvalidArgument, "ξ must be finite");
  cplx we, wo;
  double err = 0.0;
  const double ax = std::abs(xi);
  if (method == EOMethod::Series || (method == EOMethod::Auto && ax < 1.0)) {
    if (ax > 6.0) fail(ErrorCode::OutOfRange, "E/O series used too far from the origin");
    eo_series(k, nu, xi, we, wo, err);
    EOResult r = eo_assemble(k, nu, xi, we, wo, err, Method::Series);
    if (method == EOMethod::Auto && ax >= 0.8) {
      cplx ce, co;
      double cerr = 0.0;
      eo_connection(k, nu, xi, ce, co, cerr);
      const EOResult c = eo_assemble(k, nu, xi, ce, co, cerr, Method::Series);
      const double scale = std::max({1.0, std::abs(r.E.value), std::abs(r.O.value)});
      r.window_gap = std::max(std::abs(r.E.value - c.E.value), std::abs(r.O.value - c.O.value)) / scale;
      r.degraded = r.window_gap > 1e-7;
    }
    return r;
  }
  if (ax < 1e-3) fail(ErrorCode::OutOfRange, "connection formula used too close to the origin");
  eo_connection(k, nu, xi, we, wo, err);
  EOResult r = eo_assemble(k, nu, xi, we, wo, err, Method::Series);
  if (method == EOMethod::Auto && ax <= 1.2) {
    cplx se, so;
    double serr = 0.0;
    eo_series(k, nu, xi, se, so, serr);
    const EOResult s = eo_assemble(k, nu, xi, se, so, serr, Method::Series);
    const double scale = std::max({1.0, std::abs(r.E.value), std::abs(r.O.value)});
    r.window_gap = std::max(std::abs(r.E.value - s.E.value), std::abs(r.O.value - s.O.value)) / scale;
    r.degraded = r.window_gap > 1e-7;
  }
  return r;
}

EOResult eo_printed_asymptotic(int k, double nu, double xi) {
  const cplx s1 = std::sin(kPi * cplx(0.25, 0.5 * nu)), s2 = std::sin(kPi * cplx(0.25, -0.5 * nu));
  const cplx g1 = std::exp(lgamma_complex(cplx(0.0, nu))) * rgamma(cplx(0.5 - k, nu));
  const cplx g2 = std::exp(lgamma_complex(cplx(0.0, -nu))) * rgamma(cplx(0.5 - k, -nu));
  const double pre = 1.0 / std::sqrt(2.0 * kPi * std::cosh(xi));
  const cplx ep = std::exp(I1 * nu * xi), em = std::exp(-I1 * nu * xi);
  EOResult r;
  if (k % 2 == 0) {
    const double sg = (k / 2) % 2 == 0 ? 1.0 : -1.0;
    r.E.value = sg * pre * (ep * s1 * g1 + em * s2 * g2);
    r.O.value = sg * pre * (ep * s2 * g1 + em * s1 * g2);
  } else {
    const double sg = ((k + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    r.E.value = sg * pre * (ep * s2 * g1 + em * s1 * g2);
    r.O.value = sg * pre * (ep * s1 * g1 + em * s2 * g2);
  }
  r.E.method = r.O.method = Method::Asymptotic;
  r.E.abs_error = std::abs(r.E.value) * std::exp(-2.0 * std::abs(xi));
  r.O.abs_error = std::abs(r.O.value) * std::exp(-2.0 * std::abs(xi));
  return r;
}

}  // namespace hr
