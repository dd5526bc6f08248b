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
#include <complex>
#include <limits>
#include <vector>

#include "hyperradon/quad.hpp"
#include "hyperradon/specfun.hpp"

namespace hr {

namespace {

using lcplx = std::complex<long double>;
const cplx I1(0.0, 1.0);

// ---- K_{iκ} ----------------------------------------------------------------

// K_{iκ}(y) = −π Im I_{iκ}(y) / sinh πκ.
EvalResult k_series(double kappa, double y) {
  if (kappa == 0.0) fail(ErrorCode::Domain, "series path needs κ ≠ 0");
  const cplx nu(0.0, kappa);
  const cplx pre = std::exp(nu * std::log(y / 2)) * rgamma(nu + 1.0);
  const double q = y * y / 4;
  cplx term = pre, sum = pre;
  double biggest = std::abs(pre);
  for (int j = 1; j < 500; ++j) {
    term *= q / (double(j) * (nu + double(j)));
    sum += term;
    biggest = std::max(biggest, std::abs(term));
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  const double s = std::sinh(kPi * kappa);
  EvalResult r;
  r.value = -kPi * sum.imag() / s;
  r.abs_error = kPi * 4e-16 * biggest / s;
  r.method = Method::Series;
  return r;
}

// K_{iκ}(y) = e^{−κβ} ∫₀^∞ e^{−y cos β cosh s} cos(κs − y sin β sinh s) ds,
// the contour shifted by iβ so that the saddle sits near s = 0.
EvalResult k_integral(double kappa, double y, double rel_tol) {
  const double k = std::abs(kappa);
  const double beta = std::min(std::asin(std::min(1.0, k / y)), kPi / 2 - 1.0 / (1.0 + k));
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double cut = std::acosh(1.0 + 41.5 / (y * cb));
  auto f = [=](double s) { return std::exp(-y * cb * (std::cosh(s) - 1.0)) * std::cos(k * s - y * sb * std::sinh(s)); };
  const double phase = k * cut + y * sb * std::sinh(cut);
  const int pieces = std::min(400, 1 + int(phase / (4.0 * kPi)));
  std::vector<double> pts(pieces + 1);
  for (int i = 0; i <= pieces; ++i) pts[i] = cut * i / pieces;
  const auto q = quad::integrate_pieces(f, pts, rel_tol);
  const double scale = std::exp(-k * beta - y * cb);
  EvalResult r;
  r.value = scale * q.value;
  r.abs_error = scale * q.error + 1e-18 * scale;
  r.method = Method::IntegralQuadrature;
  return r;
}

// Basset: K_{iκ}(y) = Γ(½+iκ)(2y)^{iκ}/√π ∫₀^∞ cos t (t²+y²)^{−½−iκ} dt,
// summed over half-periods of cos t and accelerated with Wynn ε.
EvalResult k_basset(double kappa, double y) {
  const cplx nu(0.0, kappa);
  auto f = [=](double t) { return std::cos(t) * std::exp((-0.5 - nu) * std::log(t * t + y * y)); };
  std::vector<cplx> partial;
  cplx acc = quad::integrate(f, 0.0, kPi / 2, 1e-14).value;
  double a = kPi / 2;
  quad::Result<cplx> best{acc, std::abs(acc)};
  for (int n = 0; n < 120; ++n) {
    acc += quad::integrate(f, a, a + kPi, 1e-14).value;
    a += kPi;
    partial.push_back(acc);
    if (partial.size() >= 12 && partial.size() % 2 == 0) {
      const auto w = quad::wynn_epsilon(partial);
      if (w.error < best.error) best = w;
      if (best.error < 1e-15 * std::abs(best.value)) break;
    }
  }
  const cplx pre = gamma_complex(0.5 + nu).value * std::exp(nu * std::log(2.0 * y)) / std::sqrt(kPi);
  EvalResult r;
  r.value = (pre * best.value).real();
  r.abs_error = std::abs(pre) * best.error;
  r.method = Method::IntegralQuadrature;
  return r;
}

// ---- J_ν ---------------------------------------------------------------------

EvalResult j_series(cplx nu, double x) {
  const lcplx lnu(nu.real(), nu.imag());
  const long double q = -(long double)x * x / 4;
  cplx rg = rgamma(nu + 1.0);
  lcplx coef(rg.real(), rg.imag());  // 1/(j! Γ(ν+j+1))
  lcplx term = coef, sum = coef;
  long double biggest = std::abs(term);
  for (int j = 1; j < 400; ++j) {
    const cplx shifted = nu + double(j);
    if (std::abs(shifted) < 1e-12) {
      // 1/Γ(ν+j+1) restarts at a nonpositive-integer order
      const cplx r = rgamma(shifted + 1.0);
      long double fact = 1;
      for (int i = 2; i <= j; ++i) fact *= i;
      term = lcplx(r.real(), r.imag()) * std::pow(q, (long double)j) / fact;
    } else {
      term *= q / ((long double)j * (lnu + (long double)j));
    }
    sum += term;
    biggest = std::max(biggest, std::abs(term));
    if (std::abs(term) < 1e-21L * std::abs(sum) && j > 2) break;
    if (j == 399) fail(ErrorCode::NonConvergence, "J series did not converge");
  }
  const cplx pre = std::exp(nu * std::log(x / 2));
  EvalResult r;
  r.value = pre * cplx((double)sum.real(), (double)sum.imag());
  r.abs_error = std::abs(pre) * ((double)biggest * 1e-18 + 1e-16 * std::abs(cplx((double)sum.real(), (double)sum.imag())));
  r.method = Method::Series;
  return r;
}

// Schläfli: J_ν(x) = (1/π)∫₀^π cos(ντ − x sin τ)dτ − (sin νπ/π)∫₀^∞ e^{−x sinh t − νt}dt.
EvalResult j_integral(cplx nu, double x) {
  auto f1 = [=](double t) { return std::cos(nu * t - x * std::sin(t)); };
  const int pieces = 1 + int(x / 8.0 + std::abs(nu) / 8.0);
  std::vector<double> pts(pieces + 1);
  for (int i = 0; i <= pieces; ++i) pts[i] = kPi * i / pieces;
  const auto a = quad::integrate_pieces(f1, pts, 1e-14);
  cplx val = a.value / kPi;
  double err = a.error / kPi;
  const cplx s = std::sin(nu * kPi);
  if (std::abs(s) > 0.0) {
    // cut where x sinh t + Re ν t exceeds the decay budget
    double T = 1.0;
    while (x * std::sinh(T) + nu.real() * T < 45.0) T *= 1.5;
    auto f2 = [=](double t) { return std::exp(-x * std::sinh(t) - nu * t); };
    const auto b = quad::integrate(f2, 0.0, T, 1e-14);
    val -= s / kPi * b.value;
    err += std::abs(s) / kPi * b.error;
  }
  EvalResult r;
  r.value = val;
  r.abs_error = err + 1e-16 * std::abs(val);
  r.method = Method::IntegralQuadrature;
  return r;
}

// Hankel expansion with optimal truncation; ok = false if its best term is too big.
EvalResult j_hankel(cplx nu, double x, bool& ok, double tol = 1e-16) {
  const cplx mu = 4.0 * nu * nu;
  cplx P = 1.0, Q = 0.0, a = 1.0;
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    const cplx next = a * (mu - double((2 * k - 1) * (2 * k - 1))) / (8.0 * k * x);
    if (std::abs(next) > last) break;
    a = next;
    last = std::abs(a);
    const int r = k % 4;
    if (r == 1) Q += a;
    else if (r == 2) P -= a;
    else if (r == 3) Q -= a;
    else P += a;
    if (last < tol * 1e-3) break;
  }
  ok = last < tol;
  const cplx w = x - nu * (kPi / 2) - kPi / 4;
  EvalResult res;
  const double amp = std::sqrt(2.0 / (kPi * x));
  res.value = amp * (P * std::cos(w) - Q * std::sin(w));
  res.abs_error = amp * (last * (std::abs(std::cos(w)) + std::abs(std::sin(w))) + 1e-16 * std::abs(res.value));
  res.method = Method::Asymptotic;
  return res;
}

}  // namespace

EvalResult bessel_K_imag(double kappa, double y, KMethod method) {
  if (!(y > 0.0)) fail(ErrorCode::Domain, "K_{iκ}(y) needs y > 0");
  if (!std::isfinite(kappa)) fail(ErrorCode::InvalidArgument, "κ must be finite");
  switch (method) {
    case KMethod::Series: return k_series(std::abs(kappa), y);
    case KMethod::Basset: return k_basset(std::abs(kappa), y);
    case KMethod::Integral: return k_integral(kappa, y, 1e-13);
    case KMethod::Auto: break;
  }
  if (y > 700.0) {
    EvalResult r;
    r.method = Method::Asymptotic;
    r.abs_error = 1e-300;
    return r;
  }
  // The ascending series has no cancellation beyond rounding while y ≤ κ.
  if (kappa != 0.0 && y <= std::max(2.0, std::abs(kappa))) return k_series(std::abs(kappa), y);
  return k_integral(kappa, y, 1e-13);
}

EvalResult bessel_J(cplx nu, double x, JMethod method) {
  if (!(x > 0.0)) fail(ErrorCode::Domain, "J_ν(x) needs x > 0");
  switch (method) {
    case JMethod::Series:
      if (x > 30.0 + std::abs(nu)) fail(ErrorCode::OutOfRange, "J series outside validated range");
      return j_series(nu, x);
    case JMethod::Integral: return j_integral(nu, x);
    case JMethod::Asymptotic: {
      bool ok = false;
      return j_hankel(nu, x, ok, 1.0);
    }
    case JMethod::Auto: break;
  }
  if (x <= 12.0) return j_series(nu, x);
  bool ok = false;
  EvalResult h = j_hankel(nu, x, ok);
  if (ok) return h;
  return j_integral(nu, x);
}

cplx z_coefficient(cplx nu) {
  const cplx h = nu * (kPi / 2);
  return (1.0 / std::sin(h) - 1.0 / std::cos(h)) / (2.0 * std::sqrt(2.0));
}

FGZ fgz_functions(cplx nu, double x) {
  const cplx h = nu * (kPi / 2);
  const cplx c = std::cos(h), s = std::sin(h);
  const double scale = std::max(1.0, std::abs(std::cosh(h.imag())));
  if (std::abs(c) < 1e-13 * scale) fail(ErrorCode::Pole, "F_ν has a sec(νπ/2) pole at odd integer ν");
  if (std::abs(s) < 1e-13 * scale) fail(ErrorCode::Pole, "G_ν has a csc(νπ/2) pole at even integer ν");
  if (std::abs(c - s) < 1e-13 * scale) fail(ErrorCode::Pole, "Z_ν is undefined where tan(νπ/2) = 1");
  const EvalResult jp = bessel_J(nu, x);
  EvalResult jm;
  const bool imaginary = nu.real() == 0.0;
  if (imaginary) {
    jm = jp;
    jm.value = std::conj(jp.value);
  } else {
    jm = bessel_J(-nu, x);
  }
  const double e = jp.abs_error + jm.abs_error;
  FGZ out;
  out.F.method = out.G.method = out.Z.method = jp.method;
  if (imaginary) {
    const double k = nu.imag() * kPi / 2;
    out.F.value = jp.value.real() / std::cosh(k);
    out.G.value = jp.value.imag() / std::sinh(k);
  } else {
    out.F.value = 0.5 / c * (jp.value + jm.value);
    out.G.value = 0.5 / s * (jp.value - jm.value);
  }
  out.F.abs_error = 0.5 * e / std::abs(c);
  out.G.abs_error = 0.5 * e / std::abs(s);
  const cplx t = s / c;
  const cplx ratio = (t + 1.0) / (t - 1.0);
  out.Z.value = jp.value + ratio * jm.value;
  out.Z.abs_error = jp.abs_error + std::abs(ratio) * jm.abs_error;
  return out;
}

}  // namespace hr
