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

#include "hyperradon/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "hyperradon/parallel.hpp"
#include "hyperradon/specfun.hpp"

namespace hr {

namespace {

const cplx I1(0.0, 1.0);

std::vector<double> nodes_of(const TransformOptions& opt, quad::Rule& rule) {
  if (!(opt.nu_max > 0.0) || opt.panels <= 0) fail(ErrorCode::InvalidArgument, "spectral grid must be nonempty");
  rule = quad::gauss_legendre(0.0, opt.nu_max, opt.panels, opt.order);
  return rule.x;
}

// Largest |integrand of the inverse| on the last panel relative to the overall peak.
double tail_ratio(const std::vector<double>& mags, int per_panel) {
  double peak = 0.0, tail = 0.0;
  for (std::size_t i = 0; i < mags.size(); ++i) {
    peak = std::max(peak, mags[i]);
    if (i + per_panel >= mags.size()) tail = std::max(tail, mags[i]);
  }
  return peak > 0.0 ? tail / peak : 0.0;
}

}  // namespace

double chi_normalization(double kappa) {
  return std::sqrt(2.0 * std::abs(kappa) * std::sinh(kPi * std::abs(kappa))) / kPi;
}

cplx chi_mode(const HalfPlaneMode& mode, const HalfPlane& p) {
  if (!(p.y > 0.0)) fail(ErrorCode::Domain, "half-plane point needs y > 0");
  if (mode.k == 0.0) fail(ErrorCode::InvalidArgument, "half-plane mode needs k ≠ 0");
  const double K = bessel_K_imag(mode.kappa, std::abs(mode.k) * p.y).real();
  return chi_normalization(mode.kappa) * std::exp(I1 * (mode.k * p.x)) * std::sqrt(p.y) * K;
}

cplx polar_mode(const PolarMode& mode, const Polar& p) {
  if (!(p.rho >= 0.0)) fail(ErrorCode::Domain, "polar point needs ρ ≥ 0");
  const double P = conical_P(mode.m, mode.kappa, std::cosh(p.rho)).real();
  return std::exp(I1 * (double(mode.m) * p.phi)) * P;
}

double polar_mode_norm_weight(int m, double kappa) {
  const double g2 = std::exp(2.0 * lgamma_complex(cplx(0.5 - m, kappa)).real());
  return 2.0 * kPi * kPi / (kappa * std::sinh(kPi * kappa) * g2);
}

double kl_forward_at(const RealFn& f, double nu, const TransformOptions& opt) {
  const double lo = std::log(opt.x_min), hi = std::log(opt.x_max);
  auto g = [&](double u) {
    const double x = std::exp(u);
    return bessel_K_imag(nu, x).real() * f(x) * x;
  };
  const int pieces = 4 + int(std::abs(nu) * (hi - lo) / 8.0);
  std::vector<double> pts(pieces + 1);
  for (int i = 0; i <= pieces; ++i) pts[i] = lo + (hi - lo) * i / pieces;
  return quad::integrate_pieces(g, pts, opt.rel_tol, 2000, 1e-12).value;
}

SpectralSamples kl_forward(const RealFn& f, const TransformOptions& opt) {
  SpectralSamples s;
  const auto nodes = nodes_of(opt, s.rule);
  s.values.assign(nodes.size(), 0.0);
  parallel_for(nodes.size(), opt.threads, [&](std::size_t i) { s.values[i] = kl_forward_at(f, nodes[i], opt); });
  std::vector<double> mags(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double nu = nodes[i];
    // |K_{iν}| is at most about √(π/(ν sinh πν)) at small argument
    mags[i] = std::abs(2.0 * nu * std::sinh(kPi * nu) * s.values[i]) * std::sqrt(kPi / (nu * std::sinh(kPi * nu)));
  }
  s.tail_estimate = tail_ratio(mags, opt.order);
  return s;
}

double kl_inverse(const SpectralSamples& s, double x) {
  if (!(x > 0.0)) fail(ErrorCode::Domain, "inverse KL needs x > 0");
  double acc = 0.0;
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    const double nu = s.rule.x[i];
    acc += s.rule.w[i] * 2.0 * nu * std::sinh(nu * kPi) * bessel_K_imag(nu, x).real() * s.values[i];
  }
  return acc / (kPi * kPi * x);
}

double mf_forward_at(const RealFn& f, double lambda, const TransformOptions& opt) {
  if (!(opt.x_max > 1.0)) fail(ErrorCode::InvalidArgument, "Mehler-Fock support must extend past 1");
  const double top = std::acosh(opt.x_max);
  auto g = [&](double rho) {
    const double x = std::cosh(rho);
    return conical_P(0, lambda, x).real() * f(x) * std::sinh(rho);
  };
  const int pieces = 4 + int(std::abs(lambda) * top / 8.0);
  std::vector<double> pts(pieces + 1);
  for (int i = 0; i <= pieces; ++i) pts[i] = top * i / pieces;
  return lambda * std::tanh(kPi * lambda) * quad::integrate_pieces(g, pts, opt.rel_tol, 2000, 1e-12).value;
}

SpectralSamples mf_forward(const RealFn& f, const TransformOptions& opt) {
  SpectralSamples s;
  const auto nodes = nodes_of(opt, s.rule);
  s.values.assign(nodes.size(), 0.0);
  parallel_for(nodes.size(), opt.threads, [&](std::size_t i) { s.values[i] = mf_forward_at(f, nodes[i], opt); });
  std::vector<double> mags(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) mags[i] = std::abs(s.values[i]);
  s.tail_estimate = tail_ratio(mags, opt.order);
  return s;
}

double mf_inverse(const SpectralSamples& s, double x) {
  if (!(x >= 1.0)) fail(ErrorCode::Domain, "inverse Mehler-Fock needs x ≥ 1");
  double acc = 0.0;
  for (std::size_t i = 0; i < s.values.size(); ++i)
    acc += s.rule.w[i] * conical_P(0, s.rule.x[i], x).real() * s.values[i];
  return acc;
}

double mf_weight_from_growth(int m, double lambda, double rho0, int periods) {
  const double len = periods * kPi / lambda;
  auto g = [&](double rho) {
    const double P = conical_P(m, lambda, std::cosh(rho)).real();
    return P * P * std::sinh(rho);
  };
  std::vector<double> pts(periods + 1);
  for (int i = 0; i <= periods; ++i) pts[i] = rho0 + len * i / periods;
  return kPi * quad::integrate_pieces(g, pts, 1e-13).value / len;
}

double liouville_norm_inv_sq(double theta, double kappa) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double t = std::tanh(kPi * kappa / 2);
  return (t * c * c + s * s / t) / kappa;
}

double liouville_scattering(const LiouvilleExtension& ext, double kappa, double xi) {
  if (!(kappa > 0.0)) fail(ErrorCode::Domain, "scattering state needs κ > 0");
  if (ext.k == 0.0) fail(ErrorCode::InvalidArgument, "Liouville coupling must be nonzero");
  const double x = std::abs(ext.k) * std::exp(xi);
  const FGZ v = fgz_functions(cplx(0.0, kappa), x);
  const double n = 1.0 / std::sqrt(liouville_norm_inv_sq(ext.theta, kappa));
  return n * (v.F.real() * std::cos(ext.theta) + v.G.real() * std::sin(ext.theta));
}

double bound_order(const LiouvilleExtension& ext, int n) {
  const double th = ext.theta - kPi * std::floor(ext.theta / kPi);
  const double nu = 2.0 * (n + th / kPi);
  if (n < 0 || !(nu > 0.0)) fail(ErrorCode::InvalidArgument, "bound state index gives a nonpositive order");
  return nu;
}

std::vector<double> bound_orders(const LiouvilleExtension& ext, int count) {
  std::vector<double> out;
  for (int n = 0; int(out.size()) < count; ++n) {
    const double th = ext.theta - kPi * std::floor(ext.theta / kPi);
    if (2.0 * (n + th / kPi) > 0.0) out.push_back(bound_order(ext, n));
  }
  return out;
}

double liouville_bound(const LiouvilleExtension& ext, int n, double xi) {
  const double nu = bound_order(ext, n);
  if (ext.k == 0.0) fail(ErrorCode::InvalidArgument, "Liouville coupling must be nonzero");
  const double x = std::abs(ext.k) * std::exp(xi);
  return std::sqrt(2.0 * nu) * bessel_J(nu, x).real();
}

quad::Result<double> log_measure_integral(const RealFn& h, double xi_lo, double x0, double rel_tol) {
  const double hi = std::log(x0);
  const int pieces = std::max(1, int((hi - xi_lo) / 2.0));
  std::vector<double> pts(pieces + 1);
  for (int i = 0; i <= pieces; ++i) pts[i] = xi_lo + (hi - xi_lo) * i / pieces;
  auto head = quad::integrate_pieces([&](double xi) { return h(std::exp(xi)); }, pts, rel_tol);
  auto tail = quad::oscillatory_tail([&](double x) { return cplx(h(x) / x); }, x0, kPi, 8, 8, rel_tol);
  return {head.value + tail.value.real(), head.error + tail.error};
}

quad::Result<double> bessel_cross_norm(double alpha, double beta) {
  if (!(alpha > 0.0 && beta > 0.0)) fail(ErrorCode::Domain, "cross norm needs positive orders");
  return log_measure_integral([=](double x) { return bessel_J(alpha, x).real() * bessel_J(beta, x).real(); });
}

double bessel_cross_norm_exact(double alpha, double beta) {
  if (alpha == beta) return 1.0 / (2.0 * alpha);
  return (2.0 / kPi) * std::sin(kPi * (beta - alpha) / 2) / (beta * beta - alpha * alpha);
}

double plane_wave_weight(const std::function<cplx(double)>& g, double kappa, double lo, double hi) {
  const int n = 400;
  Eigen::MatrixXcd A(n, 2);
  Eigen::VectorXcd b(n);
  for (int i = 0; i < n; ++i) {
    const double xi = lo + (hi - lo) * i / (n - 1);
    A(i, 0) = std::exp(I1 * (kappa * xi));
    A(i, 1) = std::exp(-I1 * (kappa * xi));
    b(i) = g(xi);
  }
  const Eigen::VectorXcd c = A.colPivHouseholderQr().solve(b);
  return kPi * (std::norm(c(0)) + std::norm(c(1)));
}

double poschl_teller_function(int k, double nu) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "Pöschl-Teller needs k ≥ 1");
  const double lam = k - 0.5;
  const cplx v = gamma_complex(nu + 1.0).value * gamma_complex(nu).value * rgamma(nu + lam + 1.0) * rgamma(nu - lam);
  return v.real();
}

std::vector<double> poschl_teller_spectrum(int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "Pöschl-Teller needs k ≥ 1");
  std::vector<double> out;
  // zeros come from the poles of Γ(ν − λ): ν = λ − n
  for (int n = k - 1; n >= 0; --n) out.push_back(k - 0.5 - n);
  return out;
}

std::vector<double> poschl_teller_parity_filtered(int k) {
  std::vector<double> out;
  for (double nu : poschl_teller_spectrum(k)) {
    const int n = int(std::lround(k - 0.5 - nu));
    if ((n - k) % 2 == 0) out.push_back(nu);
  }
  return out;
}

}  // namespace hr
