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

#include "hyperradon/radon.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <random>

#include "hyperradon/parallel.hpp"
#include "hyperradon/quad.hpp"
#include "hyperradon/specfun.hpp"

namespace hr {

namespace {

const cplx I1(0.0, 1.0);

double gamma_quarter_sq(double nu) { return std::exp(2.0 * lgamma_complex(cplx(0.25, 0.5 * nu)).real()); }

// Envelope of |f| on a panel, from a handful of samples.
double envelope(const std::function<cplx(double)>& g, double a, double b) {
  double m = 0.0;
  for (int i = 0; i < 5; ++i) m = std::max(m, std::abs(g(a + (b - a) * i / 4.0)));
  return m;
}

struct Side {
  cplx core, tail;
  double core_err = 0.0, tail_err = 0.0;
};

Side integrate_side(const std::function<cplx(double)>& g, const RadonOptions& opt) {
  Side s;
  const double S = opt.sigma_cutoff;
  const int pieces = std::max(1, int(std::ceil(S / 2.0)));
  std::vector<double> pts(pieces + 1);
  for (int i = 0; i <= pieces; ++i) pts[i] = S * i / pieces;
  auto core = quad::integrate_pieces(g, pts, opt.rel_tol, 2000, 1e-13);
  s.core = core.value;
  s.core_err = core.error;

  const int n = std::max(3, opt.tail_panels);
  const double L = opt.tail_panel;
  std::vector<cplx> partial(n);
  cplx acc = 0.0;
  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    auto p = quad::integrate(g, S + L * i, S + L * (i + 1), opt.rel_tol, 2000, 0.0, 1e-13);
    acc += p.value;
    err += p.error;
    partial[i] = acc;
  }
  const double first = envelope(g, S, S + L);
  const double last = envelope(g, S + L * (n - 1), S + L * n);
  if (last > 0.5 * first && last > 1e-300)
    fail(ErrorCode::NonConvergence, "integrand does not decay along the geodesic");
  auto w = quad::wynn_epsilon(partial);
  s.tail = w.value;
  s.tail_err = w.error + err;
  return s;
}

cplx fd2(cplx fm2, cplx fm1, cplx f0, cplx fp1, cplx fp2, double h) {
  return (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
}
cplx fd1(cplx fm2, cplx fm1, cplx fp1, cplx fp2, double h) { return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h); }

// Stencil offsets in the order (0,0), (±1,0), (±2,0), (0,±1), (0,±2).
constexpr int kStencil = 9;
const int kDx[kStencil] = {0, -2, -1, 1, 2, 0, 0, 0, 0};
const int kDy[kStencil] = {0, 0, 0, 0, 0, -2, -1, 1, 2};

}  // namespace

Integrand mode_integrand(const HalfPlaneMode& mode) {
  return {Chart::HalfPlane, [mode](const ModelPoint& p) { return chi_mode(mode, std::get<HalfPlane>(p)); }};
}

Integrand mode_integrand(const PolarMode& mode) {
  return {Chart::Polar, [mode](const ModelPoint& p) { return polar_mode(mode, std::get<Polar>(p)); }};
}

RadonSample radon(const Integrand& f, const Geodesic& g, const RadonOptions& opt) {
  if (!f.f) fail(ErrorCode::InvalidArgument, "empty integrand");
  if (!(opt.sigma_cutoff > 0.0) || !(opt.tail_panel > 0.0)) fail(ErrorCode::InvalidArgument, "bad σ cutoff");
  auto right = [&](double s) { return f.f(geodesic_point(g, s, f.chart)); };
  auto left = [&](double s) { return f.f(geodesic_point(g, -s, f.chart)); };
  const Side r = integrate_side(right, opt), l = integrate_side(left, opt);
  RadonSample out;
  out.geodesic = g;
  out.value = r.core + r.tail + l.core + l.tail;
  out.quadrature_error = r.core_err + r.tail_err + l.core_err + l.tail_err;
  const double scale = std::max({std::abs(out.value), std::abs(r.core) + std::abs(l.core), 1e-300});
  if (r.tail_err + l.tail_err > opt.tail_tol * scale)
    fail(ErrorCode::NonConvergence, "tail extrapolation along the geodesic did not settle");
  return out;
}

std::vector<RadonSample> radon_many(const Integrand& f, const std::vector<Geodesic>& gs, const RadonOptions& opt,
                                    int threads) {
  std::vector<RadonSample> out(gs.size());
  parallel_for(gs.size(), threads, [&](std::size_t i) { out[i] = radon(f, gs[i], opt); });
  return out;
}

double halfplane_amplitude_integral(double k, double nu) {
  if (k == 0.0) fail(ErrorCode::InvalidArgument, "half-plane mode needs k ≠ 0");
  return std::pow(2.0, -1.5) / std::sqrt(std::abs(k)) * gamma_quarter_sq(nu);
}

cplx radon_halfplane_asymptotic(double k, double nu, double eta) {
  if (k == 0.0) fail(ErrorCode::InvalidArgument, "half-plane mode needs k ≠ 0");
  return chi_normalization(nu) / std::sqrt(2.0 * std::abs(k)) * std::cos(k * eta) * gamma_quarter_sq(nu);
}

double halfplane_envelope_ratio(double k, double nu, double eta_centre, const RadonOptions& opt, int threads) {
  if (k == 0.0 || !(eta_centre > kPi / std::abs(k))) fail(ErrorCode::InvalidArgument, "period must lie in η > 0");
  const int n = 81;
  const double half = kPi / std::abs(k), h = 2.0 * half / (n - 1);
  std::vector<Geodesic> gs(n);
  for (int i = 0; i < n; ++i) gs[i] = HalfPlaneGeodesic{0.0, std::log(eta_centre - half + h * i), 1};
  const auto r = radon_many(mode_integrand(HalfPlaneMode{k, nu}), gs, opt, threads);
  std::size_t best = 1;
  for (std::size_t i = 1; i + 1 < r.size(); ++i)
    if (std::abs(r[i].value) > std::abs(r[best].value)) best = i;
  // parabola through the three samples around the peak
  const double a = std::abs(r[best - 1].value), b = std::abs(r[best].value), c = std::abs(r[best + 1].value);
  const double den = a - 2.0 * b + c;
  const double peak = den < 0.0 ? b - 0.125 * (c - a) * (c - a) / den : b;
  const double amp = chi_normalization(nu) / std::sqrt(2.0 * std::abs(k)) * gamma_quarter_sq(nu);
  return peak / amp;
}

cplx radon_disc_closed_form_printed(int k, double nu, double xi, double theta) {
  const int m = std::abs(k);
  const EOResult eo = modified_conical_EO(m, nu, xi);
  const double profile = (m % 2 == 0 ? eo.E.real() : eo.O.real()) * gamma_quarter_sq(nu) / std::sqrt(kPi);
  const cplx v = std::exp(I1 * (double(m) * theta)) * profile;
  if (k >= 0) return v;
  // P^{−m} = P^m / Π_{j=−m+1}^{m}(iν − ½ + j), and e^{−imφ} conjugates the phase
  cplx prod = 1.0;
  for (int j = -m + 1; j <= m; ++j) prod *= cplx(j - 0.5, nu);
  return std::conj(v) / prod.real();
}

cplx radon_disc_closed_form(int k, double nu, double xi, double theta) {
  const int m = std::abs(k);
  const double sign = (m / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * radon_disc_closed_form_printed(k, nu, xi, theta);
}

SingularValue singular_value(double nu) {
  return {nu, gamma_quarter_sq(nu) * std::sqrt(std::cosh(kPi * nu)) / std::sqrt(2.0 * kPi)};
}

double singular_value_disc(double nu) { return std::sqrt(2.0) * singular_value(nu).lambda; }

double singular_value_continued_sq(double nu) {
  const double a = gamma_complex(0.25 + 0.5 * nu).real();
  const double b = gamma_complex(0.25 - 0.5 * nu).real();
  return a * a * b * b * std::cos(kPi * nu) / (2.0 * kPi);
}

double singular_value_zero(double lo, double hi, double tol) {
  const double flo = singular_value_continued_sq(lo), fhi = singular_value_continued_sq(hi);
  if (!(flo * fhi < 0.0)) fail(ErrorCode::InvalidArgument, "bracket does not straddle a sign change");
  std::uintmax_t iters = 200;
  auto stop = [tol](double a, double b) { return std::abs(b - a) <= tol; };
  const auto r = boost::math::tools::toms748_solve(singular_value_continued_sq, lo, hi, flo, fhi, stop, iters);
  if (iters >= 200) fail(ErrorCode::NonConvergence, "root search for the continued singular value stalled");
  return 0.5 * (r.first + r.second);
}

IntertwineResult intertwine_residual(const HalfPlaneMode& mode, double t, double eta_lo, double eta_hi, int n,
                                     double h, const RadonOptions& opt, int threads) {
  if (n < 1 || !(eta_lo - 2.0 * h > 0.0) || !(eta_hi >= eta_lo)) fail(ErrorCode::InvalidArgument, "bad η grid");
  std::vector<Geodesic> gs;
  for (int i = 0; i < n; ++i) {
    const double eta = n == 1 ? eta_lo : eta_lo + (eta_hi - eta_lo) * i / (n - 1);
    for (int s = 0; s < kStencil; ++s)
      gs.push_back(HalfPlaneGeodesic{t + kDx[s] * h, std::log(eta + kDy[s] * h), 1});
  }
  const auto r = radon_many(mode_integrand(mode), gs, opt, threads);
  const double lam = mode.kappa * mode.kappa + 0.25;
  IntertwineResult out;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const RadonSample* v = &r[std::size_t(i) * kStencil];
    const double eta = std::get<PoincarePatch>(kinematic_point(v[0].geodesic)).eta;
    const cplx tt = fd2(v[1].value, v[2].value, v[0].value, v[3].value, v[4].value, h);
    const cplx ee = fd2(v[5].value, v[6].value, v[0].value, v[7].value, v[8].value, h);
    worst = std::max(worst, std::abs(eta * eta * (tt - ee) - lam * v[0].value));
    out.max_value = std::max(out.max_value, std::abs(v[0].value));
  }
  out.points = std::size_t(n);
  out.residual = out.max_value > 0.0 ? worst / out.max_value : worst;
  return out;
}

IntertwineResult intertwine_residual(const PolarMode& mode, double theta, double xi_lo, double xi_hi, int n,
                                     double h, const RadonOptions& opt, int threads) {
  if (n < 1 || !(xi_hi >= xi_lo)) fail(ErrorCode::InvalidArgument, "bad ξ grid");
  std::vector<Geodesic> gs;
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) {
    const double xi = n == 1 ? xi_lo : xi_lo + (xi_hi - xi_lo) * i / (n - 1);
    xs.push_back(xi);
    for (int s = 0; s < kStencil; ++s) gs.push_back(DiscGeodesic{theta + kDx[s] * h, xi + kDy[s] * h, 1});
  }
  const auto r = radon_many(mode_integrand(mode), gs, opt, threads);
  const double lam = mode.kappa * mode.kappa + 0.25;
  IntertwineResult out;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const RadonSample* v = &r[std::size_t(i) * kStencil];
    const double sech = 1.0 / std::cosh(xs[i]);
    const cplx tt = fd2(v[1].value, v[2].value, v[0].value, v[3].value, v[4].value, h);
    const cplx ee = fd2(v[5].value, v[6].value, v[0].value, v[7].value, v[8].value, h);
    const cplx e1 = fd1(v[5].value, v[6].value, v[7].value, v[8].value, h);
    const cplx op = sech * sech * tt - ee - std::tanh(xs[i]) * e1;
    worst = std::max(worst, std::abs(op - lam * v[0].value));
    out.max_value = std::max(out.max_value, std::abs(v[0].value));
  }
  out.points = std::size_t(n);
  out.residual = out.max_value > 0.0 ? worst / out.max_value : worst;
  return out;
}

AntipodalResult antipodal_check(int k, double nu, int samples, double xi_max, unsigned seed, const RadonOptions& opt,
                                int threads) {
  if (samples < 1) fail(ErrorCode::InvalidArgument, "need at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> th(0.0, 2.0 * kPi), xd(-xi_max, xi_max);
  std::vector<Geodesic> gs;
  for (int i = 0; i < samples; ++i) {
    const double a = th(rng), x = xd(rng);
    gs.push_back(DiscGeodesic{a, x, 1});
    gs.push_back(DiscGeodesic{a + kPi, -x, 1});
    gs.push_back(DiscGeodesic{a + kPi, x, 1});
    gs.push_back(DiscGeodesic{0.0, x, 1});
    gs.push_back(DiscGeodesic{0.0, -x, 1});
  }
  const auto r = radon_many(mode_integrand(PolarMode{k, nu}), gs, opt, threads);
  AntipodalResult out;
  double scale = 0.0;
  for (const auto& s : r) scale = std::max(scale, std::abs(s.value));
  if (scale == 0.0) scale = 1.0;
  for (int i = 0; i < samples; ++i) {
    const RadonSample* v = &r[std::size_t(i) * 5];
    out.max_deviation = std::max(out.max_deviation, std::abs(v[0].value - v[1].value) / scale);
    out.wrong_pairing = std::max(out.wrong_pairing, std::abs(v[0].value - v[2].value) / scale);
    out.symmetric_part = std::max(out.symmetric_part, 0.5 * std::abs(v[3].value + v[4].value) / scale);
    out.antisymmetric_part = std::max(out.antisymmetric_part, 0.5 * std::abs(v[3].value - v[4].value) / scale);
  }
  out.pairs = std::size_t(samples);
  return out;
}

ThetaFit fit_theta(double k, double nu, const std::vector<double>& eta, const std::vector<double>& values) {
  const std::size_t n = eta.size();
  if (n < 2 || values.size() != n) fail(ErrorCode::InvalidArgument, "fit needs matching samples");
  Eigen::MatrixXd A(n, 2);
  Eigen::VectorXd b(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(eta[i] > 0.0)) fail(ErrorCode::Domain, "fit needs η > 0");
    const FGZ v = fgz_functions(cplx(0.0, nu), std::abs(k) * eta[i]);
    const double s = std::sqrt(eta[i]);
    A(i, 0) = s * v.F.real();
    A(i, 1) = s * v.G.real();
    b(i) = values[i];
  }
  const Eigen::Vector2d c = A.colPivHouseholderQr().solve(b);
  ThetaFit fit;
  fit.a = c(0);
  fit.b = c(1);
  double th = std::atan2(fit.b, fit.a);
  th -= kPi * std::floor(th / kPi);
  fit.theta = th;
  fit.rms_residual = std::sqrt((A * c - b).squaredNorm() / double(n));
  const auto [lo, hi] = std::minmax_element(eta.begin(), eta.end());
  fit.oscillations = std::abs(k) * (*hi - *lo) / (2.0 * kPi);
  return fit;
}

ThetaFit extract_theta(double k, double nu, double eta_lo, double eta_hi, int n, const RadonOptions& opt,
                       int threads) {
  if (n < 2 || !(eta_lo > 0.0) || !(eta_hi > eta_lo)) fail(ErrorCode::InvalidArgument, "bad η window");
  std::vector<double> eta(n);
  std::vector<Geodesic> gs(n);
  for (int i = 0; i < n; ++i) {
    eta[i] = eta_lo + (eta_hi - eta_lo) * i / (n - 1);
    gs[i] = HalfPlaneGeodesic{0.0, std::log(eta[i]), 1};
  }
  const auto r = radon_many(mode_integrand(HalfPlaneMode{k, nu}), gs, opt, threads);
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = r[i].value.real();
  return fit_theta(k, nu, eta, vals);
}

OverlapResult bound_state_overlap(double k, const std::vector<double>& nus, double width, const RadonOptions& opt,
                                  int threads) {
  OverlapResult out;
  const LiouvilleExtension base{3.0 * kPi / 4.0, k};
  const double lo = 20.0 / std::abs(k), hi = 20.0 / std::abs(k) + 12.0 * kPi / std::abs(k);
  for (double centre : nus) {
    double num = 0.0, den = 0.0;
    for (int j = -2; j <= 2; ++j) {
      const double nu = centre + 0.5 * width * j;
      if (!(nu > 0.0)) continue;
      const double g = std::exp(-0.125 * j * j);
      const ThetaFit fit = extract_theta(k, nu, lo, hi, 40, opt, threads);
      const LiouvilleExtension ext{fit.theta, k};
      const auto ov = log_measure_integral([&](double x) {
        const double xi = std::log(x);
        return liouville_bound(base, 0, xi) * liouville_scattering(ext, nu, xi);
      });
      num += g * ov.value;
      den += g;
    }
    const double o = den > 0.0 ? std::abs(num) / den : 0.0;
    out.overlaps.push_back(o);
    out.max_overlap = std::max(out.max_overlap, o);
  }
  return out;
}

}  // namespace hr
