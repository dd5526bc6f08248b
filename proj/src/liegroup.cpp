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

#include "hyperradon/liegroup.hpp"

#include <cmath>
#include <vector>

namespace hr {

namespace {

using M2 = Eigen::Matrix2cd;
const cplx I1(0.0, 1.0);

M2 mat(cplx a, cplx b, cplx c, cplx d) {
  M2 m;
  m << a, b, c, d;
  return m;
}

M2 n_lower(double t) { return mat(1.0, 0.0, t, 1.0); }
M2 n_upper(double t) { return mat(1.0, t, 0.0, 1.0); }
M2 h_diag(double s) { return mat(std::exp(s / 2), 0.0, 0.0, std::exp(-s / 2)); }
M2 a_boost(double u) {
  const double c = std::cosh(u / 2), s = std::sinh(u / 2);
  return mat(c, s, s, c);
}
M2 t_scale(double y) {
  if (!(y > 0.0)) fail(ErrorCode::Domain, "T subgroup requires y > 0");
  const double r = std::sqrt(y);
  return mat(r, 0.0, 0.0, 1.0 / r);
}
M2 k_rot(double th) {
  const double c = std::cos(th / 2), s = std::sin(th / 2);
  return mat(c, s, -s, c);
}
M2 exp_l0(double a) { return mat(std::exp(I1 * (a / 2)), 0.0, 0.0, std::exp(-I1 * (a / 2))); }
M2 exp_l2(double a) {
  const double c = std::cosh(a / 2), s = std::sinh(a / 2);
  return mat(c, I1 * s, -I1 * s, c);
}

// sl(2,R) basis
const M2& Lm1() {
  static const M2 m = mat(0.0, 1.0, 0.0, 0.0);
  return m;
}
const M2& L0() {
  static const M2 m = mat(0.5, 0.0, 0.0, -0.5);
  return m;
}
const M2& Lp1() {
  static const M2 m = mat(0.0, 0.0, -1.0, 0.0);
  return m;
}
// su(1,1) basis
const M2& Lam0() {
  static const M2 m = mat(0.5 * I1, 0.0, 0.0, -0.5 * I1);
  return m;
}
const M2& Lam1() {
  static const M2 m = mat(0.0, 0.5, 0.5, 0.0);
  return m;
}
const M2& Lam2() {
  static const M2 m = mat(0.0, 0.5 * I1, -0.5 * I1, 0.0);
  return m;
}

const M2& cayley() {
  static const M2 c = mat(1.0, -I1, 1.0, I1) / std::sqrt(2.0 * I1);
  return c;
}

// One factor g_i(p_i) of a decomposition with left generator g_i⁻¹ dg_i/dp_i.
struct Factor {
  M2 (*g)(double);
  M2 (*gen)(double);
};

M2 gen_lm1(double) { return Lm1(); }
M2 gen_l0(double) { return L0(); }
M2 gen_t(double y) { return L0() / y; }
M2 gen_k(double) { return 0.5 * (Lm1() + Lp1()); }
M2 gen_a(double) { return 0.5 * (Lm1() - Lp1()); }
M2 gen_lam0(double) { return Lam0(); }
M2 gen_mlam0(double) { return -Lam0(); }
M2 gen_lam1(double) { return Lam1(); }
M2 gen_mlam2(double) { return -Lam2(); }
M2 exp_ml0(double a) { return exp_l0(-a); }
M2 exp_ml2(double a) { return exp_l2(-a); }

std::array<Factor, 3> factors(Scheme s) {
  switch (s) {
    case Scheme::Iwasawa: return {{{n_upper, gen_lm1}, {t_scale, gen_t}, {k_rot, gen_k}}};
    case Scheme::NHA: return {{{n_upper, gen_lm1}, {h_diag, gen_l0}, {a_boost, gen_a}}};
    case Scheme::NHK: return {{{n_upper, gen_lm1}, {h_diag, gen_l0}, {k_rot, gen_k}}};
    case Scheme::EulerSU11: return {{{exp_l0, gen_lam0}, {a_boost, gen_lam1}, {exp_ml0, gen_mlam0}}};
    case Scheme::AdSSU11: return {{{exp_l0, gen_lam0}, {a_boost, gen_lam1}, {exp_ml2, gen_mlam2}}};
    case Scheme::HAH: return {{{h_diag, gen_l0}, {a_boost, gen_a}, {h_diag, gen_l0}}};
  }
  fail(ErrorCode::Internal, "unknown scheme");
}

// Reduce (φ, θ) with φ into (-π, π] keeping φ ≡ θ (mod 2π) parity, then θ into (-2π, 2π].
double wrap4(double a) {
  double r = std::remainder(a, 4.0 * kPi);
  if (r <= -2.0 * kPi) r += 4.0 * kPi;
  return r;
}

}  // namespace

GroupElement sl2r(double a, double b, double c, double d) {
  GroupElement g{Flavor::SL2R, mat(a, b, c, d)};
  validate(g);
  return g;
}

GroupElement su11(cplx lambda, cplx mu) {
  GroupElement g{Flavor::SU11, mat(lambda, mu, std::conj(mu), std::conj(lambda))};
  validate(g);
  return g;
}

void validate(const GroupElement& g, double tol) {
  const cplx det = g.m.determinant();
  const double scale = std::max(1.0, g.m.cwiseAbs2().sum());
  if (std::abs(det - 1.0) > tol * scale) fail(ErrorCode::Domain, "group element must have unit determinant");
  if (g.flavor == Flavor::SL2R) {
    if (g.m.imag().cwiseAbs().maxCoeff() > tol * scale) fail(ErrorCode::Domain, "SL2R element must be real");
  } else {
    if (std::abs(g.m(1, 0) - std::conj(g.m(0, 1))) > tol * scale ||
        std::abs(g.m(1, 1) - std::conj(g.m(0, 0))) > tol * scale)
      fail(ErrorCode::Domain, "SU11 element must have the form ((λ, μ), (μ*, λ*))");
  }
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  const GroupElement bb = to_flavor(b, a.flavor);
  return {a.flavor, a.m * bb.m};
}

GroupElement inverse(const GroupElement& g) {
  return {g.flavor, mat(g.m(1, 1), -g.m(0, 1), -g.m(1, 0), g.m(0, 0))};
}

GroupElement to_flavor(const GroupElement& g, Flavor target) {
  if (g.flavor == target) return g;
  const M2& c = cayley();
  if (target == Flavor::SU11) return {target, c * g.m * c.inverse()};
  M2 r = c.inverse() * g.m * c;
  r = r.real().cast<cplx>();
  return {target, r};
}

double max_abs_diff(const GroupElement& a, const GroupElement& b) {
  return (a.m - to_flavor(b, a.flavor).m).cwiseAbs().maxCoeff();
}

Subgroup subgroup_from_name(const std::string& n) {
  if (n == "N") return Subgroup::N;
  if (n == "Ntilde" || n == "NT" || n == "Ñ") return Subgroup::Ntilde;
  if (n == "H") return Subgroup::H;
  if (n == "A") return Subgroup::A;
  if (n == "T") return Subgroup::T;
  if (n == "K") return Subgroup::K;
  if (n == "expL0" || n == "expΛ0") return Subgroup::ExpL0;
  if (n == "expL1" || n == "expΛ1") return Subgroup::ExpL1;
  if (n == "expL2" || n == "expΛ2") return Subgroup::ExpL2;
  fail(ErrorCode::InvalidArgument, "unknown subgroup '" + n + "'");
}

GroupElement subgroup_element(Subgroup s, double p) {
  switch (s) {
    case Subgroup::N: return {Flavor::SL2R, n_lower(p)};
    case Subgroup::Ntilde: return {Flavor::SL2R, n_upper(p)};
    case Subgroup::H: return {Flavor::SL2R, h_diag(p)};
    case Subgroup::A: return {Flavor::SL2R, a_boost(p)};
    case Subgroup::T: return {Flavor::SL2R, t_scale(p)};
    case Subgroup::K: return {Flavor::SL2R, k_rot(p)};
    case Subgroup::ExpL0: return {Flavor::SU11, exp_l0(p)};
    case Subgroup::ExpL1: return {Flavor::SU11, a_boost(p)};
    case Subgroup::ExpL2: return {Flavor::SU11, exp_l2(p)};
  }
  fail(ErrorCode::InvalidArgument, "unknown subgroup");
}

Eigen::Matrix2cd basis_matrix(Flavor f, int i) {
  if (i < 0 || i > 2) fail(ErrorCode::InvalidArgument, "basis index must be 0, 1 or 2");
  if (f == Flavor::SL2R) return i == 0 ? Lm1() : (i == 1 ? L0() : Lp1());
  return i == 0 ? Lam0() : (i == 1 ? Lam1() : Lam2());
}

Eigen::Matrix2cd to_matrix(const AlgebraElement& x) {
  M2 m = M2::Zero();
  for (int i = 0; i < 3; ++i) m += x.c[i] * basis_matrix(x.flavor, i);
  return m;
}

AlgebraElement from_matrix(Flavor f, const Eigen::Matrix2cd& m) {
  AlgebraElement x{f, {}};
  if (f == Flavor::SL2R) {
    x.c = {m(0, 1).real(), (m(0, 0) - m(1, 1)).real(), -m(1, 0).real()};
  } else {
    x.c = {(m(0, 0) - m(1, 1)).imag(), 2.0 * m(0, 1).real(), 2.0 * m(0, 1).imag()};
  }
  return x;
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.flavor != y.flavor) fail(ErrorCode::InvalidArgument, "commutator of mixed flavors");
  const M2 a = to_matrix(x), b = to_matrix(y);
  return from_matrix(x.flavor, a * b - b * a);
}

Eigen::Matrix2cd casimir_matrix(Flavor f) {
  if (f == Flavor::SL2R) return -L0() * L0() + 0.5 * (Lm1() * Lp1() + Lp1() * Lm1());
  return Lam0() * Lam0() - Lam1() * Lam1() - Lam2() * Lam2();
}

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Iwasawa: return "iwasawa";
    case Scheme::NHA: return "nha";
    case Scheme::NHK: return "nhk";
    case Scheme::EulerSU11: return "euler-su11";
    case Scheme::AdSSU11: return "ads-su11";
    case Scheme::HAH: return "hah";
  }
  return "?";
}

Flavor scheme_flavor(Scheme s) {
  return (s == Scheme::EulerSU11 || s == Scheme::AdSSU11) ? Flavor::SU11 : Flavor::SL2R;
}

std::array<const char*, 3> scheme_coordinates(Scheme s) {
  switch (s) {
    case Scheme::Iwasawa: return {"x", "y", "theta"};
    case Scheme::NHA: return {"t", "xi", "phi"};
    case Scheme::NHK: return {"t", "xi", "phi"};
    case Scheme::EulerSU11: return {"phi", "xi", "theta"};
    case Scheme::AdSSU11: return {"t", "xi", "tau"};
    case Scheme::HAH: return {"t", "rho", "phi"};
  }
  return {"?", "?", "?"};
}

GroupElement compose(Scheme s, const Params& p) {
  const auto f = factors(s);
  return {scheme_flavor(s), f[0].g(p[0]) * f[1].g(p[1]) * f[2].g(p[2])};
}

Params decompose(const GroupElement& g0, Scheme s, double tol) {
  const GroupElement g = to_flavor(g0, scheme_flavor(s));
  const M2& m = g.m;
  switch (s) {
    case Scheme::Iwasawa:
    case Scheme::NHK: {
      const double a = m(0, 0).real(), b = m(0, 1).real(), c = m(1, 0).real(), d = m(1, 1).real();
      const double half = std::atan2(-c, d);
      const double y = 1.0 / (c * c + d * d);
      const double x = std::sqrt(y) * (b * std::cos(half) - a * std::sin(half));
      const double th = wrap4(2.0 * half);
      if (s == Scheme::Iwasawa) return {x, y, th};
      return {x, std::log(y), th};
    }
    case Scheme::NHA: {
      const double a = m(0, 0).real(), b = m(0, 1).real(), c = m(1, 0).real(), d = m(1, 1).real();
      if (!(d > std::abs(c) * (1.0 + tol)))
        fail(ErrorCode::OutOfRange, "NHA decomposition requires d > |c|");
      const double phi = 2.0 * std::atanh(c / d);
      const double xi = -std::log((d - c) * (d + c));
      const double t = std::exp(xi / 2) * (b * std::cosh(phi / 2) - a * std::sinh(phi / 2));
      return {t, xi, phi};
    }
    case Scheme::HAH: {
      const double a = m(0, 0).real(), b = m(0, 1).real(), c = m(1, 0).real(), d = m(1, 1).real();
      if (!(d > 0.0)) fail(ErrorCode::OutOfRange, "HAH decomposition requires a positive lower-right entry");
      const double bc = b * c;
      if (bc < -tol) fail(ErrorCode::OutOfRange, "HAH decomposition requires b*c >= 0");
      const bool zero_b = std::abs(b) <= tol, zero_c = std::abs(c) <= tol;
      if (zero_b != zero_c) fail(ErrorCode::OutOfRange, "HAH decomposition: parabolic element outside chart");
      if (zero_b && zero_c) return {std::log(a / d), 0.0, 0.0};
      const double sgn = (b + c) > 0 ? 1.0 : -1.0;
      const double rho = 2.0 * sgn * std::asinh(std::sqrt(std::max(bc, 0.0)));
      const double sum = std::log(a / d), diff = std::log(b / c);
      return {(sum + diff) / 2, rho, (sum - diff) / 2};
    }
    case Scheme::EulerSU11: {
      const cplx lam = m(0, 0), mu = m(0, 1);
      const double xi = 2.0 * std::asinh(std::abs(mu));
      const double al = std::arg(lam);
      const double be = std::abs(mu) > 1e-300 ? std::arg(mu) : al;
      double phi = al + be, th = be - al;
      const double j = std::round((phi - wrap_angle(phi)) / (2.0 * kPi));
      phi -= 2.0 * kPi * j;
      th = wrap4(th - 2.0 * kPi * j);
      if (xi == 0.0) {
        // only φ - θ is defined at the chart singularity; put everything in φ
        const double diff = wrap4(2.0 * al);
        if (diff > kPi) return {diff - 2.0 * kPi, 0.0, -2.0 * kPi};
        if (diff <= -kPi) return {diff + 2.0 * kPi, 0.0, 2.0 * kPi};
        return {diff, 0.0, 0.0};
      }
      return {phi, xi, th};
    }
    case Scheme::AdSSU11: {
      const cplx lam = m(0, 0), mu = m(0, 1);
      const cplx lm = lam * std::conj(mu);
      const double xi = std::asinh(2.0 * lm.real());
      const double tau = std::asinh(2.0 * lm.imag() / std::cosh(xi));
      const double ch = std::cosh(xi / 2), sh = std::sinh(xi / 2);
      const double C = std::cosh(tau / 2), S = std::sinh(tau / 2);
      const cplx q(ch * C, sh * S);
      const double t = wrap4(2.0 * std::arg(lam / q));
      return {t, xi, tau};
    }
  }
  fail(ErrorCode::Internal, "unknown scheme");
}

const char* conjugacy_name(Conjugacy c) {
  switch (c) {
    case Conjugacy::Elliptic: return "elliptic";
    case Conjugacy::Parabolic: return "parabolic";
    case Conjugacy::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

Conjugacy classify(const GroupElement& g, double tol) {
  const double tr = std::abs(g.m.trace().real());
  if (std::abs(tr - 2.0) <= tol) return Conjugacy::Parabolic;
  return tr < 2.0 ? Conjugacy::Elliptic : Conjugacy::Hyperbolic;
}

ModelPoint mobius(const GroupElement& g, const ModelPoint& p) {
  const Chart home = g.flavor == Flavor::SL2R ? Chart::HalfPlane : Chart::Disc;
  const ModelPoint q = convert(p, home);
  cplx z;
  if (home == Chart::HalfPlane) {
    const auto& h = std::get<HalfPlane>(q);
    z = cplx(h.x, h.y);
  } else {
    const auto& d = std::get<Disc>(q);
    z = cplx(d.X, d.Y);
  }
  const cplx w = (g.m(0, 0) * z + g.m(0, 1)) / (g.m(1, 0) * z + g.m(1, 1));
  ModelPoint out = home == Chart::HalfPlane ? ModelPoint(HalfPlane{w.real(), w.imag()})
                                            : ModelPoint(Disc{w.real(), w.imag()});
  return convert(out, chart_of(p));
}

Eigen::Matrix3d maurer_cartan(Scheme s, const Params& p, bool right) {
  const auto f = factors(s);
  const M2 g1 = f[0].g(p[0]), g2 = f[1].g(p[1]), g3 = f[2].g(p[2]);
  const M2 x1 = f[0].gen(p[0]), x2 = f[1].gen(p[1]), x3 = f[2].gen(p[2]);
  std::array<M2, 3> w;
  if (!right) {
    const M2 g23 = g2 * g3;
    w[0] = g23.inverse() * x1 * g23;
    w[1] = g3.inverse() * x2 * g3;
    w[2] = x3;
  } else {
    const M2 g12 = g1 * g2;
    w[0] = x1;
    w[1] = g1 * x2 * g1.inverse();
    w[2] = g12 * x3 * g12.inverse();
  }
  Eigen::Matrix3d out;
  const Flavor fl = scheme_flavor(s);
  for (int i = 0; i < 3; ++i) {
    const auto a = from_matrix(fl, w[i]);
    for (int j = 0; j < 3; ++j) out(i, j) = a.c[j];
  }
  return out;
}

namespace {

// 2 tr(X_a X_b) on the basis.
Eigen::Matrix3d killing(Flavor f) {
  Eigen::Matrix3d k;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) k(a, b) = 2.0 * (basis_matrix(f, a) * basis_matrix(f, b)).trace().real();
  return k;
}

// Coefficients c^{ab} of C₂ = Σ c^{ab} X_a X_b.
Eigen::Matrix3d casimir_coeffs(Flavor f) {
  Eigen::Matrix3d c = Eigen::Matrix3d::Zero();
  if (f == Flavor::SL2R) {
    c(0, 2) = c(2, 0) = 0.5;
    c(1, 1) = -1.0;
  } else {
    c(0, 0) = 1.0;
    c(1, 1) = c(2, 2) = -1.0;
  }
  return c;
}

}  // namespace

Eigen::Matrix3d group_metric_tensor(Scheme s, const Params& p) {
  const Eigen::Matrix3d w = maurer_cartan(s, p);
  return w * killing(scheme_flavor(s)) * w.transpose();
}

double group_metric(Scheme s, const Params& p, const Params& dp) {
  const Eigen::Vector3d v(dp[0], dp[1], dp[2]);
  return v.dot(group_metric_tensor(s, p) * v);
}

double coset_metric(Scheme s, int forgotten, const Params& p, const Params& dp) {
  if (forgotten < 0 || forgotten > 2) fail(ErrorCode::InvalidArgument, "forgotten coordinate index must be 0..2");
  const Eigen::Matrix3d G = group_metric_tensor(s, p);
  const double A = G(forgotten, forgotten);
  if (std::abs(A) < 1e-14 * std::max(1.0, G.cwiseAbs().maxCoeff()))
    fail(ErrorCode::Degenerate, "forgotten direction is null in the group metric");
  double B = 0.0, C = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (i == forgotten) continue;
    B += G(forgotten, i) * dp[i];
    for (int j = 0; j < 3; ++j)
      if (j != forgotten) C += G(i, j) * dp[i] * dp[j];
  }
  return C - B * B / A;
}

ChartedFunction make_separable(Scheme chart, double index0, double index2, std::function<cplx(double)> profile) {
  ChartedFunction cf;
  cf.chart = chart;
  Separable sep;
  sep.index = {index0, 0.0, index2};
  sep.profile = profile;
  cf.f = [index0, index2, profile](const Params& p) {
    return std::exp(I1 * (index0 * p[0] + index2 * p[2])) * profile(p[1]);
  };
  cf.separable = std::move(sep);
  return cf;
}

double fourier_index_mismatch(const ChartedFunction& f, const Params& p) {
  if (!f.separable) return 0.0;
  double worst = 0.0;
  const cplx base = f.f(p);
  for (int a : {0, 2}) {
    Params q = p;
    q[a] += 2.0 * kPi;
    const cplx expect = std::exp(I1 * (2.0 * kPi * f.separable->index[a])) * base;
    worst = std::max(worst, std::abs(f.f(q) - expect) / std::max(1.0, std::abs(base)));
  }
  return worst;
}

namespace {

using Fn = std::function<cplx(const Params&)>;

Params shift(const Params& p, int i, double d) {
  Params q = p;
  q[i] += d;
  return q;
}

cplx partial(const Fn& f, const Params& p, int i, double h) {
  return (f(shift(p, i, h)) - f(shift(p, i, -h))) / (2.0 * h);
}

double sqrt_abs_det(Scheme s, const Params& p) { return std::sqrt(std::abs(group_metric_tensor(s, p).determinant())); }

cplx laplace_beltrami(Scheme s, const Fn& f, const Params& p, double h) {
  auto flux = [&](const Params& q, int i) {
    const Eigen::Matrix3d Gi = group_metric_tensor(s, q).inverse();
    const double w = sqrt_abs_det(s, q);
    cplx acc = 0.0;
    for (int j = 0; j < 3; ++j)
      if (Gi(i, j) != 0.0) acc += Gi(i, j) * partial(f, q, j, h);
    return w * acc;
  };
  cplx div = 0.0;
  for (int i = 0; i < 3; ++i) div += (flux(shift(p, i, h), i) - flux(shift(p, i, -h), i)) / (2.0 * h);
  return div / sqrt_abs_det(s, p);
}

cplx invariant_frame(Scheme s, const Fn& f, const Params& p, double h, bool right) {
  const Eigen::Matrix3d c = casimir_coeffs(scheme_flavor(s));
  // V(q)(a, i): component i of the frame field dual to basis element a
  auto frame = [&](const Params& q) { return Eigen::Matrix3d(maurer_cartan(s, q, right).inverse()); };
  auto along = [&](const Params& q, int b) {
    const Eigen::Matrix3d V = frame(q);
    cplx acc = 0.0;
    for (int j = 0; j < 3; ++j)
      if (V(b, j) != 0.0) acc += V(b, j) * partial(f, q, j, h);
    return acc;
  };
  const Eigen::Matrix3d Vp = frame(p);
  cplx total = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (c(a, b) == 0.0) continue;
      cplx outer = 0.0;
      for (int i = 0; i < 3; ++i) {
        if (Vp(a, i) == 0.0) continue;
        outer += Vp(a, i) * (along(shift(p, i, h), b) - along(shift(p, i, -h), b)) / (2.0 * h);
      }
      total += c(a, b) * outer;
    }
  return total;
}

cplx reduced(Scheme s, const Separable& sep, const Params& p, double h) {
  const double lam0 = sep.index[0], lam2 = sep.index[2];
  auto psi = [&](double r) { return sep.profile(r); };
  auto coeffs = [&](double r) {
    Params q = p;
    q[1] = r;
    return std::pair<Eigen::Matrix3d, double>(group_metric_tensor(s, q).inverse(), sqrt_abs_det(s, q));
  };
  auto flux = [&](double r) {
    const auto [Gi, w] = coeffs(r);
    const cplx d = (psi(r + h) - psi(r - h)) / (2.0 * h);
    return w * (Gi(1, 1) * d + I1 * (Gi(1, 0) * lam0 + Gi(1, 2) * lam2) * psi(r));
  };
  const double r = p[1];
  const auto [Gi, w] = coeffs(r);
  const cplx d = (psi(r + h) - psi(r - h)) / (2.0 * h);
  cplx lb = (flux(r + h) - flux(r - h)) / (2.0 * h) / w;
  lb += I1 * (Gi(0, 1) * lam0 + Gi(2, 1) * lam2) * d;
  const double quad = Gi(0, 0) * lam0 * lam0 + 2.0 * Gi(0, 2) * lam0 * lam2 + Gi(2, 2) * lam2 * lam2;
  lb -= quad * psi(r);
  const cplx phase = std::exp(I1 * (lam0 * p[0] + lam2 * p[2]));
  return -phase * lb;
}

}  // namespace

CasimirResult casimir_apply(const ChartedFunction& cf, const Params& p, const CasimirOptions& opt) {
  if (!cf.f) fail(ErrorCode::InvalidArgument, "charted function is empty");
  CasimirResult res;
  double h = opt.h;
  if (!(h > 0.0)) fail(ErrorCode::InvalidArgument, "finite-difference step must be positive");
  if (cf.chart == Scheme::Iwasawa && h > 1e-2 * p[1]) {
    h = 1e-2 * p[1];
    res.step_warning = true;
  }
  Realization r = opt.realization;
  if (r == Realization::Auto) r = cf.separable ? Realization::Reduced : Realization::LaplaceBeltrami;
  if (r == Realization::Reduced && !cf.separable)
    fail(ErrorCode::InvalidArgument, "reduced realization needs a separable function");
  auto op = [&](double step) -> cplx {
    switch (r) {
      case Realization::LaplaceBeltrami: return -laplace_beltrami(cf.chart, cf.f, p, step);
      case Realization::LeftInvariant: return invariant_frame(cf.chart, cf.f, p, step, false);
      case Realization::RightInvariant: return invariant_frame(cf.chart, cf.f, p, step, true);
      case Realization::Reduced: return reduced(cf.chart, *cf.separable, p, step);
      case Realization::Auto: break;
    }
    fail(ErrorCode::Internal, "unreachable");
  };
  // Richardson on the h² error expansion of the nested central differences.
  const int levels = std::max(0, opt.richardson);
  std::vector<cplx> t(levels + 1);
  for (int k = 0; k <= levels; ++k) t[k] = op(h * std::pow(2.0, k));
  for (int lvl = 1; lvl <= levels; ++lvl) {
    const double f = std::pow(4.0, lvl);
    for (int k = 0; k + lvl <= levels; ++k) t[k] = (f * t[k] - t[k + 1]) / (f - 1.0);
  }
  res.value = t[0];
  return res;
}

}  // namespace hr
