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

#include "hyperradon/geometry.hpp"

#include <cmath>
#include <string>

namespace hr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Hyperboloid from_half_plane(const HalfPlane& p) {
  const double r2 = p.x * p.x + p.y * p.y;
  return {(r2 + 1.0) / (2.0 * p.y), (r2 - 1.0) / (2.0 * p.y), -p.x / p.y};
}

Hyperboloid from_disc(const Disc& p) {
  const double r2 = p.X * p.X + p.Y * p.Y;
  const double d = 1.0 - r2;
  return {(1.0 + r2) / d, 2.0 * p.X / d, 2.0 * p.Y / d};
}

Hyperboloid from_polar(const Polar& p) {
  const double s = std::sinh(p.rho);
  return {std::cosh(p.rho), s * std::cos(p.phi), s * std::sin(p.phi)};
}

HalfPlane hyperboloid_to_half_plane(const Hyperboloid& h) {
  // T - X = 1/y; for points near z = ∞ use T - X = (1 + Y²)/(T + X).
  const double tmx = h.X > 0 ? (1.0 + h.Y * h.Y) / (h.T + h.X) : h.T - h.X;
  const double y = 1.0 / tmx;
  return {-h.Y * y, y};
}

Disc hyperboloid_to_disc(const Hyperboloid& h) { return {h.X / (1.0 + h.T), h.Y / (1.0 + h.T)}; }

Polar hyperboloid_to_polar(const Hyperboloid& h) {
  const double s = std::hypot(h.X, h.Y);
  return {std::asinh(s), s == 0.0 ? 0.0 : std::atan2(h.Y, h.X)};
}

}  // namespace

double wrap_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

Chart chart_of(const ModelPoint& p) { return static_cast<Chart>(p.index()); }

const char* chart_name(Chart c) {
  switch (c) {
    case Chart::HalfPlane: return "half-plane";
    case Chart::Disc: return "disc";
    case Chart::Polar: return "polar";
    case Chart::Hyperboloid: return "hyperboloid";
  }
  return "?";
}

void validate(const ModelPoint& p, double tol) {
  std::visit(overloaded{
                 [](const HalfPlane& h) {
                   if (!(h.y > 0.0) || !std::isfinite(h.x) || !std::isfinite(h.y))
                     fail(ErrorCode::Domain, "half-plane point requires y > 0");
                 },
                 [](const Disc& d) {
                   if (!(d.X * d.X + d.Y * d.Y < 1.0)) fail(ErrorCode::Domain, "disc point requires X²+Y² < 1");
                 },
                 [](const Polar& q) {
                   if (!(q.rho >= 0.0) || !std::isfinite(q.rho) || !std::isfinite(q.phi))
                     fail(ErrorCode::Domain, "polar point requires rho >= 0");
                 },
                 [tol](const Hyperboloid& h) {
                   const double q = h.T * h.T - h.X * h.X - h.Y * h.Y;
                   if (!(h.T >= 1.0 - tol) || std::abs(q - 1.0) > tol * std::max(1.0, h.T * h.T))
                     fail(ErrorCode::Domain, "hyperboloid point requires T²-X²-Y² = 1, T >= 1");
                 },
             },
             p);
}

Hyperboloid to_hyperboloid(const ModelPoint& p) {
  return std::visit(overloaded{
                        [](const HalfPlane& h) { return from_half_plane(h); },
                        [](const Disc& d) { return from_disc(d); },
                        [](const Polar& q) { return from_polar(q); },
                        [](const Hyperboloid& h) { return h; },
                    },
                    p);
}

ModelPoint convert(const ModelPoint& p, Chart target) {
  validate(p);
  const Chart src = chart_of(p);
  if (src == target) return p;
  // Direct maps where the hyperboloid detour would lose digits.
  if (src == Chart::HalfPlane && target == Chart::Disc) {
    const auto& h = std::get<HalfPlane>(p);
    const cplx z(h.x, h.y), i(0.0, 1.0);
    const cplx w = (z - i) / (z + i);
    return Disc{w.real(), w.imag()};
  }
  if (src == Chart::Disc && target == Chart::HalfPlane) {
    const auto& d = std::get<Disc>(p);
    const cplx w(d.X, d.Y), i(0.0, 1.0);
    const cplx z = i * (1.0 + w) / (1.0 - w);
    return HalfPlane{z.real(), z.imag()};
  }
  if (src == Chart::Polar && target == Chart::Disc) {
    const auto& q = std::get<Polar>(p);
    const double r = std::tanh(q.rho / 2.0);
    return Disc{r * std::cos(q.phi), r * std::sin(q.phi)};
  }
  if (src == Chart::Disc && target == Chart::Polar) {
    const auto& d = std::get<Disc>(p);
    const double r = std::hypot(d.X, d.Y);
    return Polar{2.0 * std::atanh(r), r == 0.0 ? 0.0 : std::atan2(d.Y, d.X)};
  }
  const Hyperboloid h = to_hyperboloid(p);
  switch (target) {
    case Chart::HalfPlane: return hyperboloid_to_half_plane(h);
    case Chart::Disc: return hyperboloid_to_disc(h);
    case Chart::Polar: return hyperboloid_to_polar(h);
    case Chart::Hyperboloid: return h;
  }
  fail(ErrorCode::Internal, "unknown chart");
}

double distance(const ModelPoint& a, const ModelPoint& b) {
  const Hyperboloid p = to_hyperboloid(a), q = to_hyperboloid(b);
  const double c = p.T * q.T - p.X * q.X - p.Y * q.Y;
  return std::acosh(std::max(1.0, c));
}

Mat2 metric_components(const ModelPoint& p) {
  validate(p);
  return std::visit(overloaded{
                        [](const HalfPlane& h) {
                          const double g = 1.0 / (h.y * h.y);
                          return Mat2{{{g, 0.0}, {0.0, g}}};
                        },
                        [](const Disc& d) {
                          const double s = 1.0 - d.X * d.X - d.Y * d.Y;
                          const double g = 4.0 / (s * s);
                          return Mat2{{{g, 0.0}, {0.0, g}}};
                        },
                        [](const Polar& q) {
                          const double s = std::sinh(q.rho);
                          return Mat2{{{1.0, 0.0}, {0.0, s * s}}};
                        },
                        [](const Hyperboloid& h) {
                          // induced metric in the (X, Y) coordinates of the sheet
                          const double t2 = h.T * h.T;
                          return Mat2{{{1.0 - h.X * h.X / t2, -h.X * h.Y / t2},
                                       {-h.X * h.Y / t2, 1.0 - h.Y * h.Y / t2}}};
                        },
                    },
                    p);
}

Geodesic flipped(const Geodesic& g) {
  return std::visit(overloaded{
                        [](HalfPlaneGeodesic h) -> Geodesic {
                          h.orientation = -h.orientation;
                          return h;
                        },
                        [](DiscGeodesic d) -> Geodesic {
                          d.orientation = -d.orientation;
                          return d;
                        },
                    },
                    g);
}

ModelPoint geodesic_point(const Geodesic& g, double sigma) {
  const bool half = std::holds_alternative<HalfPlaneGeodesic>(g);
  return geodesic_point(g, sigma, half ? Chart::HalfPlane : Chart::Disc);
}

ModelPoint geodesic_point(const Geodesic& g, double sigma, Chart target) {
  if (const auto* h = std::get_if<HalfPlaneGeodesic>(&g)) {
    const double s = h->orientation >= 0 ? sigma : -sigma;
    const double r = std::exp(h->xi);
    HalfPlane p{r * std::tanh(s) + h->t, r / std::cosh(s)};
    return target == Chart::HalfPlane ? ModelPoint(p) : convert(p, target);
  }
  const auto& d = std::get<DiscGeodesic>(g);
  const double s = d.orientation >= 0 ? sigma : -sigma;
  const double chx = std::cosh(d.xi), shx = std::sinh(d.xi);
  const double chs = std::cosh(s), shs = std::sinh(s);
  const double c = std::cos(d.theta), sn = std::sin(d.theta);
  // unrotated components share the positive denominator 1 + cosh ξ cosh σ
  const double u = shx * chs, v = shs;
  switch (target) {
    case Chart::Disc: {
      const double den = 1.0 + chx * chs;
      const double X = u / den, Y = v / den;
      return Disc{c * X - sn * Y, sn * X + c * Y};
    }
    case Chart::Hyperboloid: return Hyperboloid{chx * chs, c * u - sn * v, sn * u + c * v};
    case Chart::Polar: {
      const double sinh_rho = std::sqrt(u * u + v * v);
      const double phi = (u == 0.0 && v == 0.0) ? d.theta : d.theta + std::atan2(v, u);
      return Polar{std::asinh(sinh_rho), phi};
    }
    case Chart::HalfPlane: return convert(Hyperboloid{chx * chs, c * u - sn * v, sn * u + c * v}, target);
  }
  fail(ErrorCode::Internal, "unknown chart");
}

std::array<double, 2> disc_geodesic_endpoints(const DiscGeodesic& g) {
  const double alpha = std::atan2(1.0, std::sinh(g.xi));
  return {g.theta - alpha, g.theta + alpha};
}

Mat2 kinematic_metric(const KinematicPoint& p) {
  return std::visit(overloaded{
                        [](const PoincarePatch& q) {
                          if (!(q.eta > 0.0)) fail(ErrorCode::Domain, "Poincare patch is singular at eta <= 0");
                          const double g = 1.0 / (q.eta * q.eta);
                          return Mat2{{{-g, 0.0}, {0.0, g}}};
                        },
                        [](const GlobalAlpha& q) {
                          if (!(q.alpha > 0.0 && q.alpha < kPi))
                            fail(ErrorCode::Domain, "global chart is singular at alpha in {0, pi}");
                          const double s = std::sin(q.alpha);
                          const double g = 1.0 / (s * s);
                          return Mat2{{{-g, 0.0}, {0.0, g}}};
                        },
                        [](const GlobalXi& q) {
                          const double c = std::cosh(q.xi);
                          return Mat2{{{-c * c, 0.0}, {0.0, 1.0}}};
                        },
                    },
                    p);
}

GlobalAlpha to_global_alpha(const GlobalXi& p) { return {p.theta, std::atan2(1.0, std::sinh(p.xi))}; }

GlobalXi to_global_xi(const GlobalAlpha& p) {
  if (!(p.alpha > 0.0 && p.alpha < kPi)) fail(ErrorCode::Domain, "alpha must lie in (0, pi)");
  return {p.theta, std::asinh(std::cos(p.alpha) / std::sin(p.alpha))};
}

KinematicPoint kinematic_point(const Geodesic& g) {
  if (const auto* h = std::get_if<HalfPlaneGeodesic>(&g)) return PoincarePatch{h->t, std::exp(h->xi)};
  const auto& d = std::get<DiscGeodesic>(g);
  return GlobalXi{d.theta, d.xi};
}

}  // namespace hr
