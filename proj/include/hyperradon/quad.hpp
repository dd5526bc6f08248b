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

#pragma once

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "hyperradon/common.hpp"

namespace hr::quad {

template <class T>
struct Result {
  T value{};
  double error = 0.0;
};

namespace detail {

// 21-point Kronrod rule with its embedded 10-point Gauss rule on [a, b].
template <class F>
auto gk21(F& f, double a, double b, double& err, double& l1) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
  using G = boost::math::quadrature::gauss<double, 10>;
  const auto& x = GK::abscissa();
  const auto& wk = GK::weights();
  const auto& wg = G::weights();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  auto fc = f(c);
  decltype(fc) k = wk[0] * fc, g{};
  l1 = wk[0] * std::abs(fc);
  for (std::size_t i = 1; i < x.size(); ++i) {
    const auto s = f(c - h * x[i]) + f(c + h * x[i]);
    k += wk[i] * s;
    // Gauss nodes are the odd Kronrod nodes (x[0] = 0 is Kronrod-only for n = 10)
    if (i % 2 == 1) g += wg[i / 2] * s;
    l1 += wk[i] * std::abs(s);
  }
  err = std::abs((k - g) * h);
  l1 *= std::abs(h);
  return k * h;
}

}  // namespace detail

// Globally adaptive 21-point Gauss-Kronrod on [a, b]: the interval with the
// largest error is bisected until the summed error is below
// max(abs_tol, rel_tol·|I|), or below noise_rel times the L1 norm (at least
// rounding level). Integrands that are themselves computed by quadrature
// should pass their own relative accuracy as noise_rel.
template <class F>
auto integrate(F&& f, double a, double b, double rel_tol = 1e-12, unsigned max_intervals = 2000,
               double abs_tol = 0.0, double noise_rel = 0.0) {
  using T = decltype(f(a));
  struct Piece {
    double a, b, err;
    T value;
    double l1;
    bool operator<(const Piece& o) const { return err < o.err; }
  };
  Result<T> r;
  if (a == b) return r;
  std::priority_queue<Piece> heap;
  double e = 0.0, l = 0.0;
  T v = detail::gk21(f, a, b, e, l);
  heap.push({a, b, e, v, l});
  T total = v;
  double err = e, l1 = l;
  unsigned count = 1;
  while (count < max_intervals) {
    const double target = std::max(abs_tol, rel_tol * std::abs(total));
    const double floor = std::max(noise_rel, 50.0 * std::numeric_limits<double>::epsilon()) * l1;
    if (err <= target || err <= floor) break;
    Piece p = heap.top();
    const double m = 0.5 * (p.a + p.b);
    if (!(m > p.a && m < p.b)) break;
    heap.pop();
    double e1, l1a, e2, l1b;
    T v1 = detail::gk21(f, p.a, m, e1, l1a);
    T v2 = detail::gk21(f, m, p.b, e2, l1b);
    total += v1 + v2 - p.value;
    err += e1 + e2 - p.err;
    l1 += l1a + l1b - p.l1;
    heap.push({p.a, m, e1, v1, l1a});
    heap.push({m, p.b, e2, v2, l1b});
    ++count;
  }
  // re-sum to shed drift from the running updates
  T sum{};
  double esum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    esum += heap.top().err;
    heap.pop();
  }
  r.value = sum;
  r.error = esum;
  return r;
}

// Sum of integrate() over consecutive breakpoints.
template <class F>
auto integrate_pieces(F&& f, const std::vector<double>& pts, double rel_tol = 1e-12,
                      unsigned max_intervals = 2000, double noise_rel = 0.0) {
  using T = decltype(f(pts.front()));
  Result<T> total;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    auto r = integrate(f, pts[i], pts[i + 1], rel_tol, max_intervals, 0.0, noise_rel);
    total.value += r.value;
    total.error += r.error;
  }
  return total;
}

// Fixed composite Gauss-Legendre rule: nodes and weights on [a, b] split into
// `panels` equal panels of `order` points.
struct Rule {
  std::vector<double> x, w;
};
Rule gauss_legendre(double a, double b, int panels, int order = 20);

// Wynn epsilon limit of a sequence of partial sums.
Result<cplx> wynn_epsilon(const std::vector<cplx>& partial_sums);

// Polynomial (Neville) extrapolation of values v(h_i) to h = 0.
Result<cplx> neville_to_zero(const std::vector<double>& h, const std::vector<cplx>& v);

// ∫_{x0}^∞ f(x) dx for integrands whose tail is an oscillation of period
// `period` times a power series in 1/x. Panel sums to X_j = x0 + period*N_j
// (N_j doubling) are extrapolated in 1/X_j.
Result<cplx> oscillatory_tail(const std::function<cplx(double)>& f, double x0, double period,
                              int first_periods = 8, int levels = 7, double rel_tol = 1e-13);

}  // namespace hr::quad
