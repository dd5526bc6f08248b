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

#include "hyperradon/quad.hpp"

#include <boost/math/quadrature/gauss.hpp>

namespace hr::quad {

Rule gauss_legendre(double a, double b, int panels, int order) {
  Rule r;
  const double hw = (b - a) / panels / 2.0;
  auto push = [&](double mid, double x, double w) {
    r.x.push_back(mid + hw * x);
    r.w.push_back(hw * w);
  };
  auto rule = [&](auto tag) {
    using G = decltype(tag);
    const auto& abs = G::abscissa();
    const auto& wts = G::weights();
    for (int p = 0; p < panels; ++p) {
      const double mid = a + (2 * p + 1) * hw;
      for (std::size_t i = 0; i < abs.size(); ++i) {
        if (abs[i] == 0.0) {
          push(mid, 0.0, wts[i]);
        } else {
          push(mid, -abs[i], wts[i]);
          push(mid, abs[i], wts[i]);
        }
      }
    }
  };
  if (order <= 10)
    rule(boost::math::quadrature::gauss<double, 10>{});
  else if (order <= 20)
    rule(boost::math::quadrature::gauss<double, 20>{});
  else
    rule(boost::math::quadrature::gauss<double, 30>{});
  return r;
}

Result<cplx> wynn_epsilon(const std::vector<cplx>& s) {
  Result<cplx> out;
  const std::size_t n = s.size();
  if (n == 0) return out;
  if (n < 3) {
    out.value = s.back();
    out.error = n == 2 ? std::abs(s[1] - s[0]) : std::abs(s[0]);
    return out;
  }
  // eps[k][j]: column k of the epsilon table.
  std::vector<std::vector<cplx>> eps(n + 1);
  eps[0].assign(n + 1, cplx(0.0));
  eps[1] = s;
  cplx best = s.back();
  double best_err = std::abs(s[n - 1] - s[n - 2]);
  for (std::size_t k = 2; k <= n; ++k) {
    const auto& prev = eps[k - 1];
    const auto& prev2 = eps[k - 2];
    const std::size_t m = prev.size() - 1;
    if (m == 0) break;
    eps[k].resize(m);
    bool ok = true;
    for (std::size_t j = 0; j < m; ++j) {
      const cplx d = prev[j + 1] - prev[j];
      if (std::abs(d) < 1e-300) {
        ok = false;
        break;
      }
      const cplx base = (k == 2) ? cplx(0.0) : prev2[j + 1];
      eps[k][j] = base + 1.0 / d;
    }
    if (!ok) break;
    if (k % 2 == 1 && eps[k].size() >= 2) {
      const cplx v = eps[k].back();
      const double e = std::abs(eps[k].back() - eps[k][eps[k].size() - 2]);
      if (e <= best_err) {
        best = v;
        best_err = e;
      }
    }
  }
  out.value = best;
  out.error = best_err;
  return out;
}

Result<cplx> neville_to_zero(const std::vector<double>& h, const std::vector<cplx>& v) {
  const std::size_t n = v.size();
  std::vector<cplx> p(v);
  Result<cplx> out;
  if (n == 0) return out;
  cplx last = p[n - 1], prev_diag = p[n - 1];
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i + k < n; ++i) {
      p[i] = (h[i + k] * p[i] - h[i] * p[i + 1]) / (h[i + k] - h[i]);
    }
    prev_diag = last;
    last = p[0];
  }
  out.value = last;
  out.error = std::abs(last - prev_diag);
  return out;
}

Result<cplx> oscillatory_tail(const std::function<cplx(double)>& f, double x0, double period,
                              int first_periods, int levels, double rel_tol) {
  std::vector<double> h;
  std::vector<cplx> sums;
  cplx acc = 0.0;
  double err = 0.0;
  double x = x0;
  int done = 0;
  int target = first_periods;
  for (int lvl = 0; lvl < levels; ++lvl) {
    for (; done < target; ++done) {
      const double a = x0 + done * period;
      const double b = a + period;
      auto r = integrate(f, a, b, rel_tol, 400);
      acc += r.value;
      err += r.error;
    }
    x = x0 + target * period;
    h.push_back(1.0 / x);
    sums.push_back(acc);
    target *= 2;
  }
  auto ex = neville_to_zero(h, sums);
  ex.error += err;
  return ex;
}

}  // namespace hr::quad
