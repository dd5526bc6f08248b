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

#include <doctest.h>
#include <gsl/gsl_sf_gamma.h>

#include <cmath>

#include "hyperradon/spectral.hpp"
#include "hyperradon/specfun.hpp"

using namespace hr;

namespace {

double gsl_abs_gamma_sq(double re, double im) {
  gsl_sf_result lr, arg;
  gsl_sf_lngamma_complex_e(re, im, &lr, &arg);
  return std::exp(2.0 * lr.val);
}

double k_trapezoid(double kappa, double y) {
  const double h = 0.005;
  double s = 0.5 * std::exp(-y);
  for (int i = 1;; ++i) {
    const double e = y * std::cosh(i * h);
    if (e > 745.0) break;
    s += std::exp(-e) * std::cos(kappa * i * h);
  }
  return s * h;
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("half-plane modes are Laplacian eigenfunctions") {
    const HalfPlaneMode m{1.5, 2.0};
    const double x = 0.3, y = 0.9, h = 1e-3;
    auto f = [&](double a, double b) { return chi_mode(m, HalfPlane{a, b}); };
    const cplx lap = (f(x + h, y) + f(x - h, y) + f(x, y + h) + f(x, y - h) - 4.0 * f(x, y)) / (h * h);
    const cplx ev = -y * y * lap / f(x, y);
    CHECK(std::abs(ev - cplx(4.25)) < 1e-5);
    CHECK_THROWS_AS(chi_mode(m, HalfPlane{0.0, -1.0}), Error);
  }

  TEST_CASE("polar modes are Laplacian eigenfunctions") {
    const PolarMode m{2, 1.3};
    const double r = 0.8, p = 0.4, h = 1e-3;
    auto f = [&](double a, double b) { return polar_mode(m, Polar{a, b}); };
    const cplx frr = (f(r + h, p) - 2.0 * f(r, p) + f(r - h, p)) / (h * h);
    const cplx fr = (f(r + h, p) - f(r - h, p)) / (2 * h);
    const cplx fpp = (f(r, p + h) - 2.0 * f(r, p) + f(r, p - h)) / (h * h);
    const cplx lap = frr + fr / std::tanh(r) + fpp / (std::sinh(r) * std::sinh(r));
    CHECK(std::abs(-lap / f(r, p) - cplx(1.3 * 1.3 + 0.25)) < 1e-5);
  }

  TEST_CASE("KL forward transform of x² e^{−x}") {
    // ∫ x^{μ−1} e^{−x} K_{iν}(x) dx = √π |Γ(μ+iν)|² / (2^μ Γ(μ+½)), μ = 3
    for (double nu : {0.3, 1.0, 4.0}) {
      const double ref = std::sqrt(kPi) * gsl_abs_gamma_sq(3.0, nu) / (8.0 * std::tgamma(3.5));
      CHECK(kl_forward_at([](double x) { return x * x * std::exp(-x); }, nu) == doctest::Approx(ref).epsilon(1e-10));
    }
  }

  TEST_CASE("KL round trip") {
    TransformOptions o;
    o.threads = 2;
    auto f = [](double x) { return x * x * std::exp(-x); };
    const auto s = kl_forward(f, o);
    CHECK(s.tail_estimate < 1e-6);
    for (double x : {0.2, 1.0, 3.0, 8.0}) CHECK(std::abs(kl_inverse(s, x) - f(x)) < 1e-4);
  }

  TEST_CASE("Mehler-Fock transform of an exponential") {
    // ∫₁^∞ e^{−px} P_{iλ−½}(x) dx = √(2/(πp)) K_{iλ}(p)
    const double p = 1.2;
    for (double lam : {0.5, 2.0}) {
      const double ref = lam * std::tanh(kPi * lam) * std::sqrt(2.0 / (kPi * p)) * k_trapezoid(lam, p);
      CHECK(mf_forward_at([p](double x) { return std::exp(-p * x); }, lam) == doctest::Approx(ref).epsilon(1e-9));
    }
  }

  TEST_CASE("Mehler-Fock normalisation from the growth of P") {
    const double lam = 0.9;
    CHECK(mf_weight_from_growth(0, lam) == doctest::Approx(1.0 / (lam * std::tanh(kPi * lam))).epsilon(1e-6));
    const double w2 = 2.0 * kPi * kPi / (lam * std::sinh(kPi * lam) * gsl_abs_gamma_sq(-1.5, lam));
    CHECK(polar_mode_norm_weight(2, lam) == doctest::Approx(w2).epsilon(1e-12));
  }

  TEST_CASE("Bessel cross norms") {
    CHECK(bessel_cross_norm(1.5, 2.5).value == doctest::Approx(bessel_cross_norm_exact(1.5, 2.5)).epsilon(1e-8));
    CHECK(bessel_cross_norm(2.0, 2.0).value == doctest::Approx(0.25).epsilon(1e-8));
    CHECK(std::abs(bessel_cross_norm(1.5, 5.5).value) < 1e-9);
    CHECK(std::abs(bessel_cross_norm_exact(1.0, 3.0)) < 1e-16);
    CHECK_THROWS_AS(bessel_cross_norm(-1.0, 1.0), Error);
  }

  TEST_CASE("bound state orders") {
    auto near = [](std::vector<double> a, std::vector<double> b) {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > 1e-14) return false;
      return a.size() == b.size();
    };
    CHECK(near(bound_orders(LiouvilleExtension{0.75 * kPi, 1.0}, 3), {1.5, 3.5, 5.5}));
    CHECK(near(bound_orders(LiouvilleExtension{0.25 * kPi, 1.0}, 3), {0.5, 2.5, 4.5}));
    CHECK(near(bound_orders(LiouvilleExtension{0.0, 1.0}, 3), {2.0, 4.0, 6.0}));
    CHECK(near(bound_orders(LiouvilleExtension{-0.25 * kPi, 1.0}, 2), {1.5, 3.5}));
    CHECK_THROWS_AS(bound_order(LiouvilleExtension{0.0, 1.0}, 0), Error);
  }

  TEST_CASE("bound states are unit normalised and orthogonal") {
    const LiouvilleExtension ext{0.75 * kPi, 2.0};
    auto inner = [&](int n, int m) {
      return log_measure_integral([&](double x) { return liouville_bound(ext, n, std::log(x)) * liouville_bound(ext, m, std::log(x)); }).value;
    };
    CHECK(inner(0, 0) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(inner(2, 2) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(std::abs(inner(0, 1)) < 1e-7);
  }

  TEST_CASE("scattering states have unit plane-wave weight") {
    for (double th : {0.3, 0.5 * kPi, 2.0})
      for (double k : {0.7, 1.8}) {
        const LiouvilleExtension ext{th, 1.0};
        const double w = plane_wave_weight([&](double xi) { return cplx(liouville_scattering(ext, k, xi)); }, k, -40, -30);
        CHECK(w == doctest::Approx(1.0).epsilon(1e-6));
      }
  }

  TEST_CASE("plane-wave weight of an explicit superposition") {
    const cplx a(0.3, -1.2), b(2.0, 0.5);
    const double k = 1.7;
    auto g = [&](double xi) { return a * std::exp(cplx(0, k * xi)) + b * std::exp(cplx(0, -k * xi)); };
    CHECK(plane_wave_weight(g, k, 0.0, 10.0) == doctest::Approx(kPi * (std::norm(a) + std::norm(b))).epsilon(1e-12));
  }

  TEST_CASE("Pöschl-Teller spectrum sits on the zeros") {
    for (int k = 1; k <= 4; ++k) {
      const auto sp = poschl_teller_spectrum(k);
      REQUIRE(sp.size() == std::size_t(k));
      for (double nu : sp) CHECK(std::abs(poschl_teller_function(k, nu)) < 1e-12);
      CHECK(std::abs(poschl_teller_function(k, 0.3)) > 1e-3);
    }
    const auto even = poschl_teller_parity_filtered(4);
    REQUIRE(even.size() == 2);
    CHECK(even[0] == 1.5);
    CHECK(even[1] == 3.5);
    CHECK_THROWS_AS(poschl_teller_spectrum(0), Error);
  }
}
