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
#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>
#include <gsl/gsl_sf_gamma.h>
#include <gsl/gsl_sf_legendre.h>

#include <cmath>
#include <functional>

#include "hyperradon/specfun.hpp"

using namespace hr;

namespace {

cplx gsl_gamma(cplx z) {
  gsl_sf_result lr, arg;
  gsl_sf_lngamma_complex_e(z.real(), z.imag(), &lr, &arg);
  return std::polar(std::exp(lr.val), arg.val);
}

// K_{iκ}(y) = ∫₀^∞ e^{−y cosh t} cos κt dt by the trapezoid rule.
double k_trapezoid(double kappa, double y) {
  const double h = 0.005;
  double s = 0.5 * std::exp(-y);
  for (int i = 1;; ++i) {
    const double t = i * h, e = y * std::cosh(t);
    if (e > 745.0) break;
    s += std::exp(-e) * std::cos(kappa * t);
  }
  return s * h;
}

// P'' + tanh ξ P' + (ν² + ¼ + k² sech² ξ) P = 0 by RK4 from ξ = 0.
double eo_shoot(int k, double nu, double p0, double dp0, double xi_end) {
  const int n = 20000;
  const double h = xi_end / n;
  auto rhs = [&](double x, double p, double q, double& dp, double& dq) {
    const double sech = 1.0 / std::cosh(x);
    dp = q;
    dq = -std::tanh(x) * q - (nu * nu + 0.25 + k * k * sech * sech) * p;
  };
  double x = 0.0, p = p0, q = dp0;
  for (int i = 0; i < n; ++i) {
    double a1, b1, a2, b2, a3, b3, a4, b4;
    rhs(x, p, q, a1, b1);
    rhs(x + h / 2, p + h / 2 * a1, q + h / 2 * b1, a2, b2);
    rhs(x + h / 2, p + h / 2 * a2, q + h / 2 * b2, a3, b3);
    rhs(x + h, p + h * a3, q + h * b3, a4, b4);
    p += h / 6 * (a1 + 2 * a2 + 2 * a3 + a4);
    q += h / 6 * (b1 + 2 * b2 + 2 * b3 + b4);
    x += h;
  }
  return p;
}

struct GslQuiet {
  gsl_error_handler_t* old = gsl_set_error_handler_off();
  ~GslQuiet() { gsl_set_error_handler(old); }
};

}  // namespace

TEST_SUITE("specfun") {
  TEST_CASE("complex gamma against an independent implementation") {
    GslQuiet q;
    for (cplx z : {cplx(0.5, 0.0), cplx(1.0, 2.0), cplx(-2.5, 0.3), cplx(0.25, -7.0), cplx(12.0, 1.0), cplx(-0.5, -3.0)}) {
      CAPTURE(z);
      const cplx a = gamma_complex(z).value, b = gsl_gamma(z);
      CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
      CHECK(std::abs(rgamma(z) * b - 1.0) < 1e-12);
    }
  }

  TEST_CASE("gamma poles") {
    CHECK_THROWS_AS(gamma_complex(cplx(-2.0, 0.0)), Error);
    CHECK(std::abs(rgamma(cplx(-3.0, 0.0))) == 0.0);
    try {
      gamma_complex(cplx(0.0, 0.0));
      FAIL("no pole reported");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Pole);
    }
  }

  TEST_CASE("K of imaginary order against the cosh integral") {
    for (double kappa : {0.5, 1.0, 3.0})
      for (double y : {0.1, 0.7, 2.0, 6.0, 15.0}) {
        CAPTURE(kappa);
        CAPTURE(y);
        const double ref = k_trapezoid(kappa, y);
        for (KMethod m : {KMethod::Auto, KMethod::Integral})
          CHECK(std::abs(bessel_K_imag(kappa, y, m).real() - ref) < 1e-11 * std::abs(ref));
        // the ascending series cancels like e^{2y}; it is only used at small y
        if (y <= 6.0) CHECK(std::abs(bessel_K_imag(kappa, y, KMethod::Series).real() - ref) < 1e-12);
      }
  }

  TEST_CASE("K at large argument follows the two-term form") {
    const double y = 50.0, k = 2.0;
    const double two = std::sqrt(kPi / (2 * y)) * std::exp(-y) * (1.0 - (4 * k * k + 1) / (8 * y));
    CHECK(bessel_K_imag(k, y).real() / two == doctest::Approx(1.0).epsilon(2e-3));
  }

  TEST_CASE("J of real order against an independent implementation") {
    GslQuiet q;
    for (double nu : {0.0, 0.5, 1.5, 3.7, 10.0, 20.0})
      for (double x : {0.3, 5.0, 11.9, 12.1, 20.0, 35.0, 60.0, 150.0}) {
        CAPTURE(nu);
        CAPTURE(x);
        const double ref = gsl_sf_bessel_Jnu(nu, x);
        CHECK(std::abs(bessel_J(nu, x).real() - ref) < 1e-11);
        CHECK(std::abs(bessel_J(nu, x).value.imag()) < 1e-14);
      }
  }

  TEST_CASE("J of negative half-integer order") {
    for (double x : {0.5, 3.0, 25.0})
      CHECK(std::abs(bessel_J(-0.5, x).real() - std::sqrt(2.0 / (kPi * x)) * std::cos(x)) < 1e-12);
  }

  TEST_CASE("J of imaginary order: paths agree and satisfy the Wronskian") {
    // W[J_ν, J_{−ν}](x) = −2 sin(νπ)/(πx)
    const cplx nu(0.0, 1.3);
    for (double x : {0.8, 7.0, 18.0}) {
      const double h = 1e-4;
      auto d = [&](cplx n) {
        return (bessel_J(n, x + h).value - bessel_J(n, x - h).value) / (2 * h);
      };
      const cplx w = bessel_J(nu, x).value * d(-nu) - bessel_J(-nu, x).value * d(nu);
      const cplx ref = -2.0 * std::sin(nu * kPi) / (kPi * x);
      CHECK(std::abs(w - ref) < 1e-7 * std::abs(ref));
    }
    CHECK(std::abs(bessel_J(nu, 1.0, JMethod::Series).value - bessel_J(nu, 1.0, JMethod::Integral).value) < 1e-12);
  }

  TEST_CASE("F and G for real order") {
    GslQuiet q;
    const double x = 2.3, nu = 0.3;
    // J_{−ν} = cos νπ J_ν − sin νπ Y_ν
    const double jp = gsl_sf_bessel_Jnu(nu, x);
    const double jm = std::cos(nu * kPi) * jp - std::sin(nu * kPi) * gsl_sf_bessel_Ynu(nu, x);
    const FGZ v = fgz_functions(cplx(nu, 0.0), x);
    CHECK(v.F.real() == doctest::Approx(0.5 / std::cos(nu * kPi / 2) * (jp + jm)).epsilon(1e-11));
    CHECK(v.G.real() == doctest::Approx(0.5 / std::sin(nu * kPi / 2) * (jp - jm)).epsilon(1e-11));
  }

  TEST_CASE("F and G poles") {
    try {
      fgz_functions(cplx(1.0, 0.0), 1.0);
      FAIL("no pole at odd order");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Pole);
    }
    CHECK_THROWS_AS(fgz_functions(cplx(2.0, 0.0), 1.0), Error);
  }

  TEST_CASE("conical functions against an independent implementation") {
    GslQuiet q;
    for (double lam : {0.5, 3.0, 10.0})
      for (double x : {1.0, 1.5, 3.9, 4.1, 30.0, 1e4}) {
        CAPTURE(lam);
        CAPTURE(x);
        const double p0 = gsl_sf_conicalP_0(lam, x);
        CHECK(std::abs(conical_P(0, lam, x).real() - p0) < 1e-10 * std::max(1.0, std::abs(p0)));
        if (x > 1.0) {
          const double p1 = gsl_sf_conicalP_1(lam, x);
          CHECK(std::abs(conical_P(1, lam, x).real() - p1) < 1e-10 * std::max(1.0, std::abs(p1)));
        }
      }
  }

  TEST_CASE("conical functions satisfy the associated Legendre equation") {
    // (1−x²)P'' − 2xP' + [−κ² − ¼ − m²/(1−x²)] P = 0
    for (int m : {0, 2, 6})
      for (double x : {1.7, 3.0, 6.0}) {
        const double kappa = 2.5, h = 1e-3;
        auto P = [&](double t) { return conical_P(m, kappa, t).real(); };
        const double p = P(x), d1 = (P(x + h) - P(x - h)) / (2 * h), d2 = (P(x + h) - 2 * p + P(x - h)) / (h * h);
        const double r = (1 - x * x) * d2 - 2 * x * d1 + (-kappa * kappa - 0.25 - m * m / (1 - x * x)) * p;
        const double scale = std::abs((1 - x * x) * d2) + std::abs(2 * x * d1) + std::abs(p) * (kappa * kappa + m * m);
        CHECK(std::abs(r) < 1e-5 * scale);
      }
  }

  TEST_CASE("E and O against ODE shooting") {
    for (int k = 0; k <= 3; ++k)
      for (double nu : {0.8, 1.5, 2.0}) {
        CAPTURE(k);
        CAPTURE(nu);
        // Legendre P^k at the origin and its z-derivative there
        const double e0 = std::pow(2.0, k) * std::sqrt(kPi) / std::norm(gsl_gamma(cplx(0.75 - 0.5 * k, 0.5 * nu)));
        const double o1 = -std::pow(2.0, k + 1) * std::sqrt(kPi) / std::norm(gsl_gamma(cplx(0.25 - 0.5 * k, 0.5 * nu)));
        for (double xi : {0.5, 1.5, 3.0}) {
          const EOResult r = modified_conical_EO(k, nu, xi);
          const double e = eo_shoot(k, nu, e0, 0.0, xi), o = eo_shoot(k, nu, 0.0, o1, xi);
          const double scale = std::max({1.0, std::abs(e0), std::abs(o1)});
          CHECK(std::abs(r.E.real() - e) < 1e-9 * scale);
          CHECK(std::abs(r.O.real() - o) < 1e-9 * scale);
        }
      }
  }

  TEST_CASE("E and O parity") {
    const EOResult a = modified_conical_EO(2, 1.1, 2.2), b = modified_conical_EO(2, 1.1, -2.2);
    CHECK(a.E.real() == doctest::Approx(b.E.real()).epsilon(1e-14));
    CHECK(a.O.real() == doctest::Approx(-b.O.real()).epsilon(1e-14));
    CHECK_THROWS_AS(modified_conical_EO(1, 0.0, 1.0), Error);
  }
}
