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

#include <cmath>

#include "hyperradon/radon.hpp"
#include "hyperradon/specfun.hpp"

using namespace hr;

namespace {

// e^{−d(p, o)²} with o the disc centre
Integrand bump() {
  return Integrand{Chart::Disc, [](const ModelPoint& p) {
                     const double d = distance(p, Disc{0.0, 0.0});
                     return cplx(std::exp(-d * d));
                   }};
}

double bump_line(double xi) {
  const double h = 1e-3;
  double s = 0.0;
  for (int i = -20000; i <= 20000; ++i) {
    const double d = std::acosh(std::cosh(xi) * std::cosh(i * h));
    s += std::exp(-d * d);
  }
  return s * h;
}

}  // namespace

TEST_SUITE("radon") {
  TEST_CASE("Gaussian bump through and off the centre") {
    CHECK(radon(bump(), DiscGeodesic{0.7, 0.0, 1}).value.real() == doctest::Approx(std::sqrt(kPi)).epsilon(1e-10));
    for (double xi : {0.3, 1.0, -1.4}) {
      const auto r = radon(bump(), DiscGeodesic{2.0, xi, 1});
      CHECK(r.value.real() == doctest::Approx(bump_line(xi)).epsilon(1e-9));
      CHECK(std::abs(r.value.imag()) < 1e-15);
    }
  }

  TEST_CASE("same transform from the half-plane chart") {
    // the geodesic through i along the imaginary axis passes the centre's preimage
    const Integrand f{Chart::HalfPlane, [](const ModelPoint& p) {
                        const double d = distance(p, HalfPlane{0.0, 1.0});
                        return cplx(std::exp(-d * d));
                      }};
    CHECK(radon(f, HalfPlaneGeodesic{0.0, 0.0, 1}).value.real() == doctest::Approx(std::sqrt(kPi)).epsilon(1e-10));
  }

  TEST_CASE("disc modes match the closed form") {
    for (int k : {0, 1, 2, 3})
      for (double xi : {0.0, 0.6, -0.9}) {
        CAPTURE(k);
        CAPTURE(xi);
        const auto r = radon(mode_integrand(PolarMode{k, 1.5}), DiscGeodesic{0.3, xi, 1});
        const cplx c = radon_disc_closed_form(k, 1.5, xi, 0.3);
        CHECK(std::abs(r.value - c) < 1e-7 * std::max(1.0, std::abs(c)));
      }
  }

  TEST_CASE("closed form on the diameter has the alternating factor") {
    // P^k_{iν−½}(cosh σ) integrated against e^{ikφ} with φ = ±π/2 on the diameter
    const double nu = 0.9;
    for (int k = 0; k <= 3; ++k) {
      const double base = std::abs(radon_disc_closed_form(k, nu, 0.0, 0.0));
      if (k % 2) {
        CHECK(base < 1e-15);
        continue;
      }
      const double expected = (k / 2) % 2 ? -1.0 : 1.0;
      const cplx c = radon_disc_closed_form(k, nu, 0.0, 0.0);
      CHECK(c.real() * expected > 0.0);
    }
  }

  TEST_CASE("non-decaying input is rejected") {
    try {
      radon(Integrand{Chart::Disc, [](const ModelPoint&) { return cplx(1.0); }}, DiscGeodesic{});
      FAIL("constant accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonConvergence);
    }
  }

  TEST_CASE("orientation does not change the value") {
    const auto a = radon(bump(), DiscGeodesic{0.4, 0.5, 1}), b = radon(bump(), DiscGeodesic{0.4, 0.5, -1});
    CHECK(std::abs(a.value - b.value) < 1e-14);
  }

  TEST_CASE("radon_many agrees with single calls under threads") {
    std::vector<Geodesic> gs;
    for (int i = 0; i < 6; ++i) gs.push_back(DiscGeodesic{0.1 * i, 0.2 * i - 0.5, 1});
    const auto many = radon_many(bump(), gs, {}, 3);
    for (std::size_t i = 0; i < gs.size(); ++i) CHECK(many[i].value == radon(bump(), gs[i]).value);
  }

  TEST_CASE("antipodal identification of disc geodesics") {
    const auto r = antipodal_check(1, 1.2, 8, 2.0, 3);
    CHECK(r.max_deviation < 1e-8);
    CHECK(r.wrong_pairing > 0.1);
  }

  TEST_CASE("theta fit recovers a synthetic phase") {
    std::vector<double> eta, vals;
    for (int i = 0; i < 50; ++i) {
      eta.push_back(15.0 + 0.7 * i);
      const FGZ v = fgz_functions(cplx(0, 0.8), 2.0 * eta.back());
      vals.push_back(std::sqrt(eta.back()) * (3.0 * v.F.real() * std::cos(1.1) + 3.0 * v.G.real() * std::sin(1.1)));
    }
    const ThetaFit f = fit_theta(2.0, 0.8, eta, vals);
    CHECK(f.theta == doctest::Approx(1.1).epsilon(1e-10));
    CHECK(f.rms_residual < 1e-10);
  }

  TEST_CASE("half-plane images carry phase 3π/4") {
    const ThetaFit f = extract_theta(1.0, 1.5, 20.0, 20.0 + 8 * kPi, 40, {}, 2);
    CHECK(std::abs(f.theta - 0.75 * kPi) < 1e-2);
  }

  TEST_CASE("singular values") {
    // λ(ν) → √(2π/ν) for large ν
    CHECK(singular_value(80).lambda * std::sqrt(80 / (2 * kPi)) == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(singular_value_disc(0.7) == doctest::Approx(std::sqrt(2.0) * singular_value(0.7).lambda).epsilon(1e-15));
    CHECK(singular_value_zero(5.2, 5.8) == doctest::Approx(5.5).epsilon(1e-10));
  }

  TEST_CASE("intertwining on a coarse grid") {
    const auto r = intertwine_residual(PolarMode{0, 1.0}, 0.2, -1.0, 1.0, 5);
    CHECK(r.residual < 1e-3);
    CHECK(r.points == 5);
  }
}
