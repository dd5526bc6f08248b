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
#include <random>

#include "hyperradon/liegroup.hpp"

using namespace hr;

namespace {

const Scheme kSchemes[6] = {Scheme::Iwasawa, Scheme::NHA, Scheme::NHK, Scheme::EulerSU11, Scheme::AdSSU11, Scheme::HAH};

}  // namespace

TEST_SUITE("liegroup") {
  TEST_CASE("one-parameter subgroups add their parameters") {
    for (Subgroup s : {Subgroup::N, Subgroup::Ntilde, Subgroup::H, Subgroup::A, Subgroup::K, Subgroup::ExpL0,
                       Subgroup::ExpL1, Subgroup::ExpL2}) {
      const GroupElement ab = multiply(subgroup_element(s, 0.3), subgroup_element(s, 0.45));
      CHECK(max_abs_diff(ab, subgroup_element(s, 0.75)) < 1e-13);
      CHECK(max_abs_diff(subgroup_element(s, 0.0), multiply(ab, inverse(ab))) < 1e-13);
    }
  }

  TEST_CASE("the scaling subgroup is multiplicative") {
    const GroupElement ab = multiply(subgroup_element(Subgroup::T, 0.3), subgroup_element(Subgroup::T, 2.5));
    CHECK(max_abs_diff(ab, subgroup_element(Subgroup::T, 0.75)) < 1e-13);
    CHECK_THROWS_AS(subgroup_element(Subgroup::T, 0.0), Error);
  }

  TEST_CASE("subgroup names") {
    CHECK(subgroup_from_name("K") == Subgroup::K);
    CHECK_THROWS_AS(subgroup_from_name("Q"), Error);
  }

  TEST_CASE("validation rejects non-unimodular matrices") {
    CHECK_THROWS_AS(validate(sl2r(1.0, 1.0, 1.0, 1.0)), Error);
    CHECK_NOTHROW(validate(sl2r(2.0, 1.0, 1.0, 1.0)));
    CHECK_THROWS_AS(validate(su11(cplx(0.5, 0.0), cplx(1.0, 0.0))), Error);
  }

  TEST_CASE("Cayley conjugation keeps det and round trips") {
    const GroupElement g = sl2r(2.0, 1.0, 3.0, 2.0);
    const GroupElement h = to_flavor(g, Flavor::SU11);
    CHECK(std::abs(h.m.determinant() - 1.0) < 1e-14);
    // SU(1,1) shape: [[λ, μ], [μ̄, λ̄]]
    CHECK(std::abs(h.m(1, 1) - std::conj(h.m(0, 0))) < 1e-14);
    CHECK(std::abs(h.m(1, 0) - std::conj(h.m(0, 1))) < 1e-14);
    CHECK(max_abs_diff(to_flavor(h, Flavor::SL2R), g) < 1e-14);
  }

  TEST_CASE("Möbius action against the direct fractional map") {
    const GroupElement g = sl2r(2.0, 1.0, 3.0, 2.0);
    const auto p = std::get<HalfPlane>(mobius(g, HalfPlane{0.3, 0.8}));
    const cplx z(0.3, 0.8), w = (2.0 * z + 1.0) / (3.0 * z + 2.0);
    CHECK(p.x == doctest::Approx(w.real()).epsilon(1e-14));
    CHECK(p.y == doctest::Approx(w.imag()).epsilon(1e-14));
  }

  TEST_CASE("Möbius maps are isometries") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
      const GroupElement g = compose(Scheme::Iwasawa, {u(rng), std::exp(u(rng)), 3.0 * u(rng)});
      const HalfPlane a{u(rng), std::exp(u(rng))}, b{u(rng), std::exp(u(rng))};
      CHECK(distance(mobius(g, a), mobius(g, b)) == doctest::Approx(distance(a, b)).epsilon(1e-10));
    }
  }

  TEST_CASE("conjugacy classes follow the trace") {
    CHECK(classify(subgroup_element(Subgroup::K, 1.0)) == Conjugacy::Elliptic);
    CHECK(classify(subgroup_element(Subgroup::N, 1.0)) == Conjugacy::Parabolic);
    CHECK(classify(subgroup_element(Subgroup::A, 1.0)) == Conjugacy::Hyperbolic);
    CHECK(classify(sl2r(2.0, 1.0, 3.0, 2.0)) == Conjugacy::Hyperbolic);
  }

  TEST_CASE("commutator matches the matrix commutator") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (Flavor f : {Flavor::SL2R, Flavor::SU11}) {
      const AlgebraElement x{f, {u(rng), u(rng), u(rng)}}, y{f, {u(rng), u(rng), u(rng)}};
      const Eigen::Matrix2cd a = to_matrix(x), b = to_matrix(y);
      const Eigen::Matrix2cd direct = a * b - b * a;
      CHECK((to_matrix(commutator(x, y)) - direct).cwiseAbs().maxCoeff() < 1e-14);
      const AlgebraElement back = from_matrix(f, a);
      for (int i = 0; i < 3; ++i) CHECK(back.c[i] == doctest::Approx(x.c[i]).epsilon(1e-14));
    }
  }

  TEST_CASE("quadratic Casimir on the defining representation") {
    for (Flavor f : {Flavor::SL2R, Flavor::SU11})
      CHECK((casimir_matrix(f) + 0.75 * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  }

  TEST_CASE("compose and decompose round trip") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (Scheme sc : kSchemes) {
      CAPTURE(scheme_name(sc));
      for (int i = 0; i < 200; ++i) {
        Params p{2.0 * u(rng), 1.5 * u(rng), kPi * u(rng)};
        if (sc == Scheme::Iwasawa) p[1] = std::exp(p[1]);
        const GroupElement g = compose(sc, p);
        CHECK(std::abs(g.m.determinant() - 1.0) < 1e-12);
        CHECK(max_abs_diff(compose(sc, decompose(g, sc)), g) < 1e-10);
      }
    }
  }

  TEST_CASE("coset metric of the Iwasawa chart is the half-plane metric") {
    const Params p{0.4, 1.7, 0.2}, d{0.3, -0.5, 0.9};
    CHECK(coset_metric(Scheme::Iwasawa, 2, p, d) == doctest::Approx((0.09 + 0.25) / (1.7 * 1.7)).epsilon(1e-10));
  }

  TEST_CASE("group metric is symmetric and bi-invariant in its tensor") {
    const Eigen::Matrix3d g = group_metric_tensor(Scheme::EulerSU11, {0.2, 0.7, -0.1});
    CHECK((g - g.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    // Lorentzian signature (two positive, one negative or the reverse)
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(g);
    int neg = 0;
    for (int i = 0; i < 3; ++i) neg += es.eigenvalues()(i) < 0.0;
    CHECK((neg == 1 || neg == 2));
  }

  TEST_CASE("Casimir of a matrix element") {
    for (Scheme sc : kSchemes) {
      CAPTURE(scheme_name(sc));
      ChartedFunction f;
      f.chart = sc;
      f.f = [sc](const Params& p) { return to_flavor(compose(sc, p), Flavor::SL2R).m(0, 1); };
      const Params p{0.3, 0.6, -0.4};
      const cplx c = casimir_apply(f, p).value;
      CHECK(std::abs(c + 0.75 * f.f(p)) < 1e-6 * std::abs(f.f(p)));
    }
  }

  TEST_CASE("Casimir on powers of y") {
    for (double s : {0.5, 2.0, 3.0}) {
      ChartedFunction f;
      f.chart = Scheme::Iwasawa;
      f.f = [s](const Params& q) { return cplx(std::pow(q[1], s)); };
      const Params p{0.2, 1.3, 0.4};
      CHECK(casimir_apply(f, p).value.real() == doctest::Approx(-s * (s - 1.0) * std::pow(1.3, s)).epsilon(1e-6));
    }
  }
}
