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

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <optional>
#include <string>

#include "hyperradon/common.hpp"
#include "hyperradon/geometry.hpp"

namespace hr {

enum class Flavor { SL2R, SU11 };

struct GroupElement {
  Flavor flavor = Flavor::SL2R;
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
};

GroupElement sl2r(double a, double b, double c, double d);
GroupElement su11(cplx lambda, cplx mu);
void validate(const GroupElement& g, double tol = 1e-12);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);
GroupElement to_flavor(const GroupElement& g, Flavor target);  // Cayley conjugation
double max_abs_diff(const GroupElement& a, const GroupElement& b);

enum class Subgroup { N, Ntilde, H, A, T, K, ExpL0, ExpL1, ExpL2 };
Subgroup subgroup_from_name(const std::string& name);
GroupElement subgroup_element(Subgroup s, double param);

// Coefficients on {L-1, L0, L1} (SL2R) or {Λ0, Λ1, Λ2} (SU11).
struct AlgebraElement {
  Flavor flavor = Flavor::SL2R;
  std::array<double, 3> c{0.0, 0.0, 0.0};
};
Eigen::Matrix2cd basis_matrix(Flavor f, int i);
Eigen::Matrix2cd to_matrix(const AlgebraElement& x);
AlgebraElement from_matrix(Flavor f, const Eigen::Matrix2cd& m);
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);
// C₂ built from the basis matrices: -L0² + (L-1 L1 + L1 L-1)/2 or Λ0² - Λ1² - Λ2².
Eigen::Matrix2cd casimir_matrix(Flavor f);

enum class Scheme { Iwasawa, NHA, NHK, EulerSU11, AdSSU11, HAH };
const char* scheme_name(Scheme s);
Flavor scheme_flavor(Scheme s);
std::array<const char*, 3> scheme_coordinates(Scheme s);

using Params = std::array<double, 3>;

GroupElement compose(Scheme s, const Params& p);
Params decompose(const GroupElement& g, Scheme s, double tol = 1e-9);

enum class Conjugacy { Elliptic, Parabolic, Hyperbolic };
const char* conjugacy_name(Conjugacy c);
Conjugacy classify(const GroupElement& g, double tol = 1e-10);

ModelPoint mobius(const GroupElement& g, const ModelPoint& p);

// Rows: algebra coefficients of g⁻¹∂_i g (left) or ∂_i g g⁻¹ (right).
Eigen::Matrix3d maurer_cartan(Scheme s, const Params& p, bool right = false);
Eigen::Matrix3d group_metric_tensor(Scheme s, const Params& p);
double group_metric(Scheme s, const Params& p, const Params& dp);
// Extremizes the group metric over d(p[forgotten]).
double coset_metric(Scheme s, int forgotten, const Params& p, const Params& dp);

struct Separable {
  std::array<double, 3> index{0.0, 0.0, 0.0};  // Fourier indices on coordinates 0 and 2
  std::function<cplx(double)> profile;           // dependence on coordinate 1
};

struct ChartedFunction {
  Scheme chart = Scheme::Iwasawa;
  std::function<cplx(const Params&)> f;
  std::optional<Separable> separable;
};

ChartedFunction make_separable(Scheme chart, double index0, double index2, std::function<cplx(double)> profile);
// f(…, c + 2π, …) = e^{2πi·index} f(…, c, …) on both ignorable coordinates.
double fourier_index_mismatch(const ChartedFunction& f, const Params& p);

enum class Realization { Auto, LaplaceBeltrami, LeftInvariant, RightInvariant, Reduced };

struct CasimirOptions {
  double h = 1e-4;
  int richardson = 1;
  Realization realization = Realization::Auto;
};

struct CasimirResult {
  cplx value;
  bool step_warning = false;  // step was shrunk because it was large relative to the point
};

CasimirResult casimir_apply(const ChartedFunction& f, const Params& p, const CasimirOptions& opt = {});

}  // namespace hr
