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

#include <array>
#include <variant>

#include "hyperradon/common.hpp"

namespace hr {

struct HalfPlane {
  double x, y;
};
struct Disc {
  double X, Y;
};
struct Polar {
  double rho, phi;
};
struct Hyperboloid {
  double T, X, Y;
};

using ModelPoint = std::variant<HalfPlane, Disc, Polar, Hyperboloid>;

enum class Chart { HalfPlane = 0, Disc = 1, Polar = 2, Hyperboloid = 3 };

using Mat2 = std::array<std::array<double, 2>, 2>;

Chart chart_of(const ModelPoint& p);
const char* chart_name(Chart c);
void validate(const ModelPoint& p, double tol = 1e-12);
ModelPoint convert(const ModelPoint& p, Chart target);
Hyperboloid to_hyperboloid(const ModelPoint& p);
double distance(const ModelPoint& a, const ModelPoint& b);
Mat2 metric_components(const ModelPoint& p);

struct HalfPlaneGeodesic {
  double t = 0.0;
  double xi = 0.0;
  int orientation = 1;
};
struct DiscGeodesic {
  double theta = 0.0;
  double xi = 0.0;
  int orientation = 1;
};
using Geodesic = std::variant<HalfPlaneGeodesic, DiscGeodesic>;

Geodesic flipped(const Geodesic& g);

// Point at arc length sigma, in the geodesic's own model chart.
ModelPoint geodesic_point(const Geodesic& g, double sigma);
// Same point evaluated directly in `target` from the closed forms.
ModelPoint geodesic_point(const Geodesic& g, double sigma, Chart target);
// Polar angles of the two boundary endpoints of a disc geodesic (θ - α, θ + α).
std::array<double, 2> disc_geodesic_endpoints(const DiscGeodesic& g);

struct PoincarePatch {
  double t, eta;
};
struct GlobalAlpha {
  double theta, alpha;
};
struct GlobalXi {
  double theta, xi;
};
using KinematicPoint = std::variant<PoincarePatch, GlobalAlpha, GlobalXi>;

Mat2 kinematic_metric(const KinematicPoint& p);
GlobalAlpha to_global_alpha(const GlobalXi& p);
GlobalXi to_global_xi(const GlobalAlpha& p);
KinematicPoint kinematic_point(const Geodesic& g);

double wrap_angle(double a);  // into (-π, π]

}  // namespace hr
