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

#include <functional>
#include <vector>

#include "hyperradon/common.hpp"
#include "hyperradon/geometry.hpp"
#include "hyperradon/spectral.hpp"

namespace hr {

// A function on hyperbolic space, evaluated in the chart it prefers.
struct Integrand {
  Chart chart = Chart::HalfPlane;
  std::function<cplx(const ModelPoint&)> f;
};

Integrand mode_integrand(const HalfPlaneMode& mode);
Integrand mode_integrand(const PolarMode& mode);

struct RadonOptions {
  double sigma_cutoff = 12.0;
  double rel_tol = 1e-12;
  int tail_panels = 8;       // panels beyond the cutoff fed to the ε-algorithm
  double tail_panel = 2.0;   // their length in σ
  double tail_tol = 1e-6;    // allowed tail uncertainty relative to the value
};

struct RadonSample {
  Geodesic geodesic;
  cplx value;
  double quadrature_error = 0.0;
};

// ∫ f(z(σ)) dσ along the arc-length parametrized geodesic.
RadonSample radon(const Integrand& f, const Geodesic& g, const RadonOptions& opt = {});
std::vector<RadonSample> radon_many(const Integrand& f, const std::vector<Geodesic>& gs,
                                    const RadonOptions& opt = {}, int threads = 1);

// N_ν 2^{−½}|k|^{−½} cos(kη) Γ(¼+iν/2)Γ(¼−iν/2), N_ν = (1/π)√(2ν sinh πν)
cplx radon_halfplane_asymptotic(double k, double nu, double eta);
// Peak |ℛ[χ_{k,ν}](0, η)| over the period centred at η_c, divided by the
// amplitude of radon_halfplane_asymptotic.
double halfplane_envelope_ratio(double k, double nu, double eta_centre, const RadonOptions& opt = {},
                                int threads = 1);
// ∫√y K_{iν}(|k|y) dy/y = 2^{−3/2}|k|^{−½}Γ(¼+iν/2)Γ(¼−iν/2)
double halfplane_amplitude_integral(double k, double nu);

// Transform of e^{ikφ}P^k_{iν−½}(cosh ρ) over the disc geodesic (θ, ξ):
// (−1)^{⌊k/2⌋} e^{ikθ} Γ(¼+iν/2)Γ(¼−iν/2)/√π · (E or O)^k_ν(ξ), E for even k.
cplx radon_disc_closed_form(int k, double nu, double xi, double theta);
// The same without the (−1)^{⌊k/2⌋} factor.
cplx radon_disc_closed_form_printed(int k, double nu, double xi, double theta);

struct SingularValue {
  double nu;
  double lambda;
};
// λ(ν) = Γ(¼+iν/2)Γ(¼−iν/2)√(cosh πν)/√(2π)
SingularValue singular_value(double nu);
double singular_value_disc(double nu);  // √2 λ(ν)
// λ² continued to iν → ν: Γ(¼+ν/2)²Γ(¼−ν/2)² cos(πν)/(2π)
double singular_value_continued_sq(double nu);
// root of the continuation inside [lo, hi]
double singular_value_zero(double lo, double hi, double tol = 1e-13);

struct IntertwineResult {
  double residual = 0.0;  // ‖(−□ − ν² − ¼)ℛ‖_∞ / ‖ℛ‖_∞ over the grid
  double max_value = 0.0;
  std::size_t points = 0;
};

// Fourth-order central differences with step h in both kinematic coordinates.
IntertwineResult intertwine_residual(const HalfPlaneMode& mode, double t, double eta_lo, double eta_hi, int n,
                                     double h = 0.01, const RadonOptions& opt = {}, int threads = 1);
IntertwineResult intertwine_residual(const PolarMode& mode, double theta, double xi_lo, double xi_hi, int n,
                                     double h = 0.01, const RadonOptions& opt = {}, int threads = 1);

struct AntipodalResult {
  double max_deviation = 0.0;        // ℛ(θ, ξ) vs ℛ(θ+π, −ξ)
  double wrong_pairing = 0.0;        // ℛ(θ, ξ) vs ℛ(θ+π, ξ), the negative control
  double symmetric_part = 0.0;       // max |R(ξ) + R(−ξ)|/2 relative, should vanish for odd k
  double antisymmetric_part = 0.0;   // max |R(ξ) − R(−ξ)|/2 relative, should vanish for even k
  std::size_t pairs = 0;
};

// Pairs drawn from a fixed-seed generator with θ ∈ [0, 2π), ξ ∈ [−xi_max, xi_max].
AntipodalResult antipodal_check(int k, double nu, int samples, double xi_max = 2.0, unsigned seed = 7,
                                const RadonOptions& opt = {}, int threads = 1);

struct ThetaFit {
  double theta = 0.0;      // mod π, cos(kη − θ − π/4) convention
  double a = 0.0, b = 0.0; // ℛ ≈ √η (a F_{iν}(kη) + b G_{iν}(kη))
  double rms_residual = 0.0;
  double oscillations = 0.0;
};

// Least-squares fit of samples (η_i, R_i) to √η(a F + b G).
ThetaFit fit_theta(double k, double nu, const std::vector<double>& eta, const std::vector<double>& values);
// Fit of ℛ[χ_{k,ν}](0, η) computed by quadrature on n points of [eta_lo, eta_hi].
ThetaFit extract_theta(double k, double nu, double eta_lo, double eta_hi, int n = 60,
                       const RadonOptions& opt = {}, int threads = 1);

// Overlap of the normalized bound state Φ_1 with Gaussian packets of fitted
// Radon images, for packets centred at each ν.
struct OverlapResult {
  double max_overlap = 0.0;
  std::vector<double> overlaps;
};
OverlapResult bound_state_overlap(double k, const std::vector<double>& nus, double width = 0.1,
                                  const RadonOptions& opt = {}, int threads = 1);

}  // namespace hr
