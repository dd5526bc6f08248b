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
#include "hyperradon/quad.hpp"

namespace hr {

struct HalfPlaneMode {
  double k = 1.0;
  double kappa = 1.0;
};

struct PolarMode {
  int m = 0;
  double kappa = 1.0;
};

// −∂²_ξ − k²e^{2ξ} with boundary angle θ (mod π) at the attractive end.
struct LiouvilleExtension {
  double theta = 0.75 * kPi;
  double k = 1.0;
};

// (1/π)√(2κ sinh πκ)
double chi_normalization(double kappa);
// (1/π)√(2κ sinh πκ) e^{ikx} √y K_{iκ}(|k|y)
cplx chi_mode(const HalfPlaneMode& mode, const HalfPlane& p);
// e^{imφ} P^m_{iκ−½}(cosh ρ), unnormalized
cplx polar_mode(const PolarMode& mode, const Polar& p);
// ⟨φ_{m,κ}, φ_{m,κ'}⟩ = weight · δ(κ−κ')
double polar_mode_norm_weight(int m, double kappa);

using RealFn = std::function<double(double)>;

struct TransformOptions {
  double nu_max = 30.0;  // spectral cutoff
  int panels = 30;       // Gauss-Legendre panels on [0, nu_max]
  int order = 20;
  double x_min = 1e-12;  // KL: lower cutoff of ∫dx; MF: ignored
  double x_max = 60.0;   // support cutoff of the input function
  double rel_tol = 1e-11;
  int threads = 1;
};

// Transform sampled on the fixed spectral nodes of the inverse quadrature.
struct SpectralSamples {
  quad::Rule rule;
  std::vector<double> values;
  double tail_estimate = 0.0;  // |weight·transform| near the cutoff, relative to its peak
};

// f̃(ν) = ∫₀^∞ K_{iν}(x) f(x) dx
double kl_forward_at(const RealFn& f, double nu, const TransformOptions& opt = {});
SpectralSamples kl_forward(const RealFn& f, const TransformOptions& opt = {});
// f(x) = (1/π²x) ∫₀^∞ 2ν sinh(νπ) K_{iν}(x) f̃(ν) dν
double kl_inverse(const SpectralSamples& s, double x);

// f̃(λ) = λ tanh(πλ) ∫₁^∞ P_{iλ−½}(x) f(x) dx
double mf_forward_at(const RealFn& f, double lambda, const TransformOptions& opt = {});
SpectralSamples mf_forward(const RealFn& f, const TransformOptions& opt = {});
// f(x) = ∫₀^∞ P_{iλ−½}(x) f̃(λ) dλ
double mf_inverse(const SpectralSamples& s, double x);

// Coefficient c in ∫₁^∞ P^m_{iλ−½}P^m_{iμ−½} dx = c δ(λ−μ), from π times the
// growth rate of ∫ P² sinh ρ dρ over whole periods starting at rho0.
double mf_weight_from_growth(int m, double lambda, double rho0 = 10.0, int periods = 8);

// ---- Liouville operator ----------------------------------------------------

// 𝒩_κ⁻² = (1/κ)(tanh(πκ/2) cos²θ + coth(πκ/2) sin²θ)
double liouville_norm_inv_sq(double theta, double kappa);
// Ξ_κ(ξ) = 𝒩_κ (F_{iκ}(|k|e^ξ) cos θ + G_{iκ}(|k|e^ξ) sin θ)
double liouville_scattering(const LiouvilleExtension& ext, double kappa, double xi);
// ν_n = 2(n + θ/π), θ reduced to [0, π)
double bound_order(const LiouvilleExtension& ext, int n);
std::vector<double> bound_orders(const LiouvilleExtension& ext, int count);
// Φ_n(ξ) = √(2ν_n) J_{ν_n}(|k|e^ξ)
double liouville_bound(const LiouvilleExtension& ext, int n, double xi);

// ∫₀^∞ h(x) dx/x: ξ-quadrature from e^{xi_lo} to x0, then panels of length π with
// extrapolation of the oscillatory tail.
quad::Result<double> log_measure_integral(const RealFn& h, double xi_lo = -40.0, double x0 = 10.0,
                                          double rel_tol = 1e-12);

// ∫₀^∞ J_α J_β dx/x by quadrature, and the closed form (2/π) sin(π(β−α)/2)/(β²−α²).
quad::Result<double> bessel_cross_norm(double alpha, double beta);
double bessel_cross_norm_exact(double alpha, double beta);

// π(|a|²+|b|²) for a least-squares fit g(ξ) ≈ a e^{iκξ} + b e^{−iκξ} on [lo, hi]:
// the δ(κ−κ') weight contributed by a plane-wave end.
double plane_wave_weight(const std::function<cplx(double)>& g, double kappa, double lo, double hi);

// ---- Pöschl–Teller -----------------------------------------------------------

// Γ(ν+1)Γ(ν)/(Γ(ν+λ+1)Γ(ν−λ)) with λ = k − ½
double poschl_teller_function(int k, double nu);
// positive zeros {½, 3/2, …, (2k−1)/2}
std::vector<double> poschl_teller_spectrum(int k);
// those with ν ≡ 3/2 (mod 2), the ones surviving the parity selection
std::vector<double> poschl_teller_parity_filtered(int k);

}  // namespace hr
