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

#include "hyperradon/common.hpp"

namespace hr {

// Gamma function of a complex argument (Lanczos, g = 7, with reflection).
EvalResult gamma_complex(cplx z);
// log Γ(z), continuous in the right half-plane; exp() of it is Γ everywhere off the poles.
cplx lgamma_complex(cplx z);
// 1/Γ(z); exactly zero at the poles.
cplx rgamma(cplx z);

enum class KMethod { Auto, Integral, Series, Basset };

// K_{iκ}(y). Auto uses the ascending series for y ≤ max(2, κ) and the
// contour-shifted cosh integral otherwise.
EvalResult bessel_K_imag(double kappa, double y, KMethod method = KMethod::Auto);

enum class JMethod { Auto, Series, Integral, Asymptotic };

// J_ν(x) for complex order. Auto: series up to x = 12, Hankel expansion when its
// smallest term is below 1e-16, Schläfli integral in between.
EvalResult bessel_J(cplx nu, double x, JMethod method = JMethod::Auto);

struct FGZ {
  EvalResult F, G, Z;
};

// F_ν = ½ sec(νπ/2)(J_ν + J_{-ν}), G_ν = ½ csc(νπ/2)(J_ν − J_{-ν}),
// Z_ν = J_ν + (tan(νπ/2)+1)/(tan(νπ/2)−1) J_{-ν}.
FGZ fgz_functions(cplx nu, double x);
// c(ν) with (−F_ν + G_ν)/√2 = c(ν) Z_ν.
cplx z_coefficient(cplx nu);

enum class ConicalMethod { Auto, Integral, Series, Asymptotic };

// P^m_{iκ−½}(x), x ≥ 1, real for real κ. Integral representation below x = 4,
// 1/x² hypergeometric expansion above. Asymptotic is the two-term leading form.
EvalResult conical_P(int m, double kappa, double x, ConicalMethod method = ConicalMethod::Auto);

// Ferrers values at the origin: P^k_{iν−½}(0) and its z-derivative.
double legendre_at_zero(int k, double nu);
double legendre_deriv_at_zero(int k, double nu);

enum class EOMethod { Auto, Series, Connection };

struct EOResult {
  EvalResult E, O;
  bool degraded = false;  // series and connection disagree in the matching window
  double window_gap = 0.0;
};

// E + iO = P^k_{iν−½}(i sinh ξ).
EOResult modified_conical_EO(int k, double nu, double xi, EOMethod method = EOMethod::Auto);

// Leading large-ξ forms of E and O as printed alongside their orthogonality relations.
EOResult eo_printed_asymptotic(int k, double nu, double xi);

}  // namespace hr
