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

#include <array>
#include <cmath>

#include "hyperradon/specfun.hpp"

namespace hr {

namespace {

constexpr double kG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
const double kLogSqrt2Pi = 0.5 * std::log(2.0 * kPi);

bool is_pole(cplx z) {
  if (z.imag() != 0.0 || z.real() > 0.5) return false;
  return std::abs(z.real() - std::round(z.real())) < 1e-14 * std::max(1.0, std::abs(z.real()));
}

cplx lanczos_sum(cplx zm1) {
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (zm1 + double(i));
  return x;
}

// log Γ for Re z ≥ ½.
cplx lgamma_right(cplx z) {
  const cplx zm1 = z - 1.0;
  const cplx t = zm1 + kG + 0.5;
  return kLogSqrt2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(zm1));
}

cplx gamma_right(cplx z) {
  const cplx zm1 = z - 1.0;
  const cplx t = zm1 + kG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, zm1 + 0.5) * std::exp(-t) * lanczos_sum(zm1);
}

// log sin(πz) without overflow for large |Im z|.
cplx log_sin_pi(cplx z) {
  if (std::abs(z.imag()) < 20.0) return std::log(std::sin(kPi * z));
  const cplx i(0.0, 1.0);
  if (z.imag() > 0) return -i * kPi * z - std::log(2.0 * i) + std::log(1.0 - std::exp(2.0 * i * kPi * z));
  return i * kPi * z - std::log(-2.0 * i) + std::log(1.0 - std::exp(-2.0 * i * kPi * z));
}

}  // namespace

cplx lgamma_complex(cplx z) {
  if (is_pole(z)) fail(ErrorCode::Pole, "Gamma pole at nonpositive integer");
  if (z.real() >= 0.5) return lgamma_right(z);
  return std::log(kPi) - log_sin_pi(z) - lgamma_right(1.0 - z);
}

EvalResult gamma_complex(cplx z) {
  if (is_pole(z)) fail(ErrorCode::Pole, "Gamma pole at nonpositive integer");
  EvalResult r;
  r.method = Method::Series;
  if (std::abs(z) < 20.0) {
    r.value = z.real() >= 0.5 ? gamma_right(z) : kPi / (std::sin(kPi * z) * gamma_right(1.0 - z));
  } else {
    r.value = std::exp(lgamma_complex(z));
  }
  r.abs_error = 4e-16 * std::abs(r.value) * std::max(1.0, std::abs(z));
  return r;
}

cplx rgamma(cplx z) {
  if (is_pole(z)) return 0.0;
  if (std::abs(z) < 20.0) {
    if (z.real() >= 0.5) return 1.0 / gamma_right(z);
    return std::sin(kPi * z) * gamma_right(1.0 - z) / kPi;
  }
  return std::exp(-lgamma_complex(z));
}

}  // namespace hr
