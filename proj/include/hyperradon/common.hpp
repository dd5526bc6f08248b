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

#include <complex>
#include <stdexcept>
#include <string>

namespace hr {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

enum class ErrorCode {
  InvalidArgument = 1,
  Domain,
  Pole,
  NonConvergence,
  OutOfRange,
  Degenerate,
  Underflow,
  Config,
  Io,
  Internal
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

enum class Method { Series, IntegralQuadrature, Asymptotic, ClosedForm };

const char* method_name(Method m);

struct EvalResult {
  cplx value{0.0, 0.0};
  double abs_error = 0.0;
  Method method = Method::ClosedForm;

  double real() const { return value.real(); }
};

}  // namespace hr
