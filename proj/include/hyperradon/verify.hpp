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

#include <optional>
#include <string>
#include <vector>

#include "hyperradon/settings.hpp"

namespace hr {

struct Check {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  bool gating = true;  // informational entries never fail a suite
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;
  bool passed() const;
};

struct VerifyOptions {
  Settings settings;
  std::optional<double> theta;  // extra extension angle swept by the spectral suite
};

const std::vector<std::string>& suite_names();  // geometry group specfun spectral radon
// "all" runs every suite in order. Unknown names throw Error(InvalidArgument).
std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyOptions& opt);
std::string report_json(const std::vector<SuiteReport>& reports);

}  // namespace hr
