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

#include "hyperradon/settings.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "hyperradon/common.hpp"

namespace hr {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::NonConvergence: return "non-convergence";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::Degenerate: return "degenerate";
    case ErrorCode::Underflow: return "underflow";
    case ErrorCode::Config: return "config";
    case ErrorCode::Io: return "io";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Series: return "series";
    case Method::IntegralQuadrature: return "integral-quadrature";
    case Method::Asymptotic: return "asymptotic";
    case Method::ClosedForm: return "closed-form";
  }
  return "unknown";
}

namespace {

struct Slot {
  const char* key;
  double Settings::*real;
  int Settings::*integer;
  bool tolerance;
};

const std::vector<Slot>& slots() {
  static const std::vector<Slot> s = {
      {"quad.rel_tol", &Settings::quad_rel_tol, nullptr, true},
      {"fd.step", &Settings::fd_step, nullptr, true},
      {"fd.richardson_levels", nullptr, &Settings::fd_richardson_levels, false},
      {"radon.sigma_cutoff", &Settings::radon_sigma_cutoff, nullptr, true},
      {"radon.grid_step", &Settings::radon_grid_step, nullptr, true},
      {"threads", nullptr, &Settings::threads, false},
      {"tol.chart_roundtrip", &Settings::tol_chart_roundtrip, nullptr, true},
      {"tol.arc_length", &Settings::tol_arc_length, nullptr, true},
      {"tol.circle", &Settings::tol_circle, nullptr, true},
      {"tol.decompose", &Settings::tol_decompose, nullptr, true},
      {"tol.group_metric", &Settings::tol_group_metric, nullptr, true},
      {"tol.coset_metric", &Settings::tol_coset_metric, nullptr, true},
      {"tol.casimir", &Settings::tol_casimir, nullptr, true},
      {"tol.gamma", &Settings::tol_gamma, nullptr, true},
      {"tol.cross_norm", &Settings::tol_cross_norm, nullptr, true},
      {"tol.cross_norm_zero", &Settings::tol_cross_norm_zero, nullptr, true},
      {"tol.bound_norm", &Settings::tol_bound_norm, nullptr, true},
      {"tol.scatter_bound", &Settings::tol_scatter_bound, nullptr, true},
      {"tol.roundtrip", &Settings::tol_roundtrip, nullptr, true},
      {"tol.intertwine", &Settings::tol_intertwine, nullptr, true},
      {"tol.closed_form", &Settings::tol_closed_form, nullptr, true},
      {"tol.theta", &Settings::tol_theta, nullptr, true},
      {"tol.antipodal", &Settings::tol_antipodal, nullptr, true},
      {"tol.asymptotic", &Settings::tol_asymptotic, nullptr, true},
      {"tol.singular", &Settings::tol_singular, nullptr, true},
      {"tol.root", &Settings::tol_root, nullptr, true},
  };
  return s;
}

const Slot* find_slot(const std::string& key) {
  for (const auto& s : slots())
    if (key == s.key) return &s;
  return nullptr;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

const std::vector<std::string>& Settings::keys() {
  static const std::vector<std::string> k = [] {
    std::vector<std::string> out;
    for (const auto& s : slots()) out.emplace_back(s.key);
    return out;
  }();
  return k;
}

void Settings::set(const std::string& key, double value) {
  const Slot* s = find_slot(key);
  if (!s) fail(ErrorCode::Config, "unknown configuration key '" + key + "'");
  if (!std::isfinite(value)) fail(ErrorCode::Config, "non-finite value for '" + key + "'");
  if (s->real) {
    if (s->tolerance && !(value > 0.0)) fail(ErrorCode::Config, "'" + key + "' must be positive");
    this->*(s->real) = value;
  } else {
    if (value < 0.0 || value != std::floor(value))
      fail(ErrorCode::Config, "'" + key + "' must be a non-negative integer");
    this->*(s->integer) = static_cast<int>(value);
  }
}

double Settings::get(const std::string& key) const {
  const Slot* s = find_slot(key);
  if (!s) fail(ErrorCode::Config, "unknown configuration key '" + key + "'");
  return s->real ? this->*(s->real) : static_cast<double>(this->*(s->integer));
}

void Settings::load_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::Config, origin + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    char* end = nullptr;
    const double v = std::strtod(val.c_str(), &end);
    if (val.empty() || end == val.c_str() || *end != '\0')
      fail(ErrorCode::Config, origin + ":" + std::to_string(lineno) + ": bad number '" + val + "'");
    try {
      set(key, v);
    } catch (const Error& e) {
      fail(ErrorCode::Config, origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void Settings::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::Config, "cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  load_text(ss.str(), path);
}

int Settings::effective_threads() const {
  int n = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("HYPERRADON_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

}  // namespace hr
