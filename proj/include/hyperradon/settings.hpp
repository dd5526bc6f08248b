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

#include <map>
#include <string>
#include <vector>

namespace hr {

// Numerical knobs and verification tolerances. Every field is addressable by
// a dotted key so a key=value config file can override it.
struct Settings {
  double quad_rel_tol = 1e-12;
  double fd_step = 1e-4;
  int fd_richardson_levels = 1;
  double radon_sigma_cutoff = 12.0;
  double radon_grid_step = 0.01;
  int threads = 0;  // 0: hardware concurrency, capped by HYPERRADON_THREADS

  double tol_chart_roundtrip = 1e-12;
  double tol_arc_length = 1e-6;
  double tol_circle = 1e-10;
  double tol_decompose = 1e-10;
  double tol_group_metric = 1e-8;
  double tol_coset_metric = 1e-9;
  double tol_casimir = 1e-6;
  double tol_gamma = 1e-12;
  double tol_cross_norm = 1e-6;
  double tol_cross_norm_zero = 1e-8;
  double tol_bound_norm = 1e-6;
  double tol_scatter_bound = 1e-5;
  double tol_roundtrip = 1e-4;
  double tol_intertwine = 1e-3;
  double tol_closed_form = 1e-6;
  double tol_theta = 1e-2;
  double tol_antipodal = 1e-8;
  double tol_asymptotic = 1e-4;
  double tol_singular = 1e-2;
  double tol_root = 1e-8;

  static const std::vector<std::string>& keys();
  void set(const std::string& key, double value);  // throws Error(Config) on unknown key / bad value
  double get(const std::string& key) const;
  void load_file(const std::string& path);
  void load_text(const std::string& text, const std::string& origin = "<text>");
  int effective_threads() const;
};

}  // namespace hr
