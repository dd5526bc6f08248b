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

#include <doctest.h>

#include <cstdlib>

#include "hyperradon/common.hpp"
#include "hyperradon/parallel.hpp"
#include "hyperradon/settings.hpp"

using namespace hr;

namespace {

ErrorCode code_of(void (*f)()) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_SUITE("settings") {
  TEST_CASE("defaults and key round trip") {
    Settings s;
    CHECK(s.get("tol.closed_form") == 1e-6);
    for (const auto& k : Settings::keys()) CHECK_NOTHROW(s.get(k));
    s.set("tol.theta", 0.02);
    CHECK(s.tol_theta == 0.02);
  }

  TEST_CASE("text configuration") {
    Settings s;
    s.load_text("# comment\nquad.rel_tol = 1e-10   # trailing\n\nthreads=3\n");
    CHECK(s.quad_rel_tol == 1e-10);
    CHECK(s.threads == 3);
  }

  TEST_CASE("bad configuration is a config error") {
    CHECK(code_of([] { Settings().load_text("tol.nonsense = 3"); }) == ErrorCode::Config);
    CHECK(code_of([] { Settings().load_text("quad.rel_tol"); }) == ErrorCode::Config);
    CHECK(code_of([] { Settings().load_text("quad.rel_tol = fast"); }) == ErrorCode::Config);
    CHECK(code_of([] { Settings().set("tol.root", -1.0); }) == ErrorCode::Config);
    CHECK(code_of([] { Settings().set("threads", 1.5); }) == ErrorCode::Config);
    CHECK(code_of([] { Settings().load_file("/nonexistent/hyperradon.conf"); }) == ErrorCode::Config);
  }

  TEST_CASE("thread cap from the environment") {
    Settings s;
    s.threads = 8;
    setenv("HYPERRADON_THREADS", "2", 1);
    CHECK(s.effective_threads() == 2);
    unsetenv("HYPERRADON_THREADS");
    CHECK(s.effective_threads() == 8);
  }

  TEST_CASE("parallel_for visits every index once") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
  }

  TEST_CASE("error code names") {
    CHECK(std::string(error_code_name(ErrorCode::NonConvergence)) == "non-convergence");
    CHECK(std::string(method_name(Method::Asymptotic)) == "asymptotic");
  }
}
