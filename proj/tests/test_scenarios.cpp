// Copyright 2026 The GSRP Authors
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

#include "gsrp/scenarios.hpp"

using namespace gsrp;

TEST_SUITE("scenarios") {
  TEST_CASE("registry") {
    const auto names = golden_names();
    CHECK(names.size() == 11);
    CHECK(names.front() == "nearfield_failure");
    CHECK_THROWS_AS(run_golden("fig42"), ConfigError);
  }

  TEST_CASE("cheap scenarios pass and are tagged") {
    std::vector<GoldenResult> results;
    for (const char* n : {"mpcnr_at_source", "regularization_limit", "max_response_inequality"}) {
      results.push_back(run_golden(n));
      CHECK(results.back().passed());
      for (const auto& a : results.back().assertions) CHECK(a.check > 0);
    }
    const auto csv = golden_summary_csv(results);
    CHECK(csv.rfind("scenario,check,assertion,passed,value,limit\n", 0) == 0);
  }
}
