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

// Acceptance suite: runs every golden scenario and prints one PASS/FAIL line
// per check. Optional arguments restrict the run to the given check numbers.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

#include "gsrp/scenarios.hpp"

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  // Scenario order follows check numbers 1..11.
  const auto names = gsrp::golden_names();
  bool all_ok = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const int check = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(check)) continue;
    const auto r = gsrp::run_golden(names[i]);
    std::string detail;
    for (const auto& a : r.assertions) {
      char buf[256];
      std::snprintf(buf, sizeof buf, " %s%s=%.4g(limit %.4g)", a.passed ? "" : "!", a.name.c_str(), a.value, a.limit);
      detail += buf;
    }
    std::printf("%s check %2d %-24s %7.2fs%s\n", r.passed() ? "PASS" : "FAIL", check, r.name.c_str(), r.seconds,
                detail.c_str());
    for (const auto& a : r.assertions)
      if (!a.detail.empty() && !a.passed) std::printf("      %s: %s\n", a.name.c_str(), a.detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && r.passed();
  }
  return all_ok ? 0 : 1;
}
