// Copyright 2026 The hamlab Authors
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

// Acceptance run: one PASS/FAIL line per criterion. A criterion passes when
// every suite it covers has no violation and no indeterminate check, its
// pinned minimum population is reached, and it finishes within its time
// limit. Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "hamlab/suites.hpp"

namespace {

using namespace hamlab;

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
  double minutes;      // time limit per suite
  long min_checks;     // population floor, guards against silently empty sweeps
};

const std::vector<Criterion> kCriteria{
    {1, "dominating closed trail <=> hamiltonian line graph", {"dct"}, 10, 260},
    {2, "internally dominating trail <=> hamilton path", {"idt"}, 15, 9000},
    {3, "2-connected claw-free, domination <= 2: hamiltonian", {"dom2"}, 10, 700},
    {4, "3-connected claw-free, domination <= 3: hamiltonian / hamilton-connected", {"dom3-ham", "dom3-hc"}, 15, 3000},
    {5, "decorated Petersen graph is sharp", {"petersen-sharp"}, 5, 6},
    {6, "pipeline soundness", {"pipeline-five", "pipeline-four", "pipeline-hyper"}, 10, 300000},
    {7, "core uniqueness and 3-edge-connectivity", {"core-unique"}, 10, 30000},
    {8, "closed trail or marked Petersen contraction", {"dichotomy"}, 20, 40000},
    {9, "closure properties", {"closure"}, 10, 1500},
    {10, "sharpness of the claw-free hypothesis", {"witnesses"}, 2, 21},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.number) == only.end()) continue;
    long cases = 0, checks = 0, violations = 0, indeterminate = 0;
    double millis = 0;
    bool in_time = true;
    std::string first_failure;
    for (const std::string& s : c.suites) {
      SuiteConfig cfg;
      cfg.suite = s;
      const SuiteReport r = run_suite(cfg);
      cases += r.cases;
      checks += r.checks;
      violations += r.violations;
      indeterminate += r.indeterminate;
      millis += r.millis;
      in_time = in_time && r.millis <= c.minutes * 60'000;
      if (first_failure.empty() && !r.failures.empty())
        first_failure = s + ": " + r.failures.front().instance + ": " + r.failures.front().detail;
    }
    const bool ok = violations == 0 && indeterminate == 0 && checks >= c.min_checks && in_time;
    if (!ok) ++failed;
    std::printf("criterion %2d %s: %s (%ld cases, %ld checks, %ld violations, %ld indeterminate, %.1f s, limit %.0f s per suite)\n",
                c.number, c.title.c_str(), ok ? "PASS" : "FAIL", cases, checks, violations, indeterminate,
                millis / 1000, c.minutes * 60);
    if (!first_failure.empty()) std::printf("    first failure: %s\n", first_failure.c_str());
    if (checks < c.min_checks) std::printf("    population below the floor of %ld checks\n", c.min_checks);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
