// Copyright 2026 The uvlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <iostream>

#include "uvlab/suites.hpp"

int main() {
    const auto report = uvlab::run_checks("acceptance", uvlab::acceptance_checks(UVLAB_CORPUS_DIR),
                                          [](const uvlab::CheckResult &r) {
                                              std::cout << uvlab::format_result_line(r) << std::endl;
                                          });
    std::cout << report.results.size() - report.failures() << "/" << report.results.size()
              << " acceptance criteria passed\n";
    return report.all_passed() ? 0 : 1;
}
