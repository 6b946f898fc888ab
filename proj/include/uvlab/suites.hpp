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

#pragma once

// Named numerical checks with measured values: the lemma property suite and
// the acceptance suite, plus the corpus loader and fixture builders they use.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "uvlab/state.hpp"
#include "uvlab/succinct_graph.hpp"

namespace uvlab {

struct CheckOutcome {
    bool passed = false;
    double measured = 0.0;
    std::string detail;
};

struct Check {
    std::string id;
    std::string name;
    double time_budget_seconds = 0.0;  // 0: unlimited
    std::function<CheckOutcome()> body;
};

struct CheckResult {
    std::string id;
    std::string name;
    bool passed = false;
    double measured = 0.0;
    std::string detail;
    double seconds = 0.0;
    double time_budget_seconds = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> results;

    std::size_t failures() const;
    bool all_passed() const {
        return failures() == 0;
    }
    nlohmann::ordered_json to_json() const;
};

/// A check fails if its body throws or it overruns its time budget.
SuiteReport run_checks(const std::string &suite, const std::vector<Check> &checks,
                       const std::function<void(const CheckResult &)> &on_result = {});

/// "PASS  <id>  <name>  measured=<v>  (<s>s)  <detail>"
std::string format_result_line(const CheckResult &r);

struct CorpusEntry {
    std::string name;  // file stem
    std::string path;
    int n = 0;
    bool colorable = false;
    std::optional<Coloring> coloring;
    SuccinctCircuit circuit;
};

/// Reads <dir>/manifest.json and every instance it lists.
std::vector<CorpusEntry> load_corpus(const std::string &dir);
SuccinctCircuit load_instance(const std::string &dir, const std::string &name);

namespace fixtures {

/// normalize(s + delta * g) for a unit-norm complex Gaussian direction g.
PureState perturb(const PureState &s, double delta, std::mt19937_64 &rng);

/// node (x) color proof with Pr[color measured uniform] = x_zero. The node
/// register carries sqrt(node_weights) (normalized), or |u_{2^n}> when empty.
PureState color_mixture_proof(int n, double x_zero, std::span<const double> node_weights = {});

/// Every valid 3-coloring of g (m <= 12).
std::vector<Coloring> all_valid_colorings(const ExplicitGraph &g);

}  // namespace fixtures

/// Smallest exact uniformity rejection over fixtures with |Z'| <= k/6 whose
/// Z' members have Pr[x = 0] <= 1/3, as pinned by the lemma suite.
inline constexpr double kZPrimeRejectionFloor = 0.54;

std::vector<Check> lemma_checks(const std::string &corpus_dir);
std::vector<Check> acceptance_checks(const std::string &corpus_dir);

}  // namespace uvlab
