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


#include <chrono>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include <gtest/gtest.h>

#include "uvlab/bellqma.hpp"
#include "uvlab/errors.hpp"
#include "uvlab/provers.hpp"
#include "uvlab/suites.hpp"

namespace uvlab {
namespace {

const std::string kCorpus = UVLAB_CORPUS_DIR;

std::vector<Check> fixture_checks() {
    return {
        {"t.pass", "passing check", 0, [] { return CheckOutcome{true, 1.0, "ok"}; }},
        {"t.fail", "seeded failing check", 0, [] { return CheckOutcome{false, 0.25, "bound violated"}; }},
        {"t.throw", "throwing check", 0, []() -> CheckOutcome { throw std::runtime_error("boom"); }},
        {"t.slow", "slow check", 0.001,
         [] {
             std::this_thread::sleep_for(std::chrono::milliseconds(20));
             return CheckOutcome{true, 0.0, ""};
         }},
    };
}

TEST(RunChecks, ReportsFailuresByName) {
    std::vector<std::string> seen;
    const auto rep = run_checks("fixture", fixture_checks(), [&](const CheckResult &r) { seen.push_back(r.id); });
    EXPECT_EQ(seen, (std::vector<std::string>{"t.pass", "t.fail", "t.throw", "t.slow"}));
    EXPECT_EQ(rep.failures(), 3u);
    EXPECT_FALSE(rep.all_passed());
    EXPECT_TRUE(rep.results[0].passed);
    const auto line = format_result_line(rep.results[1]);
    EXPECT_EQ(line.rfind("FAIL", 0), 0u);
    EXPECT_NE(line.find("seeded failing check"), std::string::npos);
    EXPECT_NE(line.find("bound violated"), std::string::npos);
    EXPECT_NE(rep.results[2].detail.find("boom"), std::string::npos);
    EXPECT_NE(rep.results[3].detail.find("time budget"), std::string::npos);
}

TEST(RunChecks, JsonSchemaIsStable) {
    const auto j = run_checks("fixture", fixture_checks()).to_json();
    std::vector<std::string> keys;
    for (const auto &[k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"suite", "total", "passed", "failed", "checks"}));
    EXPECT_EQ(j["total"], 4);
    EXPECT_EQ(j["failed"], 3);
    std::vector<std::string> check_keys;
    for (const auto &[k, v] : j["checks"][0].items()) check_keys.push_back(k);
    EXPECT_EQ(check_keys, (std::vector<std::string>{"id", "name", "passed", "measured", "detail", "seconds",
                                                    "time_budget_seconds"}));
}

TEST(Corpus, ManifestAgreesWithTheColoringOracle) {
    const auto entries = load_corpus(kCorpus);
    std::set<std::string> names;
    for (const auto &e : entries) {
        names.insert(e.name);
        const auto g = expand(e.circuit);
        EXPECT_EQ(e.circuit.n(), e.n) << e.name;
        EXPECT_EQ(brute_force_3color(g).has_value(), e.colorable) << e.name;
        if (e.coloring) EXPECT_TRUE(monochromatic_edges(g, *e.coloring).empty()) << e.name;
    }
    for (const char *need : {"k3_n2", "k4_n2", "c5_n3", "c7_n3", "petersen9_n4"}) EXPECT_TRUE(names.count(need)) << need;
    EXPECT_THROW(load_corpus("/nonexistent"), InvalidInput);
}

TEST(Corpus, AcceptanceSuiteHasElevenCriteria) {
    const auto checks = acceptance_checks(kCorpus);
    ASSERT_EQ(checks.size(), 11u);
    for (std::size_t i = 0; i < checks.size(); ++i) {
        EXPECT_EQ(checks[i].id, "AC" + std::to_string(i + 1));
        EXPECT_GT(checks[i].time_budget_seconds, 0.0);
    }
}

TEST(Fixtures, ColorMixtureHitsTheRequestedProbability) {
    for (const double x : {0.0, 1.0 / 12.0, 0.3, 1.0}) {
        const auto s = uniformity_statistics(fixtures::color_mixture_proof(3, x));
        EXPECT_NEAR(s.x_zero(), x, 1e-12) << x;
        EXPECT_NEAR(s.x_zero_y_one, 0.0, 1e-12) << x;
    }
    const std::vector<double> weights{1, 0, 0, 0};
    const auto skewed = uniformity_statistics(fixtures::color_mixture_proof(2, 1.0, weights));
    EXPECT_NEAR(skewed.x_zero_y_one, 0.75, 1e-12);
}

TEST(Fixtures, PerturbStaysNormalizedAndClose) {
    std::mt19937_64 rng(1);
    const auto s = honest_proof(load_instance(kCorpus, "k3_n2"), Coloring{{0, 1, 2}});
    const auto p = fixtures::perturb(s, 1e-3, rng);
    EXPECT_NEAR(p.squared_norm(), 1.0, 1e-12);
    EXPECT_LT(pure_trace_distance(s, p), 2e-3);
}

TEST(Fixtures, AllValidColoringsOfATriangle) {
    EXPECT_EQ(fixtures::all_valid_colorings(ExplicitGraph(3, {{0, 1}, {0, 2}, {1, 2}})).size(), 6u);
    EXPECT_TRUE(fixtures::all_valid_colorings(expand(load_instance(kCorpus, "k4_n2"))).empty());
}

}  // namespace
}  // namespace uvlab
