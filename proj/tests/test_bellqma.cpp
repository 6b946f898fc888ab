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


#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "uvlab/bellqma.hpp"
#include "uvlab/errors.hpp"
#include "uvlab/provers.hpp"
#include "uvlab/suites.hpp"

namespace uvlab {
namespace {

constexpr double kTol = 1e-12;
// Frozen from oracle::bell_consistency on K4 (n = 2), k = 4 copies of the {0,1,2,0} coloring state.
constexpr double kK4CheatConsistencyK4 = 0.5703125;

SuccinctCircuit corpus(const std::string &name) {
    return load_sgc(std::string(UVLAB_CORPUS_DIR) + "/" + name + ".sgc");
}

std::vector<PureState> honest(const std::string &name, std::size_t k) {
    return std::vector<PureState>(k, honest_proof(corpus(name), Coloring{{0, 1, 2}}));
}

BellOptions monte_carlo(std::uint64_t samples, std::uint64_t seed) {
    BellOptions o;
    o.mode = BellMode::MonteCarlo;
    o.samples = samples;
    o.seed = seed;
    return o;
}

TEST(ZThreshold, RoundsUp) {
    EXPECT_EQ(z_threshold(6), 1u);
    EXPECT_EQ(z_threshold(12), 2u);
    EXPECT_EQ(z_threshold(13), 3u);
    EXPECT_EQ(z_threshold(120), 20u);
}

TEST(Uniformity, HonestIsABinomialTail) {
    for (std::size_t k : {6u, 12u, 60u, 120u}) {
        const auto proofs = honest("k3_n2", k);
        const auto s = uniformity_statistics(proofs[0]);
        EXPECT_NEAR(s.x_one, 2.0 / 3.0, kTol);
        EXPECT_NEAR(s.x_zero_y_zero, 1.0 / 3.0, kTol);
        EXPECT_NEAR(s.x_zero_y_one, 0.0, kTol);
        const double want = 1.0 - oracle::binomial_lower_tail(k, 1.0 / 3.0, z_threshold(k));
        EXPECT_NEAR(uniformity_accept_exact(proofs), want, 1e-12) << k;
    }
}

TEST(Uniformity, TwelveHonestRegisters) {
    const double reject = std::pow(2.0 / 3.0, 12) + 12 * (1.0 / 3.0) * std::pow(2.0 / 3.0, 11);
    EXPECT_NEAR(1.0 - uniformity_accept_exact(honest("k3_n2", 12)), reject, kTol);
}

TEST(Uniformity, NeverUniformColorsAlwaysReject) {
    const std::vector<PureState> proofs(12, fixtures::color_mixture_proof(2, 0.0));
    EXPECT_NEAR(uniformity_accept_exact(proofs), 0.0, kTol);
}

TEST(Uniformity, DynamicProgramMatchesEnumeration) {
    for (std::size_t k = 1; k <= 8; ++k) {
        const auto proofs = random_product_proofs(proof_shape(2), k, 300 + k);
        EXPECT_NEAR(uniformity_accept_exact(proofs), oracle::bell_uniformity(proofs), 1e-12) << k;
    }
}

TEST(Uniformity, TieAtOneSixthAccepts) {
    // Two of twelve registers always land in Z and pass; the rest never land in Z.
    std::vector<PureState> proofs(10, fixtures::color_mixture_proof(2, 0.0));
    proofs.push_back(fixtures::color_mixture_proof(2, 1.0));
    proofs.push_back(fixtures::color_mixture_proof(2, 1.0));
    EXPECT_NEAR(uniformity_accept_exact(proofs), 1.0, kTol);
    const auto zp = z_prime_set(proofs);
    EXPECT_EQ(zp, (std::vector<std::size_t>{10, 11}));
}

TEST(Uniformity, HonestExpectedZIsOneThirdOfK) {
    const std::size_t k = 120;
    const auto proofs = honest("k3_n2", k);
    std::vector<RegisterStatistics> stats;
    for (const auto &p : proofs) stats.push_back(uniformity_statistics(p));
    const auto dist = z_distribution(stats);
    double mean = 0, total = 0;
    for (std::size_t z = 0; z < dist.size(); ++z) {
        mean += z * dist[z];
        total += dist[z];
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_NEAR(mean, k / 3.0, 1e-9);
}

TEST(ZPrime, Membership) {
    EXPECT_EQ(z_prime_set(honest("k3_n2", 5)).size(), 5u);
    const std::vector<std::size_t> digits{1, 2};
    const std::vector<PureState> basis(3, PureState::basis(proof_shape(2), digits));
    EXPECT_EQ(z_prime_set(basis).size(), 3u);
    const std::vector<PureState> orthogonal(3, fixtures::color_mixture_proof(2, 0.0));
    EXPECT_TRUE(z_prime_set(orthogonal).empty());
    const std::vector<PureState> edge{fixtures::color_mixture_proof(2, 1.0 / 12.0),
                                      fixtures::color_mixture_proof(2, 1.0 / 12.0 - 1e-6)};
    EXPECT_EQ(z_prime_set(edge), (std::vector<std::size_t>{0}));
}

TEST(Consistency, HonestIsExactlyOneInBothModes) {
    const auto c = corpus("k3_n2");
    const auto proofs = honest("k3_n2", 240);
    EXPECT_EQ(consistency_accept(c, proofs, {}).accept, 1.0);
    EXPECT_EQ(consistency_accept(c, proofs, monte_carlo(1000, 3)).accept, 1.0);
}

TEST(Consistency, TwoProofsMatchTheQma2Grid) {
    const auto c = corpus("c5_n3");
    const EdgeTable edges(c);
    const auto proofs = random_product_proofs(proof_shape(3), 2, 77);
    const auto p = marginal_distribution(proofs[0], std::vector<std::size_t>{0, 1});
    const auto q = marginal_distribution(proofs[1], std::vector<std::size_t>{0, 1});
    EXPECT_NEAR(consistency_accept(c, proofs, {}).accept, consistency_grid(edges, p, q).accept(), 1e-12);
}

TEST(Consistency, K4CheatWithFourCopies) {
    const auto c = corpus("k4_n2");
    const std::vector<PureState> proofs(4, near_coloring_proof(c, Coloring{{0, 1, 2, 0}}));
    EXPECT_NEAR(oracle::bell_consistency(expand(c), 2, proofs), kK4CheatConsistencyK4, kTol);
    EXPECT_NEAR(consistency_accept(c, proofs, {}).accept, kK4CheatConsistencyK4, kTol);
}

TEST(Consistency, RandomProofsMatchOracle) {
    for (const char *name : {"k3_n2", "k4_n2"}) {
        const auto c = corpus(name);
        const auto proofs = random_product_proofs(proof_shape(2), 3, 5);
        EXPECT_NEAR(consistency_accept(c, proofs, {}).accept, oracle::bell_consistency(expand(c), 2, proofs), 1e-12);
    }
}

TEST(Consistency, MonteCarloIsSeededAndWithinHalfwidth) {
    const auto c = corpus("k4_n2");
    const std::vector<PureState> proofs(4, near_coloring_proof(c, Coloring{{0, 1, 2, 0}}));
    const auto a = consistency_accept(c, proofs, monte_carlo(200000, 9));
    const auto b = consistency_accept(c, proofs, monte_carlo(200000, 9));
    EXPECT_EQ(a.accept, b.accept);
    EXPECT_EQ(a.samples, 200000u);
    EXPECT_NEAR(a.halfwidth, hoeffding_halfwidth(200000), kTol);
    EXPECT_NEAR(a.accept, kK4CheatConsistencyK4, a.halfwidth);
}

TEST(Consistency, BudgetAndSampleErrors) {
    const auto c = corpus("k3_n2");
    const auto proofs = random_product_proofs(proof_shape(2), 8, 1);
    EXPECT_GT(joint_outcome_count(2, 8), kDefaultEnumerationBudget);
    EXPECT_THROW(consistency_accept(c, proofs, {}), CapacityError);
    EXPECT_THROW(consistency_accept(c, proofs, monte_carlo(0, 1)), InvalidInput);
    BellOptions small;
    small.budget = 100;
    const auto few = random_product_proofs(proof_shape(2), 2, 1);
    EXPECT_THROW(consistency_accept(c, few, small), CapacityError);
}

TEST(BellAcceptance, HonestCompleteness) {
    for (std::size_t k : {60u, 120u, 240u}) {
        const auto r = bell_acceptance(corpus("k3_n2"), honest("k3_n2", k), {});
        EXPECT_GE(r.p_total, bell_completeness_floor(k)) << k;
        EXPECT_NEAR(r.p_total, (r.p_consistency + r.p_uniformity) / 2.0, kTol);
    }
}

TEST(BellAcceptance, ChernoffTailForHonestProofs) {
    for (std::size_t k = 12; k <= 240; k += 12) {
        const auto r = bell_acceptance(corpus("k3_n2"), honest("k3_n2", k), {});
        EXPECT_LE(r.z_tail, std::exp(-static_cast<double>(k) / 48.0)) << k;
    }
}

TEST(BellAcceptance, BasisProofsOnANonEdgePair) {
    const auto c = corpus("empty_n1");
    const std::vector<std::size_t> d0{0, 0}, d1{1, 0};
    std::vector<PureState> proofs;
    for (int i = 0; i < 6; ++i) proofs.push_back(PureState::basis(proof_shape(1), i % 2 ? d1 : d0));
    const auto r = bell_acceptance(c, proofs, {});
    EXPECT_EQ(r.p_consistency, 1.0);
    EXPECT_NEAR(r.p_uniformity, oracle::bell_uniformity(proofs), 1e-12);
}

TEST(BellAcceptance, MonteCarloReportsItsInterval) {
    const auto c = corpus("k4_n2");
    const std::vector<PureState> proofs(4, near_coloring_proof(c, Coloring{{0, 1, 2, 0}}));
    const auto r = bell_acceptance(c, proofs, monte_carlo(50000, 4));
    EXPECT_EQ(r.mode, BellMode::MonteCarlo);
    EXPECT_EQ(r.seed, 4u);
    EXPECT_NEAR(r.ci_halfwidth, hoeffding_halfwidth(50000) / 2.0, kTol);
    EXPECT_THROW(bell_acceptance(c, std::vector<PureState>(1, proofs[0]), {}), InvalidInput);
}

TEST(BellAcceptance, ZPrimeBoundaryFixtureIsNeverRejected) {
    // Members of Z' that always land in Z keep |Z| = k/6 and pass every time.
    const std::size_t k = 12;
    std::vector<PureState> proofs(k - 2, fixtures::color_mixture_proof(2, 0.0));
    proofs.push_back(fixtures::color_mixture_proof(2, 1.0));
    proofs.push_back(fixtures::color_mixture_proof(2, 1.0));
    ASSERT_EQ(z_prime_set(proofs).size(), k / 6);
    EXPECT_NEAR(1.0 - uniformity_accept_exact(proofs), 0.0, kTol);
}

TEST(Floors, Values) {
    EXPECT_DOUBLE_EQ(bell_completeness_floor(120), 1.0 - std::exp2(-3.0));
    EXPECT_DOUBLE_EQ(bell_soundness_bound(2), 1.0 / (12000.0 * 16));
}

}  // namespace
}  // namespace uvlab
