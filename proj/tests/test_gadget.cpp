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
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "uvlab/errors.hpp"
#include "uvlab/experiment.hpp"
#include "uvlab/gadget.hpp"

namespace uvlab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-12;

PureState qubit(Amplitude a0, Amplitude a1) {
    return PureState::normalized(RegisterShape::qubits(1), {a0, a1});
}

double fidelity(const PureState &a, const PureState &b) {
    return std::norm(inner_product(a, b));
}

void expect_in_range(const ZHZHZ &d) {
    for (const double a : {d.theta, d.alpha, d.beta, d.gamma}) {
        EXPECT_GE(a, 0.0);
        EXPECT_LT(a, 2 * kPi);
    }
}

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    return x;
}

TEST(Decompose, IdentityIsAllZero) {
    const auto d = zhzhz_decompose(Eigen::Matrix2cd::Identity());
    EXPECT_NEAR(d.theta, 0.0, kTol);
    EXPECT_NEAR(d.alpha, 0.0, kTol);
    EXPECT_NEAR(d.beta, 0.0, kTol);
    EXPECT_NEAR(d.gamma, 0.0, kTol);
    EXPECT_LT(operator_norm(zhzhz_matrix(d) - Eigen::Matrix2cd::Identity()), 1e-9);
}

TEST(Decompose, HadamardReconstructs) {
    const auto d = zhzhz_decompose(hadamard_matrix());
    expect_in_range(d);
    EXPECT_LT(operator_norm(zhzhz_matrix(d) - hadamard_matrix()), 1e-9);
}

TEST(Decompose, DiagonalConventionPutsEverythingInAlpha) {
    for (const double w : {0.3, 2.0, 5.5}) {
        const auto d = zhzhz_decompose(rz_matrix(w));
        EXPECT_NEAR(d.beta, 0.0, kTol);
        EXPECT_NEAR(d.gamma, 0.0, kTol);
        EXPECT_NEAR(d.alpha, w, kTol);
        EXPECT_LT(operator_norm(zhzhz_matrix(d) - rz_matrix(w)), 1e-9);
    }
}

TEST(Decompose, AntiDiagonalConventionUsesBetaPi) {
    const auto d = zhzhz_decompose(pauli_x());
    EXPECT_NEAR(d.beta, kPi, kTol);
    EXPECT_NEAR(d.gamma, 0.0, kTol);
    EXPECT_NEAR(d.alpha, 0.0, kTol);
    EXPECT_LT(operator_norm(zhzhz_matrix(d) - pauli_x()), 1e-9);
}

TEST(Decompose, HaarRandomUnitariesReconstruct) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        const auto u = haar_unitary(rng);
        const auto d = zhzhz_decompose(u);
        expect_in_range(d);
        EXPECT_LT(operator_norm(zhzhz_matrix(d) - u), 1e-9) << i;
    }
}

TEST(Decompose, RejectsNonUnitary) {
    Eigen::Matrix2cd m;
    m << 1, 1, 0, 1;
    EXPECT_THROW(zhzhz_decompose(m), InvalidInput);
}

TEST(MagicState, Amplitudes) {
    const auto zero = magic_state(0);
    EXPECT_NEAR(fidelity(zero, apply_gate(qubit(1, 0), Gate::h(), {0})), 1.0, kTol);
    const auto pi = magic_state(kPi);
    EXPECT_NEAR(std::abs(pi[1] + std::sqrt(0.5)), 0.0, kTol);
    EXPECT_NEAR(magic_state(1.1).squared_norm(), 1.0, kTol);
}

TEST(MagicGadget, BranchesAreEven) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> angle(0, 2 * kPi);
    for (int i = 0; i < 50; ++i) {
        const auto target = random_state(RegisterShape::qubits(1), rng);
        const double w = angle(rng);
        const auto b = magic_gadget(target, w);
        EXPECT_NEAR(b[0].probability, 0.5, kTol);
        EXPECT_NEAR(b[1].probability, 0.5, kTol);
        ASSERT_TRUE(b[0].defined());
        EXPECT_GE(fidelity(*b[0].post_state, apply_gate(target, Gate::rz(w), {0})), 1 - 1e-9);
    }
}

TEST(MagicGadget, KnownTargets) {
    const auto zero = magic_gadget(qubit(1, 0), 0.8);
    EXPECT_NEAR(fidelity(*zero[0].post_state, qubit(1, 0)), 1.0, kTol);
    const auto plus = apply_gate(qubit(1, 0), Gate::h(), {0});
    const auto b = magic_gadget(plus, kPi / 2);
    EXPECT_NEAR(fidelity(*b[0].post_state, apply_gate(plus, Gate::rz(kPi / 2), {0})), 1.0, kTol);
    EXPECT_THROW(magic_gadget(uniform_state(3), 0.1), ShapeError);
}

TEST(Program, FullUsesThreeStatesPerUnitary) {
    const auto d = zhzhz_decompose(rz_matrix(0.4));
    const auto full = GadgetProgram::full({d, d});
    EXPECT_EQ(full.t(), 6u);
    const auto compact = GadgetProgram::compact({d, d});
    EXPECT_EQ(compact.t(), 2u);
    EXPECT_EQ(GadgetProgram::compact({zhzhz_decompose(Eigen::Matrix2cd::Identity())}).t(), 0u);
}

TEST(Program, JsonShape) {
    const auto p = GadgetProgram::full({zhzhz_decompose(hadamard_matrix())});
    const auto j = gadget_program_json(p);
    ASSERT_TRUE(j.contains("unitaries"));
    ASSERT_EQ(j["unitaries"].size(), 1u);
    for (const char *key : {"theta", "alpha", "beta", "gamma"}) EXPECT_TRUE(j["unitaries"][0].contains(key)) << key;
    EXPECT_EQ(j["t"], 3);
}

TEST(Cascade, PreparesTheDecomposedStates) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
        const auto target = random_state(RegisterShape::qubits(1), rng);
        const auto program = GadgetProgram::full({zhzhz_decompose(preparing_unitary(target))});
        const auto r = run_cascade(program);
        EXPECT_NEAR(r.success_probability, 0.125, kTol);
        ASSERT_EQ(r.prepared.size(), 1u);
        EXPECT_GE(fidelity(r.prepared[0], target), 1 - 1e-9);
    }
}

TEST(Verifier, ExactValues) {
    const auto h = zhzhz_decompose(hadamard_matrix());
    EXPECT_NEAR(single_qubit_proof_verifier(0.37, GadgetProgram{}), 0.37, kTol);
    EXPECT_NEAR(single_qubit_proof_verifier(0.0, GadgetProgram::full({h})), 7.0 / 8.0, kTol);
    EXPECT_NEAR(single_qubit_proof_verifier(1.0, GadgetProgram::full({h, h})), 1.0, kTol);
    EXPECT_THROW(single_qubit_proof_verifier(1.5, GadgetProgram{}), InvalidInput);
}

TEST(Verifier, SampledConverges) {
    const auto program = GadgetProgram::full({zhzhz_decompose(hadamard_matrix())});
    const GadgetOptions opts{GadgetMode::Sampled, 100000, 6};
    const double want = 1.0 - 0.7 / 8.0;
    const double sigma = std::sqrt(want * (1 - want) / 100000.0);
    EXPECT_NEAR(single_qubit_proof_verifier(0.3, program, opts), want, 4 * sigma);
    EXPECT_EQ(single_qubit_proof_verifier(0.3, program, opts), single_qubit_proof_verifier(0.3, program, opts));
    EXPECT_THROW(single_qubit_proof_verifier(0.3, program, GadgetOptions{GadgetMode::Sampled, 0, 1}), InvalidInput);
}

TEST(Verifier, GapScalesByTwoToMinusT) {
    const auto h = zhzhz_decompose(hadamard_matrix());
    const auto rz = zhzhz_decompose(rz_matrix(0.9));
    const std::vector<std::vector<ZHZHZ>> by_t{{rz}, {rz, rz}, {h}, {h, rz}, {h, rz, rz}, {h, h}};
    for (std::size_t t = 1; t <= 6; ++t) {
        const auto program = GadgetProgram::compact(by_t[t - 1]);
        ASSERT_EQ(program.t(), t);
        const double c = single_qubit_proof_verifier(0.9, program), s = single_qubit_proof_verifier(0.4, program);
        EXPECT_NEAR((c - s) / 0.5, std::exp2(-static_cast<double>(t)), kTol) << t;
    }
}

TEST(EndToEnd, HalfSoundnessWithThreeGadgets) {
    std::mt19937_64 rng(12);
    const std::vector<PureState> targets{random_state(RegisterShape::qubits(1), rng)};
    const auto r = end_to_end_reduction(targets, 0.5, false);
    EXPECT_EQ(r.t, 3u);
    EXPECT_NEAR(r.inner_completeness, 1.0, 1e-9);
    EXPECT_NEAR(r.transformed_completeness, 1.0, 1e-9);
    EXPECT_NEAR(r.transformed_gap(), 1.0 / 16.0, 1e-9);
    EXPECT_NEAR(r.transformed_gap() / r.inner_gap(), 0.125, 1e-9);
}

}  // namespace
}  // namespace uvlab
