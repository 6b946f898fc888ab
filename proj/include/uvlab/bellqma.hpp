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

// k-proof verifier restricted to independent, non-adaptive measurements of
// each proof followed by classical post-processing.
//
// Consistency: every proof is measured in the computational basis and every
// pair (i < j) is checked for a vertex with two colors or an edge with equal
// colors. Uniformity: each color register is measured with {P0, P1}
// (outcome x_i), then each node register (outcome y_i); with Z = {i : x_i = 0}
// the test rejects when |Z| < k/6 or some i in Z has y_i = 1.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "uvlab/qma2.hpp"
#include "uvlab/state.hpp"
#include "uvlab/succinct_graph.hpp"

namespace uvlab {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;
/// Confidence level of Monte-Carlo half-widths (Hoeffding, two-sided).
inline constexpr double kMonteCarloConfidence = 0.99;
/// Monte-Carlo samples are split into this many independently seeded chunks;
/// chunk j uses seed mix_seed(seed + j).
inline constexpr std::size_t kMonteCarloChunks = 8;

/// Per-proof outcome probabilities of the uniformity measurements.
struct RegisterStatistics {
    double x_one = 0.0;            // Pr[x = 1]
    double x_zero_y_zero = 0.0;    // Pr[x = 0 and y = 0]
    double x_zero_y_one = 0.0;     // Pr[x = 0 and y = 1]
    double x_zero() const {
        return x_zero_y_zero + x_zero_y_one;
    }
};

RegisterStatistics uniformity_statistics(const PureState &proof);

/// Smallest |Z| that passes: ceil(k/6).
std::size_t z_threshold(std::size_t k);

/// Exact distribution of |Z| (Poisson-binomial over Pr[x_i = 0]).
std::vector<double> z_distribution(std::span<const RegisterStatistics> stats);

/// Exact Uniformity-test acceptance, O(k^2).
double uniformity_accept_exact(std::span<const RegisterStatistics> stats);
double uniformity_accept_exact(std::span<const PureState> proofs);

/// Indices with Pr[x_i = 0] >= 1/12.
std::vector<std::size_t> z_prime_set(std::span<const PureState> proofs);

enum class BellMode { Exact, MonteCarlo };

struct BellOptions {
    BellMode mode = BellMode::Exact;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultEnumerationBudget;
};

struct ConsistencyEstimate {
    double accept = 0.0;
    /// Zero in exact mode.
    double halfwidth = 0.0;
    std::uint64_t samples = 0;
};

/// Number of joint outcomes (3 * 2^n)^k, saturating at UINT64_MAX.
std::uint64_t joint_outcome_count(int n, std::size_t k);

ConsistencyEstimate consistency_accept(const EdgeTable &edges, std::span<const PureState> proofs,
                                       const BellOptions &opts);
ConsistencyEstimate consistency_accept(const SuccinctCircuit &c, std::span<const PureState> proofs,
                                       const BellOptions &opts);

struct BellReport {
    double p_consistency = 0.0;
    double p_uniformity = 0.0;
    double p_total = 0.0;
    BellMode mode = BellMode::Exact;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    /// Half-width on p_total (half of the consistency half-width).
    double ci_halfwidth = 0.0;
    std::vector<double> z_distribution;
    /// Pr[|Z| < k/6].
    double z_tail = 0.0;
};

BellReport bell_acceptance(const SuccinctCircuit &c, std::span<const PureState> proofs, const BellOptions &opts);

/// Two-sided Hoeffding half-width for a mean of `samples` values in [0,1].
double hoeffding_halfwidth(std::uint64_t samples, double confidence = kMonteCarloConfidence);

/// 1 - 2^{-k/40}.
double bell_completeness_floor(std::size_t k);
/// 1 / (12000 * 4^n).
double bell_soundness_bound(int n);

}  // namespace uvlab
