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

// The two-proof verifier as a single Hermitian acceptance operator on the
// joint proof space, its largest eigenvalue (the optimum over entangled
// proofs), and an alternating eigenvector search over product proofs.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "uvlab/state.hpp"
#include "uvlab/succinct_graph.hpp"

namespace uvlab {

inline constexpr int kMaxOperatorBits = 4;
inline constexpr double kHermitianTolerance = 1e-10;

struct AcceptanceOperator {
    int n = 0;
    std::size_t register_dim = 0;  // 3 * 2^n
    std::string verifier = "two-proof";
    /// Row index is a * register_dim + b for first-register basis a, second b.
    Eigen::MatrixXcd matrix;
};

/// Throws CapacityError for n > kMaxOperatorBits.
AcceptanceOperator build_acceptance_operator(const SuccinctCircuit &c);

/// <joint|A|joint> for a state on the joint space (entanglement allowed).
double expectation(const AcceptanceOperator &a, const PureState &joint);
double expectation(const AcceptanceOperator &a, const PureState &first, const PureState &second);

/// Largest eigenvalue by full Hermitian eigensolve. Throws InvalidInput unless
/// the matrix is square and Hermitian within kHermitianTolerance.
double spectral_norm(const Eigen::MatrixXcd &m);

/// Rayleigh quotient after `iterations` power steps from a seeded random vector.
/// Converges to the largest eigenvalue for positive semidefinite input.
double power_method(const Eigen::MatrixXcd &m, std::size_t iterations, std::uint64_t seed);

struct SeesawOptions {
    std::size_t restarts = 50;
    std::size_t max_iterations = 500;
    double tolerance = 1e-12;
    std::uint64_t seed = 0;
    /// Extra starting pairs, tried before the random restarts.
    std::vector<std::pair<PureState, PureState>> initial;
};

struct SeesawResult {
    PureState first;
    PureState second;
    double value = 0.0;  // best found, not a certified product optimum
    std::size_t iterations = 0;
    std::size_t restarts = 0;
    std::uint64_t seed = 0;
    std::vector<double> trace;  // per-iteration values of the winning start
};

SeesawResult seesaw(const AcceptanceOperator &a, const SeesawOptions &opts);

/// Honest-form pair built from the fewest-conflict coloring of the expanded graph.
std::pair<PureState, PureState> honest_form_start(const SuccinctCircuit &c);

}  // namespace uvlab
