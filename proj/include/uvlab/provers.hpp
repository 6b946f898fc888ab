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

// Proof states for the node (x) color register layout: honest and flawed
// coloring states, Haar-random proofs, and the amplitude decomposition
// psi = sum_i alpha_i |i> sum_j beta_{i,j} |j>.

#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "uvlab/state.hpp"
#include "uvlab/succinct_graph.hpp"

namespace uvlab {

inline constexpr std::size_t kColors = 3;

/// Node register of dimension 2^n followed by a 3-level color register.
RegisterShape proof_shape(int n);

/// (1/sqrt(2^n)) sum_i |i>|c(i)> for a proper coloring of the instance.
/// Throws InvalidInput if `col` has a monochromatic edge.
PureState honest_proof(const SuccinctCircuit &c, const Coloring &col);

/// Same state built from a coloring with exactly `declared_violations`
/// monochromatic edges (checked against the expanded graph).
PureState near_coloring_proof(const SuccinctCircuit &c, const Coloring &col, std::size_t declared_violations = 1);

/// Honest-form state for any coloring, without validity checks.
PureState coloring_state(int n, const Coloring &col);

struct ProofDecomposition {
    std::size_t node_dim = 0;
    std::size_t color_dim = 0;
    /// Node amplitudes alpha_i (stored real, non-negative).
    std::vector<Amplitude> alpha;
    /// Row-major node_dim x color_dim table of beta_{i,j}. Rows with
    /// alpha_i = 0 hold (1, 0, ..., 0).
    std::vector<Amplitude> beta;
    /// Node amplitudes gamma_i after outcome 0 of the color uniformity
    /// measurement; empty when that outcome has probability 0.
    std::optional<std::vector<Amplitude>> gamma;
    /// Probability of that outcome.
    double color_uniform_probability = 0.0;

    Amplitude beta_at(std::size_t i, std::size_t j) const {
        return beta[i * color_dim + j];
    }
};

/// Works for any two-register state (node, color).
ProofDecomposition decompose(const PureState &s);
PureState reconstruct(const ProofDecomposition &d);

/// `k` independent Haar-random states of `shape`, reproducible from `seed`.
std::vector<PureState> random_product_proofs(const RegisterShape &shape, std::size_t k, std::uint64_t seed);

namespace strategy {
struct Honest {
    Coloring coloring;
};
struct NearColoring {
    Coloring coloring;
    std::size_t violations = 1;
};
struct Arbitrary {
    ProofDecomposition table;
};
struct Random {
    std::uint64_t seed = 0;
};
}  // namespace strategy

using ProverStrategy = std::variant<strategy::Honest, strategy::NearColoring, strategy::Arbitrary, strategy::Random>;

/// The `k` proofs a prover following `s` sends for instance `c`. Deterministic
/// strategies send `k` copies of the same state.
std::vector<PureState> materialize(const ProverStrategy &s, const SuccinctCircuit &c, std::size_t k);

}  // namespace uvlab
