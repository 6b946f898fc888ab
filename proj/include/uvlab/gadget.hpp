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

// Single-qubit gadget machinery: ZHZHZ decomposition of 2x2 unitaries, the
// magic state (|0> + e^{iw}|1>)/sqrt(2), the parity-measurement gadget that
// applies Rz(w) with probability 1/2, and the transformation of a verifier
// with single-qubit proofs into one that receives classical unitary
// descriptions plus magic states.

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "uvlab/state.hpp"

namespace uvlab {

/// U = e^{i theta} Rz(alpha) H Rz(beta) H Rz(gamma), all angles in [0, 2pi).
struct ZHZHZ {
    double theta = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// Conventions: beta in [0, pi]; diagonal U gets gamma = 0, anti-diagonal U
/// gets gamma = 0. Throws InvalidInput when U is not unitary within 1e-9.
ZHZHZ zhzhz_decompose(const Eigen::Matrix2cd &u);
Eigen::Matrix2cd zhzhz_matrix(const ZHZHZ &d);

double operator_norm(const Eigen::Matrix2cd &m);

/// Haar-distributed 2x2 unitary (QR of a complex Gaussian matrix, phases fixed).
Eigen::Matrix2cd haar_unitary(std::mt19937_64 &rng);

PureState magic_state(double omega);

/// Measures {|00><00| + |11><11|, |01><01| + |10><10|} on magic (x) target.
/// Element 0 is the success outcome (label 1); its post state is the single
/// output qubit after the disentangling CNOT, equal to Rz(omega)|target>.
/// Element 1 is the failure outcome (label 2) with the projected two-qubit state.
std::array<MeasurementBranch, 2> magic_gadget(const PureState &target, double omega);

struct MagicStep {
    std::size_t unitary = 0;  // which proof unitary the rotation belongs to
    double angle = 0.0;
};

/// Classical descriptions of single-qubit proof unitaries plus the ordered
/// magic states they consume (gamma, beta, alpha per unitary).
class GadgetProgram {
   public:
    GadgetProgram() = default;

    /// Three magic states per unitary.
    static GadgetProgram full(std::vector<ZHZHZ> unitaries);
    /// Skips rotations with angle exactly 0, which need no magic state.
    static GadgetProgram compact(std::vector<ZHZHZ> unitaries);

    const std::vector<ZHZHZ> &unitaries() const {
        return unitaries_;
    }
    const std::vector<MagicStep> &steps() const {
        return steps_;
    }
    std::size_t t() const {
        return steps_.size();
    }

   private:
    std::vector<ZHZHZ> unitaries_;
    std::vector<MagicStep> steps_;
};

struct CascadeResult {
    /// Probability that every gadget succeeds.
    double success_probability = 1.0;
    /// U_i|0> up to global phase, one per unitary (valid on full success).
    std::vector<PureState> prepared;
};

/// Runs the gadget cascade on |0> for every unitary, following the success branches.
CascadeResult run_cascade(const GadgetProgram &program);

enum class GadgetMode { Exact, Sampled };

struct GadgetOptions {
    GadgetMode mode = GadgetMode::Exact;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Acceptance of the transformed verifier: accept on any gadget failure,
/// otherwise accept with the inner probability p. Equals 1 - 2^{-t}(1 - p).
double single_qubit_proof_verifier(double inner_acceptance, const GadgetProgram &program,
                                   const GadgetOptions &opts = {});

/// Inner verifier on single-qubit proofs: accepts with probability
/// weight * prod_i |<target_i|psi_i>|^2, so its optimum is `weight`.
struct InnerFixture {
    std::vector<PureState> targets;
    double weight = 1.0;

    double acceptance(std::span<const PureState> proofs) const;
    double optimum() const {
        return weight;
    }
};

/// A unitary whose first column is `target`.
Eigen::Matrix2cd preparing_unitary(const PureState &target);

struct ReductionReport {
    GadgetProgram program;
    std::size_t t = 0;
    double inner_completeness = 0.0;  // measured on the gadget-prepared states
    double inner_soundness = 0.0;
    double transformed_completeness = 0.0;
    double transformed_soundness = 0.0;
    double inner_gap() const {
        return inner_completeness - inner_soundness;
    }
    double transformed_gap() const {
        return transformed_completeness - transformed_soundness;
    }
};

/// Honest provers describe unitaries preparing `targets`; the yes-fixture has
/// weight 1 and the no-fixture weight `no_weight`.
ReductionReport end_to_end_reduction(std::span<const PureState> targets, double no_weight, bool compact,
                                     const GadgetOptions &opts = {});

}  // namespace uvlab
