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

// Mixed-radix pure-state engine. Registers keep their native dimension
// (2^n node registers, 3-level color registers, qubits), so projectors such
// as |u_m><u_m| act exactly without embedding into qubits.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace uvlab {

using Amplitude = std::complex<double>;

/// Dense storage cap (total dimension).
inline constexpr std::size_t kMaxStateDimension = std::size_t{1} << 22;
/// Norm tolerance for states handed in from outside.
inline constexpr double kInputNormTolerance = 1e-9;
/// Squared norm below which a projected branch is treated as impossible.
inline constexpr double kZeroBranchProbability = 1e-24;

class RegisterShape {
   public:
    RegisterShape() = default;
    RegisterShape(std::vector<std::size_t> dims, std::vector<std::string> labels);

    /// `count` qubit registers labelled q0, q1, ...
    static RegisterShape qubits(std::size_t count);

    std::size_t num_registers() const {
        return dims_.size();
    }
    std::size_t dim(std::size_t reg) const {
        return dims_.at(reg);
    }
    const std::vector<std::size_t> &dims() const {
        return dims_;
    }
    const std::string &label(std::size_t reg) const {
        return labels_.at(reg);
    }
    const std::vector<std::string> &labels() const {
        return labels_;
    }
    std::size_t total_dimension() const {
        return total_;
    }
    /// Flat-index stride of a register; register 0 is the most significant digit.
    std::size_t stride(std::size_t reg) const {
        return strides_.at(reg);
    }

    std::size_t index_of(std::string_view label) const;
    std::size_t digit(std::size_t flat, std::size_t reg) const {
        return (flat / strides_[reg]) % dims_[reg];
    }
    std::vector<std::size_t> digits(std::size_t flat) const;
    std::size_t flat_index(std::span<const std::size_t> digits) const;

    /// Concatenation; labels of `other` that collide get a ".<position>" suffix.
    RegisterShape concat(const RegisterShape &other) const;

    friend bool operator==(const RegisterShape &a, const RegisterShape &b) {
        return a.dims_ == b.dims_;
    }

   private:
    std::vector<std::size_t> dims_;
    std::vector<std::string> labels_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 1;
};

class PureState {
   public:
    /// Validates length and that the squared norm is within 1e-9 of 1.
    PureState(RegisterShape shape, std::vector<Amplitude> amps);

    /// Rescales `amps` to unit norm; throws InvalidInput on a zero vector.
    static PureState normalized(RegisterShape shape, std::vector<Amplitude> amps);
    static PureState basis(RegisterShape shape, std::span<const std::size_t> digits);

    const RegisterShape &shape() const {
        return shape_;
    }
    std::size_t dimension() const {
        return amps_.size();
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    Amplitude operator[](std::size_t flat) const {
        return amps_[flat];
    }
    Amplitude at(std::span<const std::size_t> digits) const {
        return amps_[shape_.flat_index(digits)];
    }
    double squared_norm() const;

   private:
    struct Trusted {};
    PureState(Trusted, RegisterShape shape, std::vector<Amplitude> amps)
        : shape_(std::move(shape)), amps_(std::move(amps)) {
    }
    friend PureState make_trusted(RegisterShape, std::vector<Amplitude>);

    RegisterShape shape_;
    std::vector<Amplitude> amps_;
};

/// Builds a state without the input-norm check. Internal use by operations
/// whose output is normalized by construction.
PureState make_trusted(RegisterShape shape, std::vector<Amplitude> amps);

struct MeasurementBranch {
    std::size_t outcome = 0;
    double probability = 0.0;
    /// Empty when the branch has zero probability.
    std::optional<PureState> post_state;

    bool defined() const {
        return post_state.has_value();
    }
};

enum class GateKind { H, CNOT, Rx, Rz, SWAP, CSWAP };

struct Gate {
    GateKind kind;
    double angle = 0.0;

    static Gate h() {
        return {GateKind::H};
    }
    static Gate cnot() {
        return {GateKind::CNOT};
    }
    static Gate rx(double w) {
        return {GateKind::Rx, w};
    }
    static Gate rz(double w) {
        return {GateKind::Rz, w};
    }
    static Gate swap() {
        return {GateKind::SWAP};
    }
    static Gate cswap() {
        return {GateKind::CSWAP};
    }
};

/// 2x2 matrices of the single-qubit gates. Rz(w) = diag(1, e^{iw}).
Eigen::Matrix2cd hadamard_matrix();
Eigen::Matrix2cd rx_matrix(double w);
Eigen::Matrix2cd rz_matrix(double w);

/// Targets are register indices. H/Rx/Rz take one qubit register, CNOT takes
/// (control, target) qubits, SWAP two equal-dimension registers, CSWAP a
/// control qubit followed by two equal-dimension registers.
PureState apply_gate(const PureState &s, const Gate &gate, std::span<const std::size_t> targets);
PureState apply_gate(const PureState &s, const Gate &gate, std::initializer_list<std::size_t> targets);

/// Applies a unitary over the listed registers (first listed is most significant).
PureState apply_unitary(const PureState &s, std::span<const std::size_t> targets, const Eigen::MatrixXcd &u);

PureState tensor(const PureState &a, const PureState &b);
PureState uniform_state(std::size_t m);

/// Haar-random pure state: normalized complex Gaussian vector.
PureState random_state(const RegisterShape &shape, std::mt19937_64 &rng);

/// <a|b>.
Amplitude inner_product(const PureState &a, const PureState &b);

/// Projective pair {|u_m><u_m|, I - |u_m><u_m|} on register `target`.
/// Branch 0 is the projection onto |u_m>.
std::array<MeasurementBranch, 2> uniformity_measure(const PureState &s, std::size_t target);

/// Marginal computational-basis distribution of `targets`, indexed by the
/// mixed-radix tuple (first target most significant).
std::vector<double> marginal_distribution(const PureState &s, std::span<const std::size_t> targets);

/// Full branch list of a computational-basis measurement of `targets`.
std::vector<MeasurementBranch> computational_measure(const PureState &s, std::span<const std::size_t> targets);

/// Single branch of a computational-basis measurement.
MeasurementBranch collapse(const PureState &s, std::span<const std::size_t> targets, std::size_t outcome);

enum class SwapTestMode { ClosedForm, Circuit };

struct SwapTestResult {
    double acceptance = 0.0;
    /// Ancilla branches (0 = accept) over ancilla + a + b; circuit mode only.
    std::optional<std::array<MeasurementBranch, 2>> branches;
};

SwapTestResult swap_test(const PureState &a, const PureState &b, SwapTestMode mode = SwapTestMode::ClosedForm);

/// Trace distance between |a><a| and |b><b|: sqrt(1 - |<a|b>|^2).
/// 1 - |<a|b>|^2 as the squared norm of a's component orthogonal to b, which
/// keeps full relative precision for nearly equal states.
double infidelity(const PureState &a, const PureState &b);
double pure_trace_distance(const PureState &a, const PureState &b);

/// Half the l1 distance between two probability vectors.
double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace uvlab
