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

#include "uvlab/gadget.hpp"

#include <cmath>
#include <numbers>

#include "uvlab/errors.hpp"
#include "uvlab/sampling.hpp"

namespace uvlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDegenerate = 1e-14;

double wrap(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0) r += kTwoPi;
    return r >= kTwoPi ? 0.0 : r;
}

}  // namespace

double operator_norm(const Eigen::Matrix2cd &m) {
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
    return svd.singularValues()(0);
}

Eigen::Matrix2cd haar_unitary(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    Eigen::Matrix2cd z;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) z(i, j) = {gauss(rng), gauss(rng)};
    }
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(z);
    Eigen::Matrix2cd q = qr.householderQ();
    const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < 2; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0) q.col(j) *= r(j, j) / mag;
    }
    return q;
}

Eigen::Matrix2cd zhzhz_matrix(const ZHZHZ &d) {
    const Eigen::Matrix2cd h = hadamard_matrix();
    return std::polar(1.0, d.theta) * rz_matrix(d.alpha) * h * rz_matrix(d.beta) * h * rz_matrix(d.gamma);
}

ZHZHZ zhzhz_decompose(const Eigen::Matrix2cd &u) {
    if (!u.allFinite()) throw InvalidInput("matrix has non-finite entries");
    const double defect = operator_norm(u.adjoint() * u - Eigen::Matrix2cd::Identity());
    if (defect > 1e-9) throw InvalidInput("matrix is not unitary (||U^dag U - I|| = " + std::to_string(defect) + ")");

    // With phi = theta + beta/2:
    //   U00 = e^{i phi} cos(beta/2)            U01 = -i e^{i(phi+gamma)} sin(beta/2)
    //   U10 = -i e^{i(phi+alpha)} sin(beta/2)  U11 = e^{i(phi+alpha+gamma)} cos(beta/2)
    const double c = std::abs(u(0, 0)), s = std::abs(u(0, 1));
    const double beta = 2.0 * std::atan2(s, c);
    const double half_pi = std::numbers::pi / 2;
    double phi, alpha, gamma;
    if (c >= s) {
        phi = std::arg(u(0, 0));
    } else if (c < kDegenerate) {
        phi = std::arg(u(0, 1)) + half_pi;  // anti-diagonal: gamma = 0
    } else {
        phi = std::arg(u(0, 1)) + std::arg(u(1, 0)) + 2 * half_pi - std::arg(u(1, 1));
    }
    if (s < kDegenerate) {
        gamma = 0.0;  // diagonal
        alpha = std::arg(u(1, 1)) - phi;
    } else {
        alpha = std::arg(u(1, 0)) + half_pi - phi;
        gamma = std::arg(u(0, 1)) + half_pi - phi;
    }
    return {wrap(phi - beta / 2), wrap(alpha), wrap(beta), wrap(gamma)};
}

PureState magic_state(double omega) {
    const double r = 1.0 / std::sqrt(2.0);
    return make_trusted(RegisterShape::qubits(1), {Amplitude(r), std::polar(r, omega)});
}

std::array<MeasurementBranch, 2> magic_gadget(const PureState &target, double omega) {
    if (target.shape().num_registers() != 1 || target.shape().dim(0) != 2) {
        throw ShapeError("magic gadget acts on a single-qubit state");
    }
    auto joint = tensor(magic_state(omega), target);
    auto amps = joint.amplitudes();
    std::vector<Amplitude> even{amps[0], 0.0, 0.0, amps[3]};
    std::vector<Amplitude> odd{0.0, amps[1], amps[2], 0.0};
    const double p_even = std::norm(amps[0]) + std::norm(amps[3]);
    const double p_odd = std::norm(amps[1]) + std::norm(amps[2]);

    std::array<MeasurementBranch, 2> out;
    out[0].outcome = 1;
    out[0].probability = p_even;
    if (p_even > kZeroBranchProbability) {
        const double scale = 1.0 / std::sqrt(p_even);
        for (auto &a : even) a *= scale;
        auto after = apply_gate(make_trusted(joint.shape(), std::move(even)), Gate::cnot(), {0, 1});
        // second qubit is now |0>
        auto a = after.amplitudes();
        out[0].post_state = PureState::normalized(RegisterShape::qubits(1), {a[0], a[2]});
    }
    out[1].outcome = 2;
    out[1].probability = p_odd;
    if (p_odd > kZeroBranchProbability) {
        const double scale = 1.0 / std::sqrt(p_odd);
        for (auto &a : odd) a *= scale;
        out[1].post_state = make_trusted(joint.shape(), std::move(odd));
    }
    return out;
}

GadgetProgram GadgetProgram::full(std::vector<ZHZHZ> unitaries) {
    GadgetProgram p;
    p.unitaries_ = std::move(unitaries);
    for (std::size_t i = 0; i < p.unitaries_.size(); ++i) {
        const auto &d = p.unitaries_[i];
        p.steps_.push_back({i, d.gamma});
        p.steps_.push_back({i, d.beta});
        p.steps_.push_back({i, d.alpha});
    }
    return p;
}

GadgetProgram GadgetProgram::compact(std::vector<ZHZHZ> unitaries) {
    GadgetProgram p;
    p.unitaries_ = std::move(unitaries);
    for (std::size_t i = 0; i < p.unitaries_.size(); ++i) {
        const auto &d = p.unitaries_[i];
        for (double a : {d.gamma, d.beta, d.alpha}) {
            if (a != 0.0) p.steps_.push_back({i, a});
        }
    }
    return p;
}

CascadeResult run_cascade(const GadgetProgram &program) {
    CascadeResult res;
    std::size_t next = 0;
    const auto &steps = program.steps();
    for (std::size_t i = 0; i < program.unitaries().size(); ++i) {
        const auto &d = program.unitaries()[i];
        auto state = PureState::basis(RegisterShape::qubits(1), std::vector<std::size_t>{0});
        auto rotate = [&](double angle) {
            // the program decides which rotations consume a magic state
            if (next < steps.size() && steps[next].unitary == i && steps[next].angle == angle) {
                auto br = magic_gadget(state, angle);
                res.success_probability *= br[0].probability;
                state = *br[0].post_state;
                ++next;
            } else if (angle != 0.0) {
                throw InvalidInput("gadget program is missing a magic state for a nonzero rotation");
            }
        };
        rotate(d.gamma);
        state = apply_gate(state, Gate::h(), {0});
        rotate(d.beta);
        state = apply_gate(state, Gate::h(), {0});
        rotate(d.alpha);
        res.prepared.push_back(std::move(state));
    }
    if (next != steps.size()) throw InvalidInput("gadget program has unused magic states");
    return res;
}

double single_qubit_proof_verifier(double inner_acceptance, const GadgetProgram &program, const GadgetOptions &opts) {
    if (!(inner_acceptance >= 0.0 && inner_acceptance <= 1.0)) throw InvalidInput("inner acceptance must be in [0,1]");
    const auto cascade = run_cascade(program);
    if (opts.mode == GadgetMode::Exact) {
        return (1.0 - cascade.success_probability) + cascade.success_probability * inner_acceptance;
    }
    if (opts.samples == 0) throw InvalidInput("sampled mode needs a positive sample count");
    std::mt19937_64 rng(opts.seed);
    // every gadget in the cascade succeeds with the same probability
    const double per_gadget = program.t() == 0 ? 1.0 : std::pow(cascade.success_probability, 1.0 / program.t());
    std::uint64_t accepted = 0;
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
        bool failed = false;
        for (std::size_t g = 0; g < program.t() && !failed; ++g) failed = !bernoulli(rng, per_gadget);
        accepted += failed || bernoulli(rng, inner_acceptance);
    }
    return static_cast<double>(accepted) / static_cast<double>(opts.samples);
}

double InnerFixture::acceptance(std::span<const PureState> proofs) const {
    if (proofs.size() != targets.size()) throw InvalidInput("inner fixture expects one proof per target");
    double p = weight;
    for (std::size_t i = 0; i < proofs.size(); ++i) p *= std::norm(inner_product(targets[i], proofs[i]));
    return p;
}

Eigen::Matrix2cd preparing_unitary(const PureState &target) {
    if (target.shape().num_registers() != 1 || target.shape().dim(0) != 2) {
        throw ShapeError("target must be a single-qubit state");
    }
    const Amplitude a = target[0], b = target[1];
    Eigen::Matrix2cd u;
    u << a, -std::conj(b), b, std::conj(a);
    return u;
}

ReductionReport end_to_end_reduction(std::span<const PureState> targets, double no_weight, bool compact,
                                     const GadgetOptions &opts) {
    std::vector<ZHZHZ> descriptions;
    for (const auto &t : targets) descriptions.push_back(zhzhz_decompose(preparing_unitary(t)));
    ReductionReport rep;
    rep.program = compact ? GadgetProgram::compact(descriptions) : GadgetProgram::full(descriptions);
    rep.t = rep.program.t();
    const auto cascade = run_cascade(rep.program);
    InnerFixture yes{{targets.begin(), targets.end()}, 1.0};
    InnerFixture no{{targets.begin(), targets.end()}, no_weight};
    rep.inner_completeness = yes.acceptance(cascade.prepared);
    rep.inner_soundness = no.acceptance(cascade.prepared);
    rep.transformed_completeness = single_qubit_proof_verifier(std::min(1.0, rep.inner_completeness), rep.program, opts);
    rep.transformed_soundness = single_qubit_proof_verifier(std::min(1.0, rep.inner_soundness), rep.program, opts);
    return rep;
}

}  // namespace uvlab
