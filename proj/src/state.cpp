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

#include "uvlab/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "uvlab/errors.hpp"

namespace uvlab {

namespace {

// Local operator restricted to a set of registers: either a dense matrix or a
// permutation of the local basis (CNOT, SWAP, CSWAP).
struct LocalOp {
    std::vector<std::size_t> targets;
    std::size_t local_dim = 1;
    std::optional<Eigen::MatrixXcd> dense;
    std::vector<std::size_t> perm;  // perm[l] = image of local basis index l
};

void check_targets(const RegisterShape &shape, std::span<const std::size_t> targets) {
    std::unordered_set<std::size_t> seen;
    for (auto t : targets) {
        if (t >= shape.num_registers()) {
            throw AddressError("register index " + std::to_string(t) + " out of range (state has " +
                               std::to_string(shape.num_registers()) + " registers)");
        }
        if (!seen.insert(t).second) {
            throw AddressError("register " + std::to_string(t) + " addressed twice");
        }
    }
}

// Offsets of each local basis state relative to a base index.
std::vector<std::size_t> local_offsets(const RegisterShape &shape, std::span<const std::size_t> targets) {
    std::size_t local = 1;
    for (auto t : targets) local *= shape.dim(t);
    std::vector<std::size_t> offsets(local, 0);
    for (std::size_t l = 0; l < local; ++l) {
        std::size_t rem = l;
        std::size_t off = 0;
        for (std::size_t k = targets.size(); k-- > 0;) {
            auto d = shape.dim(targets[k]);
            off += (rem % d) * shape.stride(targets[k]);
            rem /= d;
        }
        offsets[l] = off;
    }
    return offsets;
}

// Calls f(base) for every flat index whose target digits are all zero.
template <typename F>
void for_each_base(const RegisterShape &shape, std::span<const std::size_t> targets, F &&f) {
    std::vector<bool> is_target(shape.num_registers(), false);
    for (auto t : targets) is_target[t] = true;
    std::vector<std::size_t> free_regs;
    for (std::size_t r = 0; r < shape.num_registers(); ++r) {
        if (!is_target[r]) free_regs.push_back(r);
    }
    std::vector<std::size_t> counter(free_regs.size(), 0);
    std::size_t base = 0;
    while (true) {
        f(base);
        // odometer over the non-target registers
        std::size_t k = free_regs.size();
        while (k > 0) {
            --k;
            auto r = free_regs[k];
            if (++counter[k] < shape.dim(r)) {
                base += shape.stride(r);
                break;
            }
            base -= (shape.dim(r) - 1) * shape.stride(r);
            counter[k] = 0;
            if (k == 0) return;
        }
        if (free_regs.empty()) return;
    }
}

PureState apply_local(const PureState &s, const LocalOp &op) {
    const auto &shape = s.shape();
    auto offsets = local_offsets(shape, op.targets);
    auto in = s.amplitudes();
    std::vector<Amplitude> out(in.size());
    std::vector<Amplitude> buf(op.local_dim);
    for_each_base(shape, op.targets, [&](std::size_t base) {
        if (op.dense) {
            for (std::size_t c = 0; c < op.local_dim; ++c) buf[c] = in[base + offsets[c]];
            for (std::size_t r = 0; r < op.local_dim; ++r) {
                Amplitude acc = 0;
                for (std::size_t c = 0; c < op.local_dim; ++c) acc += (*op.dense)(r, c) * buf[c];
                out[base + offsets[r]] = acc;
            }
        } else {
            for (std::size_t l = 0; l < op.local_dim; ++l) out[base + offsets[op.perm[l]]] = in[base + offsets[l]];
        }
    });
    return make_trusted(shape, std::move(out));
}

void require_qubit(const RegisterShape &shape, std::size_t reg, const char *gate) {
    if (shape.dim(reg) != 2) {
        throw AddressError(std::string(gate) + " needs a qubit register, register " + std::to_string(reg) +
                           " has dimension " + std::to_string(shape.dim(reg)));
    }
}

}  // namespace

RegisterShape::RegisterShape(std::vector<std::size_t> dims, std::vector<std::string> labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
    if (dims_.size() != labels_.size()) {
        throw InvalidInput("register shape: " + std::to_string(dims_.size()) + " dims but " +
                           std::to_string(labels_.size()) + " labels");
    }
    std::unordered_set<std::string> seen;
    for (std::size_t r = 0; r < dims_.size(); ++r) {
        if (dims_[r] == 0) throw InvalidInput("register '" + labels_[r] + "' has dimension 0");
        if (!seen.insert(labels_[r]).second) throw InvalidInput("duplicate register label '" + labels_[r] + "'");
        if (total_ > kMaxStateDimension / dims_[r]) {
            throw CapacityError("total state dimension exceeds the dense cap of 2^22");
        }
        total_ *= dims_[r];
    }
    strides_.assign(dims_.size(), 1);
    for (std::size_t r = dims_.size(); r-- > 1;) strides_[r - 1] = strides_[r] * dims_[r];
}

RegisterShape RegisterShape::qubits(std::size_t count) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < count; ++i) labels.push_back("q" + std::to_string(i));
    return RegisterShape(std::vector<std::size_t>(count, 2), std::move(labels));
}

std::size_t RegisterShape::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw AddressError("no register labelled '" + std::string(label) + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> RegisterShape::digits(std::size_t flat) const {
    std::vector<std::size_t> d(dims_.size());
    for (std::size_t r = 0; r < dims_.size(); ++r) d[r] = digit(flat, r);
    return d;
}

std::size_t RegisterShape::flat_index(std::span<const std::size_t> d) const {
    if (d.size() != dims_.size()) throw AddressError("digit tuple length does not match register count");
    std::size_t flat = 0;
    for (std::size_t r = 0; r < d.size(); ++r) {
        if (d[r] >= dims_[r]) throw AddressError("digit out of range for register '" + labels_[r] + "'");
        flat += d[r] * strides_[r];
    }
    return flat;
}

RegisterShape RegisterShape::concat(const RegisterShape &other) const {
    auto dims = dims_;
    auto labels = labels_;
    std::unordered_set<std::string> used(labels.begin(), labels.end());
    for (std::size_t r = 0; r < other.num_registers(); ++r) {
        dims.push_back(other.dim(r));
        std::string l = other.label(r);
        if (used.count(l)) l += "." + std::to_string(labels.size());
        while (used.count(l)) l += "'";
        used.insert(l);
        labels.push_back(std::move(l));
    }
    return RegisterShape(std::move(dims), std::move(labels));
}

PureState::PureState(RegisterShape shape, std::vector<Amplitude> amps) : shape_(std::move(shape)), amps_(std::move(amps)) {
    if (amps_.size() != shape_.total_dimension()) {
        throw ShapeError("amplitude count " + std::to_string(amps_.size()) + " does not match dimension " +
                         std::to_string(shape_.total_dimension()));
    }
    if (std::abs(squared_norm() - 1.0) > kInputNormTolerance) {
        throw InvalidInput("state is not normalized (squared norm " + std::to_string(squared_norm()) + ")");
    }
}

PureState make_trusted(RegisterShape shape, std::vector<Amplitude> amps) {
    return PureState(PureState::Trusted{}, std::move(shape), std::move(amps));
}

PureState PureState::normalized(RegisterShape shape, std::vector<Amplitude> amps) {
    if (amps.size() != shape.total_dimension()) throw ShapeError("amplitude count does not match dimension");
    double nrm = 0;
    for (auto a : amps) nrm += std::norm(a);
    if (!(nrm > 0) || !std::isfinite(nrm)) throw InvalidInput("cannot normalize a zero or non-finite vector");
    double scale = 1.0 / std::sqrt(nrm);
    for (auto &a : amps) a *= scale;
    return make_trusted(std::move(shape), std::move(amps));
}

PureState PureState::basis(RegisterShape shape, std::span<const std::size_t> digits) {
    std::vector<Amplitude> amps(shape.total_dimension(), 0.0);
    amps[shape.flat_index(digits)] = 1.0;
    return make_trusted(std::move(shape), std::move(amps));
}

double PureState::squared_norm() const {
    double s = 0;
    for (auto a : amps_) s += std::norm(a);
    return s;
}

Eigen::Matrix2cd hadamard_matrix() {
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    m << r, r, r, -r;
    return m;
}

Eigen::Matrix2cd rx_matrix(double w) {
    const Amplitude c = std::cos(w / 2), s = Amplitude(0, -std::sin(w / 2));
    Eigen::Matrix2cd m;
    m << c, s, s, c;
    return m;
}

Eigen::Matrix2cd rz_matrix(double w) {
    Eigen::Matrix2cd m;
    m << 1.0, 0.0, 0.0, std::polar(1.0, w);
    return m;
}

PureState apply_gate(const PureState &s, const Gate &gate, std::initializer_list<std::size_t> targets) {
    return apply_gate(s, gate, std::span<const std::size_t>(targets.begin(), targets.size()));
}

PureState apply_gate(const PureState &s, const Gate &gate, std::span<const std::size_t> targets) {
    const auto &shape = s.shape();
    check_targets(shape, targets);
    LocalOp op;
    op.targets.assign(targets.begin(), targets.end());
    auto arity = [&](std::size_t n, const char *name) {
        if (targets.size() != n) {
            throw AddressError(std::string(name) + " takes " + std::to_string(n) + " register(s), got " +
                               std::to_string(targets.size()));
        }
    };
    switch (gate.kind) {
        case GateKind::H:
        case GateKind::Rx:
        case GateKind::Rz: {
            arity(1, "single-qubit gate");
            require_qubit(shape, targets[0], "single-qubit gate");
            op.local_dim = 2;
            op.dense = gate.kind == GateKind::H    ? Eigen::MatrixXcd(hadamard_matrix())
                       : gate.kind == GateKind::Rx ? Eigen::MatrixXcd(rx_matrix(gate.angle))
                                                   : Eigen::MatrixXcd(rz_matrix(gate.angle));
            break;
        }
        case GateKind::CNOT: {
            arity(2, "CNOT");
            require_qubit(shape, targets[0], "CNOT");
            require_qubit(shape, targets[1], "CNOT");
            op.local_dim = 4;
            op.perm = {0, 1, 3, 2};
            break;
        }
        case GateKind::SWAP:
        case GateKind::CSWAP: {
            const bool controlled = gate.kind == GateKind::CSWAP;
            arity(controlled ? 3 : 2, controlled ? "CSWAP" : "SWAP");
            if (controlled) require_qubit(shape, targets[0], "CSWAP control");
            const auto a = targets[controlled ? 1 : 0], b = targets[controlled ? 2 : 1];
            const auto d = shape.dim(a);
            if (shape.dim(b) != d) {
                throw AddressError("SWAP targets have different dimensions (" + std::to_string(d) + " vs " +
                                   std::to_string(shape.dim(b)) + ")");
            }
            const std::size_t block = d * d;
            op.local_dim = controlled ? 2 * block : block;
            op.perm.resize(op.local_dim);
            for (std::size_t l = 0; l < op.local_dim; ++l) {
                const std::size_t ctrl = l / block, x = (l % block) / d, y = l % d;
                op.perm[l] = (controlled && ctrl == 0) ? l : ctrl * block + y * d + x;
            }
            break;
        }
    }
    return apply_local(s, op);
}

PureState apply_unitary(const PureState &s, std::span<const std::size_t> targets, const Eigen::MatrixXcd &u) {
    check_targets(s.shape(), targets);
    LocalOp op;
    op.targets.assign(targets.begin(), targets.end());
    for (auto t : targets) op.local_dim *= s.shape().dim(t);
    if (u.rows() != static_cast<Eigen::Index>(op.local_dim) || u.cols() != u.rows()) {
        throw AddressError("unitary has size " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                           ", targets span dimension " + std::to_string(op.local_dim));
    }
    op.dense = u;
    return apply_local(s, op);
}

PureState tensor(const PureState &a, const PureState &b) {
    auto shape = a.shape().concat(b.shape());
    std::vector<Amplitude> amps;
    amps.reserve(shape.total_dimension());
    for (auto x : a.amplitudes()) {
        for (auto y : b.amplitudes()) amps.push_back(x * y);
    }
    return make_trusted(std::move(shape), std::move(amps));
}

PureState uniform_state(std::size_t m) {
    if (m == 0) throw InvalidInput("uniform_state needs m >= 1");
    RegisterShape shape({m}, {"u"});
    return make_trusted(std::move(shape), std::vector<Amplitude>(m, 1.0 / std::sqrt(static_cast<double>(m))));
}

PureState random_state(const RegisterShape &shape, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Amplitude> amps(shape.total_dimension());
    for (auto &a : amps) {
        const double re = g(rng);
        const double im = g(rng);
        a = {re, im};
    }
    return PureState::normalized(shape, std::move(amps));
}

Amplitude inner_product(const PureState &a, const PureState &b) {
    if (!(a.shape() == b.shape())) throw ShapeError("inner product of states with different register layouts");
    Amplitude acc = 0;
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

namespace {

MeasurementBranch make_branch(std::size_t outcome, const RegisterShape &shape, std::vector<Amplitude> projected) {
    double p = 0;
    for (auto a : projected) p += std::norm(a);
    MeasurementBranch br;
    br.outcome = outcome;
    br.probability = std::clamp(p, 0.0, 1.0);
    if (p > kZeroBranchProbability) {
        const double scale = 1.0 / std::sqrt(p);
        for (auto &a : projected) a *= scale;
        br.post_state = make_trusted(shape, std::move(projected));
    }
    return br;
}

}  // namespace

std::array<MeasurementBranch, 2> uniformity_measure(const PureState &s, std::size_t target) {
    const auto &shape = s.shape();
    check_targets(shape, std::span<const std::size_t>(&target, 1));
    const std::size_t m = shape.dim(target);
    const std::size_t stride = shape.stride(target);
    auto in = s.amplitudes();
    std::vector<Amplitude> p0(in.size()), p1(in.size());
    const std::size_t t[1] = {target};
    for_each_base(shape, t, [&](std::size_t base) {
        Amplitude sum = 0;
        for (std::size_t d = 0; d < m; ++d) sum += in[base + d * stride];
        const Amplitude mean = sum / static_cast<double>(m);
        for (std::size_t d = 0; d < m; ++d) {
            p0[base + d * stride] = mean;
            p1[base + d * stride] = in[base + d * stride] - mean;
        }
    });
    return {make_branch(0, shape, std::move(p0)), make_branch(1, shape, std::move(p1))};
}

std::vector<double> marginal_distribution(const PureState &s, std::span<const std::size_t> targets) {
    const auto &shape = s.shape();
    check_targets(shape, targets);
    std::size_t local = 1;
    for (auto t : targets) local *= shape.dim(t);
    std::vector<double> dist(local, 0.0);
    auto amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p == 0) continue;
        std::size_t key = 0;
        for (auto t : targets) key = key * shape.dim(t) + shape.digit(i, t);
        dist[key] += p;
    }
    return dist;
}

MeasurementBranch collapse(const PureState &s, std::span<const std::size_t> targets, std::size_t outcome) {
    const auto &shape = s.shape();
    check_targets(shape, targets);
    std::size_t local = 1;
    for (auto t : targets) local *= shape.dim(t);
    if (outcome >= local) throw AddressError("outcome " + std::to_string(outcome) + " out of range");
    auto amps = s.amplitudes();
    std::vector<Amplitude> projected(amps.size(), 0.0);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        std::size_t key = 0;
        for (auto t : targets) key = key * shape.dim(t) + shape.digit(i, t);
        if (key == outcome) projected[i] = amps[i];
    }
    return make_branch(outcome, shape, std::move(projected));
}

std::vector<MeasurementBranch> computational_measure(const PureState &s, std::span<const std::size_t> targets) {
    const auto &shape = s.shape();
    check_targets(shape, targets);
    std::size_t local = 1;
    for (auto t : targets) local *= shape.dim(t);
    std::vector<std::vector<Amplitude>> parts(local);
    auto amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        std::size_t key = 0;
        for (auto t : targets) key = key * shape.dim(t) + shape.digit(i, t);
        auto &v = parts[key];
        if (v.empty()) v.assign(amps.size(), 0.0);
        v[i] = amps[i];
    }
    std::vector<MeasurementBranch> out;
    out.reserve(local);
    for (std::size_t k = 0; k < local; ++k) {
        if (parts[k].empty()) parts[k].assign(amps.size(), 0.0);
        out.push_back(make_branch(k, shape, std::move(parts[k])));
    }
    return out;
}

SwapTestResult swap_test(const PureState &a, const PureState &b, SwapTestMode mode) {
    if (!(a.shape() == b.shape())) throw ShapeError("SWAP test needs states of the same shape");
    if (mode == SwapTestMode::ClosedForm) {
        return {0.5 * (1.0 + std::norm(inner_product(a, b))), std::nullopt};
    }
    const std::size_t r = a.shape().num_registers();
    auto ancilla = PureState::basis(RegisterShape({2}, {"anc"}), std::vector<std::size_t>{0});
    auto joint = tensor(tensor(ancilla, a), b);
    joint = apply_gate(joint, Gate::h(), {0});
    for (std::size_t i = 0; i < r; ++i) joint = apply_gate(joint, Gate::cswap(), {0, 1 + i, 1 + r + i});
    joint = apply_gate(joint, Gate::h(), {0});
    const std::size_t anc[1] = {0};
    auto branches = computational_measure(joint, anc);
    SwapTestResult res;
    res.acceptance = branches[0].probability;
    res.branches = std::array<MeasurementBranch, 2>{std::move(branches[0]), std::move(branches[1])};
    return res;
}

double infidelity(const PureState &a, const PureState &b) {
    const Amplitude ov = inner_product(b, a);
    double r = 0;
    for (std::size_t i = 0; i < a.dimension(); ++i) r += std::norm(a[i] - ov * b[i]);
    return std::clamp(r, 0.0, 1.0);
}

double pure_trace_distance(const PureState &a, const PureState &b) {
    return std::sqrt(infidelity(a, b));
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw ShapeError("distributions have different supports");
    double s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
    return 0.5 * s;
}

}  // namespace uvlab
