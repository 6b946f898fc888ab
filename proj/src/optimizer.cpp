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

#include "uvlab/optimizer.hpp"

#include <cmath>

#include "uvlab/errors.hpp"
#include "uvlab/provers.hpp"
#include "uvlab/qma2.hpp"
#include "uvlab/sampling.hpp"

namespace uvlab {

namespace {

Eigen::VectorXcd as_vector(const PureState &s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dimension()));
    for (std::size_t i = 0; i < s.dimension(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
    return v;
}

PureState as_state(const RegisterShape &shape, const Eigen::VectorXcd &v) {
    return PureState::normalized(shape, std::vector<Amplitude>(v.data(), v.data() + v.size()));
}

Eigen::VectorXcd top_eigenvector(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    return es.eigenvectors().col(m.rows() - 1);
}

// B[a,b] = sum_{c,d} conj(x_c) A[(a,c),(b,d)] x_d
Eigen::MatrixXcd contract_second(const Eigen::MatrixXcd &a, const Eigen::VectorXcd &x, Eigen::Index d) {
    Eigen::MatrixXcd out(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            out(i, j) = x.dot(a.block(i * d, j * d, d, d) * x);
        }
    }
    return out;
}

// B[c,d] = sum_{a,b} conj(x_a) A[(a,c),(b,d)] x_b
Eigen::MatrixXcd contract_first(const Eigen::MatrixXcd &a, const Eigen::VectorXcd &x, Eigen::Index d) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            out += std::conj(x(i)) * x(j) * a.block(i * d, j * d, d, d);
        }
    }
    return out;
}

double product_value(const Eigen::MatrixXcd &a, const Eigen::VectorXcd &x, const Eigen::VectorXcd &y) {
    Eigen::VectorXcd joint(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) joint.segment(i * y.size(), y.size()) = x(i) * y;
    return joint.dot(a * joint).real();
}

}  // namespace

AcceptanceOperator build_acceptance_operator(const SuccinctCircuit &c) {
    if (c.n() > kMaxOperatorBits) {
        throw CapacityError("acceptance operator needs n <= " + std::to_string(kMaxOperatorBits));
    }
    const EdgeTable edges(c);
    const std::size_t nodes = c.label_count();
    const std::size_t d = nodes * kColors;
    const auto dd = static_cast<Eigen::Index>(d * d);

    // Equality: (I + SWAP)/2
    Eigen::MatrixXcd eq = Eigen::MatrixXcd::Zero(dd, dd);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            const auto row = static_cast<Eigen::Index>(a * d + b);
            eq(row, row) += 0.5;
            eq(row, static_cast<Eigen::Index>(b * d + a)) += 0.5;
        }
    }

    // Consistency: diagonal accept indicator over the computational outcome grid
    Eigen::MatrixXcd cons = Eigen::MatrixXcd::Zero(dd, dd);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            const bool rejects = consistency_rejects(edges, a / kColors, a % kColors, b / kColors, b % kColors);
            const auto row = static_cast<Eigen::Index>(a * d + b);
            cons(row, row) = rejects ? 0.0 : 1.0;
        }
    }

    // Uniformity rejects on (I - |u_N><u_N|) (x) |u_3><u_3| of the first register
    const auto di = static_cast<Eigen::Index>(d);
    Eigen::MatrixXcd reject1 = Eigen::MatrixXcd::Zero(di, di);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            const double node = (a / kColors == b / kColors ? 1.0 : 0.0) - 1.0 / static_cast<double>(nodes);
            reject1(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = node / 3.0;
        }
    }
    Eigen::MatrixXcd unif = Eigen::MatrixXcd::Identity(dd, dd);
    for (Eigen::Index a = 0; a < di; ++a) {
        for (Eigen::Index b = 0; b < di; ++b) {
            if (reject1(a, b) == 0.0) continue;
            unif.block(a * di, b * di, di, di) -= reject1(a, b) * Eigen::MatrixXcd::Identity(di, di);
        }
    }

    AcceptanceOperator op;
    op.n = c.n();
    op.register_dim = d;
    op.matrix = (eq + cons + unif) / 3.0;
    if ((op.matrix - op.matrix.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
        throw Error("acceptance operator is not Hermitian");
    }
    return op;
}

double expectation(const AcceptanceOperator &a, const PureState &joint) {
    if (joint.dimension() != static_cast<std::size_t>(a.matrix.rows())) {
        throw ShapeError("joint state dimension does not match the acceptance operator");
    }
    const auto v = as_vector(joint);
    return v.dot(a.matrix * v).real();
}

double expectation(const AcceptanceOperator &a, const PureState &first, const PureState &second) {
    if (first.dimension() != a.register_dim || second.dimension() != a.register_dim) {
        throw ShapeError("proof dimension does not match the acceptance operator");
    }
    return product_value(a.matrix, as_vector(first), as_vector(second));
}

double spectral_norm(const Eigen::MatrixXcd &m) {
    if (m.rows() != m.cols() || m.rows() == 0) throw InvalidInput("spectral_norm needs a nonempty square matrix");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
        throw InvalidInput("spectral_norm needs a Hermitian matrix");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(m.rows() - 1);
}

double power_method(const Eigen::MatrixXcd &m, std::size_t iterations, std::uint64_t seed) {
    if (m.rows() != m.cols() || m.rows() == 0) throw InvalidInput("power_method needs a nonempty square matrix");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    Eigen::VectorXcd x(m.rows());
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = {gauss(rng), gauss(rng)};
    x.normalize();
    for (std::size_t it = 0; it < iterations; ++it) {
        Eigen::VectorXcd y = m * x;
        const double norm = y.norm();
        if (norm == 0.0) return 0.0;
        x = y / norm;
    }
    return x.dot(m * x).real();
}

std::pair<PureState, PureState> honest_form_start(const SuccinctCircuit &c) {
    const auto col = min_conflict_coloring(expand(c)).padded(c.n());
    auto s = coloring_state(c.n(), col);
    return {s, s};
}

SeesawResult seesaw(const AcceptanceOperator &a, const SeesawOptions &opts) {
    const auto d = static_cast<Eigen::Index>(a.register_dim);
    const auto shape = proof_shape(a.n);

    std::vector<std::pair<Eigen::VectorXcd, Eigen::VectorXcd>> starts;
    for (const auto &[x, y] : opts.initial) starts.emplace_back(as_vector(x), as_vector(y));
    for (std::size_t r = 0; r < opts.restarts; ++r) {
        std::mt19937_64 rng(mix_seed(opts.seed + r));
        auto x = as_vector(random_state(shape, rng));
        auto y = as_vector(random_state(shape, rng));
        starts.emplace_back(std::move(x), std::move(y));
    }
    if (starts.empty()) throw InvalidInput("seesaw needs at least one start");

    SeesawResult best{as_state(shape, starts[0].first), as_state(shape, starts[0].second), -1.0, 0, starts.size(), opts.seed, {}};
    for (auto &[x, y] : starts) {
        std::vector<double> trace{product_value(a.matrix, x, y)};
        std::size_t it = 0;
        while (it < opts.max_iterations) {
            ++it;
            x = top_eigenvector(contract_second(a.matrix, y, d));
            y = top_eigenvector(contract_first(a.matrix, x, d));
            const double value = product_value(a.matrix, x, y);
            const double change = value - trace.back();
            trace.push_back(value);
            if (std::abs(change) < opts.tolerance) break;
        }
        if (trace.back() > best.value) {
            best.first = as_state(shape, x);
            best.second = as_state(shape, y);
            best.value = trace.back();
            best.iterations = it;
            best.trace = std::move(trace);
        }
    }
    return best;
}

}  // namespace uvlab
