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

#include "uvlab/provers.hpp"

#include <cmath>

#include "uvlab/errors.hpp"

namespace uvlab {

RegisterShape proof_shape(int n) {
    if (n < 1 || n > 20) throw CapacityError("proof registers need 1 <= n <= 20");
    return RegisterShape({std::size_t{1} << n, kColors}, {"N", "C"});
}

PureState coloring_state(int n, const Coloring &col) {
    auto shape = proof_shape(n);
    const auto full = col.padded(n);
    const std::size_t nodes = shape.dim(0);
    std::vector<Amplitude> amps(shape.total_dimension(), 0.0);
    const double a = 1.0 / std::sqrt(static_cast<double>(nodes));
    for (std::size_t i = 0; i < nodes; ++i) {
        const auto c = full.colors[i];
        if (c >= kColors) throw InvalidInput("color " + std::to_string(c) + " at vertex " + std::to_string(i));
        amps[i * kColors + c] = a;
    }
    return make_trusted(std::move(shape), std::move(amps));
}

PureState honest_proof(const SuccinctCircuit &c, const Coloring &col) {
    const auto bad = monochromatic_edges(expand(c), col);
    if (!bad.empty()) {
        throw InvalidInput("coloring is not proper: " + std::to_string(bad.size()) + " monochromatic edge(s), first {" +
                           std::to_string(bad[0].first) + "," + std::to_string(bad[0].second) + "}");
    }
    return coloring_state(c.n(), col);
}

PureState near_coloring_proof(const SuccinctCircuit &c, const Coloring &col, std::size_t declared_violations) {
    if (declared_violations == 0) throw InvalidInput("a near-coloring must declare at least one violation");
    const auto bad = monochromatic_edges(expand(c), col);
    if (bad.size() != declared_violations) {
        throw InvalidInput("coloring has " + std::to_string(bad.size()) + " monochromatic edge(s), declared " +
                           std::to_string(declared_violations));
    }
    return coloring_state(c.n(), col);
}

ProofDecomposition decompose(const PureState &s) {
    const auto &shape = s.shape();
    if (shape.num_registers() != 2) throw ShapeError("decomposition needs a (node, color) two-register state");
    ProofDecomposition d;
    d.node_dim = shape.dim(0);
    d.color_dim = shape.dim(1);
    d.alpha.assign(d.node_dim, 0.0);
    d.beta.assign(d.node_dim * d.color_dim, 0.0);
    auto amps = s.amplitudes();
    std::vector<Amplitude> gamma(d.node_dim);
    double p0 = 0;
    for (std::size_t i = 0; i < d.node_dim; ++i) {
        double row = 0;
        Amplitude sum = 0;
        for (std::size_t j = 0; j < d.color_dim; ++j) {
            row += std::norm(amps[i * d.color_dim + j]);
            sum += amps[i * d.color_dim + j];
        }
        const double a = std::sqrt(row);
        d.alpha[i] = a;
        if (a > 0) {
            for (std::size_t j = 0; j < d.color_dim; ++j) d.beta[i * d.color_dim + j] = amps[i * d.color_dim + j] / a;
        } else {
            d.beta[i * d.color_dim] = 1.0;
        }
        // (I (x) <u_C|) psi, node component i
        gamma[i] = sum / std::sqrt(static_cast<double>(d.color_dim));
        p0 += std::norm(gamma[i]);
    }
    d.color_uniform_probability = p0;
    if (p0 > kZeroBranchProbability) {
        for (auto &g : gamma) g /= std::sqrt(p0);
        d.gamma = std::move(gamma);
    }
    return d;
}

PureState reconstruct(const ProofDecomposition &d) {
    RegisterShape shape({d.node_dim, d.color_dim}, {"N", "C"});
    std::vector<Amplitude> amps(d.node_dim * d.color_dim);
    for (std::size_t i = 0; i < d.node_dim; ++i) {
        for (std::size_t j = 0; j < d.color_dim; ++j) amps[i * d.color_dim + j] = d.alpha[i] * d.beta_at(i, j);
    }
    return PureState(std::move(shape), std::move(amps));
}

std::vector<PureState> random_product_proofs(const RegisterShape &shape, std::size_t k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PureState> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(random_state(shape, rng));
    return out;
}

std::vector<PureState> materialize(const ProverStrategy &s, const SuccinctCircuit &c, std::size_t k) {
    struct Visitor {
        const SuccinctCircuit &c;
        std::size_t k;
        std::vector<PureState> operator()(const strategy::Honest &h) const {
            return std::vector<PureState>(k, honest_proof(c, h.coloring));
        }
        std::vector<PureState> operator()(const strategy::NearColoring &nc) const {
            return std::vector<PureState>(k, near_coloring_proof(c, nc.coloring, nc.violations));
        }
        std::vector<PureState> operator()(const strategy::Arbitrary &a) const {
            auto st = reconstruct(a.table);
            if (!(st.shape() == proof_shape(c.n()))) throw ShapeError("decomposition table does not match the instance");
            return std::vector<PureState>(k, st);
        }
        std::vector<PureState> operator()(const strategy::Random &r) const {
            return random_product_proofs(proof_shape(c.n()), k, r.seed);
        }
    };
    return std::visit(Visitor{c, k}, s);
}

}  // namespace uvlab
