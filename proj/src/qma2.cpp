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

#include "uvlab/qma2.hpp"

#include <cmath>

#include "uvlab/errors.hpp"

namespace uvlab {

EdgeTable::EdgeTable(const SuccinctCircuit &c) : n_(c.n()) {
    if (c.n() > kMaxExactBits) {
        throw CapacityError("exact enumeration supports n <= " + std::to_string(kMaxExactBits) + ", got n=" +
                            std::to_string(c.n()));
    }
    labels_ = std::size_t{1} << n_;
    adj_.assign(labels_ * labels_, 0);
    for (std::size_t u = 0; u < labels_; ++u) {
        for (std::size_t v = u + 1; v < labels_; ++v) adj_[u * labels_ + v] = eval_pair(c, u, v) == PairCode::Edge;
    }
}

ConsistencyBreakdown consistency_grid(const EdgeTable &edges, std::span<const double> p, std::span<const double> q) {
    const std::size_t outcomes = edges.labels() * kColors;
    if (p.size() != outcomes || q.size() != outcomes) throw ShapeError("outcome distribution does not match instance");
    ConsistencyBreakdown out;
    for (std::size_t a = 0; a < outcomes; ++a) {
        if (p[a] == 0) continue;
        const std::size_t v1 = a / kColors, c1 = a % kColors;
        for (std::size_t b = 0; b < outcomes; ++b) {
            if (q[b] == 0) continue;
            const std::size_t v2 = b / kColors, c2 = b % kColors;
            if (!consistency_rejects(edges, v1, c1, v2, c2)) continue;
            (v1 == v2 ? out.same_vertex_reject : out.edge_reject) += p[a] * q[b];
        }
    }
    return out;
}

UniformityBreakdown uniformity_branches(const PureState &proof) {
    if (proof.shape().num_registers() != 2) throw ShapeError("uniformity test needs a (node, color) proof");
    UniformityBreakdown out;
    auto color = uniformity_measure(proof, 1);
    out.color_uniform = color[0].probability;
    if (color[0].defined()) out.node_nonuniform = uniformity_measure(*color[0].post_state, 0)[1].probability;
    return out;
}

namespace {

void check_proof(const EdgeTable &edges, const PureState &r) {
    const auto &s = r.shape();
    if (s.num_registers() != 2 || s.dim(0) != edges.labels() || s.dim(1) != kColors) {
        throw ShapeError("proof must have a 2^" + std::to_string(edges.n()) + "-dimensional node register and a "
                         "3-dimensional color register");
    }
}

const std::size_t kBothRegisters[2] = {0, 1};

}  // namespace

VerdictReport acceptance_exact(const EdgeTable &edges, const PureState &r1, const PureState &r2) {
    check_proof(edges, r1);
    check_proof(edges, r2);
    VerdictReport rep;
    rep.p_equality = swap_test(r1, r2).acceptance;
    rep.consistency =
        consistency_grid(edges, marginal_distribution(r1, kBothRegisters), marginal_distribution(r2, kBothRegisters));
    rep.p_consistency = std::clamp(rep.consistency.accept(), 0.0, 1.0);
    rep.uniformity = uniformity_branches(r1);
    rep.p_uniformity = std::clamp(1.0 - rep.uniformity.reject(), 0.0, 1.0);
    rep.p_total = (rep.p_equality + rep.p_consistency + rep.p_uniformity) / 3.0;
    return rep;
}

VerdictReport acceptance_exact(const SuccinctCircuit &c, const PureState &r1, const PureState &r2) {
    return acceptance_exact(EdgeTable(c), r1, r2);
}

Qma2Sampler::Qma2Sampler(const SuccinctCircuit &c, const PureState &r1, const PureState &r2)
    : edges_(c), exact_(acceptance_exact(edges_, r1, r2)) {
    auto p = marginal_distribution(r1, kBothRegisters);
    auto q = marginal_distribution(r2, kBothRegisters);
    first_ = DiscreteSampler(p);
    second_ = DiscreteSampler(q);
}

SampledRun Qma2Sampler::run(std::mt19937_64 &rng) const {
    SampledRun out;
    out.test = static_cast<Qma2Test>(std::uniform_int_distribution<int>(0, 2)(rng));
    switch (out.test) {
        case Qma2Test::Equality: {
            const bool zero = bernoulli(rng, exact_.p_equality);
            out.outcomes = {zero ? 0U : 1U};
            out.accepted = zero;
            break;
        }
        case Qma2Test::Consistency: {
            const auto a = first_(rng), b = second_(rng);
            out.outcomes = {a, b};
            out.accepted = !consistency_rejects(edges_, a / kColors, a % kColors, b / kColors, b % kColors);
            break;
        }
        case Qma2Test::Uniformity: {
            const bool color_zero = bernoulli(rng, exact_.uniformity.color_uniform);
            out.outcomes = {color_zero ? 0U : 1U};
            out.accepted = true;
            if (color_zero) {
                const bool node_one = bernoulli(rng, exact_.uniformity.node_nonuniform);
                out.outcomes.push_back(node_one ? 1U : 0U);
                out.accepted = !node_one;
            }
            break;
        }
    }
    return out;
}

SampledRun run_sampled(const SuccinctCircuit &c, const PureState &r1, const PureState &r2, std::mt19937_64 &rng) {
    return Qma2Sampler(c, r1, r2).run(rng);
}

double soundness_bound(int n) {
    if (n < 1) throw InvalidInput("soundness_bound needs n >= 1");
    return 1.0 / (3e10 * std::pow(4.0, n));
}

}  // namespace uvlab
