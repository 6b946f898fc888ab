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

// Two-proof verifier: with probability 1/3 each, an Equality (SWAP) test, a
// Consistency test on computational-basis outcomes, or a Uniformity test on
// the first proof.

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "uvlab/provers.hpp"
#include "uvlab/sampling.hpp"
#include "uvlab/state.hpp"
#include "uvlab/succinct_graph.hpp"

namespace uvlab {

/// Largest label width for exact consistency enumeration.
inline constexpr int kMaxExactBits = 8;

/// Edge relation over all 2^n labels, tabulated from eval_pair.
class EdgeTable {
   public:
    explicit EdgeTable(const SuccinctCircuit &c);

    int n() const {
        return n_;
    }
    std::size_t labels() const {
        return labels_;
    }
    /// Orders the pair before querying; equal labels are never an edge.
    bool edge(std::size_t a, std::size_t b) const {
        if (a > b) std::swap(a, b);
        return adj_[a * labels_ + b] != 0;
    }

   private:
    int n_;
    std::size_t labels_;
    std::vector<std::uint8_t> adj_;
};

/// Consistency-test reject predicate on outcomes (v1, c1), (v2, c2).
inline bool consistency_rejects(const EdgeTable &edges, std::size_t v1, std::size_t c1, std::size_t v2,
                                std::size_t c2) {
    if (v1 == v2) return c1 != c2;
    return c1 == c2 && edges.edge(v1, v2);
}

struct ConsistencyBreakdown {
    double same_vertex_reject = 0.0;  // v1 = v2, c1 != c2
    double edge_reject = 0.0;         // adjacent, c1 = c2
    double accept() const {
        return 1.0 - same_vertex_reject - edge_reject;
    }
};

/// Enumerates the outcome grid of two independent (node, color) distributions
/// indexed as v*3 + c.
ConsistencyBreakdown consistency_grid(const EdgeTable &edges, std::span<const double> p, std::span<const double> q);

struct UniformityBreakdown {
    double color_uniform = 0.0;      // Pr[color outcome 0]
    double node_nonuniform = 0.0;    // Pr[node outcome 1 | color outcome 0]
    double reject() const {
        return color_uniform * node_nonuniform;
    }
};

/// Color register measured first, then the node register on the post state.
UniformityBreakdown uniformity_branches(const PureState &proof);

struct VerdictReport {
    double p_equality = 0.0;
    double p_consistency = 0.0;
    double p_uniformity = 0.0;
    double p_total = 0.0;
    ConsistencyBreakdown consistency;
    UniformityBreakdown uniformity;
};

VerdictReport acceptance_exact(const SuccinctCircuit &c, const PureState &r1, const PureState &r2);
VerdictReport acceptance_exact(const EdgeTable &edges, const PureState &r1, const PureState &r2);

enum class Qma2Test { Equality, Consistency, Uniformity };

struct SampledRun {
    bool accepted = false;
    Qma2Test test = Qma2Test::Equality;
    /// Measurement outcomes in the order they were drawn: the ancilla bit for
    /// Equality, (v1*3+c1, v2*3+c2) for Consistency, the color outcome and
    /// (if 0) the node outcome for Uniformity.
    std::vector<std::size_t> outcomes;
};

/// Precomputes the branch distributions of one proof pair for repeated runs.
class Qma2Sampler {
   public:
    Qma2Sampler(const SuccinctCircuit &c, const PureState &r1, const PureState &r2);

    SampledRun run(std::mt19937_64 &rng) const;
    const VerdictReport &exact() const {
        return exact_;
    }

   private:
    EdgeTable edges_;
    VerdictReport exact_;
    DiscreteSampler first_, second_;
};

SampledRun run_sampled(const SuccinctCircuit &c, const PureState &r1, const PureState &r2, std::mt19937_64 &rng);

/// Rejection floor for no-instances: 1 / (3 * 10^10 * 4^n).
double soundness_bound(int n);

}  // namespace uvlab
