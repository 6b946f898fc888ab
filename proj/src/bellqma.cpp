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

#include "uvlab/bellqma.hpp"

#include <cmath>
#include <future>
#include <limits>

#include "uvlab/errors.hpp"
#include "uvlab/provers.hpp"
#include "uvlab/sampling.hpp"

namespace uvlab {

RegisterStatistics uniformity_statistics(const PureState &proof) {
    auto u = uniformity_branches(proof);
    RegisterStatistics s;
    s.x_one = 1.0 - u.color_uniform;
    s.x_zero_y_one = u.color_uniform * u.node_nonuniform;
    s.x_zero_y_zero = u.color_uniform - s.x_zero_y_one;
    return s;
}

std::size_t z_threshold(std::size_t k) {
    return (k + 5) / 6;
}

std::vector<double> z_distribution(std::span<const RegisterStatistics> stats) {
    std::vector<double> dp(stats.size() + 1, 0.0);
    dp[0] = 1.0;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const double p = stats[i].x_zero();
        for (std::size_t z = i + 1; z > 0; --z) dp[z] = dp[z] * (1.0 - p) + dp[z - 1] * p;
        dp[0] *= 1.0 - p;
    }
    return dp;
}

double uniformity_accept_exact(std::span<const RegisterStatistics> stats) {
    // dp[z]: probability that exactly z registers so far landed in Z, all with y = 0
    std::vector<double> dp(stats.size() + 1, 0.0);
    dp[0] = 1.0;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const auto &s = stats[i];
        for (std::size_t z = i + 1; z > 0; --z) dp[z] = dp[z] * s.x_one + dp[z - 1] * s.x_zero_y_zero;
        dp[0] *= s.x_one;
    }
    double acc = 0;
    for (std::size_t z = z_threshold(stats.size()); z < dp.size(); ++z) acc += dp[z];
    return std::clamp(acc, 0.0, 1.0);
}

namespace {

std::vector<RegisterStatistics> all_statistics(std::span<const PureState> proofs) {
    std::vector<RegisterStatistics> out;
    out.reserve(proofs.size());
    for (const auto &p : proofs) out.push_back(uniformity_statistics(p));
    return out;
}

}  // namespace

double uniformity_accept_exact(std::span<const PureState> proofs) {
    return uniformity_accept_exact(all_statistics(proofs));
}

std::vector<std::size_t> z_prime_set(std::span<const PureState> proofs) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < proofs.size(); ++i) {
        if (uniformity_statistics(proofs[i]).x_zero() >= 1.0 / 12.0) out.push_back(i);
    }
    return out;
}

std::uint64_t joint_outcome_count(int n, std::size_t k) {
    const std::uint64_t per = kColors << n;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / per) return std::numeric_limits<std::uint64_t>::max();
        total *= per;
    }
    return total;
}

namespace {

// Colors seen so far per vertex plus the list of distinct observed vertices.
class Observation {
   public:
    explicit Observation(std::size_t labels) : color_(labels, -1) {
        seen_.reserve(labels);
    }

    // Adds outcome (v, c); false if it conflicts with an earlier outcome.
    bool admit(const EdgeTable &edges, std::size_t v, int c) {
        if (color_[v] >= 0) return color_[v] == c;
        for (auto w : seen_) {
            if (color_[w] == c && edges.edge(v, w)) return false;
        }
        color_[v] = c;
        seen_.push_back(v);
        return true;
    }
    std::size_t mark() const {
        return seen_.size();
    }
    void rollback(std::size_t mark) {
        while (seen_.size() > mark) {
            color_[seen_.back()] = -1;
            seen_.pop_back();
        }
    }

   private:
    std::vector<int> color_;
    std::vector<std::size_t> seen_;
};

struct Support {
    std::vector<std::size_t> outcome;
    std::vector<double> prob;
};

double enumerate_accept(const EdgeTable &edges, const std::vector<Support> &support, std::size_t i, double weight,
                        Observation &obs) {
    if (i == support.size()) return weight;
    double acc = 0;
    const auto &s = support[i];
    for (std::size_t t = 0; t < s.outcome.size(); ++t) {
        const auto mark = obs.mark();
        const auto o = s.outcome[t];
        if (obs.admit(edges, o / kColors, static_cast<int>(o % kColors))) {
            acc += enumerate_accept(edges, support, i + 1, weight * s.prob[t], obs);
        }
        obs.rollback(mark);
    }
    return acc;
}

const std::size_t kBothRegisters[2] = {0, 1};

// No two outcomes in the union of supports reject together, so every joint
// outcome is accepted.
bool support_never_rejects(const EdgeTable &edges, const std::vector<std::vector<double>> &dists) {
    std::vector<std::size_t> all;
    std::vector<std::uint8_t> in(edges.labels() * kColors, 0);
    for (const auto &d : dists) {
        for (std::size_t o = 0; o < d.size(); ++o) {
            if (d[o] > 0 && !in[o]) {
                in[o] = 1;
                all.push_back(o);
            }
        }
    }
    for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            if (consistency_rejects(edges, all[a] / kColors, all[a] % kColors, all[b] / kColors, all[b] % kColors)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

ConsistencyEstimate consistency_accept(const EdgeTable &edges, std::span<const PureState> proofs,
                                       const BellOptions &opts) {
    for (const auto &p : proofs) {
        const auto &s = p.shape();
        if (s.num_registers() != 2 || s.dim(0) != edges.labels() || s.dim(1) != kColors) {
            throw ShapeError("proof does not match the instance's node/color layout");
        }
    }
    std::vector<std::vector<double>> dists;
    dists.reserve(proofs.size());
    for (const auto &p : proofs) dists.push_back(marginal_distribution(p, kBothRegisters));

    ConsistencyEstimate est;
    if (opts.mode == BellMode::Exact) {
        if (support_never_rejects(edges, dists)) {
            est.accept = 1.0;
            return est;
        }
        const auto grid = joint_outcome_count(edges.n(), proofs.size());
        if (grid > opts.budget) {
            throw CapacityError("exact consistency needs " +
                                (grid == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                                  : std::to_string(grid)) +
                                " joint outcomes, budget is " + std::to_string(opts.budget) +
                                "; use Monte-Carlo mode");
        }
        std::vector<Support> support(dists.size());
        for (std::size_t i = 0; i < dists.size(); ++i) {
            for (std::size_t o = 0; o < dists[i].size(); ++o) {
                if (dists[i][o] > 0) {
                    support[i].outcome.push_back(o);
                    support[i].prob.push_back(dists[i][o]);
                }
            }
        }
        Observation obs(edges.labels());
        est.accept = std::clamp(enumerate_accept(edges, support, 0, 1.0, obs), 0.0, 1.0);
        return est;
    }

    if (opts.samples == 0) throw InvalidInput("Monte-Carlo mode needs a positive sample count");
    std::vector<DiscreteSampler> samplers;
    samplers.reserve(dists.size());
    for (const auto &d : dists) samplers.emplace_back(d);

    auto run_chunk = [&](std::size_t chunk, std::uint64_t count) {
        std::mt19937_64 rng(mix_seed(opts.seed + chunk));
        Observation obs(edges.labels());
        std::uint64_t accepted = 0;
        for (std::uint64_t s = 0; s < count; ++s) {
            bool ok = true;
            for (const auto &sampler : samplers) {
                const auto o = sampler(rng);
                if (!obs.admit(edges, o / kColors, static_cast<int>(o % kColors))) {
                    ok = false;
                    break;
                }
            }
            obs.rollback(0);
            accepted += ok;
        }
        return accepted;
    };
    std::vector<std::future<std::uint64_t>> futures;
    for (std::size_t j = 0; j < kMonteCarloChunks; ++j) {
        const std::uint64_t count = opts.samples / kMonteCarloChunks + (j < opts.samples % kMonteCarloChunks ? 1 : 0);
        futures.push_back(std::async(std::launch::async, run_chunk, j, count));
    }
    std::uint64_t accepted = 0;
    for (auto &f : futures) accepted += f.get();
    est.samples = opts.samples;
    est.accept = static_cast<double>(accepted) / static_cast<double>(opts.samples);
    est.halfwidth = hoeffding_halfwidth(opts.samples);
    return est;
}

ConsistencyEstimate consistency_accept(const SuccinctCircuit &c, std::span<const PureState> proofs,
                                       const BellOptions &opts) {
    return consistency_accept(EdgeTable(c), proofs, opts);
}

BellReport bell_acceptance(const SuccinctCircuit &c, std::span<const PureState> proofs, const BellOptions &opts) {
    if (proofs.size() < 2) throw InvalidInput("the Bell verifier needs k >= 2 proofs");
    BellReport rep;
    const auto stats = all_statistics(proofs);
    const auto cons = consistency_accept(c, proofs, opts);
    rep.p_consistency = cons.accept;
    rep.p_uniformity = uniformity_accept_exact(stats);
    rep.p_total = 0.5 * (rep.p_consistency + rep.p_uniformity);
    rep.mode = opts.mode;
    rep.samples = cons.samples;
    rep.seed = opts.seed;
    rep.ci_halfwidth = 0.5 * cons.halfwidth;
    rep.z_distribution = z_distribution(stats);
    const auto thr = z_threshold(proofs.size());
    for (std::size_t z = 0; z < thr && z < rep.z_distribution.size(); ++z) rep.z_tail += rep.z_distribution[z];
    return rep;
}

double hoeffding_halfwidth(std::uint64_t samples, double confidence) {
    if (samples == 0) throw InvalidInput("half-width of zero samples");
    return std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<double>(samples)));
}

double bell_completeness_floor(std::size_t k) {
    return 1.0 - std::exp2(-static_cast<double>(k) / 40.0);
}

double bell_soundness_bound(int n) {
    return 1.0 / (12000.0 * std::pow(4.0, n));
}

}  // namespace uvlab
