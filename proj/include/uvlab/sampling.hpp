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

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace uvlab {

/// Inverse-CDF sampler over a finite distribution.
class DiscreteSampler {
   public:
    DiscreteSampler() = default;
    explicit DiscreteSampler(std::span<const double> probs) {
        cdf_.reserve(probs.size());
        double acc = 0;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            acc += probs[i];
            cdf_.push_back(acc);
            if (probs[i] > 0) last_ = i;
        }
    }

    std::size_t operator()(std::mt19937_64 &rng) const {
        const double u = std::uniform_real_distribution<double>(0.0, cdf_.back())(rng);
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        return std::min(static_cast<std::size_t>(it - cdf_.begin()), last_);
    }

   private:
    std::vector<double> cdf_;
    std::size_t last_ = 0;
};

/// Bernoulli draw that never fires for p = 0 and always fires for p = 1.
inline bool bernoulli(std::mt19937_64 &rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

/// splitmix64 finalizer; used to derive per-worker seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace uvlab
