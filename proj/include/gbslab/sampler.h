// Copyright 2026 The gbslab Authors
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

#ifndef GBSLAB_SAMPLER_H
#define GBSLAB_SAMPLER_H

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gbslab/click_distribution.h"
#include "gbslab/gaussian_state.h"
#include "gbslab/op_counter.h"
#include "gbslab/rng.h"

namespace gbslab {

/// Exhaustive enumeration is refused above this many modes.
inline constexpr int kMaxExactModes = 20;

/// Threshold-detector click distribution of a Gaussian state,
///     P(S) = Tor(O_S) / sqrt(det Sigma_Q),   Sigma_Q = Sigma + I/2,  O = I - Sigma_Q^{-1},
/// over every pattern, or over one click-count sector (renormalized, with the
/// sector's total probability kept in sector_mass()).
///
/// Throws std::invalid_argument for more than kMaxExactModes modes and
/// NumericError if the kernels report an unphysical state.
ClickDistribution exact_distribution(const GaussianState &state, std::optional<int> restrict_n = std::nullopt);

/// Probability that none of `modes` click: 1 / sqrt(det Sigma_Q restricted to them).
double no_click_probability(const GaussianState &state, std::span<const int> modes);

/// Chain-rule sampler. Modes are decided in ascending order; with clicked
/// set C and silent set N fixed so far,
///     P(C clicked, N + {k} silent) = sum_{Z subset C} (-1)^|Z| / sqrt(det Sigma_Q[N + {k} + Z]),
/// and mode k clicks with probability 1 - P(C, N + {k}) / P(C, N). The
/// determinants come from Cholesky factors extended along the subset lattice,
/// so the cost of a step grows as 2^|C|.
class ChainRuleSampler {
   public:
    explicit ChainRuleSampler(const GaussianState &state);

    /// Draws one pattern. If `counter` is given, every scalar multiply and
    /// add in the determinant and inclusion-exclusion arithmetic is tallied.
    /// Throws NumericError when a conditional probability leaves
    /// [-1e-9, 1 + 1e-9]; values inside that band are clamped.
    ClickPattern sample(Rng &rng, OpCounter *counter = nullptr) const;

    int num_modes() const {
        return num_modes_;
    }

   private:
    int num_modes_;
    Eigen::MatrixXd sigma_q_;
    bool vacuum_;
};

ClickPattern chain_rule_sample(const GaussianState &state, uint64_t seed, OpCounter *counter = nullptr);

/// `count` consecutive draws from one stream seeded with `seed`.
std::vector<ClickPattern> chain_rule_samples(const GaussianState &state, size_t count, uint64_t seed);

/// Inverse-CDF draws from a tabulated distribution. Used for post-selected
/// sector sampling where rejection from the chain rule would be wasteful.
class TableSampler {
   public:
    explicit TableSampler(const ClickDistribution &dist);
    ClickPattern sample(Rng &rng) const;

   private:
    int num_modes_;
    std::vector<uint32_t> patterns_;
    std::vector<double> cumulative_;
};

}  // namespace gbslab

#endif
