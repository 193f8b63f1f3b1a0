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

#ifndef GBSLAB_HYPOTHESIS_SAMPLERS_H
#define GBSLAB_HYPOTHESIS_SAMPLERS_H

#include <cstdint>
#include <optional>
#include <vector>

#include "gbslab/click_distribution.h"
#include "gbslab/gaussian_state.h"
#include "gbslab/rng.h"

namespace gbslab {

// Classical hypotheses a GBS device has to be distinguished from.

/// Same network and detectors, but every source replaced by independent
/// thermal light of equal mean photon number.
ClickPattern thermal_sample(const Apparatus &apparatus, uint64_t seed);
ClickDistribution thermal_distribution(const Apparatus &apparatus, std::optional<int> restrict_n = std::nullopt);

/// Distinguishable particles: input mode i emits a geometric (thermal-law)
/// number of photons with mean sinh^2(r_i); each photon independently exits
/// at output j with probability |U_ji|^2 and is detected with probability eta_j.
class DistinguishableSampler {
   public:
    explicit DistinguishableSampler(const Apparatus &apparatus);
    ClickPattern sample(Rng &rng) const;

   private:
    int num_modes_;
    std::vector<int> sources_;
    std::vector<double> ratio_;  // mu / (1 + mu) per source
    std::vector<std::vector<double>> exit_cdf_;
    std::vector<double> eta_;
};

ClickPattern distinguishable_sample(const Apparatus &apparatus, uint64_t seed);

/// Exact distinguishable-particle click distribution. With
/// w_i(T) = sum_{j in T} |U_ji|^2 eta_j the chance that no click lands outside T is
///     F(T) = prod_i 1 / (1 + mu_i w_i(complement of T)),
/// and P(S) follows from F by Moebius inversion over subsets of S.
ClickDistribution distinguishable_distribution(const Apparatus &apparatus,
                                               std::optional<int> restrict_n = std::nullopt);

/// Uniform over the C(m, n) patterns with exactly n clicks.
ClickPattern uniform_sample(int num_modes, int clicks, Rng &rng);
ClickPattern uniform_sample(int num_modes, int clicks, uint64_t seed);
ClickDistribution uniform_distribution(int num_modes, int clicks);

}  // namespace gbslab

#endif
