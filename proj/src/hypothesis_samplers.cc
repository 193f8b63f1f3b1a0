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

#include "gbslab/hypothesis_samplers.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gbslab/sampler.h"

namespace gbslab {

ClickPattern thermal_sample(const Apparatus &apparatus, uint64_t seed) {
    return chain_rule_sample(thermal_state(apparatus), seed);
}

ClickDistribution thermal_distribution(const Apparatus &apparatus, std::optional<int> restrict_n) {
    return exact_distribution(thermal_state(apparatus), restrict_n);
}

DistinguishableSampler::DistinguishableSampler(const Apparatus &apparatus)
    : num_modes_(apparatus.num_modes), eta_(apparatus.efficiency.per_mode_eta) {
    apparatus.validate();
    if (num_modes_ > kMaxPatternModes) {
        throw std::invalid_argument("distinguishable sampler supports at most 32 modes");
    }
    const auto &u = apparatus.interferometer.matrix();
    std::vector<double> mean = input_mean_photons(apparatus);
    for (int i = 0; i < num_modes_; ++i) {
        if (mean[i] <= 0.0) {
            continue;
        }
        sources_.push_back(i);
        ratio_.push_back(mean[i] / (1.0 + mean[i]));
        std::vector<double> cdf(num_modes_);
        double running = 0.0;
        for (int j = 0; j < num_modes_; ++j) {
            running += std::norm(u(j, i));
            cdf[j] = running;
        }
        exit_cdf_.push_back(std::move(cdf));
    }
}

ClickPattern DistinguishableSampler::sample(Rng &rng) const {
    ClickPattern out{0, num_modes_};
    for (size_t s = 0; s < sources_.size(); ++s) {
        // P(K >= k) = ratio^k.
        double u = 1.0 - rng.uniform();
        auto photons = static_cast<uint64_t>(std::floor(std::log(u) / std::log(ratio_[s])));
        const auto &cdf = exit_cdf_[s];
        for (uint64_t p = 0; p < photons; ++p) {
            double v = rng.uniform() * cdf.back();
            int j = static_cast<int>(std::upper_bound(cdf.begin(), cdf.end(), v) - cdf.begin());
            j = std::min(j, num_modes_ - 1);
            if (rng.uniform() < eta_[j]) {
                out.bits |= 1u << j;
            }
        }
    }
    return out;
}

ClickPattern distinguishable_sample(const Apparatus &apparatus, uint64_t seed) {
    Rng rng(seed);
    return DistinguishableSampler(apparatus).sample(rng);
}

ClickDistribution distinguishable_distribution(const Apparatus &apparatus, std::optional<int> restrict_n) {
    apparatus.validate();
    const int m = apparatus.num_modes;
    if (m > kMaxExactModes) {
        throw std::invalid_argument("distinguishable_distribution: more than 20 modes");
    }
    const auto &u = apparatus.interferometer.matrix();
    const auto &eta = apparatus.efficiency.per_mode_eta;
    std::vector<double> mean = input_mean_photons(apparatus);
    const uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
    const size_t count = size_t{1} << m;

    std::vector<double> f(count, 1.0);
    for (int i = 0; i < m; ++i) {
        if (mean[i] <= 0.0) {
            continue;
        }
        std::vector<double> weight(m);
        for (int j = 0; j < m; ++j) {
            weight[j] = std::norm(u(j, i)) * eta[j];
        }
        for (size_t t = 0; t < count; ++t) {
            uint32_t outside = full & ~static_cast<uint32_t>(t);
            double w = 0.0;
            for (int j = 0; j < m; ++j) {
                if (outside >> j & 1) {
                    w += weight[j];
                }
            }
            f[t] /= 1.0 + mean[i] * w;
        }
    }
    // Moebius inversion: f[S] <- sum_{Z subset S} (-1)^{|S - Z|} f[Z].
    for (int b = 0; b < m; ++b) {
        for (size_t s = 0; s < count; ++s) {
            if (s >> b & 1) {
                f[s] -= f[s ^ (size_t{1} << b)];
            }
        }
    }
    std::vector<ClickDistribution::Entry> entries;
    for (size_t s = 0; s < count; ++s) {
        if (restrict_n && std::popcount(static_cast<uint32_t>(s)) != *restrict_n) {
            continue;
        }
        double p = f[s];
        if (p < 0.0 && p > -1e-12) {
            p = 0.0;
        }
        entries.push_back({static_cast<uint32_t>(s), p});
    }
    if (restrict_n) {
        return normalize_entries(m, restrict_n, std::move(entries));
    }
    return ClickDistribution(m, std::nullopt, std::move(entries));
}

ClickPattern uniform_sample(int num_modes, int clicks, Rng &rng) {
    if (num_modes < 1 || num_modes > kMaxPatternModes) {
        throw std::invalid_argument("uniform_sample: need 1..32 modes");
    }
    if (clicks < 0 || clicks > num_modes) {
        throw std::invalid_argument("uniform_sample: click count must lie in 0..m");
    }
    std::vector<int> order(num_modes);
    for (int i = 0; i < num_modes; ++i) {
        order[i] = i;
    }
    ClickPattern out{0, num_modes};
    for (int i = 0; i < clicks; ++i) {
        auto j = i + static_cast<int>(rng.below(num_modes - i));
        std::swap(order[i], order[j]);
        out.bits |= 1u << order[i];
    }
    return out;
}

ClickPattern uniform_sample(int num_modes, int clicks, uint64_t seed) {
    Rng rng(seed);
    return uniform_sample(num_modes, clicks, rng);
}

ClickDistribution uniform_distribution(int num_modes, int clicks) {
    std::vector<uint32_t> patterns = sector_patterns(num_modes, clicks);
    std::vector<ClickDistribution::Entry> entries;
    double p = 1.0 / static_cast<double>(patterns.size());
    for (uint32_t pattern : patterns) {
        entries.push_back({pattern, p});
    }
    return normalize_entries(num_modes, clicks, std::move(entries));
}

}  // namespace gbslab
