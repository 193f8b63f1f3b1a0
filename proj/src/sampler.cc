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

#include "gbslab/sampler.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gbslab/errors.h"
#include "gbslab/linalg.h"
#include "gbslab/matrix_fn.h"

namespace gbslab {

namespace {

Eigen::MatrixXd sigma_q_of(const GaussianState &state) {
    const auto n = state.covariance().rows();
    return state.covariance() + 0.5 * Eigen::MatrixXd::Identity(n, n);
}

double clean_probability(double p, uint32_t pattern) {
    if (p >= 0.0) {
        return p;
    }
    if (p > -1e-12) {
        return 0.0;
    }
    throw NumericError("negative click probability " + std::to_string(p) + " for pattern mask " +
                       std::to_string(pattern));
}

}  // namespace

ClickDistribution exact_distribution(const GaussianState &state, std::optional<int> restrict_n) {
    const int m = state.num_modes();
    if (m > kMaxExactModes) {
        throw std::invalid_argument("exact_distribution: " + std::to_string(m) + " modes exceeds the limit of 20");
    }
    if (restrict_n && (*restrict_n < 0 || *restrict_n > m)) {
        throw std::invalid_argument("exact_distribution: click sector outside 0..m");
    }
    Eigen::MatrixXd sigma_q = sigma_q_of(state);
    Eigen::MatrixXd sigma_q_inv = lu_inverse(sigma_q);
    double det = lu_determinant(sigma_q);
    if (!(det > 0.0)) {
        throw NumericError("exact_distribution: det(Sigma_Q) is not positive");
    }
    const double vacuum_probability = 1.0 / std::sqrt(det);

    std::vector<uint32_t> patterns;
    if (restrict_n) {
        patterns = sector_patterns(m, *restrict_n);
    } else {
        patterns.resize(size_t{1} << m);
        for (size_t i = 0; i < patterns.size(); ++i) {
            patterns[i] = static_cast<uint32_t>(i);
        }
    }
    std::vector<ClickDistribution::Entry> entries;
    entries.reserve(patterns.size());
    std::vector<int> modes;
    for (uint32_t pattern : patterns) {
        modes.clear();
        for (int i = 0; i < m; ++i) {
            if (pattern >> i & 1) {
                modes.push_back(i);
            }
        }
        double p = torontonian_of_modes(sigma_q_inv, m, modes) * vacuum_probability;
        entries.push_back({pattern, clean_probability(p, pattern)});
    }
    if (restrict_n) {
        return normalize_entries(m, restrict_n, std::move(entries));
    }
    return ClickDistribution(m, std::nullopt, std::move(entries));
}

double no_click_probability(const GaussianState &state, std::span<const int> modes) {
    const int m = state.num_modes();
    Eigen::MatrixXd sigma_q = sigma_q_of(state);
    IncrementalCholesky factor(sigma_q);
    for (int mode : modes) {
        if (mode < 0 || mode >= m) {
            throw std::invalid_argument("no_click_probability: mode out of range");
        }
        factor.push(mode);
        factor.push(mode + m);
    }
    return factor.inv_sqrt_det();
}

ChainRuleSampler::ChainRuleSampler(const GaussianState &state)
    : num_modes_(state.num_modes()), sigma_q_(sigma_q_of(state)), vacuum_(state.is_vacuum()) {
    if (num_modes_ > kMaxPatternModes) {
        throw std::invalid_argument("chain-rule sampler supports at most 32 modes");
    }
}

ClickPattern ChainRuleSampler::sample(Rng &rng, OpCounter *counter) const {
    ClickPattern out{0, num_modes_};
    if (vacuum_) {
        return out;
    }
    const int m = num_modes_;
    // Factor of Sigma_Q on the silent modes decided so far.
    IncrementalCholesky silent(sigma_q_, counter);
    std::vector<int> clicked;
    double prefix = 1.0;
    for (int k = 0; k < m; ++k) {
        const int restore = silent.size();
        silent.push(k);
        silent.push(k + m);
        double p_silent = alternating_lattice_sum(silent, m, clicked, counter);
        double p_click = 1.0 - p_silent / prefix;
        if (counter) {
            counter->mul();
            counter->add();
        }
        if (p_click < -1e-9 || p_click > 1.0 + 1e-9 || !std::isfinite(p_click)) {
            throw NumericError("chain-rule sampler: conditional click probability " + std::to_string(p_click) +
                               " at mode " + std::to_string(k));
        }
        p_click = std::clamp(p_click, 0.0, 1.0);
        if (rng.uniform() < p_click) {
            out.bits |= 1u << k;
            clicked.push_back(k);
            prefix -= p_silent;
            silent.truncate(restore);
            if (counter) {
                counter->add();
            }
        } else {
            prefix = p_silent;
        }
    }
    return out;
}

ClickPattern chain_rule_sample(const GaussianState &state, uint64_t seed, OpCounter *counter) {
    Rng rng(seed);
    return ChainRuleSampler(state).sample(rng, counter);
}

std::vector<ClickPattern> chain_rule_samples(const GaussianState &state, size_t count, uint64_t seed) {
    ChainRuleSampler sampler(state);
    Rng rng(seed);
    std::vector<ClickPattern> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        out.push_back(sampler.sample(rng));
    }
    return out;
}

TableSampler::TableSampler(const ClickDistribution &dist) : num_modes_(dist.num_modes()) {
    double running = 0.0;
    for (const auto &e : dist.entries()) {
        if (e.probability <= 0.0) {
            continue;
        }
        running += e.probability;
        patterns_.push_back(e.pattern);
        cumulative_.push_back(running);
    }
    if (patterns_.empty()) {
        throw std::invalid_argument("TableSampler: distribution has no mass");
    }
}

ClickPattern TableSampler::sample(Rng &rng) const {
    double u = rng.uniform() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    size_t idx = std::min<size_t>(it - cumulative_.begin(), patterns_.size() - 1);
    return ClickPattern{patterns_[idx], num_modes_};
}

}  // namespace gbslab
