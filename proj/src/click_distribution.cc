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

#include "gbslab/click_distribution.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gbslab/errors.h"

namespace gbslab {

std::string ClickPattern::to_string() const {
    std::string out(num_modes, '0');
    for (int i = 0; i < num_modes; ++i) {
        if (clicked(i)) {
            out[i] = '1';
        }
    }
    return out;
}

ClickPattern ClickPattern::parse(std::string_view text) {
    if (text.empty() || text.size() > kMaxPatternModes) {
        throw std::invalid_argument("click pattern must have 1..32 characters");
    }
    ClickPattern p{0, static_cast<int>(text.size())};
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            p.bits |= 1u << i;
        } else if (text[i] != '0') {
            throw std::invalid_argument("click pattern characters must be 0 or 1");
        }
    }
    return p;
}

std::vector<uint32_t> sector_patterns(int num_modes, int clicks) {
    if (num_modes < 0 || num_modes > kMaxPatternModes || clicks < 0 || clicks > num_modes) {
        throw std::invalid_argument("sector_patterns: need 0 <= clicks <= modes <= 32");
    }
    std::vector<uint32_t> out;
    if (clicks == 0) {
        out.push_back(0);
        return out;
    }
    // Gosper's hack walks the fixed-popcount masks in increasing order.
    uint64_t mask = (uint64_t{1} << clicks) - 1;
    const uint64_t limit = uint64_t{1} << num_modes;
    while (mask < limit) {
        out.push_back(static_cast<uint32_t>(mask));
        uint64_t c = mask & -mask;
        uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return out;
}

ClickDistribution::ClickDistribution(int num_modes, std::optional<int> sector, std::vector<Entry> entries,
                                     bool renormalized, double sector_mass)
    : num_modes_(num_modes),
      sector_(sector),
      entries_(std::move(entries)),
      renormalized_(renormalized),
      sector_mass_(sector_mass) {
    if (num_modes_ < 1 || num_modes_ > kMaxPatternModes) {
        throw std::invalid_argument("click distribution needs 1..32 modes");
    }
    double total = 0.0;
    for (size_t i = 0; i < entries_.size(); ++i) {
        const auto &e = entries_[i];
        if (i > 0 && entries_[i - 1].pattern >= e.pattern) {
            throw std::invalid_argument("click distribution entries must be sorted and unique");
        }
        if (num_modes_ < 32 && (e.pattern >> num_modes_) != 0) {
            throw std::invalid_argument("click pattern uses modes beyond the distribution");
        }
        if (sector_ && std::popcount(e.pattern) != *sector_) {
            throw std::invalid_argument("click pattern outside the distribution's sector");
        }
        if (!(e.probability >= 0.0)) {
            throw std::invalid_argument("click probabilities must be non-negative");
        }
        total += e.probability;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw NumericError("click distribution sums to " + std::to_string(total) + ", not 1");
    }
}

double ClickDistribution::probability(uint32_t pattern) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), pattern,
                               [](const Entry &e, uint32_t p) { return e.pattern < p; });
    return it != entries_.end() && it->pattern == pattern ? it->probability : 0.0;
}

double ClickDistribution::total() const {
    double t = 0.0;
    for (const auto &e : entries_) {
        t += e.probability;
    }
    return t;
}

ClickDistribution ClickDistribution::restricted(int clicks) const {
    if (sector_ && *sector_ != clicks) {
        throw std::invalid_argument("cannot restrict a sector-" + std::to_string(*sector_) +
                                    " distribution to sector " + std::to_string(clicks));
    }
    std::vector<Entry> picked;
    for (const auto &e : entries_) {
        if (std::popcount(e.pattern) == clicks) {
            picked.push_back(e);
        }
    }
    ClickDistribution out = normalize_entries(num_modes_, clicks, std::move(picked));
    out.sector_mass_ *= sector_mass_;
    return out;
}

std::vector<double> ClickDistribution::click_count_marginal() const {
    std::vector<double> out(num_modes_ + 1, 0.0);
    for (const auto &e : entries_) {
        out[std::popcount(e.pattern)] += e.probability;
    }
    return out;
}

ClickDistribution normalize_entries(int num_modes, std::optional<int> sector,
                                    std::vector<ClickDistribution::Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) { return a.pattern < b.pattern; });
    double mass = 0.0;
    for (const auto &e : entries) {
        mass += e.probability;
    }
    if (!(mass > 0.0)) {
        throw NumericError(sector ? "click sector " + std::to_string(*sector) + " has zero probability"
                                  : std::string("click distribution has zero total probability"));
    }
    for (auto &e : entries) {
        e.probability /= mass;
    }
    return ClickDistribution(num_modes, sector, std::move(entries), sector.has_value(), mass);
}

std::string format_distribution_csv(const ClickDistribution &dist) {
    std::string out = "pattern,probability\n";
    char buf[64];
    for (const auto &e : dist.entries()) {
        out += ClickPattern{e.pattern, dist.num_modes()}.to_string();
        std::snprintf(buf, sizeof buf, ",%.17g\n", e.probability);
        out += buf;
    }
    return out;
}

std::string format_sample_stream(const std::vector<ClickPattern> &samples) {
    std::string out;
    for (const auto &s : samples) {
        out += s.to_string();
        out += '\t';
        out += std::to_string(s.click_count());
        out += '\n';
    }
    return out;
}

}  // namespace gbslab
