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

#ifndef GBSLAB_CLICK_DISTRIBUTION_H
#define GBSLAB_CLICK_DISTRIBUTION_H

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gbslab {

inline constexpr int kMaxPatternModes = 32;

/// Set of output modes whose threshold detectors fired. Bit i is mode i.
struct ClickPattern {
    uint32_t bits = 0;
    int num_modes = 0;

    bool clicked(int mode) const {
        return (bits >> mode) & 1u;
    }
    int click_count() const {
        return std::popcount(bits);
    }

    /// One character per mode, mode 1 first: "100100..." means modes 1 and 4 clicked.
    std::string to_string() const;
    static ClickPattern parse(std::string_view text);

    friend bool operator==(const ClickPattern &, const ClickPattern &) = default;
};

/// All patterns over `num_modes` modes with exactly `clicks` bits, ascending.
std::vector<uint32_t> sector_patterns(int num_modes, int clicks);

/// Normalized probability table over click patterns, either over every
/// pattern or over one click-count sector (then renormalized within it).
class ClickDistribution {
   public:
    struct Entry {
        uint32_t pattern = 0;
        double probability = 0.0;
    };

    /// Entries are sorted and must be unique, non-negative, and sum to 1 within
    /// 1e-9. `sector_mass` records the sector's un-renormalized probability.
    ClickDistribution(int num_modes, std::optional<int> sector, std::vector<Entry> entries, bool renormalized = false,
                      double sector_mass = 1.0);

    int num_modes() const {
        return num_modes_;
    }
    std::optional<int> sector() const {
        return sector_;
    }
    bool renormalized() const {
        return renormalized_;
    }
    double sector_mass() const {
        return sector_mass_;
    }
    const std::vector<Entry> &entries() const {
        return entries_;
    }
    size_t size() const {
        return entries_.size();
    }

    /// Probability of `pattern`; zero when it is not in the table.
    double probability(uint32_t pattern) const;
    double total() const;

    /// Sector `clicks`, renormalized. Throws NumericError for an empty sector.
    ClickDistribution restricted(int clicks) const;

    /// Probability of each click count 0..num_modes.
    std::vector<double> click_count_marginal() const;

   private:
    int num_modes_;
    std::optional<int> sector_;
    std::vector<Entry> entries_;
    bool renormalized_;
    double sector_mass_;
};

/// Renormalizes raw (pattern, weight) pairs into a distribution over `sector`
/// (or over all patterns when no sector is given).
ClickDistribution normalize_entries(int num_modes, std::optional<int> sector,
                                    std::vector<ClickDistribution::Entry> entries);

/// "pattern,probability" CSV, one row per entry, patterns as bitstrings.
std::string format_distribution_csv(const ClickDistribution &dist);

/// One sample per line: bitstring, tab, click count.
std::string format_sample_stream(const std::vector<ClickPattern> &samples);

}  // namespace gbslab

#endif
