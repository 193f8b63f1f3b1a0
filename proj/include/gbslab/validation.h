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

#ifndef GBSLAB_VALIDATION_H
#define GBSLAB_VALIDATION_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gbslab/click_distribution.h"

namespace gbslab {

/// S = sum_i sqrt(p_i q_i). Both distributions must describe the same modes
/// and the same click sector (or both be full distributions).
double similarity(const ClickDistribution &p, const ClickDistribution &q);

/// D = (1/2) sum_i |p_i - q_i| under the same compatibility rule.
double tvd(const ClickDistribution &p, const ClickDistribution &q);

/// Relative frequencies of the samples that fall in sector `clicks`.
/// Throws std::invalid_argument when none do.
ClickDistribution empirical_distribution(std::span<const ClickPattern> samples, int num_modes, int clicks);

struct MetricReport {
    double similarity = 0.0;
    double tvd = 0.0;
    int click_sector = 0;
    size_t sample_count = 0;  // samples inside the sector
    double similarity_stderr = 0.0;
    double tvd_stderr = 0.0;
    int bootstrap_replicas = 0;
};

/// Compares the in-sector samples against `theory` (a sector distribution).
/// Standard errors are the spread over `bootstrap_replicas` resamples of the
/// in-sector samples, drawn from Rng(seed).
MetricReport metric_report(std::span<const ClickPattern> samples, const ClickDistribution &theory,
                           int bootstrap_replicas = 200, uint64_t seed = 0);

std::string format_metric_report(const MetricReport &report);
std::string format_metric_csv(const MetricReport &report);

struct SortedColumn {
    std::vector<uint32_t> patterns;
    std::vector<double> probabilities;  // ascending
};

struct SortedOverlay {
    int num_modes = 0;
    SortedColumn experiment;
    SortedColumn theory;
    SortedColumn thermal;
};

/// Each distribution independently sorted ascending over every pattern of
/// the shared sector (ties keep pattern order).
SortedOverlay sorted_overlay(const ClickDistribution &experiment, const ClickDistribution &theory,
                             const ClickDistribution &thermal);
SortedColumn sorted_column(const ClickDistribution &dist);
std::string format_sorted_overlay_csv(const SortedOverlay &overlay);

/// Running likelihood-ratio counter for one hypothesis.
struct LrtTrace {
    std::string hypothesis;
    std::vector<long> counter;  // value after each sample

    long final_value() const {
        return counter.empty() ? 0 : counter.back();
    }
    /// Positive final counter: the samples look more like GBS than the hypothesis.
    bool rejects_hypothesis() const {
        return final_value() > 0;
    }
};

/// Per sample: +1 if p_gbs(s) > p_hyp(s), -1 if smaller, 0 on an exact tie.
/// A sample with zero probability under both models is an error.
LrtTrace likelihood_ratio_test(std::span<const ClickPattern> samples, const ClickDistribution &p_gbs,
                               const ClickDistribution &p_hyp, std::string hypothesis);

/// Expected counter step for samples drawn from `truth`:
///     sum_s truth(s) sign(p_gbs(s) - p_hyp(s)).
double expected_lrt_drift(const ClickDistribution &truth, const ClickDistribution &p_gbs,
                          const ClickDistribution &p_hyp);

/// "sample_index,counter" CSV, indices starting at 1.
std::string format_lrt_csv(const LrtTrace &trace);

}  // namespace gbslab

#endif
