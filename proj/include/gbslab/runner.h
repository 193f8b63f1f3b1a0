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

#ifndef GBSLAB_RUNNER_H
#define GBSLAB_RUNNER_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbslab/experiment_config.h"
#include "gbslab/gaussian_state.h"

namespace gbslab {

inline constexpr const char *kVersion = "0.1.0";

/// Seed streams derived from the config seed with derive_seed(seed, stream).
enum SeedStream : uint64_t {
    kStreamUnitary = 0,
    kStreamSamples = 1,
    kStreamBootstrap = 2,
    kStreamLrt = 3,
    kStreamCost = 4,
    kStreamSearchGbs = 10,
    kStreamSearchThermal = 11,
    kStreamSearchUniform = 12,
};

/// Each run validates the config, writes its artifacts into `out_dir`
/// (created if needed) plus config.resolved and manifest.txt, and returns the
/// written file names. Running with config.resolved reproduces every file.
std::vector<std::string> run_distribution(const ExperimentConfig &config, const std::filesystem::path &out_dir);
std::vector<std::string> run_validation(const ExperimentConfig &config, const std::filesystem::path &out_dir);
std::vector<std::string> run_maxhaf(const ExperimentConfig &config, const std::filesystem::path &out_dir);
std::vector<std::string> run_cost_report(const ExperimentConfig &config, const std::filesystem::path &out_dir);

/// Published per-sample operation counts for 3, 4 and 5 clicks at 12 modes.
inline constexpr double kReferenceMultiplications[3] = {7400.0, 9800.0, 13000.0};
inline constexpr double kReferenceAdditions[3] = {6900.0, 9000.0, 11900.0};

struct CostRow {
    int clicks = 0;
    uint64_t samples = 0;  // draws that ended with this click count
    double mean_multiplications = 0.0;
    double mean_additions = 0.0;
};

struct CostReport {
    int num_modes = 0;
    uint64_t total_samples = 0;
    std::vector<CostRow> rows;
    /// Least-squares slope of log2(mean multiplications) against clicks, over
    /// rows with samples; empty with fewer than two such rows.
    std::optional<double> slope;
};

/// Draws `samples` chain-rule samples with op counting and averages the
/// counts per click count in `sectors`.
CostReport measure_cost(const GaussianState &state, uint64_t samples, uint64_t seed, std::span<const int> sectors);

/// Slope tolerance of the 2^n scaling check.
inline constexpr double kCostSlopeTarget = 1.0;
inline constexpr double kCostSlopeTolerance = 0.15;

std::string format_cost_report(const CostReport &report);
std::string format_cost_csv(const CostReport &report);

}  // namespace gbslab

#endif
