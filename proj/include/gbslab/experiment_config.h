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

#ifndef GBSLAB_EXPERIMENT_CONFIG_H
#define GBSLAB_EXPERIMENT_CONFIG_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gbslab/gaussian_state.h"

namespace gbslab {

enum class UnitarySource { haar, file, identity };
enum class GraphSource { none, file, random };

/// One run of the apparatus, read from "key = value" text. Keys:
///
///     modes = 12
///     squeezer = <mode_a> <mode_b> <r> [phase]      (repeatable, 0-based modes)
///     unitary = haar [seed] | file <path> | identity
///     efficiency = <eta> | <eta_1> ... <eta_m>
///     sector = <n>
///     samples = <count>
///     seed = <u64>
///     output = <dir>
///     lrt_samples = <count>
///     bootstrap = <replicas>
///     graph = file <path> | random <V> <edge_probability> <seed>
///     k = <even subgraph size>
///     trials = <count>
///     budgets = <N_1> <N_2> ...
///     mean_photons = <target mean photon number over graph modes>
///
/// '#' starts a comment. Unknown and repeated keys are errors.
struct ExperimentConfig {
    int modes = 0;
    std::vector<SqueezerSpec> squeezers;
    UnitarySource unitary = UnitarySource::haar;
    std::optional<uint64_t> unitary_seed;  // haar without a seed derives one from `seed`
    std::string unitary_file;
    std::vector<double> efficiency = {0.75};
    std::optional<int> sector;
    uint64_t samples = 100000;
    uint64_t seed = 1;
    std::string output;
    uint64_t lrt_samples = 10000;
    int bootstrap = 200;

    GraphSource graph = GraphSource::none;
    std::string graph_file;
    int graph_vertices = 0;
    double graph_edge_probability = 0.0;
    uint64_t graph_seed = 0;
    int k = 4;
    int trials = 100;
    std::vector<int> budgets = {10, 20, 50, 100, 200, 500};
    double mean_photons = 1.0;
};

/// Parses config text. Relative file paths are resolved against `base_dir`.
/// Throws ConfigError listing every syntax problem.
ExperimentConfig parse_config(const std::string &text, const std::filesystem::path &base_dir = {});
ExperimentConfig load_config(const std::filesystem::path &path);

/// Canonical text form: every key written explicitly, Haar seed resolved,
/// paths absolute. Parsing the result gives back the same config.
std::string format_config(const ExperimentConfig &config);

/// Seed of the Haar unitary actually used.
uint64_t resolved_unitary_seed(const ExperimentConfig &config);

enum class Verb { distribution, validate, maxhaf, cost };

/// Checks every precondition the verb relies on, including loading the
/// unitary and graph files. Throws one ConfigError listing all violations.
void validate_config(const ExperimentConfig &config, Verb verb);

/// Builds the apparatus. Assumes validate_config passed.
Apparatus build_apparatus(const ExperimentConfig &config);

/// 64-bit FNV-1a.
uint64_t fnv1a64(const std::string &data);

}  // namespace gbslab

#endif
