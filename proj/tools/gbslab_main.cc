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

#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gbslab/errors.h"
#include "gbslab/experiment_config.h"
#include "gbslab/runner.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct VerbArgs {
    std::string config;
    std::string out;
    std::optional<uint64_t> seed;
};

using RunFn = std::function<std::vector<std::string>(const gbslab::ExperimentConfig &, const std::filesystem::path &)>;

int run_verb(const VerbArgs &args, const RunFn &run) {
    try {
        gbslab::ExperimentConfig config = gbslab::load_config(args.config);
        if (args.seed) {
            config.seed = *args.seed;
        }
        std::string out = args.out.empty() ? config.output : args.out;
        if (out.empty()) {
            throw gbslab::ConfigError("output: no --out given and no 'output' key in " + args.config);
        }
        for (const auto &name : run(config, out)) {
            std::printf("%s\n", (std::filesystem::path(out) / name).string().c_str());
        }
        return 0;
    } catch (const gbslab::ConfigError &e) {
        std::fprintf(stderr, "config error in %s:\n", args.config.c_str());
        for (const auto &v : e.violations()) {
            std::fprintf(stderr, "  %s\n", v.c_str());
        }
        return kExitConfig;
    } catch (const gbslab::NumericError &e) {
        std::fprintf(stderr, "numeric guard failed (%s): %s\n", args.config.c_str(), e.what());
        return kExitNumeric;
    } catch (const std::invalid_argument &e) {
        std::fprintf(stderr, "invalid input (%s): %s\n", args.config.c_str(), e.what());
        return kExitConfig;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error (%s): %s\n", args.config.c_str(), e.what());
        return 1;
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Gaussian boson sampling laboratory"};
    app.set_version_flag("--version", std::string(gbslab::kVersion));
    app.require_subcommand(1);

    struct Verb {
        const char *name;
        const char *help;
        RunFn run;
    };
    const Verb verbs[] = {
        {"distribution", "Exact and sampled click distributions with metric reports", gbslab::run_distribution},
        {"validate", "Likelihood-ratio counters against the classical hypotheses", gbslab::run_validation},
        {"maxhaf", "Random max-Haf search driven by GBS, thermal and uniform samplers", gbslab::run_maxhaf},
        {"cost", "Operation counts of the chain-rule sampler", gbslab::run_cost_report},
    };
    VerbArgs args[std::size(verbs)];
    std::vector<CLI::App *> subs;
    for (size_t i = 0; i < std::size(verbs); ++i) {
        CLI::App *sub = app.add_subcommand(verbs[i].name, verbs[i].help);
        sub->add_option("--config", args[i].config, "Experiment config file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", args[i].out, "Output directory (overrides the 'output' key)");
        sub->add_option("--seed", args[i].seed, "Override the config seed");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }
    for (size_t i = 0; i < subs.size(); ++i) {
        if (subs[i]->parsed()) {
            return run_verb(args[i], verbs[i].run);
        }
    }
    return kExitConfig;
}
