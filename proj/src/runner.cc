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

#include "gbslab/runner.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "gbslab/click_distribution.h"
#include "gbslab/errors.h"
#include "gbslab/hypothesis_samplers.h"
#include "gbslab/maxhaf.h"
#include "gbslab/rng.h"
#include "gbslab/sampler.h"
#include "gbslab/validation.h"

namespace gbslab {

namespace {

// Collects the files of one run and writes the manifest last.
class RunWriter {
   public:
    RunWriter(std::filesystem::path dir, const ExperimentConfig &config, std::string verb)
        : dir_(std::move(dir)), verb_(std::move(verb)), seed_(config.seed), resolved_(format_config(config)) {
        std::filesystem::create_directories(dir_);
        write("config.resolved", resolved_);
    }

    void write(const std::string &name, const std::string &content) {
        std::ofstream out(dir_ / name, std::ios::binary);
        out << content;
        if (!out) {
            throw std::runtime_error("cannot write " + (dir_ / name).string());
        }
        files_.emplace_back(name, fnv1a64(content));
    }

    std::vector<std::string> finish() {
        char buf[64];
        std::string m = "version: " + std::string(kVersion) + "\nverb: " + verb_ + "\n";
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(resolved_)));
        m += "config_hash: fnv1a64:" + std::string(buf) + "\n";
        m += "seed: " + std::to_string(seed_) + "\nfiles:\n";
        std::vector<std::string> names;
        for (const auto &[name, hash] : files_) {
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
            m += "  " + name + " fnv1a64:" + buf + "\n";
            names.push_back(name);
        }
        std::ofstream out(dir_ / "manifest.txt", std::ios::binary);
        out << m;
        names.push_back("manifest.txt");
        return names;
    }

   private:
    std::filesystem::path dir_;
    std::string verb_;
    uint64_t seed_;
    std::string resolved_;
    std::vector<std::pair<std::string, uint64_t>> files_;
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::vector<int> graph_modes(int v) {
    std::vector<int> modes(v);
    for (int i = 0; i < v; ++i) {
        modes[i] = i;
    }
    return modes;
}

WeightedGraph config_graph(const ExperimentConfig &c) {
    if (c.graph == GraphSource::file) {
        return load_graph(c.graph_file);
    }
    return random_graph(c.graph_vertices, c.graph_edge_probability, c.graph_seed);
}

}  // namespace

std::vector<std::string> run_distribution(const ExperimentConfig &config, const std::filesystem::path &out_dir) {
    validate_config(config, Verb::distribution);
    const Apparatus app = build_apparatus(config);
    const GaussianState state = gbs_state(app);
    const int m = app.num_modes;
    RunWriter out(out_dir, config, "distribution");

    ClickDistribution exact = exact_distribution(state);
    ClickDistribution thermal = thermal_distribution(app);
    out.write("exact_full.csv", format_distribution_csv(exact));
    auto samples = chain_rule_samples(state, config.samples, derive_seed(config.seed, kStreamSamples));
    out.write("samples.txt", format_sample_stream(samples));

    std::vector<int> sectors;
    if (config.sector) {
        sectors.push_back(*config.sector);
    } else {
        std::vector<uint64_t> hits(m + 1, 0);
        for (const auto &s : samples) {
            ++hits[s.click_count()];
        }
        for (int n = 0; n <= m; ++n) {
            if (hits[n] > 0) {
                sectors.push_back(n);
            }
        }
    }

    const uint64_t boot_seed = derive_seed(config.seed, kStreamBootstrap);
    std::string summary = "sector,sector_mass,sample_count,similarity,tvd\n";
    for (int n : sectors) {
        const std::string tag = "_sector" + std::to_string(n);
        ClickDistribution q = exact.restricted(n);
        ClickDistribution p = empirical_distribution(samples, m, n);
        MetricReport report = metric_report(samples, q, config.bootstrap, derive_seed(boot_seed, n));
        out.write("exact" + tag + ".csv", format_distribution_csv(q));
        out.write("empirical" + tag + ".csv", format_distribution_csv(p));
        out.write("metrics" + tag + ".txt", format_metric_report(report));
        out.write("metrics" + tag + ".csv", format_metric_csv(report));
        out.write("sorted_overlay" + tag + ".csv", format_sorted_overlay_csv(sorted_overlay(p, q, thermal.restricted(n))));
        summary += std::to_string(n) + "," + fmt("%.12g", q.sector_mass()) + "," + std::to_string(report.sample_count) +
                   "," + fmt("%.12f", report.similarity) + "," + fmt("%.12f", report.tvd) + "\n";
    }
    out.write("summary.csv", summary);
    return out.finish();
}

std::vector<std::string> run_validation(const ExperimentConfig &config, const std::filesystem::path &out_dir) {
    validate_config(config, Verb::validate);
    const Apparatus app = build_apparatus(config);
    const int m = app.num_modes;
    const int n = config.sector.value_or(std::min(3, m));
    RunWriter out(out_dir, config, "validate");

    ClickDistribution p_gbs = exact_distribution(gbs_state(app), n);
    struct Hypothesis {
        std::string label;
        ClickDistribution dist;
    };
    std::vector<Hypothesis> hyps = {
        {"thermal", thermal_distribution(app, n)},
        {"distinguishable", distinguishable_distribution(app, n)},
        {"uniform", uniform_distribution(m, n)},
        {"control", p_gbs},
    };

    TableSampler sampler(p_gbs);
    Rng rng(derive_seed(config.seed, kStreamLrt));
    std::vector<ClickPattern> samples;
    samples.reserve(config.lrt_samples);
    for (uint64_t i = 0; i < config.lrt_samples; ++i) {
        samples.push_back(sampler.sample(rng));
    }
    out.write("lrt_samples.txt", format_sample_stream(samples));

    const double big_n = static_cast<double>(config.lrt_samples);
    std::string summary = "sector: " + std::to_string(n) + "\nsamples: " + std::to_string(config.lrt_samples) +
                          "\ncounter: per-sample sign counter, exact ties step 0\n";
    for (const auto &h : hyps) {
        LrtTrace trace = likelihood_ratio_test(samples, p_gbs, h.dist, h.label);
        out.write("lrt_" + h.label + ".csv", format_lrt_csv(trace));
        double drift = expected_lrt_drift(p_gbs, p_gbs, h.dist);
        summary += h.label + ": final_counter=" + std::to_string(trace.final_value()) +
                   " expected_final=" + fmt("%.1f", drift * big_n);
        if (h.label == "control") {
            bool ok = std::abs(static_cast<double>(trace.final_value())) < 4.0 * std::sqrt(big_n);
            summary += std::string(" within_4_sqrt_n=") + (ok ? "yes" : "no") + "\n";
        } else {
            summary += std::string(" verdict=") + (trace.rejects_hypothesis() ? "rejected" : "not_rejected") + "\n";
        }
    }
    out.write("lrt_summary.txt", summary);
    return out.finish();
}

std::vector<std::string> run_maxhaf(const ExperimentConfig &config, const std::filesystem::path &out_dir) {
    validate_config(config, Verb::maxhaf);
    const WeightedGraph g = config_graph(config);
    const int v = g.num_vertices();
    RunWriter out(out_dir, config, "maxhaf");
    out.write("graph.txt", format_graph(g));

    MaxHafResult best = brute_force_max_haf(g, config.k);
    std::string opt = "k: " + std::to_string(config.k) + "\nsubset:";
    for (int x : best.subset) {
        opt += " " + std::to_string(x);
    }
    opt += "\nabs_hafnian: " + fmt("%.17g", best.value) + "\n";
    out.write("optimum.txt", opt);
    if (!(best.value > 0.0)) {
        throw NumericError("every " + std::to_string(config.k) + "-vertex subgraph has zero hafnian");
    }

    GraphEncoding enc = encode_graph(g, std::max(config.modes, v), config.mean_photons);
    std::string e = "modes: " + std::to_string(enc.apparatus.num_modes) + "\ngraph_modes: " + std::to_string(v) +
                    "\nscale: " + fmt("%.17g", enc.scale) + "\nmean_photons: " + fmt("%.17g", enc.mean_photons) +
                    "\n";
    for (const auto &s : enc.apparatus.squeezers) {
        e += "squeezer: " + std::to_string(s.mode_a) + " " + std::to_string(s.mode_b) + " " + fmt("%.17g", s.r) + "\n";
    }
    out.write("encoding.txt", e);
    out.write("unitary.txt", format_unitary(enc.apparatus.interferometer));

    const auto modes = graph_modes(v);
    TableSampler gbs(exact_distribution(gbs_state(enc.apparatus).marginal(modes), config.k));
    TableSampler thermal(exact_distribution(thermal_state(enc.apparatus).marginal(modes), config.k));
    const int k = config.k;
    struct Run {
        std::string label;
        PatternSource source;
        uint64_t stream;
    };
    std::vector<Run> runs = {
        {"gbs", [&](Rng &r) { return gbs.sample(r); }, kStreamSearchGbs},
        {"thermal", [&](Rng &r) { return thermal.sample(r); }, kStreamSearchThermal},
        {"uniform", [&](Rng &r) { return uniform_sample(v, k, r); }, kStreamSearchUniform},
    };
    std::string summary = "label,N,mean_normalized_best,stderr,empty_trials\n";
    for (const auto &run : runs) {
        SearchCurve curve = random_search(run.source, g, k, config.budgets, config.trials, best.value,
                                          derive_seed(config.seed, run.stream), run.label);
        out.write("curve_" + run.label + ".csv", format_search_curve_csv(curve));
        for (size_t b = 0; b < curve.budgets.size(); ++b) {
            summary += run.label + "," + std::to_string(curve.budgets[b]) + "," +
                       fmt("%.12f", curve.mean_normalized_best[b]) + "," + fmt("%.12f", curve.standard_error[b]) +
                       "," + std::to_string(curve.empty_trials[b]) + "\n";
        }
    }
    out.write("search_summary.csv", summary);
    return out.finish();
}

CostReport measure_cost(const GaussianState &state, uint64_t samples, uint64_t seed, std::span<const int> sectors) {
    CostReport report;
    report.num_modes = state.num_modes();
    report.total_samples = samples;
    const int m = state.num_modes();
    std::vector<uint64_t> count(m + 1, 0);
    std::vector<double> mul(m + 1, 0.0), add(m + 1, 0.0);
    ChainRuleSampler sampler(state);
    Rng rng(seed);
    for (uint64_t i = 0; i < samples; ++i) {
        OpCounter c;
        int n = sampler.sample(rng, &c).click_count();
        ++count[n];
        mul[n] += static_cast<double>(c.multiplications);
        add[n] += static_cast<double>(c.additions);
    }
    std::vector<double> xs, ys;
    for (int n : sectors) {
        CostRow row;
        row.clicks = n;
        if (n >= 0 && n <= m && count[n] > 0) {
            row.samples = count[n];
            row.mean_multiplications = mul[n] / count[n];
            row.mean_additions = add[n] / count[n];
            if (row.mean_multiplications > 0.0) {
                xs.push_back(n);
                ys.push_back(std::log2(row.mean_multiplications));
            }
        }
        report.rows.push_back(row);
    }
    if (xs.size() >= 2) {
        double mx = 0.0, my = 0.0;
        for (size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= xs.size();
        my /= ys.size();
        double sxy = 0.0, sxx = 0.0;
        for (size_t i = 0; i < xs.size(); ++i) {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
        }
        report.slope = sxy / sxx;
    }
    return report;
}

namespace {

std::string reference_for(int clicks, const double (&table)[3]) {
    if (clicks >= 3 && clicks <= 5) {
        return fmt("%.0f", table[clicks - 3]);
    }
    return "n/a";
}

}  // namespace

std::string format_cost_report(const CostReport &r) {
    std::string out = "modes: " + std::to_string(r.num_modes) + "\nsamples: " + std::to_string(r.total_samples) + "\n";
    for (const auto &row : r.rows) {
        out += "clicks: " + std::to_string(row.clicks) + " samples: " + std::to_string(row.samples) +
               " mean_multiplications: " + fmt("%.1f", row.mean_multiplications) +
               " mean_additions: " + fmt("%.1f", row.mean_additions) +
               " reference_multiplications: " + reference_for(row.clicks, kReferenceMultiplications) +
               " reference_additions: " + reference_for(row.clicks, kReferenceAdditions) + "\n";
    }
    if (r.slope) {
        bool ok = std::abs(*r.slope - kCostSlopeTarget) <= kCostSlopeTolerance;
        out += "slope_log2_multiplications: " + fmt("%.4f", *r.slope) + "\n";
        out += std::string("scaling_check: ") + (ok ? "PASS" : "FAIL") + " (target " + fmt("%.2f", kCostSlopeTarget) +
               " +/- " + fmt("%.2f", kCostSlopeTolerance) + ")\n";
    } else {
        out += "slope_log2_multiplications: n/a\nscaling_check: n/a (fewer than two populated sectors)\n";
    }
    return out;
}

std::string format_cost_csv(const CostReport &r) {
    std::string out = "clicks,samples,mean_multiplications,mean_additions,reference_multiplications,reference_additions\n";
    for (const auto &row : r.rows) {
        out += std::to_string(row.clicks) + "," + std::to_string(row.samples) + "," +
               fmt("%.3f", row.mean_multiplications) + "," + fmt("%.3f", row.mean_additions) + "," +
               reference_for(row.clicks, kReferenceMultiplications) + "," +
               reference_for(row.clicks, kReferenceAdditions) + "\n";
    }
    return out;
}

std::vector<std::string> run_cost_report(const ExperimentConfig &config, const std::filesystem::path &out_dir) {
    validate_config(config, Verb::cost);
    const Apparatus app = build_apparatus(config);
    RunWriter out(out_dir, config, "cost");
    const int sectors[] = {3, 4, 5};
    CostReport report = measure_cost(gbs_state(app), config.samples, derive_seed(config.seed, kStreamCost), sectors);
    out.write("cost_report.txt", format_cost_report(report));
    out.write("cost_report.csv", format_cost_csv(report));
    return out.finish();
}

}  // namespace gbslab
