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

#include "gbslab/validation.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gbslab/rng.h"

namespace gbslab {

namespace {

void require_compatible(const ClickDistribution &p, const ClickDistribution &q) {
    if (p.num_modes() != q.num_modes()) {
        throw std::invalid_argument("distributions cover different mode counts");
    }
    if (p.sector() != q.sector()) {
        throw std::invalid_argument("distributions belong to different click sectors");
    }
}

// Calls fn(p_i, q_i) over the union of both supports.
template <typename Fn>
void merge_walk(const ClickDistribution &p, const ClickDistribution &q, Fn fn) {
    const auto &a = p.entries();
    const auto &b = q.entries();
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].pattern < b[j].pattern)) {
            fn(a[i++].probability, 0.0);
        } else if (i == a.size() || b[j].pattern < a[i].pattern) {
            fn(0.0, b[j++].probability);
        } else {
            fn(a[i++].probability, b[j++].probability);
        }
    }
}

double stddev(const std::vector<double> &xs) {
    if (xs.size() < 2) {
        return 0.0;
    }
    double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    double ss = 0.0;
    for (double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    return std::sqrt(ss / (xs.size() - 1));
}

// Similarity and TVD of empirical counts against a sector distribution.
std::pair<double, double> count_metrics(const std::map<uint32_t, size_t> &counts, size_t total,
                                        const ClickDistribution &theory) {
    double s = 0.0, d = 0.0, covered = 0.0;
    for (const auto &[pattern, c] : counts) {
        double p = static_cast<double>(c) / total;
        double q = theory.probability(pattern);
        s += std::sqrt(p * q);
        d += std::abs(p - q);
        covered += q;
    }
    d += std::max(0.0, 1.0 - covered);  // theory mass on unseen patterns
    return {s, 0.5 * d};
}

}  // namespace

double similarity(const ClickDistribution &p, const ClickDistribution &q) {
    require_compatible(p, q);
    double s = 0.0;
    merge_walk(p, q, [&](double a, double b) { s += std::sqrt(a * b); });
    return std::min(s, 1.0);
}

double tvd(const ClickDistribution &p, const ClickDistribution &q) {
    require_compatible(p, q);
    double d = 0.0;
    merge_walk(p, q, [&](double a, double b) { d += std::abs(a - b); });
    return std::min(0.5 * d, 1.0);
}

ClickDistribution empirical_distribution(std::span<const ClickPattern> samples, int num_modes, int clicks) {
    std::map<uint32_t, size_t> counts;
    size_t total = 0;
    for (const auto &s : samples) {
        if (s.num_modes != num_modes) {
            throw std::invalid_argument("sample mode count does not match");
        }
        if (s.click_count() == clicks) {
            ++counts[s.bits];
            ++total;
        }
    }
    if (total == 0) {
        throw std::invalid_argument("no samples in click sector " + std::to_string(clicks));
    }
    std::vector<ClickDistribution::Entry> entries;
    for (const auto &[pattern, c] : counts) {
        entries.push_back({pattern, static_cast<double>(c)});
    }
    return normalize_entries(num_modes, clicks, std::move(entries));
}

MetricReport metric_report(std::span<const ClickPattern> samples, const ClickDistribution &theory,
                           int bootstrap_replicas, uint64_t seed) {
    if (!theory.sector()) {
        throw std::invalid_argument("metric_report compares within one click sector");
    }
    const int n = *theory.sector();
    std::vector<uint32_t> in_sector;
    for (const auto &s : samples) {
        if (s.num_modes != theory.num_modes()) {
            throw std::invalid_argument("sample mode count does not match");
        }
        if (s.click_count() == n) {
            in_sector.push_back(s.bits);
        }
    }
    if (in_sector.empty()) {
        throw std::invalid_argument("no samples in click sector " + std::to_string(n));
    }
    MetricReport report;
    report.click_sector = n;
    report.sample_count = in_sector.size();
    report.bootstrap_replicas = bootstrap_replicas;

    std::map<uint32_t, size_t> counts;
    for (uint32_t b : in_sector) {
        ++counts[b];
    }
    auto [s, d] = count_metrics(counts, in_sector.size(), theory);
    report.similarity = std::min(s, 1.0);
    report.tvd = std::min(d, 1.0);

    Rng rng(seed);
    std::vector<double> ss, ds;
    for (int rep = 0; rep < bootstrap_replicas; ++rep) {
        counts.clear();
        for (size_t i = 0; i < in_sector.size(); ++i) {
            ++counts[in_sector[rng.below(in_sector.size())]];
        }
        auto [bs, bd] = count_metrics(counts, in_sector.size(), theory);
        ss.push_back(bs);
        ds.push_back(bd);
    }
    report.similarity_stderr = stddev(ss);
    report.tvd_stderr = stddev(ds);
    return report;
}

std::string format_metric_report(const MetricReport &r) {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "click_sector: %d\nsample_count: %zu\nsimilarity: %.12f\nsimilarity_stderr: %.12f\n"
                  "tvd: %.12f\ntvd_stderr: %.12f\nstderr_method: bootstrap\nbootstrap_replicas: %d\n",
                  r.click_sector, r.sample_count, r.similarity, r.similarity_stderr, r.tvd, r.tvd_stderr,
                  r.bootstrap_replicas);
    return buf;
}

std::string format_metric_csv(const MetricReport &r) {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "click_sector,sample_count,similarity,similarity_stderr,tvd,tvd_stderr,bootstrap_replicas\n"
                  "%d,%zu,%.12f,%.12f,%.12f,%.12f,%d\n",
                  r.click_sector, r.sample_count, r.similarity, r.similarity_stderr, r.tvd, r.tvd_stderr,
                  r.bootstrap_replicas);
    return buf;
}

SortedColumn sorted_column(const ClickDistribution &dist) {
    if (!dist.sector()) {
        throw std::invalid_argument("sorted_overlay works on one click sector");
    }
    SortedColumn col;
    col.patterns = sector_patterns(dist.num_modes(), *dist.sector());
    std::stable_sort(col.patterns.begin(), col.patterns.end(),
                     [&](uint32_t a, uint32_t b) { return dist.probability(a) < dist.probability(b); });
    for (uint32_t p : col.patterns) {
        col.probabilities.push_back(dist.probability(p));
    }
    return col;
}

SortedOverlay sorted_overlay(const ClickDistribution &experiment, const ClickDistribution &theory,
                             const ClickDistribution &thermal) {
    require_compatible(experiment, theory);
    require_compatible(theory, thermal);
    return SortedOverlay{theory.num_modes(), sorted_column(experiment), sorted_column(theory),
                         sorted_column(thermal)};
}

std::string format_sorted_overlay_csv(const SortedOverlay &o) {
    std::string out =
        "rank,experiment_pattern,experiment,theory_pattern,theory,thermal_pattern,thermal\n";
    char buf[96];
    for (size_t i = 0; i < o.theory.patterns.size(); ++i) {
        out += std::to_string(i + 1);
        for (const SortedColumn *col : {&o.experiment, &o.theory, &o.thermal}) {
            out += ',';
            out += ClickPattern{col->patterns[i], o.num_modes}.to_string();
            std::snprintf(buf, sizeof buf, ",%.17g", col->probabilities[i]);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

LrtTrace likelihood_ratio_test(std::span<const ClickPattern> samples, const ClickDistribution &p_gbs,
                               const ClickDistribution &p_hyp, std::string hypothesis) {
    require_compatible(p_gbs, p_hyp);
    LrtTrace trace;
    trace.hypothesis = std::move(hypothesis);
    trace.counter.reserve(samples.size());
    long c = 0;
    for (const auto &s : samples) {
        double a = p_gbs.probability(s.bits);
        double b = p_hyp.probability(s.bits);
        if (a == 0.0 && b == 0.0) {
            throw std::invalid_argument("sample " + s.to_string() + " has zero probability under both models");
        }
        if (a > b) {
            ++c;
        } else if (a < b) {
            --c;
        }
        trace.counter.push_back(c);
    }
    return trace;
}

double expected_lrt_drift(const ClickDistribution &truth, const ClickDistribution &p_gbs,
                          const ClickDistribution &p_hyp) {
    double drift = 0.0;
    for (const auto &e : truth.entries()) {
        double a = p_gbs.probability(e.pattern);
        double b = p_hyp.probability(e.pattern);
        drift += e.probability * (a > b ? 1.0 : a < b ? -1.0 : 0.0);
    }
    return drift;
}

std::string format_lrt_csv(const LrtTrace &trace) {
    std::string out = "sample_index,counter\n";
    for (size_t i = 0; i < trace.counter.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += std::to_string(trace.counter[i]);
        out += '\n';
    }
    return out;
}

}  // namespace gbslab
