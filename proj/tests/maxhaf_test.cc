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

#include "gbslab/maxhaf.h"

#include <gtest/gtest.h>

#include <numbers>

#include "gbslab/errors.h"
#include "gbslab/hypothesis_samplers.h"
#include "gbslab/matrix_fn.h"
#include "gbslab/sampler.h"
#include "test_support.h"

namespace gbslab {
namespace {

using cd = std::complex<double>;

WeightedGraph complete_graph(int v) {
    return WeightedGraph(Eigen::MatrixXcd::Ones(v, v) - Eigen::MatrixXcd::Identity(v, v));
}

WeightedGraph random_complex_graph(int v, uint64_t seed) {
    Rng rng(seed);
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(v, v);
    for (int i = 0; i < v; ++i) {
        for (int j = i + 1; j < v; ++j) {
            if (rng.uniform() < 0.7) {
                a(i, j) = a(j, i) = cd(rng.normal(), rng.normal());
            }
        }
    }
    return WeightedGraph(a);
}

// Every k-subset by bitmask, independent of the lexicographic walk.
double naive_max_haf(const WeightedGraph &g, int k) {
    double best = 0.0;
    for (uint32_t mask = 0; mask < (1u << g.num_vertices()); ++mask) {
        if (std::popcount(mask) == k) {
            best = std::max(best, std::abs(brute_force_hafnian(g.induced(mask))));
        }
    }
    return best;
}

TEST(WeightedGraph, Invariants) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(3, 3);
    a(0, 1) = 1.0;
    EXPECT_THROW(WeightedGraph{a}, std::invalid_argument);
    a(1, 0) = 1.0;
    a(2, 2) = 0.5;
    EXPECT_THROW(WeightedGraph{a}, std::invalid_argument);
}

TEST(GraphFile, RoundTripAndErrors) {
    WeightedGraph g = random_complex_graph(6, 3);
    WeightedGraph back = parse_graph(format_graph(g));
    EXPECT_EQ(back.adjacency(), g.adjacency());
    WeightedGraph simple = parse_graph("# triangle\n3\n0 1 0.5\n1 2 1.5,-2\n");
    EXPECT_EQ(simple.adjacency()(2, 1), cd(1.5, -2));
    EXPECT_EQ(simple.adjacency()(0, 2), cd(0.0));
    try {
        parse_graph("3\n0 0 1\n0 5 1\n0 1 x\n0 1 1\n1 0 2\n");
        FAIL() << "expected ConfigError";
    } catch (const ConfigError &e) {
        EXPECT_EQ(e.violations().size(), 4u) << e.what();
    }
    EXPECT_THROW(load_graph("/nonexistent/graph.txt"), ConfigError);
}

TEST(EncodeGraph, SingleEdgeIsOneSqueezedPair) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2);
    a(0, 1) = a(1, 0) = cd(0.3, 0.4);
    GraphEncoding enc = encode_graph(WeightedGraph(a), 2, 0.5);
    ASSERT_EQ(enc.apparatus.squeezers.size(), 1u);
    EXPECT_EQ(enc.apparatus.num_modes, 2);
    const auto &s = enc.apparatus.squeezers[0];
    EXPECT_EQ(std::minmax(s.mode_a, s.mode_b), std::minmax(0, 1));
    EXPECT_NEAR(std::tanh(s.r), enc.scale * 0.5, 1e-14);
    EXPECT_NEAR(enc.mean_photons, 0.5, 1e-12);
    GaussianState st = gbs_state(enc.apparatus);
    EXPECT_NEAR(st.mean_photon_number(), 0.5, 1e-12);
    ProportionalityFit fit = fit_proportional(sampling_matrix(st), a);
    EXPECT_LT(fit.relative_residual, 1e-12);
    EXPECT_NEAR(fit.constant.real(), enc.scale, 1e-12);
    EXPECT_NEAR(fit.constant.imag(), 0.0, 1e-12);
}

TEST(EncodeGraph, EmptyGraphIsVacuum) {
    GraphEncoding enc = encode_graph(WeightedGraph(Eigen::MatrixXcd::Zero(4, 4)), 6);
    EXPECT_TRUE(enc.apparatus.squeezers.empty());
    EXPECT_EQ(enc.apparatus.num_modes, 6);
    EXPECT_TRUE(gbs_state(enc.apparatus).is_vacuum());
}

TEST(SamplingMatrix, PairWithPhase) {
    // exp(e^{i phi} tanh r a^dag b^dag) |0>: B = e^{i phi} tanh r [[0, 1], [1, 0]].
    const double r = 0.4, phi = std::numbers::pi / 2;
    GaussianState s = apply_two_mode_squeezer(GaussianState::vacuum(2), {0, 1, r, phi});
    Eigen::MatrixXcd b = sampling_matrix(s);
    EXPECT_LT(std::abs(b(0, 1) - std::polar(std::tanh(r), phi)), 1e-14);
    EXPECT_LT(std::abs(b(0, 0)), 1e-14);
}

TEST(EncodeGraph, RandomComplexGraphRoundTrip) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        WeightedGraph g = random_complex_graph(6, seed);
        GraphEncoding enc = encode_graph(g, 6, 1.0);
        EXPECT_GE(enc.apparatus.num_modes, 6);
        GaussianState st = gbs_state(enc.apparatus);
        const int modes[] = {0, 1, 2, 3, 4, 5};
        GaussianState graph_part = st.marginal(modes);
        ProportionalityFit fit = fit_proportional(sampling_matrix(graph_part), g.adjacency());
        EXPECT_LT(fit.relative_residual, 1e-8);
        EXPECT_NEAR(fit.constant.real(), enc.scale, 1e-9 * enc.scale);
        EXPECT_NEAR(enc.mean_photons, 1.0, 1e-9);
        EXPECT_NEAR(graph_part.mean_photon_number(), 1.0, 1e-9);
    }
}

TEST(EncodeGraph, GraphModeClicksFollowHafnians) {
    // Small scale: k-click probabilities are ~ |haf(c A_S)|^2 at leading order.
    WeightedGraph g = random_graph(6, 0.8, 12);
    GraphEncoding enc = encode_graph(g, 6, 0.01);
    const int modes[] = {0, 1, 2, 3, 4, 5};
    ClickDistribution d = exact_distribution(gbs_state(enc.apparatus).marginal(modes), 2);
    double norm = 0.0;
    for (uint32_t p : sector_patterns(6, 2)) {
        norm += std::norm(hafnian(g.induced(p)));
    }
    for (uint32_t p : sector_patterns(6, 2)) {
        EXPECT_NEAR(d.probability(p), std::norm(hafnian(g.induced(p))) / norm, 2e-2);
    }
}

TEST(EncodeGraph, ScaleCappedBySqueezingLimit) {
    GraphEncoding enc = encode_graph(complete_graph(4), 4, 1e6);
    for (const auto &s : enc.apparatus.squeezers) {
        EXPECT_LE(s.r, kMaxSqueezing + 1e-12);
    }
    EXPECT_LT(enc.mean_photons, 1e6);
    EXPECT_THROW(encode_graph(complete_graph(4), 3), std::invalid_argument);
}

TEST(BruteForceMaxHaf, CompleteGraph) {
    MaxHafResult r = brute_force_max_haf(complete_graph(6), 4);
    EXPECT_NEAR(r.value, 3.0, 1e-12);
    EXPECT_EQ(r.subset, (std::vector<int>{0, 1, 2, 3}));
}

TEST(BruteForceMaxHaf, SingleEdge) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(4, 4);
    a(1, 3) = a(3, 1) = cd(0.6, -0.8) * 2.0;
    MaxHafResult r = brute_force_max_haf(WeightedGraph(a), 2);
    EXPECT_EQ(r.subset, (std::vector<int>{1, 3}));
    EXPECT_NEAR(r.value, 2.0, 1e-14);
}

TEST(BruteForceMaxHaf, MatchesNaiveEnumerationAndIsEquivariant) {
    for (uint64_t seed = 0; seed < 5; ++seed) {
        WeightedGraph g = random_complex_graph(10, 100 + seed);
        MaxHafResult r = brute_force_max_haf(g, 4);
        EXPECT_NEAR(r.value, naive_max_haf(g, 4), 1e-10 * r.value);

        std::vector<int> perm = {9, 3, 0, 7, 1, 8, 2, 6, 4, 5};  // new index of old vertex i
        Eigen::MatrixXcd pa(10, 10);
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) {
                pa(perm[i], perm[j]) = g.adjacency()(i, j);
            }
        }
        MaxHafResult pr = brute_force_max_haf(WeightedGraph(pa), 4);
        EXPECT_NEAR(pr.value, r.value, 1e-10 * r.value);
        std::vector<int> mapped;
        for (int x : r.subset) {
            mapped.push_back(perm[x]);
        }
        std::sort(mapped.begin(), mapped.end());
        EXPECT_EQ(mapped, pr.subset);
    }
}

TEST(BruteForceMaxHaf, Guards) {
    EXPECT_THROW(brute_force_max_haf(complete_graph(6), 3), std::invalid_argument);
    EXPECT_THROW(brute_force_max_haf(complete_graph(6), 8), std::invalid_argument);
    EXPECT_THROW(brute_force_max_haf(complete_graph(32), 10), std::invalid_argument);
}

TEST(RandomSearch, UniformOnCompleteGraphIsImmediatelyOptimal) {
    WeightedGraph g = complete_graph(8);
    const int budgets[] = {1, 5, 20};
    SearchCurve c = random_search([](Rng &r) { return uniform_sample(8, 4, r); }, g, 4, budgets, 10, 3.0, 1, "uniform");
    for (double v : c.mean_normalized_best) {
        EXPECT_NEAR(v, 1.0, 1e-12);
    }
    EXPECT_EQ(c.empty_trials, (std::vector<int>{0, 0, 0}));
}

TEST(RandomSearch, MonotoneBoundedAndConvergent) {
    WeightedGraph g = random_graph(8, 0.7, 5);
    MaxHafResult best = brute_force_max_haf(g, 4);
    GraphEncoding enc = encode_graph(g, 8);
    const int modes[] = {0, 1, 2, 3, 4, 5, 6, 7};
    TableSampler t(exact_distribution(gbs_state(enc.apparatus).marginal(modes), 4));
    const int budgets[] = {1, 10, 100, 1000, 5000};
    SearchCurve c = random_search([&](Rng &r) { return t.sample(r); }, g, 4, budgets, 20, best.value, 9, "gbs");
    for (const auto &row : c.trial_values) {
        for (size_t b = 0; b < row.size(); ++b) {
            EXPECT_LE(row[b], 1.0 + 1e-9);
            if (b > 0) {
                EXPECT_GE(row[b], row[b - 1]);
            }
        }
    }
    EXPECT_NEAR(c.mean_normalized_best.back(), 1.0, 1e-9);
    std::string csv = format_search_curve_csv(c);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "N,mean_normalized_best,stderr");
}

TEST(RandomSearch, FlagsTrialsWithoutUsableSamples) {
    WeightedGraph g = complete_graph(4);
    const int budgets[] = {3};
    SearchCurve c = random_search([](Rng &) { return ClickPattern{0b11, 6}; }, g, 4, budgets, 4, 3.0, 1, "none");
    EXPECT_EQ(c.empty_trials[0], 4);
    EXPECT_EQ(c.mean_normalized_best[0], 0.0);
    // Clicks outside the graph modes are not usable either.
    SearchCurve d = random_search([](Rng &) { return ClickPattern{0b110011, 6}; }, g, 4, budgets, 2, 3.0, 1, "out");
    EXPECT_EQ(d.empty_trials[0], 2);
}

TEST(Bootstrap, QuantilesBracketTheMean) {
    std::vector<double> v = {0.1, 0.3, 0.2, 0.5, 0.4, 0.3, 0.2, 0.6};
    double lo = bootstrap_mean_quantile(v, 0.025, 2000, 3);
    double hi = bootstrap_mean_quantile(v, 0.975, 2000, 3);
    EXPECT_LT(lo, 0.325);
    EXPECT_GT(hi, 0.325);
    EXPECT_GT(lo, 0.1);
}

}  // namespace
}  // namespace gbslab
