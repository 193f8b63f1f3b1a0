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

#include <gtest/gtest.h>

#include <map>

#include "fock_oracle.h"
#include "gbslab/errors.h"
#include "test_support.h"

namespace gbslab {
namespace {

// P(S clicked, rest silent) = sum_{Z subset S} (-1)^|Z| P(complement(S) + Z silent),
// with P(T silent) = 1 / sqrt(det Sigma_Q[T]) from a fresh Eigen determinant.
std::vector<double> no_click_oracle(const GaussianState &s) {
    const int m = s.num_modes();
    Eigen::MatrixXd q = s.covariance();
    q.diagonal().array() += 0.5;
    auto silent = [&](uint32_t t) {
        std::vector<int> idx;
        for (int i = 0; i < m; ++i) {
            if (t >> i & 1) {
                idx.push_back(i);
            }
        }
        const size_t k = idx.size();
        Eigen::MatrixXd sub(2 * k, 2 * k);
        for (size_t a = 0; a < 2 * k; ++a) {
            for (size_t b = 0; b < 2 * k; ++b) {
                int ia = a < k ? idx[a] : idx[a - k] + m;
                int ib = b < k ? idx[b] : idx[b - k] + m;
                sub(a, b) = q(ia, ib);
            }
        }
        return k == 0 ? 1.0 : 1.0 / std::sqrt(sub.determinant());
    };
    const uint32_t full = (1u << m) - 1;
    std::vector<double> out(size_t{1} << m);
    for (uint32_t sset = 0; sset <= full; ++sset) {
        double p = 0.0;
        for (uint32_t z = sset;; z = (z - 1) & sset) {
            p += (std::popcount(z) % 2 ? -1.0 : 1.0) * silent((full & ~sset) | z);
            if (z == 0) {
                break;
            }
        }
        out[sset] = p;
    }
    return out;
}

TEST(ExactDistribution, SumsToOneAndMatchesNoClickOracle) {
    for (uint64_t seed = 0; seed < 6; ++seed) {
        GaussianState s = gbs_state(gbslab_test::random_apparatus(5, 0.5, 0.5, seed));
        ClickDistribution d = exact_distribution(s);
        EXPECT_NEAR(d.total(), 1.0, 1e-12);
        auto oracle = no_click_oracle(s);
        for (uint32_t p = 0; p < 32; ++p) {
            EXPECT_NEAR(d.probability(p), oracle[p], 1e-12);
        }
    }
}

TEST(ExactDistribution, SectorRestrictionIsRenormalized) {
    GaussianState s = gbs_state(gbslab_test::random_apparatus(6, 0.5, 0.7, 11));
    ClickDistribution full = exact_distribution(s);
    for (int n = 0; n <= 6; ++n) {
        ClickDistribution sec = exact_distribution(s, n);
        EXPECT_TRUE(sec.renormalized());
        EXPECT_NEAR(sec.total(), 1.0, 1e-12);
        EXPECT_NEAR(sec.sector_mass(), full.click_count_marginal()[n], 1e-12);
        ClickDistribution restricted = full.restricted(n);
        for (const auto &e : sec.entries()) {
            EXPECT_NEAR(e.probability, restricted.probability(e.pattern), 1e-12);
        }
    }
}

TEST(ExactDistribution, VacuumNeverClicks) {
    ClickDistribution d = exact_distribution(GaussianState::vacuum(4));
    EXPECT_EQ(d.probability(0), 1.0);
    EXPECT_EQ(d.click_count_marginal()[0], 1.0);
}

TEST(ExactDistribution, RejectsTooManyModes) {
    EXPECT_THROW(exact_distribution(GaussianState::vacuum(21)), std::invalid_argument);
    EXPECT_THROW(exact_distribution(GaussianState::vacuum(3), 4), std::invalid_argument);
}

TEST(ExactDistribution, LossyPairMatchesFockOracle) {
    const double r = 0.31, eta = 0.75;
    Apparatus app;
    app.num_modes = 2;
    app.squeezers = {{0, 1, r}};
    app.interferometer = Interferometer::identity(2);
    app.efficiency = EfficiencySpec::uniform(2, eta);
    ClickDistribution d = exact_distribution(gbs_state(app));

    gbslab_test::FockExperiment ex;
    ex.num_modes = 2;
    ex.pairs = {{0, 1, r}};
    ex.unitary = Eigen::MatrixXcd::Identity(2, 2);
    ex.eta = {eta, eta};
    auto oracle = gbslab_test::fock_click_probabilities(ex);
    for (uint32_t p = 0; p < 4; ++p) {
        EXPECT_NEAR(d.probability(p), oracle[p], 1e-12);
    }
    // Closed form for both clicking: sum_n P(n) (1 - 0.25^n)^2.
    double both = 0.0;
    const double t2 = std::tanh(r) * std::tanh(r);
    for (int n = 1; n < 100; ++n) {
        both += (1 - t2) * std::pow(t2, n) * std::pow(1 - std::pow(1 - eta, n), 2);
    }
    EXPECT_NEAR(d.probability(3), both, 1e-13);
}

TEST(ExactDistribution, MixedInterferometerMatchesFockOracle) {
    for (uint64_t seed = 0; seed < 3; ++seed) {
        Rng rng(seed + 900);
        double r1 = 0.5 * rng.uniform(), r2 = 0.5 * rng.uniform(), phase = 6.28 * rng.uniform();
        Interferometer u = random_unitary(3, seed + 77);
        std::vector<double> eta = {0.5 + 0.5 * rng.uniform(), 0.5 + 0.5 * rng.uniform(), 0.5 + 0.5 * rng.uniform()};
        GaussianState four = apply_two_mode_squeezer(
            apply_two_mode_squeezer(GaussianState::vacuum(4), {0, 1, r1, phase}), {2, 3, r2});
        const int keep[] = {0, 1, 2};
        GaussianState s = apply_loss(apply_interferometer(four.marginal(keep), u), EfficiencySpec{eta});
        ClickDistribution d = exact_distribution(s);

        gbslab_test::FockExperiment ex;
        ex.num_modes = 3;
        ex.pairs = {{0, 1, r1, phase}};
        ex.thermal = {{2, std::sinh(r2) * std::sinh(r2)}};
        ex.unitary = u.matrix();
        ex.eta = eta;
        auto oracle = gbslab_test::fock_click_probabilities(ex);
        for (uint32_t p = 0; p < 8; ++p) {
            EXPECT_NEAR(d.probability(p), oracle[p], 1e-8) << "seed " << seed << " pattern " << p;
        }
    }
}

TEST(ExactDistribution, ThermalInputWeakensClickCorrelation) {
    Apparatus app;
    app.num_modes = 2;
    app.squeezers = {{0, 1, 0.31}};
    app.interferometer = Interferometer::identity(2);
    app.efficiency = EfficiencySpec::uniform(2, 0.75);
    auto covariance_of_clicks = [](const ClickDistribution &d) {
        double p11 = d.probability(3);
        double p1x = d.probability(1) + p11;
        double px1 = d.probability(2) + p11;
        return p11 - p1x * px1;
    };
    double gbs = covariance_of_clicks(exact_distribution(gbs_state(app)));
    double thermal = covariance_of_clicks(exact_distribution(thermal_state(app)));
    EXPECT_GT(gbs, 0.0);
    EXPECT_NEAR(thermal, 0.0, 1e-15);
    EXPECT_GT(gbs, thermal);
}

TEST(NoClickProbability, SingleThermalMode) {
    GaussianState s = apply_two_mode_squeezer(GaussianState::vacuum(2), {0, 1, 0.4});
    const int mode[] = {1};
    EXPECT_NEAR(no_click_probability(s, mode), 1.0 / std::pow(std::cosh(0.4), 2), 1e-14);
}

TEST(ChainRuleSampler, EmpiricalDistributionConverges) {
    GaussianState s = gbs_state(gbslab_test::random_apparatus(4, 0.6, 0.6, 21));
    ClickDistribution exact = exact_distribution(s);
    const size_t n = 200000;
    auto samples = chain_rule_samples(s, n, 5);
    std::map<uint32_t, double> freq;
    for (const auto &x : samples) {
        freq[x.bits] += 1.0 / n;
    }
    // Each cell within 5 binomial standard deviations.
    for (const auto &e : exact.entries()) {
        double sd = std::sqrt(e.probability * (1 - e.probability) / n);
        EXPECT_NEAR(freq[e.pattern], e.probability, 5 * sd + 1e-12) << "pattern " << e.pattern;
    }
}

TEST(ChainRuleSampler, DeterministicUnderSeed) {
    GaussianState s = gbs_state(gbslab_test::reference_apparatus());
    auto a = chain_rule_samples(s, 200, 99);
    auto b = chain_rule_samples(s, 200, 99);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, chain_rule_samples(s, 200, 100));
}

TEST(ChainRuleSampler, VacuumShortCircuit) {
    OpCounter c;
    ClickPattern p = chain_rule_sample(GaussianState::vacuum(12), 3, &c);
    EXPECT_EQ(p.bits, 0u);
    EXPECT_EQ(c.multiplications, 0u);
    EXPECT_EQ(c.additions, 0u);
}

TEST(ChainRuleSampler, OperationCountGrowsWithClicks) {
    GaussianState s = gbs_state(gbslab_test::reference_apparatus());
    ChainRuleSampler sampler(s);
    Rng rng(4);
    std::map<int, std::pair<double, int>> by_clicks;
    for (int i = 0; i < 20000; ++i) {
        OpCounter c;
        int n = sampler.sample(rng, &c).click_count();
        EXPECT_GT(c.multiplications, 0u);
        by_clicks[n].first += c.multiplications;
        by_clicks[n].second += 1;
    }
    double prev = 0.0;
    for (int n = 0; n <= 3; ++n) {
        ASSERT_GT(by_clicks[n].second, 0);
        double mean = by_clicks[n].first / by_clicks[n].second;
        EXPECT_GT(mean, prev);
        prev = mean;
    }
}

TEST(TableSampler, FrequenciesFollowTable) {
    std::vector<ClickDistribution::Entry> e = {{0b001, 0.2}, {0b010, 0.5}, {0b100, 0.3}};
    ClickDistribution d(3, 1, e, true, 1.0);
    TableSampler t(d);
    Rng rng(8);
    std::map<uint32_t, int> counts;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        ClickPattern p = t.sample(rng);
        EXPECT_EQ(p.num_modes, 3);
        ++counts[p.bits];
    }
    EXPECT_NEAR(counts[0b001] / double(n), 0.2, 0.01);
    EXPECT_NEAR(counts[0b010] / double(n), 0.5, 0.01);
    EXPECT_NEAR(counts[0b100] / double(n), 0.3, 0.01);
}

TEST(ClickPattern, StringFormPutsModeOneFirst) {
    ClickPattern p{0b1001, 6};
    EXPECT_EQ(p.to_string(), "100100");
    EXPECT_EQ(ClickPattern::parse("100100"), p);
    EXPECT_EQ(p.click_count(), 2);
    EXPECT_THROW(ClickPattern::parse("10a"), std::invalid_argument);
}

TEST(ClickDistribution, ValidatesEntries) {
    using E = ClickDistribution::Entry;
    EXPECT_THROW(ClickDistribution(2, std::nullopt, {{1, 0.5}, {0, 0.5}}), std::invalid_argument);
    EXPECT_THROW(ClickDistribution(2, std::nullopt, {{0, 1.5}, {1, -0.5}}), std::invalid_argument);
    EXPECT_THROW(ClickDistribution(2, 1, std::vector<E>{{3, 1.0}}), std::invalid_argument);
    EXPECT_THROW(ClickDistribution(2, std::nullopt, std::vector<E>{{0, 0.9}}), NumericError);
    EXPECT_EQ(sector_patterns(12, 3).size(), 220u);
    EXPECT_EQ(sector_patterns(12, 5).size(), 792u);
}

}  // namespace
}  // namespace gbslab
