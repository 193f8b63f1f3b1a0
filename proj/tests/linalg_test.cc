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

#include "gbslab/linalg.h"

#include <gtest/gtest.h>

#include "gbslab/errors.h"
#include "gbslab/rng.h"

namespace gbslab {
namespace {

Eigen::MatrixXd random_spd(int n, Rng &rng) {
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a(i, j) = rng.normal();
        }
    }
    return a * a.transpose() + Eigen::MatrixXd::Identity(n, n);
}

TEST(LuDeterminant, MatchesEigen) {
    Rng rng(1);
    for (int n = 1; n <= 8; ++n) {
        Eigen::MatrixXd a = random_spd(n, rng);
        a(0, n - 1) += 0.3;  // not symmetric
        EXPECT_NEAR(lu_determinant(a), a.determinant(), 1e-10 * std::abs(a.determinant()));
    }
}

TEST(LuDeterminant, EmptyIsOne) {
    EXPECT_EQ(lu_determinant(Eigen::MatrixXd(0, 0)), 1.0);
}

TEST(LuDeterminant, SingularThrows) {
    Eigen::MatrixXd a(2, 2);
    a << 1, 2, 2, 4;
    EXPECT_THROW(lu_determinant(a), NumericError);
}

TEST(LuInverse, MatchesEigenAndRejectsIllConditioned) {
    Rng rng(2);
    Eigen::MatrixXd a = random_spd(6, rng);
    EXPECT_LT((lu_inverse(a) * a - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-12);
    Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(3, 3);
    bad(2, 2) = 1e-14;
    EXPECT_THROW(lu_inverse(bad), NumericError);
}

TEST(LuDeterminant, CountsOperations) {
    OpCounter c;
    lu_determinant(Eigen::MatrixXd::Identity(4, 4) * 2.0, &c);
    EXPECT_GT(c.multiplications, 0u);
    EXPECT_GT(c.additions, 0u);
}

TEST(IncrementalCholesky, MatchesDirectDeterminants) {
    Rng rng(3);
    Eigen::MatrixXd a = random_spd(7, rng);
    IncrementalCholesky f(a);
    EXPECT_EQ(f.inv_sqrt_det(), 1.0);
    std::vector<int> order = {4, 0, 6, 2};
    for (size_t s = 0; s < order.size(); ++s) {
        f.push(order[s]);
        Eigen::MatrixXd sub(s + 1, s + 1);
        for (size_t i = 0; i <= s; ++i) {
            for (size_t j = 0; j <= s; ++j) {
                sub(i, j) = a(order[i], order[j]);
            }
        }
        EXPECT_NEAR(f.inv_sqrt_det(), 1.0 / std::sqrt(sub.determinant()), 1e-12);
    }
    f.truncate(1);
    EXPECT_EQ(f.size(), 1);
    EXPECT_NEAR(f.inv_sqrt_det(), 1.0 / std::sqrt(a(4, 4)), 1e-14);
    f.push(5);
    Eigen::Matrix2d sub;
    sub << a(4, 4), a(4, 5), a(5, 4), a(5, 5);
    EXPECT_NEAR(f.inv_sqrt_det(), 1.0 / std::sqrt(sub.determinant()), 1e-12);
}

TEST(IncrementalCholesky, RejectsIndefinite) {
    Eigen::MatrixXd a(2, 2);
    a << 1, 2, 2, 1;
    IncrementalCholesky f(a);
    f.push(0);
    EXPECT_THROW(f.push(1), NumericError);
}

TEST(CompensatedSum, RecoversCancelledTerms) {
    CompensatedSum<double> s;
    s.add(1e16);
    s.add(1.0);
    s.add(-1e16);
    EXPECT_EQ(s.value(), 1.0);
    double naive = 1e16;
    naive += 1.0;
    naive -= 1e16;
    EXPECT_NE(naive, 1.0);
}

}  // namespace
}  // namespace gbslab
