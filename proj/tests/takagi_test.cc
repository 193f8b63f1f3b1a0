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

#include "gbslab/takagi.h"

#include <gtest/gtest.h>

#include "test_support.h"

namespace gbslab {
namespace {

void expect_valid(const Eigen::MatrixXcd &a, const TakagiDecomposition &t, double tol) {
    const auto n = a.rows();
    EXPECT_LT((t.unitary.adjoint() * t.unitary - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff(), tol);
    Eigen::MatrixXcd rebuilt = t.unitary * t.values.cast<std::complex<double>>().asDiagonal() * t.unitary.transpose();
    EXPECT_LT((rebuilt - a).cwiseAbs().maxCoeff(), tol * std::max(1.0, a.cwiseAbs().maxCoeff()));
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        EXPECT_GE(t.values(i), t.values(i + 1));
    }
    EXPECT_GE(t.values.minCoeff(), 0.0);
}

TEST(Takagi, RandomComplexSymmetric) {
    Rng rng(1);
    for (int n = 1; n <= 9; ++n) {
        Eigen::MatrixXcd a = gbslab_test::random_symmetric(n, rng);
        TakagiDecomposition t = takagi(a);
        expect_valid(a, t, 1e-12);
        // Takagi values are the singular values.
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
        EXPECT_LT((t.values - svd.singularValues()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Takagi, RankDeficientAndZero) {
    Rng rng(2);
    Eigen::MatrixXcd v = gbslab_test::random_complex(6, 2, rng);
    Eigen::MatrixXcd a = v * v.transpose();  // rank 2, symmetric
    TakagiDecomposition t = takagi(a);
    expect_valid(a, t, 1e-11);
    EXPECT_LT(t.values(2), 1e-12);

    TakagiDecomposition z = takagi(Eigen::MatrixXcd::Zero(4, 4));
    expect_valid(Eigen::MatrixXcd::Zero(4, 4), z, 1e-14);
    EXPECT_EQ(z.values.maxCoeff(), 0.0);
}

TEST(Takagi, DegenerateValues) {
    // Antidiagonal 2x2: both Takagi values equal |w|.
    Eigen::MatrixXcd a(2, 2);
    a << 0, std::complex<double>(0.6, 0.8), std::complex<double>(0.6, 0.8), 0;
    TakagiDecomposition t = takagi(a);
    expect_valid(a, t, 1e-13);
    EXPECT_NEAR(t.values(0), 1.0, 1e-14);
    EXPECT_NEAR(t.values(1), 1.0, 1e-14);

    Eigen::MatrixXcd ones = Eigen::MatrixXcd::Ones(4, 4) - Eigen::MatrixXcd::Identity(4, 4);
    expect_valid(ones, takagi(ones), 1e-13);
}

TEST(Takagi, RejectsNonSymmetric) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2);
    a(0, 1) = 1;
    EXPECT_THROW(takagi(a), std::invalid_argument);
}

}  // namespace
}  // namespace gbslab
