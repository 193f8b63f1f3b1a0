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

#include "gbslab/interferometer.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "gbslab/errors.h"

namespace gbslab {
namespace {

TEST(RandomUnitary, DeterministicAndUnitary) {
    Interferometer a = random_unitary(12, 7);
    Interferometer b = random_unitary(12, 7);
    EXPECT_EQ(a.matrix(), b.matrix());
    EXPECT_LT(unitarity_defect(a.matrix()), 1e-13);
    EXPECT_NE(random_unitary(12, 8).matrix(), a.matrix());
}

TEST(RandomUnitary, HaarMoments) {
    // Haar: E|U_ij|^2 = 1/m and E|U_ij|^4 = 2/(m(m+1)).
    const int m = 4;
    const int draws = 1000;
    double second = 0.0, fourth = 0.0;
    for (int d = 0; d < draws; ++d) {
        Eigen::MatrixXcd u = random_unitary(m, 1000 + d).matrix();
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                double p = std::norm(u(i, j));
                second += p;
                fourth += p * p;
            }
        }
    }
    second /= draws * m * m;
    fourth /= draws * m * m;
    EXPECT_NEAR(second, 1.0 / m, 1e-12);  // exact by unitarity
    EXPECT_NEAR(fourth, 2.0 / (m * (m + 1)), 0.006);
}

TEST(RandomUnitary, PhasesAreNotBiased) {
    // Without phase normalization the QR diagonal would make U_00 real-biased.
    double mean_re = 0.0, mean_im = 0.0;
    const int draws = 2000;
    for (int d = 0; d < draws; ++d) {
        std::complex<double> z = random_unitary(3, 50000 + d).matrix()(0, 0);
        mean_re += z.real();
        mean_im += z.imag();
    }
    EXPECT_LT(std::abs(mean_re / draws), 0.03);
    EXPECT_LT(std::abs(mean_im / draws), 0.03);
}

TEST(Interferometer, RejectsNonUnitary) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
    m(0, 1) = 1e-6;
    EXPECT_THROW(Interferometer{m}, std::invalid_argument);
    EXPECT_THROW(Interferometer{Eigen::MatrixXcd::Identity(2, 3)}, std::invalid_argument);
}

TEST(Interferometer, QuadratureMatrixIsOrthogonalSymplectic) {
    Interferometer u = random_unitary(5, 3);
    Eigen::MatrixXd s = u.quadrature_matrix();
    EXPECT_LT((s * s.transpose() - Eigen::MatrixXd::Identity(10, 10)).cwiseAbs().maxCoeff(), 1e-13);
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(10, 10);
    omega.topRightCorner(5, 5) = Eigen::MatrixXd::Identity(5, 5);
    omega.bottomLeftCorner(5, 5) = -Eigen::MatrixXd::Identity(5, 5);
    EXPECT_LT((s * omega * s.transpose() - omega).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(UnitaryFile, RoundTrip) {
    Interferometer u = random_unitary(6, 42);
    Interferometer back = parse_unitary(format_unitary(u));
    EXPECT_LT((back.matrix() - u.matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(UnitaryFile, ReportsDefect) {
    std::string text = "2\n1,0 0.001,0\n0,0 1,0\n";
    try {
        parse_unitary(text);
        FAIL() << "expected a ConfigError";
    } catch (const ConfigError &e) {
        EXPECT_NE(std::string(e.what()).find("0.001"), std::string::npos) << e.what();
    }
}

TEST(UnitaryFile, AcceptsSmallDefectAndRejectsGarbage) {
    EXPECT_NO_THROW(parse_unitary("2\n1,0 1e-9,0\n0,0 1,0\n"));
    EXPECT_THROW(parse_unitary("2\n1,0 x,0\n0,0 1,0\n"), ConfigError);
    EXPECT_THROW(parse_unitary("2\n1,0\n0,0 1,0\n"), ConfigError);
    EXPECT_THROW(load_unitary("/nonexistent/unitary.txt"), ConfigError);
}

TEST(UnitaryFile, LoadsFromDisk) {
    auto path = std::filesystem::temp_directory_path() / "gbslab_unitary_test.txt";
    Interferometer u = random_unitary(3, 5);
    std::ofstream(path) << format_unitary(u);
    EXPECT_LT((load_unitary(path).matrix() - u.matrix()).cwiseAbs().maxCoeff(), 1e-15);
    std::filesystem::remove(path);
}

}  // namespace
}  // namespace gbslab
