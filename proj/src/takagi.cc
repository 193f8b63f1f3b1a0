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

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gbslab/matrix_fn.h"

namespace gbslab {

TakagiDecomposition takagi(const Eigen::MatrixXcd &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("takagi needs a square matrix");
    }
    if (!is_symmetric(a)) {
        throw std::invalid_argument("takagi needs a symmetric matrix");
    }
    const Eigen::Index n = a.rows();
    TakagiDecomposition out{Eigen::VectorXd::Zero(n), Eigen::MatrixXcd::Zero(n, n)};
    if (n == 0) {
        return out;
    }
    Eigen::MatrixXd b = a.real();
    Eigen::MatrixXd c = a.imag();
    Eigen::MatrixXd m(2 * n, 2 * n);
    m << b, c, c, -b;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("takagi: eigensolver failed");
    }
    const Eigen::VectorXd &ev = eig.eigenvalues();  // ascending
    double scale = std::max(1.0, std::abs(ev(2 * n - 1)));
    double tol = 1e-12 * scale * static_cast<double>(n);

    Eigen::Index k = 0;
    for (Eigen::Index i = 2 * n - 1; i >= 0 && k < n; --i) {
        if (ev(i) <= tol) {
            break;
        }
        Eigen::VectorXd v = eig.eigenvectors().col(i);
        Eigen::VectorXcd u(n);
        for (Eigen::Index r = 0; r < n; ++r) {
            u(r) = {v(r), v(r + n)};
        }
        out.values(k) = ev(i);
        out.unitary.col(k) = u.normalized();
        ++k;
    }

    // Complete the basis for the null directions.
    for (Eigen::Index e = 0; e < n && k < n; ++e) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Unit(n, e);
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index j = 0; j < k; ++j) {
                v -= out.unitary.col(j).dot(v) * out.unitary.col(j);
            }
        }
        double norm = v.norm();
        if (norm > 1e-6) {
            out.unitary.col(k) = v / norm;
            out.values(k) = 0.0;
            ++k;
        }
    }
    return out;
}

}  // namespace gbslab
