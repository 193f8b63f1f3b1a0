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

#include <algorithm>
#include <string>

#include "gbslab/errors.h"

namespace gbslab {

namespace {

struct LuFactors {
    Eigen::MatrixXd lu;
    std::vector<int> perm;
    int sign = 1;
};

LuFactors lu_factor(Eigen::MatrixXd a, OpCounter *counter) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n) {
        throw std::invalid_argument("LU factorization needs a square matrix");
    }
    LuFactors f;
    f.perm.resize(n);
    for (int i = 0; i < n; ++i) {
        f.perm[i] = i;
    }
    double max_pivot = 0.0;
    double min_pivot = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > std::abs(a(p, k))) {
                p = i;
            }
        }
        if (p != k) {
            a.row(k).swap(a.row(p));
            std::swap(f.perm[k], f.perm[p]);
            f.sign = -f.sign;
        }
        double pivot = a(k, k);
        max_pivot = std::max(max_pivot, std::abs(pivot));
        min_pivot = std::min(min_pivot, std::abs(pivot));
        if (pivot == 0.0 || max_pivot > kMaxConditionNumber * min_pivot) {
            throw NumericError("LU: matrix is singular or too ill-conditioned (pivot ratio > 1e12)");
        }
        double inv = 1.0 / pivot;
        for (int i = k + 1; i < n; ++i) {
            double l = a(i, k) * inv;
            a(i, k) = l;
            for (int j = k + 1; j < n; ++j) {
                a(i, j) -= l * a(k, j);
            }
        }
        if (counter) {
            uint64_t rows = n - k - 1;
            counter->mul(1 + rows + rows * rows);
            counter->add(rows * rows);
        }
    }
    f.lu = std::move(a);
    return f;
}

}  // namespace

double lu_determinant(Eigen::MatrixXd a, OpCounter *counter) {
    if (a.rows() == 0) {
        return 1.0;
    }
    LuFactors f = lu_factor(std::move(a), counter);
    double det = f.sign;
    for (int i = 0; i < f.lu.rows(); ++i) {
        det *= f.lu(i, i);
    }
    if (counter) {
        counter->mul(f.lu.rows());
    }
    return det;
}

Eigen::MatrixXd lu_inverse(const Eigen::MatrixXd &a, OpCounter *counter) {
    const int n = static_cast<int>(a.rows());
    if (n == 0) {
        return a;
    }
    LuFactors f = lu_factor(a, counter);
    Eigen::MatrixXd inv(n, n);
    for (int col = 0; col < n; ++col) {
        Eigen::VectorXd x(n);
        for (int i = 0; i < n; ++i) {
            double s = f.perm[i] == col ? 1.0 : 0.0;
            for (int j = 0; j < i; ++j) {
                s -= f.lu(i, j) * x(j);
            }
            x(i) = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = x(i);
            for (int j = i + 1; j < n; ++j) {
                s -= f.lu(i, j) * x(j);
            }
            x(i) = s / f.lu(i, i);
        }
        inv.col(col) = x;
    }
    if (counter) {
        uint64_t nn = static_cast<uint64_t>(n) * n;
        counter->mul(nn * n);
        counter->add(nn * (n - 1));
    }
    double cond = a.cwiseAbs().colwise().sum().maxCoeff() * inv.cwiseAbs().colwise().sum().maxCoeff();
    if (!(cond <= kMaxConditionNumber)) {
        throw NumericError("matrix inverse: condition number " + std::to_string(cond) + " exceeds 1e12");
    }
    return inv;
}

IncrementalCholesky::IncrementalCholesky(const Eigen::MatrixXd &matrix, OpCounter *counter)
    : matrix_(matrix), counter_(counter), lower_(matrix.rows(), matrix.rows()), inv_sqrt_det_{1.0} {
    indices_.reserve(matrix.rows());
    inv_diag_.reserve(matrix.rows());
    inv_sqrt_det_.reserve(matrix.rows() + 1);
}

void IncrementalCholesky::push(int index) {
    const int s = size();
    if (s >= lower_.rows()) {
        throw std::logic_error("IncrementalCholesky: more indices than matrix rows");
    }
    double diag = matrix_(index, index);
    for (int j = 0; j < s; ++j) {
        double y = matrix_(index, indices_[j]);
        for (int l = 0; l < j; ++l) {
            y -= lower_(s, l) * lower_(j, l);
        }
        y *= inv_diag_[j];
        lower_(s, j) = y;
        diag -= y * y;
    }
    if (counter_) {
        uint64_t tri = static_cast<uint64_t>(s) * (s - 1) / 2;
        counter_->mul(tri + 2 * s + 1);
        counter_->add(tri + s);
    }
    // Relative pivot floor: a pivot this small means the submatrix is
    // numerically singular (or not positive definite at all).
    if (!(diag > matrix_(index, index) / kMaxConditionNumber)) {
        throw NumericError("Cholesky: principal submatrix is not positive definite (index " +
                           std::to_string(index) + ", pivot " + std::to_string(diag) + ")");
    }
    double l = std::sqrt(diag);
    lower_(s, s) = l;
    inv_diag_.push_back(1.0 / l);
    indices_.push_back(index);
    inv_sqrt_det_.push_back(inv_sqrt_det_.back() * inv_diag_.back());
    if (counter_) {
        counter_->mul(2);
    }
}

void IncrementalCholesky::truncate(int new_size) {
    while (size() > new_size) {
        indices_.pop_back();
        inv_diag_.pop_back();
        inv_sqrt_det_.pop_back();
    }
}

}  // namespace gbslab
