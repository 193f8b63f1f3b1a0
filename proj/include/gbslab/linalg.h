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

#ifndef GBSLAB_LINALG_H
#define GBSLAB_LINALG_H

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "gbslab/op_counter.h"

namespace gbslab {

/// Largest condition number (or pivot ratio) the kernels accept.
inline constexpr double kMaxConditionNumber = 1e12;

/// Determinant by partially pivoted LU. Throws NumericError when the pivot
/// magnitude ratio exceeds kMaxConditionNumber (singular counts as infinite).
double lu_determinant(Eigen::MatrixXd a, OpCounter *counter = nullptr);

/// Inverse by partially pivoted LU. Throws NumericError when the 1-norm
/// condition number exceeds kMaxConditionNumber.
Eigen::MatrixXd lu_inverse(const Eigen::MatrixXd &a, OpCounter *counter = nullptr);

/// Neumaier-compensated running sum.
template <typename T>
class CompensatedSum {
   public:
    void add(T x, OpCounter *counter = nullptr) {
        T t = sum_ + x;
        if (magnitude(sum_) >= magnitude(x)) {
            compensation_ += (sum_ - t) + x;
        } else {
            compensation_ += (x - t) + sum_;
        }
        sum_ = t;
        if (counter) {
            counter->add(4);
        }
    }
    T value() const {
        return sum_ + compensation_;
    }

   private:
    static double magnitude(double x) {
        return std::abs(x);
    }
    static double magnitude(const std::complex<double> &x) {
        return std::abs(x.real()) + std::abs(x.imag());
    }
    T sum_{};
    T compensation_{};
};

/// Cholesky factor of principal submatrices of a fixed positive-definite
/// matrix, grown and shrunk one index at a time.
///
/// Appending index v to a factor of size s costs one forward substitution
/// (s(s+1)/2 multiplies) and keeps the running value of 1/sqrt(det), so a
/// depth-first walk over a subset lattice pays O(s^2) per node instead of a
/// fresh O(s^3) factorization.
class IncrementalCholesky {
   public:
    IncrementalCholesky(const Eigen::MatrixXd &matrix, OpCounter *counter = nullptr);

    /// Appends `index` (a row/column of the underlying matrix). Throws
    /// NumericError if the extended submatrix is not positive definite or its
    /// new pivot falls below the conditioning floor.
    void push(int index);

    /// Drops trailing indices until `size()` equals `new_size`.
    void truncate(int new_size);

    int size() const {
        return static_cast<int>(indices_.size());
    }

    /// 1 / sqrt(det) of the current principal submatrix (1 when empty).
    double inv_sqrt_det() const {
        return inv_sqrt_det_.back();
    }

   private:
    const Eigen::MatrixXd &matrix_;
    OpCounter *counter_;
    std::vector<int> indices_;
    Eigen::MatrixXd lower_;
    std::vector<double> inv_diag_;
    std::vector<double> inv_sqrt_det_;
};

}  // namespace gbslab

#endif
