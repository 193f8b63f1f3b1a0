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

#include <bit>
#include <stdexcept>
#include <vector>

#include "gbslab/matrix_fn.h"

namespace gbslab {

bool is_symmetric(const Eigen::MatrixXcd &a, double tol) {
    if (a.rows() != a.cols()) {
        return false;
    }
    if (a.size() == 0) {
        return true;
    }
    double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    return (a - a.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

std::complex<double> hafnian(const Eigen::MatrixXcd &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("hafnian: matrix must be square");
    }
    if (!is_symmetric(a)) {
        throw std::invalid_argument("hafnian: matrix must be symmetric (A = A^T)");
    }
    const int n = static_cast<int>(a.rows());
    if (n == 0) {
        return 1.0;
    }
    if (n % 2 == 1) {
        return 0.0;
    }
    const int half = n / 2;
    if (half > 30) {
        throw std::invalid_argument("hafnian: dimension too large");
    }

    CompensatedSum<std::complex<double>> total;
    std::vector<int> pick;
    std::vector<std::complex<double>> traces(half + 1), series(half + 1);
    for (uint64_t mask = 1; mask < (uint64_t{1} << half); ++mask) {
        pick.clear();
        for (int i = 0; i < half; ++i) {
            if (mask >> i & 1) {
                pick.push_back(i);
            }
        }
        const int z = static_cast<int>(pick.size());
        for (int i = 0; i < z; ++i) {
            pick.push_back(pick[i] + half);
        }
        // C = (A X)_Z: column c of C is column swap(c) of A_Z.
        Eigen::MatrixXcd c(2 * z, 2 * z);
        for (int r = 0; r < 2 * z; ++r) {
            for (int col = 0; col < 2 * z; ++col) {
                int swapped = col < z ? col + z : col - z;
                c(r, col) = a(pick[r], pick[swapped]);
            }
        }
        Eigen::MatrixXcd power = c;
        traces[1] = power.trace();
        for (int k = 2; k <= half; ++k) {
            power = power * c;
            traces[k] = power.trace();
        }
        // exp of g(x) = sum_k traces[k] x^k / (2k), truncated at degree half.
        series[0] = 1.0;
        for (int j = 1; j <= half; ++j) {
            std::complex<double> s = 0.0;
            for (int i = 1; i <= j; ++i) {
                s += (traces[i] / 2.0) * series[j - i];
            }
            series[j] = s / static_cast<double>(j);
        }
        double sign = (half - z) % 2 == 0 ? 1.0 : -1.0;
        total.add(sign * series[half]);
    }
    return total.value();
}

}  // namespace gbslab
