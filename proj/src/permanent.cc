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

std::complex<double> permanent(const Eigen::MatrixXcd &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("permanent: matrix must be square");
    }
    const int n = static_cast<int>(m.rows());
    if (n == 0) {
        return 1.0;
    }
    if (n > 40) {
        throw std::invalid_argument("permanent: dimension too large");
    }
    // Glynn: delta_0 fixed at +1, the other rows walk a Gray code.
    std::vector<std::complex<double>> col_sums(n);
    for (int j = 0; j < n; ++j) {
        col_sums[j] = m.col(j).sum();
    }
    std::vector<int> delta(n, 1);
    auto product = [&] {
        std::complex<double> p = 1.0;
        for (const auto &s : col_sums) {
            p *= s;
        }
        return p;
    };
    CompensatedSum<std::complex<double>> total;
    total.add(product());
    double sign = 1.0;
    const uint64_t steps = uint64_t{1} << (n - 1);
    for (uint64_t g = 1; g < steps; ++g) {
        int row = std::countr_zero(g) + 1;
        double d = delta[row] == 1 ? -2.0 : 2.0;
        delta[row] = -delta[row];
        for (int j = 0; j < n; ++j) {
            col_sums[j] += d * m(row, j);
        }
        sign = -sign;
        total.add(sign * product());
    }
    return total.value() / static_cast<double>(steps);
}

}  // namespace gbslab
