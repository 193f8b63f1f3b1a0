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
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gbslab/matrix_fn.h"

namespace gbslab {

namespace {

constexpr int kOracleLimit = 12;

std::complex<double> matchings(const Eigen::MatrixXcd &a, std::vector<int> &free) {
    if (free.empty()) {
        return 1.0;
    }
    int first = free.back();
    free.pop_back();
    std::complex<double> total = 0.0;
    for (size_t i = 0; i < free.size(); ++i) {
        int partner = free[i];
        free.erase(free.begin() + i);
        total += a(first, partner) * matchings(a, free);
        free.insert(free.begin() + i, partner);
    }
    free.push_back(first);
    return total;
}

}  // namespace

std::complex<double> brute_force_hafnian(const Eigen::MatrixXcd &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("brute_force_hafnian: matrix must be square");
    }
    if (a.rows() > kOracleLimit) {
        throw std::invalid_argument("brute_force_hafnian: n > 12 refused");
    }
    if (a.rows() % 2 == 1) {
        return 0.0;
    }
    std::vector<int> free;
    for (int i = 0; i < a.rows(); ++i) {
        free.push_back(i);
    }
    return matchings(a, free);
}

double brute_force_torontonian(const Eigen::MatrixXd &o) {
    if (o.rows() != o.cols() || o.rows() % 2 != 0) {
        throw std::invalid_argument("brute_force_torontonian: matrix must be square with even dimension");
    }
    const int n = static_cast<int>(o.rows() / 2);
    if (n > kOracleLimit) {
        throw std::invalid_argument("brute_force_torontonian: n > 12 refused");
    }
    double total = 0.0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                idx.push_back(i);
            }
        }
        const int z = static_cast<int>(idx.size());
        for (int i = 0; i < z; ++i) {
            idx.push_back(idx[i] + n);
        }
        Eigen::MatrixXd sub(2 * z, 2 * z);
        for (int r = 0; r < 2 * z; ++r) {
            for (int c = 0; c < 2 * z; ++c) {
                sub(r, c) = (r == c ? 1.0 : 0.0) - o(idx[r], idx[c]);
            }
        }
        double det = lu_determinant(sub);
        if (!(det > 0.0)) {
            throw std::invalid_argument("brute_force_torontonian: I - O_Z not positive definite");
        }
        double sign = (n - z) % 2 == 0 ? 1.0 : -1.0;
        total += sign / std::sqrt(det);
    }
    return total;
}

}  // namespace gbslab
