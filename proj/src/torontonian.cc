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

#include <stdexcept>
#include <vector>

#include "gbslab/matrix_fn.h"

namespace gbslab {

namespace {

void lattice_walk(IncrementalCholesky &factor, int num_modes, std::span<const int> modes, size_t start,
                  double sign, CompensatedSum<double> &acc, OpCounter *counter) {
    acc.add(sign * factor.inv_sqrt_det(), counter);
    for (size_t i = start; i < modes.size(); ++i) {
        int restore = factor.size();
        factor.push(modes[i]);
        factor.push(modes[i] + num_modes);
        lattice_walk(factor, num_modes, modes, i + 1, -sign, acc, counter);
        factor.truncate(restore);
    }
}

}  // namespace

double alternating_lattice_sum(IncrementalCholesky &factor, int num_modes, std::span<const int> modes,
                               OpCounter *counter) {
    CompensatedSum<double> acc;
    int restore = factor.size();
    lattice_walk(factor, num_modes, modes, 0, 1.0, acc, counter);
    factor.truncate(restore);
    return acc.value();
}

double torontonian_of_modes(const Eigen::MatrixXd &identity_minus_o, int num_modes, std::span<const int> modes,
                            OpCounter *counter) {
    IncrementalCholesky factor(identity_minus_o, counter);
    double s = alternating_lattice_sum(factor, num_modes, modes, counter);
    return modes.size() % 2 == 0 ? s : -s;
}

double torontonian(const Eigen::MatrixXd &o, OpCounter *counter) {
    if (o.rows() != o.cols() || o.rows() % 2 != 0) {
        throw std::invalid_argument("torontonian: matrix must be square with even dimension");
    }
    if ((o - o.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, o.cwiseAbs().maxCoeff())) {
        throw std::invalid_argument("torontonian: matrix must be symmetric");
    }
    const int n = static_cast<int>(o.rows() / 2);
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(2 * n, 2 * n) - o;
    std::vector<int> modes(n);
    for (int i = 0; i < n; ++i) {
        modes[i] = i;
    }
    return torontonian_of_modes(g, n, modes, counter);
}

}  // namespace gbslab
