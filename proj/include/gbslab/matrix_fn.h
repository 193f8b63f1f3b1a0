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

#ifndef GBSLAB_MATRIX_FN_H
#define GBSLAB_MATRIX_FN_H

#include <Eigen/Dense>
#include <complex>
#include <span>

#include "gbslab/linalg.h"
#include "gbslab/op_counter.h"

namespace gbslab {

/// Hafnian of a complex symmetric (A = A^T) matrix: the sum over perfect
/// matchings of the product of matched entries.
///
/// Uses the power-trace formula: a sum over the 2^(n/2) subsets Z of
/// index pairs (i, i + n/2), each term the degree-n/2 coefficient of
/// exp(sum_k tr((A X)_Z^k) x^k / 2k). Cost O(n^4 2^(n/2)).
///
/// Returns 1 for the empty matrix and 0 for odd dimension. Throws
/// std::invalid_argument if A is not square or not symmetric to 1e-12.
std::complex<double> hafnian(const Eigen::MatrixXcd &a);

/// Permanent by Glynn's formula with Gray-code ordering, O(n 2^n).
std::complex<double> permanent(const Eigen::MatrixXcd &m);

/// Torontonian of a 2n x 2n real symmetric matrix O whose rows/columns i and
/// i + n belong to mode i:
///     Tor(O) = sum_{Z subset [n]} (-1)^(n - |Z|) / sqrt(det(I - O_Z)).
/// Determinants come from incremental Cholesky factors shared along a
/// depth-first walk of the subset lattice. Throws NumericError if some
/// I - O_Z is not positive definite.
double torontonian(const Eigen::MatrixXd &o, OpCounter *counter = nullptr);

/// Torontonian of the mode-submatrix of O on `modes`, given the full
/// G = I - O over `num_modes` modes. Avoids materializing O_S.
double torontonian_of_modes(const Eigen::MatrixXd &identity_minus_o, int num_modes, std::span<const int> modes,
                            OpCounter *counter = nullptr);

/// sum_{Z subset modes} (-1)^|Z| / sqrt(det M_{base + Z}), where the base
/// indices are already pushed into `factor` and each mode contributes the
/// two indices (mode, mode + num_modes). `factor` is restored on return.
double alternating_lattice_sum(IncrementalCholesky &factor, int num_modes, std::span<const int> modes,
                               OpCounter *counter = nullptr);

/// Symmetry test used by the hafnian precondition: max |A - A^T| <= tol * max(1, max |A|).
bool is_symmetric(const Eigen::MatrixXcd &a, double tol = 1e-12);

// Definition-level oracles. Both refuse n > 12.

/// Direct enumeration of all (n-1)!! perfect matchings.
std::complex<double> brute_force_hafnian(const Eigen::MatrixXcd &a);

/// The Torontonian inclusion-exclusion with a fresh LU determinant per subset.
double brute_force_torontonian(const Eigen::MatrixXd &o);

}  // namespace gbslab

#endif
