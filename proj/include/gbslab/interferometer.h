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

#ifndef GBSLAB_INTERFEROMETER_H
#define GBSLAB_INTERFEROMETER_H

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <string>

namespace gbslab {

/// A passive linear-optical network acting on annihilation operators as
/// b_out = U a_in. Always unitary.
class Interferometer {
   public:
    /// Throws std::invalid_argument unless `matrix` is square and
    /// max |U^dagger U - I| < tolerance.
    explicit Interferometer(Eigen::MatrixXcd matrix, double tolerance = 1e-10);

    static Interferometer identity(int num_modes);

    int num_modes() const {
        return static_cast<int>(matrix_.rows());
    }
    const Eigen::MatrixXcd &matrix() const {
        return matrix_;
    }

    /// Real 2m x 2m symplectic-orthogonal action on (x_1..x_m, p_1..p_m):
    /// [[Re U, -Im U], [Im U, Re U]].
    Eigen::MatrixXd quadrature_matrix() const;

   private:
    Eigen::MatrixXcd matrix_;
};

/// max_ij |(U^dagger U - I)_ij|.
double unitarity_defect(const Eigen::MatrixXcd &u);

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// R's diagonal divided out. Deterministic in `seed`.
Interferometer random_unitary(int num_modes, uint64_t seed);

/// Unitary file format: a first line holding m, then m lines of m
/// whitespace-separated "re,im" entries. The loader accepts matrices
/// unitary to 1e-8 and reports the defect otherwise.
Interferometer load_unitary(const std::filesystem::path &path);
Interferometer parse_unitary(const std::string &text);
std::string format_unitary(const Interferometer &itf);

}  // namespace gbslab

#endif
