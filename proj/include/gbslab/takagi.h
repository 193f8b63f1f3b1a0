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

#ifndef GBSLAB_TAKAGI_H
#define GBSLAB_TAKAGI_H

#include <Eigen/Dense>

namespace gbslab {

/// A = U diag(values) U^T with U unitary and values >= 0, descending.
struct TakagiDecomposition {
    Eigen::VectorXd values;
    Eigen::MatrixXcd unitary;
};

/// Takagi (Autonne) factorization of a complex symmetric matrix. Built from
/// the eigenvectors of the real symmetric embedding [[Re A, Im A], [Im A, -Re A]]
/// with positive eigenvalue; directions with zero singular value are
/// completed by Gram-Schmidt. Throws std::invalid_argument if A is not
/// symmetric to 1e-12 relative.
TakagiDecomposition takagi(const Eigen::MatrixXcd &a);

}  // namespace gbslab

#endif
