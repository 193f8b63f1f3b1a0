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

#ifndef GBSLAB_OP_COUNTER_H
#define GBSLAB_OP_COUNTER_H

#include <cstdint>

namespace gbslab {

/// Scalar arithmetic tally for the probability kernels. Divisions count as
/// multiplications and subtractions as additions; square roots, comparisons
/// and index bookkeeping are not counted.
struct OpCounter {
    uint64_t multiplications = 0;
    uint64_t additions = 0;

    void mul(uint64_t n = 1) {
        multiplications += n;
    }
    void add(uint64_t n = 1) {
        additions += n;
    }
};

}  // namespace gbslab

#endif
