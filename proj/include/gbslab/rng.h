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

#ifndef GBSLAB_RNG_H
#define GBSLAB_RNG_H

#include <cstddef>
#include <cstdint>
#include <random>

namespace gbslab {

/// Deterministic random source. Every stochastic routine in the library takes
/// one of these (or a seed that builds one); there is no ambient entropy.
///
/// Uniform and normal variates are derived from the raw 64-bit engine output
/// with fixed formulas, so streams are identical across standard libraries.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next_u64() {
        return engine_();
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller.
    double normal();

    /// Uniform integer in [0, n). n must be positive.
    uint64_t below(uint64_t n);

   private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// SplitMix64 finalizer.
uint64_t mix64(uint64_t x);

/// Child seed for stream `index` of a run seeded with `seed`:
///     child = mix64(seed + 0x9E3779B97F4A7C15 * (index + 1)).
/// Used for per-worker, per-trial and per-replica streams.
uint64_t derive_seed(uint64_t seed, uint64_t index);

}  // namespace gbslab

#endif
