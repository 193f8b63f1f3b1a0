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

#ifndef GBSLAB_ERRORS_H
#define GBSLAB_ERRORS_H

#include <stdexcept>
#include <string>
#include <vector>

namespace gbslab {

/// Invalid user-facing configuration. Carries every violation found in one pass.
class ConfigError : public std::runtime_error {
   public:
    explicit ConfigError(std::vector<std::string> violations);
    explicit ConfigError(const std::string &violation);

    const std::vector<std::string> &violations() const {
        return violations_;
    }

   private:
    std::vector<std::string> violations_;
};

/// A numeric guard tripped: ill-conditioned matrix, unphysical state, or
/// inconsistent probabilities coming out of a kernel.
class NumericError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace gbslab

#endif
