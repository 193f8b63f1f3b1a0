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

#include "gbslab/errors.h"

namespace gbslab {

namespace {

std::string join_violations(const std::vector<std::string> &violations) {
    std::string out = "configuration rejected (" + std::to_string(violations.size()) + " problem";
    out += violations.size() == 1 ? ")" : "s)";
    for (const auto &v : violations) {
        out += "\n  - ";
        out += v;
    }
    return out;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {
}

ConfigError::ConfigError(const std::string &violation) : ConfigError(std::vector<std::string>{violation}) {
}

}  // namespace gbslab
