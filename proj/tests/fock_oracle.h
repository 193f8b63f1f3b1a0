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

#ifndef GBSLAB_TESTS_FOCK_ORACLE_H
#define GBSLAB_TESTS_FOCK_ORACLE_H

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "gbslab/gaussian_state.h"

namespace gbslab_test {

/// Photon-number-space model of a small experiment: pure two-mode squeezed
/// pairs and independent thermal modes at the input, an interferometer, and
/// binomial loss in front of threshold detectors. States are expanded as
/// polynomials in the output creation operators and truncated at `cutoff`
/// total photons.
struct FockExperiment {
    int num_modes = 0;
    std::vector<gbslab::SqueezerSpec> pairs;
    std::vector<std::pair<int, double>> thermal;  // (mode, mean photon number)
    Eigen::MatrixXcd unitary;
    std::vector<double> eta;
    int cutoff = 30;
};

/// Click probabilities indexed by pattern bits (bit j set = detector j clicked).
std::vector<double> fock_click_probabilities(const FockExperiment &experiment);

/// Output photon-number distribution before loss: (occupations, probability).
std::vector<std::pair<std::vector<int>, double>> fock_photon_distribution(const FockExperiment &experiment);

}  // namespace gbslab_test

#endif
