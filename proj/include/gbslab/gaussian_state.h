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

#ifndef GBSLAB_GAUSSIAN_STATE_H
#define GBSLAB_GAUSSIAN_STATE_H

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "gbslab/interferometer.h"

namespace gbslab {

/// Largest accepted squeezing parameter. Beyond this the covariance is too
/// badly conditioned for the determinant kernels.
inline constexpr double kMaxSqueezing = 5.0;

/// Two-mode squeezed vacuum source on (mode_a, mode_b). The pair correlation
/// <a b> = e^{i phase} sinh(r) cosh(r); phase 0 correlates x_a with x_b.
struct SqueezerSpec {
    int mode_a = 0;
    int mode_b = 1;
    double r = 0.0;
    double phase = 0.0;
};

/// Per-mode detection efficiency in [0, 1].
struct EfficiencySpec {
    std::vector<double> per_mode_eta;

    static EfficiencySpec uniform(int num_modes, double eta);
};

/// Zero-mean Gaussian state of m bosonic modes.
///
/// The covariance is real symmetric 2m x 2m in (x_1..x_m, p_1..p_m) order
/// with a = (x + i p) / sqrt(2), so the vacuum is I/2. Construction checks
/// symmetry and the uncertainty relation Sigma + i Omega / 2 >= 0; states
/// are immutable afterwards.
class GaussianState {
   public:
    /// Throws std::invalid_argument if the covariance violates the invariants.
    explicit GaussianState(Eigen::MatrixXd covariance);

    static GaussianState vacuum(int num_modes);

    int num_modes() const {
        return static_cast<int>(covariance_.rows() / 2);
    }
    const Eigen::MatrixXd &covariance() const {
        return covariance_;
    }

    /// Total mean photon number (Tr Sigma - m) / 2.
    double mean_photon_number() const;
    double mode_mean_photon_number(int mode) const;

    /// Reduced state on `modes` (in the given order).
    GaussianState marginal(std::span<const int> modes) const;

    bool is_vacuum(double tolerance = 1e-14) const;

    /// Smallest eigenvalue of Sigma + i Omega / 2 (>= 0 for physical states).
    double uncertainty_margin() const;

   private:
    Eigen::MatrixXd covariance_;
};

/// Prepares a two-mode squeezed vacuum on spec.mode_a / spec.mode_b. Both
/// modes must still be in vacuum, uncorrelated with everything else.
GaussianState apply_two_mode_squeezer(const GaussianState &state, const SqueezerSpec &spec);

/// Sigma -> S Sigma S^T with S the quadrature image of the unitary.
GaussianState apply_interferometer(const GaussianState &state, const Interferometer &itf);

/// Beamsplitter-to-vacuum loss: Sigma -> sqrt(eta) Sigma sqrt(eta) + (I - eta) / 2.
GaussianState apply_loss(const GaussianState &state, const EfficiencySpec &eff);

/// Independent thermal state on every squeezed mode with the same mean
/// photon number sinh^2(r) as the squeezer's marginal; no correlations.
GaussianState thermalize(int num_modes, std::span<const SqueezerSpec> squeezers);

/// Throws std::invalid_argument on out-of-range or repeated modes, negative
/// r, or r > kMaxSqueezing.
void validate_squeezers(int num_modes, std::span<const SqueezerSpec> squeezers);

/// One configuration of the experiment: sources, network, detectors.
struct Apparatus {
    int num_modes = 1;
    std::vector<SqueezerSpec> squeezers;
    Interferometer interferometer = Interferometer::identity(1);
    EfficiencySpec efficiency = EfficiencySpec::uniform(1, 1.0);

    void validate() const;
};

/// squeezers -> interferometer -> loss.
GaussianState gbs_state(const Apparatus &apparatus);

/// thermalize -> interferometer -> loss.
GaussianState thermal_state(const Apparatus &apparatus);

/// Mean photon number entering each input mode (sinh^2 r on squeezed modes).
std::vector<double> input_mean_photons(const Apparatus &apparatus);

}  // namespace gbslab

#endif
