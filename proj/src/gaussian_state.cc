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

#include "gbslab/gaussian_state.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gbslab {

namespace {

Eigen::MatrixXd symplectic_form(int m) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    omega.topRightCorner(m, m).setIdentity();
    omega.bottomLeftCorner(m, m) = -Eigen::MatrixXd::Identity(m, m);
    return omega;
}

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd &a) {
    return 0.5 * (a + a.transpose());
}

bool mode_is_vacuum(const Eigen::MatrixXd &cov, int m, int mode) {
    for (int row : {mode, mode + m}) {
        for (int c = 0; c < 2 * m; ++c) {
            double expected = c == row ? 0.5 : 0.0;
            if (std::abs(cov(row, c) - expected) > 1e-12) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

EfficiencySpec EfficiencySpec::uniform(int num_modes, double eta) {
    return EfficiencySpec{std::vector<double>(num_modes, eta)};
}

GaussianState::GaussianState(Eigen::MatrixXd covariance) : covariance_(std::move(covariance)) {
    if (covariance_.rows() != covariance_.cols() || covariance_.rows() == 0 || covariance_.rows() % 2 != 0) {
        throw std::invalid_argument("covariance must be a non-empty 2m x 2m matrix");
    }
    if (!covariance_.allFinite()) {
        throw std::invalid_argument("covariance has non-finite entries");
    }
    double scale = covariance_.cwiseAbs().maxCoeff();
    if ((covariance_ - covariance_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw std::invalid_argument("covariance is not symmetric");
    }
    double margin = uncertainty_margin();
    if (margin < -1e-10) {
        throw std::invalid_argument("covariance violates the uncertainty relation (min eigenvalue " +
                                    std::to_string(margin) + ")");
    }
}

GaussianState GaussianState::vacuum(int num_modes) {
    if (num_modes < 1) {
        throw std::invalid_argument("vacuum: need at least one mode");
    }
    return GaussianState(0.5 * Eigen::MatrixXd::Identity(2 * num_modes, 2 * num_modes));
}

double GaussianState::mean_photon_number() const {
    return 0.5 * (covariance_.trace() - num_modes());
}

double GaussianState::mode_mean_photon_number(int mode) const {
    const int m = num_modes();
    return 0.5 * (covariance_(mode, mode) + covariance_(mode + m, mode + m) - 1.0);
}

GaussianState GaussianState::marginal(std::span<const int> modes) const {
    const int m = num_modes();
    const int k = static_cast<int>(modes.size());
    std::vector<int> idx;
    for (int mode : modes) {
        if (mode < 0 || mode >= m) {
            throw std::invalid_argument("marginal: mode index out of range");
        }
        idx.push_back(mode);
    }
    for (int mode : modes) {
        idx.push_back(mode + m);
    }
    Eigen::MatrixXd sub(2 * k, 2 * k);
    for (int r = 0; r < 2 * k; ++r) {
        for (int c = 0; c < 2 * k; ++c) {
            sub(r, c) = covariance_(idx[r], idx[c]);
        }
    }
    return GaussianState(std::move(sub));
}

bool GaussianState::is_vacuum(double tolerance) const {
    const int n = static_cast<int>(covariance_.rows());
    return (covariance_ - 0.5 * Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= tolerance;
}

double GaussianState::uncertainty_margin() const {
    const int m = num_modes();
    Eigen::MatrixXcd h = covariance_.cast<std::complex<double>>();
    h += std::complex<double>(0.0, 0.5) * symplectic_form(m).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

void validate_squeezers(int num_modes, std::span<const SqueezerSpec> squeezers) {
    std::vector<bool> used(num_modes, false);
    for (const auto &s : squeezers) {
        if (s.mode_a < 0 || s.mode_a >= num_modes || s.mode_b < 0 || s.mode_b >= num_modes) {
            throw std::invalid_argument("squeezer mode index out of range");
        }
        if (s.mode_a == s.mode_b) {
            throw std::invalid_argument("squeezer needs two distinct modes");
        }
        if (!(s.r >= 0.0)) {
            throw std::invalid_argument("squeezing parameter must be >= 0");
        }
        if (s.r > kMaxSqueezing) {
            throw std::invalid_argument("squeezing parameter " + std::to_string(s.r) + " exceeds the supported " +
                                        "maximum of 5");
        }
        if (!std::isfinite(s.phase)) {
            throw std::invalid_argument("squeezer phase must be finite");
        }
        for (int mode : {s.mode_a, s.mode_b}) {
            if (used[mode]) {
                throw std::invalid_argument("mode " + std::to_string(mode) + " is driven by two squeezers");
            }
            used[mode] = true;
        }
    }
}

GaussianState apply_two_mode_squeezer(const GaussianState &state, const SqueezerSpec &spec) {
    const int m = state.num_modes();
    validate_squeezers(m, std::span(&spec, 1));
    const Eigen::MatrixXd &cov = state.covariance();
    if (!mode_is_vacuum(cov, m, spec.mode_a) || !mode_is_vacuum(cov, m, spec.mode_b)) {
        throw std::invalid_argument("two-mode squeezer target modes must be in vacuum");
    }
    const int xa = spec.mode_a, xb = spec.mode_b, pa = spec.mode_a + m, pb = spec.mode_b + m;
    double diag = 0.5 * std::cosh(2.0 * spec.r);
    double corr = 0.5 * std::sinh(2.0 * spec.r);
    double re = corr * std::cos(spec.phase);
    double im = corr * std::sin(spec.phase);
    Eigen::MatrixXd out = cov;
    out(xa, xa) = out(xb, xb) = out(pa, pa) = out(pb, pb) = diag;
    out(xa, xb) = out(xb, xa) = re;
    out(pa, pb) = out(pb, pa) = -re;
    out(xa, pb) = out(pb, xa) = im;
    out(pa, xb) = out(xb, pa) = im;
    return GaussianState(std::move(out));
}

GaussianState apply_interferometer(const GaussianState &state, const Interferometer &itf) {
    if (itf.num_modes() != state.num_modes()) {
        throw std::invalid_argument("interferometer dimension " + std::to_string(itf.num_modes()) +
                                    " does not match state modes " + std::to_string(state.num_modes()));
    }
    Eigen::MatrixXd s = itf.quadrature_matrix();
    return GaussianState(symmetrized(s * state.covariance() * s.transpose()));
}

GaussianState apply_loss(const GaussianState &state, const EfficiencySpec &eff) {
    const int m = state.num_modes();
    if (static_cast<int>(eff.per_mode_eta.size()) != m) {
        throw std::invalid_argument("efficiency vector length does not match the mode count");
    }
    Eigen::VectorXd scale(2 * m);
    for (int j = 0; j < m; ++j) {
        double eta = eff.per_mode_eta[j];
        if (!(eta >= 0.0 && eta <= 1.0)) {
            throw std::invalid_argument("efficiency " + std::to_string(eta) + " outside [0, 1]");
        }
        scale(j) = scale(j + m) = std::sqrt(eta);
    }
    Eigen::MatrixXd out = scale.asDiagonal() * state.covariance() * scale.asDiagonal();
    for (int j = 0; j < m; ++j) {
        double vac = 0.5 * (1.0 - eff.per_mode_eta[j]);
        out(j, j) += vac;
        out(j + m, j + m) += vac;
    }
    return GaussianState(std::move(out));
}

GaussianState thermalize(int num_modes, std::span<const SqueezerSpec> squeezers) {
    validate_squeezers(num_modes, squeezers);
    Eigen::MatrixXd cov = 0.5 * Eigen::MatrixXd::Identity(2 * num_modes, 2 * num_modes);
    for (const auto &s : squeezers) {
        double variance = 0.5 * std::cosh(2.0 * s.r);  // (2 sinh^2 r + 1) / 2
        for (int mode : {s.mode_a, s.mode_b}) {
            cov(mode, mode) = cov(mode + num_modes, mode + num_modes) = variance;
        }
    }
    return GaussianState(std::move(cov));
}

void Apparatus::validate() const {
    if (num_modes < 1) {
        throw std::invalid_argument("apparatus needs at least one mode");
    }
    validate_squeezers(num_modes, squeezers);
    if (interferometer.num_modes() != num_modes) {
        throw std::invalid_argument("interferometer has " + std::to_string(interferometer.num_modes()) +
                                    " modes, apparatus has " + std::to_string(num_modes));
    }
    if (static_cast<int>(efficiency.per_mode_eta.size()) != num_modes) {
        throw std::invalid_argument("efficiency vector length does not match the mode count");
    }
    for (double eta : efficiency.per_mode_eta) {
        if (!(eta >= 0.0 && eta <= 1.0)) {
            throw std::invalid_argument("efficiency " + std::to_string(eta) + " outside [0, 1]");
        }
    }
}

GaussianState gbs_state(const Apparatus &apparatus) {
    apparatus.validate();
    GaussianState state = GaussianState::vacuum(apparatus.num_modes);
    for (const auto &s : apparatus.squeezers) {
        state = apply_two_mode_squeezer(state, s);
    }
    state = apply_interferometer(state, apparatus.interferometer);
    return apply_loss(state, apparatus.efficiency);
}

GaussianState thermal_state(const Apparatus &apparatus) {
    apparatus.validate();
    GaussianState state = thermalize(apparatus.num_modes, apparatus.squeezers);
    state = apply_interferometer(state, apparatus.interferometer);
    return apply_loss(state, apparatus.efficiency);
}

std::vector<double> input_mean_photons(const Apparatus &apparatus) {
    std::vector<double> mean(apparatus.num_modes, 0.0);
    for (const auto &s : apparatus.squeezers) {
        double n = std::sinh(s.r) * std::sinh(s.r);
        mean[s.mode_a] = n;
        mean[s.mode_b] = n;
    }
    return mean;
}

}  // namespace gbslab
