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

#include "gbslab/interferometer.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gbslab/errors.h"
#include "gbslab/rng.h"

namespace gbslab {

double unitarity_defect(const Eigen::MatrixXcd &u) {
    if (u.size() == 0) {
        return 0.0;
    }
    Eigen::MatrixXcd d = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

Interferometer::Interferometer(Eigen::MatrixXcd matrix, double tolerance) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
        throw std::invalid_argument("interferometer matrix must be square and non-empty");
    }
    double defect = unitarity_defect(matrix_);
    if (!(defect < tolerance)) {
        throw std::invalid_argument("interferometer matrix is not unitary: max|U^dag U - I| = " +
                                    std::to_string(defect));
    }
}

Interferometer Interferometer::identity(int num_modes) {
    return Interferometer(Eigen::MatrixXcd::Identity(num_modes, num_modes));
}

Eigen::MatrixXd Interferometer::quadrature_matrix() const {
    const int m = num_modes();
    Eigen::MatrixXd s(2 * m, 2 * m);
    s.topLeftCorner(m, m) = matrix_.real();
    s.topRightCorner(m, m) = -matrix_.imag();
    s.bottomLeftCorner(m, m) = matrix_.imag();
    s.bottomRightCorner(m, m) = matrix_.real();
    return s;
}

Interferometer random_unitary(int num_modes, uint64_t seed) {
    if (num_modes < 1) {
        throw std::invalid_argument("random_unitary: need at least one mode");
    }
    Rng rng(seed);
    Eigen::MatrixXcd z(num_modes, num_modes);
    for (int j = 0; j < num_modes; ++j) {
        for (int i = 0; i < num_modes; ++i) {
            double re = rng.normal();
            double im = rng.normal();
            z(i, j) = std::complex<double>(re, im) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < num_modes; ++j) {
        std::complex<double> d = r(j, j);
        double mag = std::abs(d);
        q.col(j) *= mag > 0 ? d / mag : 1.0;
    }
    return Interferometer(q);
}

Interferometer parse_unitary(const std::string &text) {
    std::istringstream in(text);
    int m = 0;
    if (!(in >> m) || m < 1) {
        throw ConfigError("unitary file: first line must hold a positive mode count");
    }
    Eigen::MatrixXcd u(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            std::string token;
            if (!(in >> token)) {
                throw ConfigError("unitary file: expected " + std::to_string(m * m) + " entries, found " +
                                  std::to_string(i * m + j));
            }
            auto comma = token.find(',');
            if (comma == std::string::npos) {
                throw ConfigError("unitary file: entry '" + token + "' is not of the form re,im");
            }
            try {
                size_t used_re = 0, used_im = 0;
                std::string re_text = token.substr(0, comma);
                std::string im_text = token.substr(comma + 1);
                double re = std::stod(re_text, &used_re);
                double im = std::stod(im_text, &used_im);
                if (used_re != re_text.size() || used_im != im_text.size()) {
                    throw std::invalid_argument("trailing characters");
                }
                u(i, j) = {re, im};
            } catch (const std::exception &) {
                throw ConfigError("unitary file: entry '" + token + "' is not of the form re,im");
            }
        }
    }
    std::string extra;
    if (in >> extra) {
        throw ConfigError("unitary file: unexpected trailing content '" + extra + "'");
    }
    double defect = unitarity_defect(u);
    if (!(defect < 1e-8)) {
        throw ConfigError("unitary file: matrix is not unitary, max|U^dag U - I| = " + std::to_string(defect));
    }
    return Interferometer(u, 1e-8);
}

Interferometer load_unitary(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("unitary file '" + path.string() + "' cannot be opened");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_unitary(buffer.str());
}

std::string format_unitary(const Interferometer &itf) {
    const auto &u = itf.matrix();
    std::string out = std::to_string(u.rows()) + "\n";
    char buf[96];
    for (int i = 0; i < u.rows(); ++i) {
        for (int j = 0; j < u.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%s%.17g,%.17g", j ? " " : "", u(i, j).real(), u(i, j).imag());
            out += buf;
        }
        out += "\n";
    }
    return out;
}

}  // namespace gbslab
