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

#include "gbslab/maxhaf.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "gbslab/errors.h"
#include "gbslab/matrix_fn.h"
#include "gbslab/takagi.h"

namespace gbslab {

namespace {

using cd = std::complex<double>;

double graph_mean_photons(const Eigen::VectorXd &sigma, double c) {
    double n = 0.0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        double l = c * sigma(i);
        n += l * l / (1.0 - l * l);
    }
    return n;
}

// Places H'^dagger, H' = [[1, i], [1, -i]] / sqrt(2), on modes (a, b). It maps
// the two-mode squeezer's sampling matrix l [[0, 1], [1, 0]] to l I.
void place_unpairing_block(Eigen::MatrixXcd &u, int a, int b) {
    const double h = 1.0 / std::sqrt(2.0);
    u(a, a) = h;
    u(a, b) = h;
    u(b, a) = cd(0.0, -h);
    u(b, b) = cd(0.0, h);
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

WeightedGraph::WeightedGraph(Eigen::MatrixXcd adjacency) : adjacency_(std::move(adjacency)) {
    if (adjacency_.rows() != adjacency_.cols()) {
        throw std::invalid_argument("adjacency matrix must be square");
    }
    if (adjacency_.rows() > kMaxPatternModes) {
        throw std::invalid_argument("graphs are limited to " + std::to_string(kMaxPatternModes) + " vertices");
    }
    if (!is_symmetric(adjacency_)) {
        throw std::invalid_argument("adjacency matrix must be symmetric");
    }
    for (Eigen::Index i = 0; i < adjacency_.rows(); ++i) {
        if (adjacency_(i, i) != cd(0.0)) {
            throw std::invalid_argument("adjacency matrix must have a zero diagonal");
        }
    }
}

Eigen::MatrixXcd WeightedGraph::induced(uint32_t vertex_mask) const {
    std::vector<int> idx;
    for (int i = 0; i < num_vertices(); ++i) {
        if ((vertex_mask >> i) & 1u) {
            idx.push_back(i);
        }
    }
    Eigen::MatrixXcd out(idx.size(), idx.size());
    for (size_t i = 0; i < idx.size(); ++i) {
        for (size_t j = 0; j < idx.size(); ++j) {
            out(i, j) = adjacency_(idx[i], idx[j]);
        }
    }
    return out;
}

WeightedGraph parse_graph(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> errors;
    int v = -1;
    int line_no = 0;
    Eigen::MatrixXcd adj;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::string where = "graph line " + std::to_string(line_no) + ": ";
        if (v < 0) {
            if (!(ls >> v) || v < 1 || v > kMaxPatternModes) {
                throw ConfigError(where + "expected a vertex count in [1, " + std::to_string(kMaxPatternModes) + "]");
            }
            adj = Eigen::MatrixXcd::Zero(v, v);
            continue;
        }
        int a, b;
        std::string weight, extra;
        if (!(ls >> a >> b >> weight) || (ls >> extra)) {
            errors.push_back(where + "expected \"u v re[,im]\"");
            continue;
        }
        double re = 0.0, im = 0.0;
        auto comma = weight.find(',');
        try {
            size_t used = 0;
            re = std::stod(weight.substr(0, comma), &used);
            if (used != weight.substr(0, comma).size()) {
                throw std::invalid_argument("trailing");
            }
            if (comma != std::string::npos) {
                std::string tail = weight.substr(comma + 1);
                im = std::stod(tail, &used);
                if (used != tail.size()) {
                    throw std::invalid_argument("trailing");
                }
            }
        } catch (const std::exception &) {
            errors.push_back(where + "bad weight '" + weight + "'");
            continue;
        }
        if (a < 0 || a >= v || b < 0 || b >= v) {
            errors.push_back(where + "vertex index out of range");
            continue;
        }
        if (a == b) {
            errors.push_back(where + "self-loops are not allowed");
            continue;
        }
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
            errors.push_back(where + "duplicate edge");
            continue;
        }
        adj(a, b) = adj(b, a) = cd(re, im);
    }
    if (v < 0) {
        errors.insert(errors.begin(), "graph: missing vertex count");
    }
    if (!errors.empty()) {
        throw ConfigError(errors);
    }
    return WeightedGraph(adj);
}

WeightedGraph load_graph(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read graph file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string format_graph(const WeightedGraph &g) {
    std::string out = std::to_string(g.num_vertices()) + "\n";
    char buf[128];
    for (int i = 0; i < g.num_vertices(); ++i) {
        for (int j = i + 1; j < g.num_vertices(); ++j) {
            cd w = g.adjacency()(i, j);
            if (w != cd(0.0)) {
                std::snprintf(buf, sizeof buf, "%d %d %.17g,%.17g\n", i, j, w.real(), w.imag());
                out += buf;
            }
        }
    }
    return out;
}

WeightedGraph random_graph(int num_vertices, double edge_probability, uint64_t seed) {
    if (num_vertices < 1) {
        throw std::invalid_argument("random_graph needs at least one vertex");
    }
    Rng rng(seed);
    Eigen::MatrixXcd adj = Eigen::MatrixXcd::Zero(num_vertices, num_vertices);
    for (int i = 0; i < num_vertices; ++i) {
        for (int j = i + 1; j < num_vertices; ++j) {
            if (rng.uniform() < edge_probability) {
                adj(i, j) = adj(j, i) = rng.uniform();
            }
        }
    }
    return WeightedGraph(adj);
}

GraphEncoding encode_graph(const WeightedGraph &g, int target_modes, double mean_photons) {
    const int v = g.num_vertices();
    if (target_modes < v) {
        throw std::invalid_argument("encode_graph needs at least as many modes as vertices");
    }
    if (!(mean_photons > 0.0)) {
        throw std::invalid_argument("encode_graph needs a positive mean photon number");
    }
    TakagiDecomposition td = takagi(g.adjacency());
    GraphEncoding enc;
    enc.graph_modes = v;
    enc.takagi_values = td.values;
    const double sigma_max = v > 0 ? td.values(0) : 0.0;
    if (sigma_max <= 0.0) {
        enc.apparatus.num_modes = target_modes;
        enc.apparatus.interferometer = Interferometer::identity(target_modes);
        enc.apparatus.efficiency = EfficiencySpec::uniform(target_modes, 1.0);
        return enc;
    }

    const double c_max = std::tanh(kMaxSqueezing) / sigma_max;
    double c = c_max;
    if (graph_mean_photons(td.values, c_max) > mean_photons) {
        double lo = 0.0, hi = c_max;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            (graph_mean_photons(td.values, mid) < mean_photons ? lo : hi) = mid;
        }
        c = 0.5 * (lo + hi);
    }
    enc.scale = c;
    enc.mean_photons = graph_mean_photons(td.values, c);

    // Squeezers on Takagi slots 0..v-1 and ancillas from v on.
    std::vector<std::pair<int, int>> blocks;
    std::vector<double> lambdas;
    int ancillas = 0;
    for (int i = 0; i < v && td.values(i) > 0.0;) {
        double li = c * td.values(i);
        if (i + 1 < v && td.values(i + 1) > 0.0 && std::abs(td.values(i) - td.values(i + 1)) <= 1e-9 * td.values(i)) {
            blocks.push_back({i, i + 1});
            lambdas.push_back(li);
            i += 2;
        } else {
            blocks.push_back({i, v + ancillas});
            lambdas.push_back(li);
            ++ancillas;
            i += 1;
        }
    }
    const int m = std::max(target_modes, v + ancillas);
    Eigen::MatrixXcd unpair = Eigen::MatrixXcd::Identity(m, m);
    for (size_t b = 0; b < blocks.size(); ++b) {
        place_unpairing_block(unpair, blocks[b].first, blocks[b].second);
        enc.apparatus.squeezers.push_back({blocks[b].first, blocks[b].second, std::atanh(lambdas[b]), 0.0});
    }
    Eigen::MatrixXcd embed = Eigen::MatrixXcd::Identity(m, m);
    embed.topLeftCorner(v, v) = td.unitary;
    enc.apparatus.num_modes = m;
    enc.apparatus.interferometer = Interferometer(embed * unpair, 1e-9);
    enc.apparatus.efficiency = EfficiencySpec::uniform(m, 1.0);
    enc.apparatus.validate();
    return enc;
}

Eigen::MatrixXcd sampling_matrix(const GaussianState &state) {
    const int m = state.num_modes();
    const double h = 1.0 / std::sqrt(2.0);
    const cd i(0.0, 1.0);
    Eigen::MatrixXcd wq(2 * m, 2 * m);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m, m);
    wq << h * id, h * i * id, h * id, -h * i * id;
    Eigen::MatrixXcd q = wq * state.covariance().cast<cd>() * wq.adjoint();
    q.diagonal().array() += 0.5;
    Eigen::MatrixXcd mm = Eigen::MatrixXcd::Identity(2 * m, 2 * m) - q.partialPivLu().inverse();
    // Rows of a, columns of a^dagger. The lower-left block is its conjugate.
    return mm.topRightCorner(m, m);
}

ProportionalityFit fit_proportional(const Eigen::MatrixXcd &block, const Eigen::MatrixXcd &a) {
    ProportionalityFit fit{cd(0.0), 0.0};
    double aa = a.squaredNorm();
    if (aa == 0.0) {
        fit.relative_residual = block.norm() == 0.0 ? 0.0 : 1.0;
        return fit;
    }
    // <a, block> / <a, a> with the Frobenius inner product.
    fit.constant = (a.conjugate().cwiseProduct(block)).sum() / aa;
    double bn = block.norm();
    fit.relative_residual = bn == 0.0 ? 1.0 : (block - fit.constant * a).norm() / bn;
    return fit;
}

MaxHafResult brute_force_max_haf(const WeightedGraph &g, int k) {
    const int v = g.num_vertices();
    if (k < 2 || k % 2 != 0) {
        throw std::invalid_argument("max-Haf subgraph size must be even and at least 2");
    }
    if (k > v) {
        throw std::invalid_argument("max-Haf subgraph size exceeds the vertex count");
    }
    if (binomial(v, k) > 1e6) {
        throw std::invalid_argument("max-Haf brute force limited to 10^6 subsets");
    }
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) {
        idx[i] = i;
    }
    MaxHafResult best{idx, -1.0};
    while (true) {
        uint32_t mask = 0;
        for (int x : idx) {
            mask |= 1u << x;
        }
        double val = std::abs(hafnian(g.induced(mask)));
        if (val > best.value * (1.0 + 1e-12) + 1e-300) {
            best = {idx, val};
        }
        int p = k - 1;
        while (p >= 0 && idx[p] == v - k + p) {
            --p;
        }
        if (p < 0) {
            break;
        }
        ++idx[p];
        for (int q = p + 1; q < k; ++q) {
            idx[q] = idx[q - 1] + 1;
        }
    }
    return best;
}

SearchCurve random_search(const PatternSource &source, const WeightedGraph &g, int k, std::span<const int> budgets,
                          int trials, double optimum, uint64_t seed, std::string label) {
    if (budgets.empty() || !std::is_sorted(budgets.begin(), budgets.end()) || budgets.front() < 1) {
        throw std::invalid_argument("sample budgets must be positive and ascending");
    }
    if (trials < 1) {
        throw std::invalid_argument("random_search needs at least one trial");
    }
    if (!(optimum > 0.0)) {
        throw std::invalid_argument("random_search needs a positive optimum");
    }
    const int v = g.num_vertices();
    SearchCurve curve;
    curve.label = std::move(label);
    curve.k = k;
    curve.budgets.assign(budgets.begin(), budgets.end());
    curve.empty_trials.assign(budgets.size(), 0);
    std::unordered_map<uint32_t, double> cache;

    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<uint64_t>(t)));
        std::vector<double> row;
        double best = 0.0;
        bool any = false;
        size_t b = 0;
        for (int drawn = 1; b < budgets.size(); ++drawn) {
            ClickPattern s = source(rng);
            if (s.num_modes < v) {
                throw std::invalid_argument("sampler covers fewer modes than the graph has vertices");
            }
            if (s.click_count() == k && (s.bits >> v) == 0) {
                auto it = cache.find(s.bits);
                if (it == cache.end()) {
                    it = cache.emplace(s.bits, std::abs(hafnian(g.induced(s.bits))) / optimum).first;
                }
                best = std::max(best, it->second);
                any = true;
            }
            while (b < budgets.size() && budgets[b] == drawn) {
                row.push_back(best);
                if (!any) {
                    ++curve.empty_trials[b];
                }
                ++b;
            }
        }
        curve.trial_values.push_back(std::move(row));
    }
    for (size_t b = 0; b < budgets.size(); ++b) {
        double mean = 0.0;
        for (const auto &row : curve.trial_values) {
            mean += row[b];
        }
        mean /= trials;
        double ss = 0.0;
        for (const auto &row : curve.trial_values) {
            ss += (row[b] - mean) * (row[b] - mean);
        }
        curve.mean_normalized_best.push_back(mean);
        curve.standard_error.push_back(trials > 1 ? std::sqrt(ss / (trials - 1) / trials) : 0.0);
    }
    return curve;
}

std::string format_search_curve_csv(const SearchCurve &curve) {
    std::string out = "N,mean_normalized_best,stderr\n";
    char buf[96];
    for (size_t b = 0; b < curve.budgets.size(); ++b) {
        std::snprintf(buf, sizeof buf, "%d,%.12f,%.12f\n", curve.budgets[b], curve.mean_normalized_best[b],
                      curve.standard_error[b]);
        out += buf;
    }
    return out;
}

double bootstrap_mean_quantile(std::span<const double> values, double q, int replicas, uint64_t seed) {
    if (values.empty() || replicas < 1) {
        throw std::invalid_argument("bootstrap needs values and replicas");
    }
    Rng rng(seed);
    std::vector<double> means(replicas);
    for (int r = 0; r < replicas; ++r) {
        double s = 0.0;
        for (size_t i = 0; i < values.size(); ++i) {
            s += values[rng.below(values.size())];
        }
        means[r] = s / values.size();
    }
    std::sort(means.begin(), means.end());
    auto idx = static_cast<size_t>(std::floor(q * (replicas - 1)));
    return means[std::min(idx, means.size() - 1)];
}

}  // namespace gbslab
