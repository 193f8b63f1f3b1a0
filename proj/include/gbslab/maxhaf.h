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

#ifndef GBSLAB_MAXHAF_H
#define GBSLAB_MAXHAF_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gbslab/click_distribution.h"
#include "gbslab/gaussian_state.h"
#include "gbslab/rng.h"

namespace gbslab {

/// Undirected graph with complex edge weights and no self-loops.
class WeightedGraph {
   public:
    /// Throws std::invalid_argument unless `adjacency` is square, symmetric
    /// to 1e-12 and has a zero diagonal.
    explicit WeightedGraph(Eigen::MatrixXcd adjacency);

    int num_vertices() const {
        return static_cast<int>(adjacency_.rows());
    }
    const Eigen::MatrixXcd &adjacency() const {
        return adjacency_;
    }
    /// Induced adjacency on the vertices whose bits are set.
    Eigen::MatrixXcd induced(uint32_t vertex_mask) const;

   private:
    Eigen::MatrixXcd adjacency_;
};

/// Graph file: a first line holding V, then one "u v re[,im]" line per edge
/// with 0-based vertex indices. Blank lines and lines starting with '#' are
/// skipped. Problems are reported together as a ConfigError.
WeightedGraph parse_graph(const std::string &text);
WeightedGraph load_graph(const std::filesystem::path &path);
std::string format_graph(const WeightedGraph &g);

/// Each vertex pair joined with probability `edge_probability`, weight U(0, 1).
WeightedGraph random_graph(int num_vertices, double edge_probability, uint64_t seed);

/// A GBS apparatus whose first `graph_modes` output modes carry the pure
/// Gaussian state with sampling matrix scale * A.
struct GraphEncoding {
    Apparatus apparatus;
    int graph_modes = 0;
    double scale = 0.0;
    double mean_photons = 0.0;  // over the graph modes
    Eigen::VectorXd takagi_values;  // of A, descending
};

/// Takagi-factorizes scale * A = U diag(l) U^T. Equal nonzero values are
/// realized in pairs by one two-mode squeezer between graph slots; each
/// remaining value gets a two-mode squeezer with an ancilla mode placed after
/// the graph modes, so the apparatus may need more than `target_modes` modes.
/// `scale` is chosen so the graph modes carry `mean_photons` photons on
/// average, capped where the largest squeezer would reach kMaxSqueezing.
GraphEncoding encode_graph(const WeightedGraph &g, int target_modes, double mean_photons = 1.0);

/// Sampling matrix of a pure zero-mean state, the B with
/// |psi> ~ exp(B_ij a_i^dagger a_j^dagger / 2) |0>. Read off I - Q^{-1} in the
/// (a, a^dagger) basis, Q = W Sigma W^dagger + I/2, as its (a, a^dagger) block.
Eigen::MatrixXcd sampling_matrix(const GaussianState &state);

/// Least-squares constant kappa with block ~ kappa * a, and the relative
/// residual |block - kappa a| / |block|.
struct ProportionalityFit {
    std::complex<double> constant;
    double relative_residual = 0.0;
};
ProportionalityFit fit_proportional(const Eigen::MatrixXcd &block, const Eigen::MatrixXcd &a);

struct MaxHafResult {
    std::vector<int> subset;
    double value = 0.0;
};

/// Exhaustive maximum of |haf| over k-vertex induced subgraphs. Ties keep the
/// lexicographically first subset. Throws for odd or out-of-range k and when
/// C(V, k) exceeds 10^6.
MaxHafResult brute_force_max_haf(const WeightedGraph &g, int k);

using PatternSource = std::function<ClickPattern(Rng &)>;

struct SearchCurve {
    std::string label;
    int k = 0;
    std::vector<int> budgets;
    std::vector<double> mean_normalized_best;
    std::vector<double> standard_error;
    /// Per budget, how many trials had seen no usable sample yet (value 0).
    std::vector<int> empty_trials;
    /// trial_values[t][b]: normalized running best of trial t at budgets[b].
    std::vector<std::vector<double>> trial_values;
};

/// Random search: each trial draws max(budgets) patterns from `source` with
/// Rng(derive_seed(seed, trial)), keeps those with exactly k clicks all on
/// the graph's modes, and tracks the best |haf| of the induced subgraphs
/// normalized by `optimum`.
SearchCurve random_search(const PatternSource &source, const WeightedGraph &g, int k, std::span<const int> budgets,
                          int trials, double optimum, uint64_t seed, std::string label);

std::string format_search_curve_csv(const SearchCurve &curve);

/// q-quantile of the bootstrap distribution of the mean of `values`.
double bootstrap_mean_quantile(std::span<const double> values, double q, int replicas, uint64_t seed);

}  // namespace gbslab

#endif
