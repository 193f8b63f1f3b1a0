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

#include "gbslab/experiment_config.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "gbslab/click_distribution.h"
#include "gbslab/errors.h"
#include "gbslab/interferometer.h"
#include "gbslab/maxhaf.h"
#include "gbslab/rng.h"
#include "gbslab/sampler.h"

namespace gbslab {

namespace {

std::vector<std::string> split_words(const std::string &s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) {
        out.push_back(w);
    }
    return out;
}

std::string trim(const std::string &s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::optional<double> to_double(const std::string &s) {
    if (s.empty()) {
        return std::nullopt;
    }
    char *end = nullptr;
    errno = 0;
    double v = std::strtod(s.c_str(), &end);
    if (*end != '\0' || errno == ERANGE || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

std::optional<uint64_t> to_u64(const std::string &s) {
    if (s.empty() || s[0] == '-' || s[0] == '+') {
        return std::nullopt;
    }
    char *end = nullptr;
    errno = 0;
    unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (*end != '\0' || errno == ERANGE) {
        return std::nullopt;
    }
    return static_cast<uint64_t>(v);
}

std::optional<int> to_int(const std::string &s) {
    if (s.empty()) {
        return std::nullopt;
    }
    char *end = nullptr;
    errno = 0;
    long v = std::strtol(s.c_str(), &end, 10);
    if (*end != '\0' || errno == ERANGE || v < -1000000000L || v > 1000000000L) {
        return std::nullopt;
    }
    return static_cast<int>(v);
}

std::string rest_after_first_word(const std::string &value) {
    auto w = value.find_first_of(" \t");
    return w == std::string::npos ? "" : trim(value.substr(w));
}

std::string resolve_path(const std::string &p, const std::filesystem::path &base) {
    std::filesystem::path path(p);
    if (path.is_relative() && !base.empty()) {
        path = base / path;
    }
    return path.lexically_normal().string();
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

ExperimentConfig parse_config(const std::string &text, const std::filesystem::path &base_dir) {
    ExperimentConfig cfg;
    std::vector<std::string> errors;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    std::filesystem::path base = base_dir.empty() ? std::filesystem::path{} : std::filesystem::absolute(base_dir);

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) {
            continue;
        }
        const std::string where = "line " + std::to_string(line_no) + ": ";
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            errors.push_back(where + "expected 'key = value'");
            continue;
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        auto words = split_words(value);
        auto bad = [&](const std::string &why) { errors.push_back(where + key + ": " + why); };
        if (key != "squeezer" && !seen.insert(key).second) {
            bad("repeated key");
            continue;
        }
        if (words.empty()) {
            bad("missing value");
            continue;
        }

        if (key == "modes" || key == "sector" || key == "k" || key == "trials" || key == "bootstrap") {
            auto v = words.size() == 1 ? to_int(words[0]) : std::nullopt;
            if (!v) {
                bad("expected an integer");
                continue;
            }
            if (key == "modes") {
                cfg.modes = *v;
            } else if (key == "sector") {
                cfg.sector = *v;
            } else if (key == "k") {
                cfg.k = *v;
            } else if (key == "trials") {
                cfg.trials = *v;
            } else {
                cfg.bootstrap = *v;
            }
        } else if (key == "samples" || key == "seed" || key == "lrt_samples") {
            auto v = words.size() == 1 ? to_u64(words[0]) : std::nullopt;
            if (!v) {
                bad("expected an unsigned integer");
                continue;
            }
            (key == "samples" ? cfg.samples : key == "seed" ? cfg.seed : cfg.lrt_samples) = *v;
        } else if (key == "squeezer") {
            if (words.size() < 3 || words.size() > 4) {
                bad("expected '<mode_a> <mode_b> <r> [phase]'");
                continue;
            }
            auto a = to_int(words[0]);
            auto b = to_int(words[1]);
            auto r = to_double(words[2]);
            auto phase = words.size() == 4 ? to_double(words[3]) : std::optional<double>(0.0);
            if (!a || !b || !r || !phase) {
                bad("expected '<mode_a> <mode_b> <r> [phase]'");
                continue;
            }
            cfg.squeezers.push_back({*a, *b, *r, *phase});
        } else if (key == "unitary") {
            if (words[0] == "haar" && words.size() <= 2) {
                cfg.unitary = UnitarySource::haar;
                if (words.size() == 2) {
                    auto s = to_u64(words[1]);
                    if (!s) {
                        bad("expected 'haar [seed]'");
                        continue;
                    }
                    cfg.unitary_seed = *s;
                }
            } else if (words[0] == "identity" && words.size() == 1) {
                cfg.unitary = UnitarySource::identity;
            } else if (words[0] == "file" && words.size() >= 2) {
                cfg.unitary = UnitarySource::file;
                cfg.unitary_file = resolve_path(rest_after_first_word(value), base);
            } else {
                bad("expected 'haar [seed]', 'file <path>' or 'identity'");
            }
        } else if (key == "efficiency") {
            cfg.efficiency.clear();
            for (const auto &w : words) {
                auto v = to_double(w);
                if (!v) {
                    bad("expected numbers");
                    cfg.efficiency.clear();
                    break;
                }
                cfg.efficiency.push_back(*v);
            }
        } else if (key == "output") {
            cfg.output = resolve_path(value, base);
        } else if (key == "graph") {
            if (words[0] == "file" && words.size() >= 2) {
                cfg.graph = GraphSource::file;
                cfg.graph_file = resolve_path(rest_after_first_word(value), base);
            } else if (words[0] == "random" && words.size() == 4) {
                auto v = to_int(words[1]);
                auto p = to_double(words[2]);
                auto s = to_u64(words[3]);
                if (!v || !p || !s) {
                    bad("expected 'random <V> <edge_probability> <seed>'");
                    continue;
                }
                cfg.graph = GraphSource::random;
                cfg.graph_vertices = *v;
                cfg.graph_edge_probability = *p;
                cfg.graph_seed = *s;
            } else {
                bad("expected 'file <path>' or 'random <V> <edge_probability> <seed>'");
            }
        } else if (key == "budgets") {
            cfg.budgets.clear();
            for (const auto &w : words) {
                auto v = to_int(w);
                if (!v) {
                    bad("expected integers");
                    cfg.budgets.clear();
                    break;
                }
                cfg.budgets.push_back(*v);
            }
        } else if (key == "mean_photons") {
            auto v = words.size() == 1 ? to_double(words[0]) : std::nullopt;
            if (!v) {
                bad("expected a number");
                continue;
            }
            cfg.mean_photons = *v;
        } else {
            errors.push_back(where + "unknown key '" + key + "'");
        }
    }
    if (!errors.empty()) {
        throw ConfigError(errors);
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str(), path.parent_path());
    } catch (const ConfigError &e) {
        std::vector<std::string> v;
        for (const auto &s : e.violations()) {
            v.push_back(path.string() + ": " + s);
        }
        throw ConfigError(v);
    }
}

uint64_t resolved_unitary_seed(const ExperimentConfig &config) {
    return config.unitary_seed ? *config.unitary_seed : derive_seed(config.seed, 0);
}

std::string format_config(const ExperimentConfig &c) {
    std::string out;
    auto kv = [&](const std::string &k, const std::string &v) { out += k + " = " + v + "\n"; };
    kv("modes", std::to_string(c.modes));
    for (const auto &s : c.squeezers) {
        kv("squeezer", std::to_string(s.mode_a) + " " + std::to_string(s.mode_b) + " " + fmt_double(s.r) + " " +
                           fmt_double(s.phase));
    }
    switch (c.unitary) {
        case UnitarySource::haar:
            kv("unitary", "haar " + std::to_string(resolved_unitary_seed(c)));
            break;
        case UnitarySource::file:
            kv("unitary", "file " + std::filesystem::absolute(c.unitary_file).lexically_normal().string());
            break;
        case UnitarySource::identity:
            kv("unitary", "identity");
            break;
    }
    std::string eff;
    for (double e : c.efficiency) {
        eff += (eff.empty() ? "" : " ") + fmt_double(e);
    }
    kv("efficiency", eff);
    if (c.sector) {
        kv("sector", std::to_string(*c.sector));
    }
    kv("samples", std::to_string(c.samples));
    kv("seed", std::to_string(c.seed));
    kv("lrt_samples", std::to_string(c.lrt_samples));
    kv("bootstrap", std::to_string(c.bootstrap));
    if (c.graph == GraphSource::file) {
        kv("graph", "file " + std::filesystem::absolute(c.graph_file).lexically_normal().string());
    } else if (c.graph == GraphSource::random) {
        kv("graph", "random " + std::to_string(c.graph_vertices) + " " + fmt_double(c.graph_edge_probability) + " " +
                        std::to_string(c.graph_seed));
    }
    kv("k", std::to_string(c.k));
    kv("trials", std::to_string(c.trials));
    std::string b;
    for (int x : c.budgets) {
        b += (b.empty() ? "" : " ") + std::to_string(x);
    }
    kv("budgets", b);
    kv("mean_photons", fmt_double(c.mean_photons));
    return out;
}

void validate_config(const ExperimentConfig &c, Verb verb) {
    std::vector<std::string> errors;
    const bool needs_state = verb != Verb::maxhaf;
    const int mode_limit = (verb == Verb::cost) ? kMaxPatternModes : kMaxExactModes;

    if (needs_state) {
        if (c.modes < 1 || c.modes > mode_limit) {
            errors.push_back("modes: must be in [1, " + std::to_string(mode_limit) + "], got " +
                             std::to_string(c.modes));
        }
        std::vector<int> owner(std::max(c.modes, 0), -1);
        for (size_t i = 0; i < c.squeezers.size(); ++i) {
            const auto &s = c.squeezers[i];
            std::string tag = "squeezer " + std::to_string(i + 1) + ": ";
            bool in_range = true;
            for (int mode : {s.mode_a, s.mode_b}) {
                if (mode < 0 || mode >= c.modes) {
                    errors.push_back(tag + "mode " + std::to_string(mode) + " out of range");
                    in_range = false;
                }
            }
            if (s.mode_a == s.mode_b) {
                errors.push_back(tag + "modes must be distinct");
                in_range = false;
            }
            if (!(s.r >= 0.0) || s.r > kMaxSqueezing) {
                errors.push_back(tag + "r must be in [0, " + fmt_double(kMaxSqueezing) + "]");
            }
            if (in_range) {
                for (int mode : {s.mode_a, s.mode_b}) {
                    if (owner[mode] >= 0) {
                        errors.push_back(tag + "mode " + std::to_string(mode) + " already used by squeezer " +
                                         std::to_string(owner[mode] + 1));
                    }
                    owner[mode] = static_cast<int>(i);
                }
            }
        }
        if (c.efficiency.size() != 1 && static_cast<int>(c.efficiency.size()) != c.modes) {
            errors.push_back("efficiency: expected 1 or " + std::to_string(c.modes) + " values");
        }
        for (double e : c.efficiency) {
            if (!(e >= 0.0 && e <= 1.0)) {
                errors.push_back("efficiency: " + fmt_double(e) + " outside [0, 1]");
            }
        }
        if (c.unitary == UnitarySource::file) {
            try {
                Interferometer u = load_unitary(c.unitary_file);
                if (u.num_modes() != c.modes) {
                    errors.push_back("unitary: file " + c.unitary_file + " holds a " + std::to_string(u.num_modes()) +
                                     "-mode matrix, expected " + std::to_string(c.modes));
                }
            } catch (const ConfigError &e) {
                for (const auto &v : e.violations()) {
                    errors.push_back("unitary: " + v);
                }
            } catch (const std::exception &e) {
                errors.push_back("unitary: " + std::string(e.what()));
            }
        }
        if (c.sector && (*c.sector < 0 || *c.sector > c.modes)) {
            errors.push_back("sector: must be in [0, modes]");
        }
    }

    switch (verb) {
        case Verb::distribution:
        case Verb::cost:
            if (c.samples == 0) {
                errors.push_back("samples: must be positive");
            }
            break;
        case Verb::validate:
            if (c.lrt_samples == 0) {
                errors.push_back("lrt_samples: must be positive");
            }
            if (c.sector && *c.sector < 1) {
                errors.push_back("sector: validation needs at least one click");
            }
            break;
        case Verb::maxhaf: {
            int v = 0;
            if (c.graph == GraphSource::none) {
                errors.push_back("graph: required for maxhaf");
            } else if (c.graph == GraphSource::file) {
                try {
                    v = load_graph(c.graph_file).num_vertices();
                } catch (const ConfigError &e) {
                    for (const auto &s : e.violations()) {
                        errors.push_back("graph: " + s);
                    }
                } catch (const std::exception &e) {
                    errors.push_back("graph: " + std::string(e.what()));
                }
            } else {
                v = c.graph_vertices;
                if (v < 1 || v > kMaxExactModes) {
                    errors.push_back("graph: random vertex count must be in [1, " + std::to_string(kMaxExactModes) +
                                     "]");
                    v = 0;
                }
                if (!(c.graph_edge_probability >= 0.0 && c.graph_edge_probability <= 1.0)) {
                    errors.push_back("graph: edge probability outside [0, 1]");
                }
            }
            if (v > kMaxExactModes) {
                errors.push_back("graph: at most " + std::to_string(kMaxExactModes) + " vertices supported");
            }
            if (c.modes != 0 && v > 0 && c.modes < v) {
                errors.push_back("modes: fewer modes than graph vertices");
            }
            if (c.k < 2 || c.k % 2 != 0) {
                errors.push_back("k: must be even and at least 2");
            } else if (v > 0 && c.k > v) {
                errors.push_back("k: exceeds the vertex count");
            } else if (v > 0 && binomial(v, c.k) > 1e6) {
                errors.push_back("k: more than 10^6 subgraphs to enumerate");
            }
            if (c.trials < 1) {
                errors.push_back("trials: must be positive");
            }
            if (c.budgets.empty() || c.budgets.front() < 1 || !std::is_sorted(c.budgets.begin(), c.budgets.end()) ||
                std::adjacent_find(c.budgets.begin(), c.budgets.end()) != c.budgets.end()) {
                errors.push_back("budgets: must be positive and strictly ascending");
            }
            if (!(c.mean_photons > 0.0)) {
                errors.push_back("mean_photons: must be positive");
            }
            break;
        }
    }
    if (c.bootstrap < 0) {
        errors.push_back("bootstrap: must be non-negative");
    }
    if (!errors.empty()) {
        throw ConfigError(errors);
    }
}

Apparatus build_apparatus(const ExperimentConfig &c) {
    Apparatus app;
    app.num_modes = c.modes;
    app.squeezers = c.squeezers;
    switch (c.unitary) {
        case UnitarySource::haar:
            app.interferometer = random_unitary(c.modes, resolved_unitary_seed(c));
            break;
        case UnitarySource::file:
            app.interferometer = load_unitary(c.unitary_file);
            break;
        case UnitarySource::identity:
            app.interferometer = Interferometer::identity(c.modes);
            break;
    }
    app.efficiency = c.efficiency.size() == 1 ? EfficiencySpec::uniform(c.modes, c.efficiency[0])
                                              : EfficiencySpec{c.efficiency};
    app.validate();
    return app;
}

uint64_t fnv1a64(const std::string &data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace gbslab
