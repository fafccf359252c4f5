// Copyright 2026 The polcap Authors
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

// polcap: capacity curves, optimal ensembles, verification and shot simulation for the
// two-slot correlated polarization noise channel.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polcap/polcap.hpp"
#include "verify_suites.hpp"

namespace {

using nlohmann::json;
using namespace polcap;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    double eta_min = 0.0;
    double eta_max = 1.0;
    std::size_t steps = 11;
    std::string mode = "all";
    std::size_t samples = 100000;
    std::size_t shots = 1000000;
    std::uint64_t seed = 0;
    std::size_t shards = 1;
    std::string out;
    std::string format = "csv";
    double p = 0.5;
    double eta = 1.0;
    std::optional<double> q;
    bool optimize = false;
    std::vector<std::string> suites;
};

std::string fixed9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

InputMode parse_input_mode(const std::string &m) {
    if (m == "entangled") {
        return InputMode::entangled;
    }
    if (m == "separable") {
        return InputMode::separable;
    }
    throw UsageError("--mode must be entangled or separable for this command");
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

std::string cmd_curve(const RunConfig &cfg) {
    if (!(cfg.eta_min >= 0.0 && cfg.eta_min <= cfg.eta_max && cfg.eta_max <= 1.0)) {
        throw UsageError("need 0 <= --eta-min <= --eta-max <= 1");
    }
    if (cfg.steps == 0) {
        throw UsageError("--steps must be at least 1");
    }
    if (cfg.steps > 1 && cfg.eta_min == cfg.eta_max) {
        throw UsageError("--steps > 1 needs --eta-min < --eta-max");
    }
    std::vector<CurveMode> modes;
    if (cfg.mode == "all") {
        modes = {CurveMode::entangled, CurveMode::separable, CurveMode::baseline};
    } else if (cfg.mode == "entangled") {
        modes = {CurveMode::entangled};
    } else if (cfg.mode == "separable") {
        modes = {CurveMode::separable};
    } else if (cfg.mode == "baseline") {
        modes = {CurveMode::baseline};
    } else {
        throw UsageError("unknown --mode " + cfg.mode);
    }
    std::vector<double> grid(cfg.steps);
    for (std::size_t i = 0; i < cfg.steps; ++i) {
        grid[i] = cfg.steps == 1 ? cfg.eta_min
                                 : cfg.eta_min + (cfg.eta_max - cfg.eta_min) * static_cast<double>(i) /
                                                     static_cast<double>(cfg.steps - 1);
    }
    grid.back() = cfg.steps == 1 ? cfg.eta_min : cfg.eta_max;
    std::vector<std::vector<CurvePoint>> columns;
    for (const auto m : modes) {
        columns.push_back(capacity_curve(m, grid));
    }

    if (cfg.format == "csv") {
        std::string s = "eta";
        for (const auto m : modes) {
            s += std::string(",chi_total_") + to_string(m);
        }
        s += "\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            s += fixed9(grid[i]);
            for (const auto &col : columns) {
                s += "," + fixed9(col[i].chi_total);
            }
            s += "\n";
        }
        return s;
    }
    if (cfg.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            json row;
            row["eta"] = grid[i];
            for (std::size_t k = 0; k < modes.size(); ++k) {
                row[std::string("chi_total_") + to_string(modes[k])] = columns[k][i].chi_total;
            }
            rows.push_back(row);
        }
        json cols = json::array({"eta"});
        for (const auto m : modes) {
            cols.push_back(std::string("chi_total_") + to_string(m));
        }
        return dump({{"columns", cols}, {"rows", rows}});
    }
    throw UsageError("--format must be csv or json");
}

std::string cmd_verify(const RunConfig &cfg, int &exit_code) {
    const tools::SuiteConfig sc{cfg.samples, cfg.seed, cfg.shards};
    const auto suites = tools::all_suites();
    std::vector<tools::Suite> selected;
    if (cfg.suites.empty()) {
        selected = suites;
    } else {
        for (const auto &name : cfg.suites) {
            const auto it = std::find_if(suites.begin(), suites.end(), [&](const auto &s) { return s.name == name; });
            if (it == suites.end()) {
                throw UsageError("unknown --suite " + name);
            }
            selected.push_back(*it);
        }
    }
    json list = json::array();
    bool all_pass = true;
    for (const auto &suite : selected) {
        const auto r = suite.run(sc);
        all_pass = all_pass && r.pass;
        list.push_back({{"name", r.name},
                        {"pass", r.pass},
                        {"max_deviation", r.max_deviation},
                        {"tolerance", r.tolerance},
                        {"samples", r.samples},
                        {"seed", cfg.seed}});
    }
    exit_code = all_pass ? kExitOk : kExitVerifyFailed;
    return dump({{"all_pass", all_pass}, {"seed", cfg.seed}, {"shards", cfg.shards}, {"suites", list}});
}

std::string cmd_ensemble(const RunConfig &cfg) {
    const InputMode mode = parse_input_mode(cfg.mode);
    if (!(cfg.eta >= 0.0 && cfg.eta <= 1.0)) {
        throw UsageError("--eta must lie in [0, 1]");
    }
    const auto opt = optimal_input_ensemble(mode, cfg.eta);
    json states = json::array();
    for (std::size_t i = 0; i < opt.labels.size(); ++i) {
        json s{{"label", opt.labels[i]}, {"probability", opt.ensemble.items()[i].first}};
        const auto &rho = opt.ensemble.items()[i].second;
        if (i >= 3) {
            s["werner_parameter"] = werner_parameter(*truncate_to_blocks(rho).blocks[2]);
        }
        s["photons"] = i == 0 ? 0 : (i < 3 ? 1 : 2);
        states.push_back(s);
    }
    const auto &b = opt.breakdown;
    return dump({{"mode", to_string(mode)},
                 {"eta", cfg.eta},
                 {"states", states},
                 {"block_probabilities", {b.block_probs[0], b.block_probs[1], b.block_probs[2]}},
                 {"pair_weights", {opt.pair_weights[0], opt.pair_weights[1]}},
                 {"pair_werner_parameters", {opt.pair_werner[0], opt.pair_werner[1]}},
                 {"chi", {{"chi0", b.chi0}, {"chi1", b.chi1}, {"chi2", b.chi2}}},
                 {"gamma_opt", b.gamma_opt},
                 {"mu", b.mu},
                 {"total_chi", b.total}});
}

std::string cmd_simulate(const RunConfig &cfg) {
    const InputMode mode = parse_input_mode(cfg.mode);
    if (!cfg.q) {
        throw UsageError("simulate needs the mixture-model parameter --q");
    }
    if (!(*cfg.q >= 0.0 && *cfg.q <= 1.0)) {
        throw UsageError("--q must lie in [0, 1]");
    }
    if (cfg.shots < 10000) {
        throw UsageError("--shots must be at least 10000");
    }
    if (cfg.shards == 0) {
        throw UsageError("--shards must be positive");
    }
    const auto r = simulate_shots(mode, NoiseModel::mixture(*cfg.q), cfg.shots, cfg.seed, cfg.shards);
    return dump({{"mode", to_string(mode)},
                 {"q", *cfg.q},
                 {"shots", r.shots},
                 {"seed", cfg.seed},
                 {"shards", cfg.shards},
                 {"prior", {r.prior[0], r.prior[1]}},
                 {"counts", {{r.counts[0][0], r.counts[0][1]}, {r.counts[1][0], r.counts[1][1]}}},
                 {"empirical_mi", r.empirical_mi},
                 {"std_error", r.std_error},
                 {"analytic_mi", r.analytic_mi},
                 {"abs_deviation", r.deviation()},
                 {"within_3_sigma", r.within_3_sigma()}});
}

std::string cmd_protocol(const RunConfig &cfg) {
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) {
        throw UsageError("--p must lie in [0, 1]");
    }
    if (!(cfg.eta >= 0.0 && cfg.eta <= 1.0)) {
        throw UsageError("--eta must lie in [0, 1]");
    }
    json j{{"p", cfg.p},
           {"eta", cfg.eta},
           {"extended_rate", extended_rate({cfg.p, cfg.eta})},
           {"eta_generalization", cfg.eta != 1.0}};
    if (cfg.optimize) {
        const auto opt = optimize_photon_probability(cfg.eta);
        j["optimized"] = {{"p_star", opt.p_star}, {"rate_star", opt.rate_star}};
    }
    return dump(j);
}

void write_output(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot open output file " + path);
    }
    f << text;
    f.flush();
    if (!f) {
        throw UsageError("failed writing output file " + path);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Classical capacity of a two-slot channel with correlated polarization noise"};
    app.require_subcommand(1);
    RunConfig cfg;
    double q_value = 0.0;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--out", cfg.out, "Output file (stdout if omitted)");
        sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
        sub->add_option("--shards", cfg.shards, "Number of Monte Carlo shards (worker streams)")->capture_default_str();
    };

    auto *curve = app.add_subcommand("curve", "Total capacity versus eta");
    curve->add_option("--eta-min", cfg.eta_min)->capture_default_str();
    curve->add_option("--eta-max", cfg.eta_max)->capture_default_str();
    curve->add_option("--steps", cfg.steps)->capture_default_str();
    curve->add_option("--mode", cfg.mode, "entangled | separable | baseline | all")->capture_default_str();
    curve->add_option("--format", cfg.format, "csv | json")->capture_default_str();
    add_common(curve);

    auto *verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--suite", cfg.suites, "Suite name (repeatable; all if omitted)");
    verify->add_option("--samples", cfg.samples, "Monte Carlo samples")->capture_default_str();
    add_common(verify);

    auto *ensemble = app.add_subcommand("ensemble", "Optimal input ensemble");
    ensemble->add_option("--mode", cfg.mode, "entangled | separable")->required();
    ensemble->add_option("--eta", cfg.eta)->capture_default_str();
    add_common(ensemble);

    auto *simulate = app.add_subcommand("simulate", "Shot-level simulation of the singlet/triplet scheme");
    simulate->add_option("--mode", cfg.mode, "entangled | separable")->required();
    auto *q_opt = simulate->add_option("--q", q_value, "Mixture-model probability that the slots see the same noise");
    simulate->add_option("--shots", cfg.shots)->capture_default_str();
    add_common(simulate);

    auto *protocol = app.add_subcommand("protocol", "Rate of the photon-train protocol");
    protocol->add_option("--p", cfg.p, "Probability of a photon per slot")->capture_default_str();
    protocol->add_option("--eta", cfg.eta)->capture_default_str();
    protocol->add_flag("--optimize", cfg.optimize, "Also report the optimal photon probability");
    add_common(protocol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (q_opt->count() > 0) {
        cfg.q = q_value;
    }

    try {
        int code = kExitOk;
        std::string text;
        if (*curve) {
            text = cmd_curve(cfg);
        } else if (*verify) {
            text = cmd_verify(cfg, code);
        } else if (*ensemble) {
            text = cmd_ensemble(cfg);
        } else if (*simulate) {
            text = cmd_simulate(cfg);
        } else if (*protocol) {
            text = cmd_protocol(cfg);
        }
        write_output(text, cfg.out);
        return code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
