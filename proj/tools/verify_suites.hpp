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

#ifndef POLCAP_TOOLS_VERIFY_SUITES_HPP
#define POLCAP_TOOLS_VERIFY_SUITES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polcap/polcap.hpp"

namespace polcap::tools {

struct SuiteConfig {
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    std::size_t shards = 1;
};

struct SuiteResult {
    std::string name;
    bool pass;
    double max_deviation;
    double tolerance;
    std::size_t samples;
};

struct Suite {
    std::string name;
    std::function<SuiteResult(const SuiteConfig &)> run;
};

inline std::vector<double> unit_grid(std::size_t steps) {
    std::vector<double> g(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        g[i] = static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    return g;
}

inline SuiteResult make_result(std::string name, double dev, double tol, std::size_t samples) {
    return {std::move(name), dev < tol, dev, tol, samples};
}

inline SuiteResult suite_orthogonality(const SuiteConfig &cfg) {
    struct Case {
        Spin j;
        std::size_t m, n;
        Spin jp;
        std::size_t mp, np;
        double expected;
    };
    const Case cases[] = {{kSpinHalf, 0, 0, kSpinHalf, 0, 0, 0.5},
                          {kSpin1, 1, 1, kSpinHalf, 0, 0, 0.0},
                          {kSpin1, 0, 0, kSpin1, 1, 1, 0.0}};
    double dev = 0.0;
    std::uint64_t stream = 0;
    for (const auto &c : cases) {
        Rng rng = make_stream(cfg.seed, stream++);
        const auto est = mc_orthogonality(c.j, c.m, c.n, c.jp, c.mp, c.np, cfg.samples, rng);
        dev = std::max(dev, std::abs(est.value - c.expected));
    }
    return make_result("orthogonality", dev, 5e-3, cfg.samples);
}

inline SuiteResult suite_lemma2_oracle(const SuiteConfig &) {
    double dev = 0.0;
    for (const auto mode : {InputMode::entangled, InputMode::separable}) {
        for (const double eta : unit_grid(11)) {
            const CRange r = CRange::of(mode);
            dev = std::max(dev, std::abs(chi2_bound(r, eta).chi2 - brute_force_chi2(r, eta, 41)));
        }
    }
    return make_result("lemma2-oracle", dev, 1e-6, 0);
}

inline SuiteResult suite_twirl_mc(const SuiteConfig &cfg) {
    Rng rng = make_stream(cfg.seed, 100);
    std::vector<DensityOperator> inputs{DensityOperator::pure(basis::ket(basis::singlet), BasisTag::two_slot)};
    for (int i = 0; i < 4; ++i) {
        inputs.push_back(random_density_operator(rng));
    }
    const auto mc = lambda_full_mc(inputs, 1.0, {cfg.samples, cfg.seed, cfg.shards});
    const ChannelMap exact = ChannelMap::analytic(NoiseModel::mixture(1.0));
    double dev = 0.0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        dev = std::max(dev, max_abs_diff(mc[i].matrix(), exact(inputs[i]).matrix()));
    }
    return make_result("twirl-mc", dev, 5e-3, cfg.samples);
}

inline SuiteResult suite_f_entropy(const SuiteConfig &) {
    double dev = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double c = -1.0 + (4.0 / 3.0) * i / 99.0;
        dev = std::max(dev, std::abs(f_of_c(c) - von_neumann_entropy(werner_state(c))));
    }
    return make_result("f-entropy", dev, 1e-12, 0);
}

inline SuiteResult suite_saturation(const SuiteConfig &) {
    double dev = 0.0;
    for (const auto mode : {InputMode::entangled, InputMode::separable}) {
        for (const double eta : unit_grid(11)) {
            const auto rep = saturation_check(mode, eta);
            dev = std::max(dev, std::abs(rep.mi_max - rep.chi2));
        }
    }
    return make_result("saturation", dev, 1e-9, 0);
}

inline SuiteResult suite_endpoints(const SuiteConfig &) {
    const std::vector<double> one{1.0};
    const double dev = std::max({std::abs(capacity_curve(CurveMode::entangled, one)[0].chi_total - std::log2(5.0)),
                                 std::abs(capacity_curve(CurveMode::separable, one)[0].chi_total - std::log2(4.25)),
                                 std::abs(capacity_curve(CurveMode::baseline, one)[0].chi_total - 2.0)});
    return make_result("endpoints", dev, 1e-9, 0);
}

inline SuiteResult suite_protocol(const SuiteConfig &) {
    const double dev = std::abs(extended_rate({0.5, 1.0}) - 2.5);
    SuiteResult r = make_result("protocol", dev, 1e-15, 0);
    r.pass = dev == 0.0;
    return r;
}

inline std::vector<Suite> all_suites() {
    return {{"endpoints", suite_endpoints},         {"f-entropy", suite_f_entropy},
            {"lemma2-oracle", suite_lemma2_oracle}, {"orthogonality", suite_orthogonality},
            {"protocol", suite_protocol},           {"saturation", suite_saturation},
            {"twirl-mc", suite_twirl_mc}};
}

}  // namespace polcap::tools

#endif  // POLCAP_TOOLS_VERIFY_SUITES_HPP
