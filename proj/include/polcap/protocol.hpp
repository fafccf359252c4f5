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

#ifndef POLCAP_PROTOCOL_HPP
#define POLCAP_PROTOCOL_HPP

#include "polcap/capacity.hpp"
#include "polcap/classical.hpp"
#include "polcap/errors.hpp"
#include "polcap/measurement.hpp"

namespace polcap {

// Train protocol: every slot independently holds a photon with probability p. Photons are
// paired first-come (1st with 2nd, 3rd with 4th, ...); the first photon of a pair is half
// of a singlet and the second either completes the singlet or is sent in the triplet, so
// each pair carries one extra binary symbol on top of the presence pattern.

struct TrainProtocolConfig {
    double p_photon = 0.5;
    double eta = 1.0;
};

/// Best singlet/triplet MI for the inputs c ∈ {−1, 1/3}; exactly 1 at η = 1.
inline double pair_information(double eta) {
    if (eta == 1.0) {
        return 1.0;
    }
    return optimize_prior(BinaryChannelStats::from_werner_inputs(-1.0, 1.0 / 3.0, eta)).mutual_information;
}

/// Bits per pair of slots: 2·H(p) from photon presence plus p·I_pair(η) from pair symbols.
/// The η < 1 generalization through I_pair is an extension; at η = 1 it is 2H(p) + p.
inline double extended_rate(const TrainProtocolConfig &cfg) {
    if (!(cfg.p_photon >= 0.0 && cfg.p_photon <= 1.0)) {
        throw ContractError("p_photon must lie in [0, 1]");
    }
    require_eta(cfg.eta);
    return 2.0 * binary_entropy(cfg.p_photon) + cfg.p_photon * pair_information(cfg.eta);
}

struct ProtocolOptimum {
    double p_star;
    double rate_star;
};

/// The rate is concave in p, so golden-section search finds the optimal photon probability.
inline ProtocolOptimum optimize_photon_probability(double eta) {
    require_eta(eta);
    const double pair = pair_information(eta);
    const auto res = golden_section_maximize(
        [pair](double p) { return 2.0 * binary_entropy(p) + p * pair; }, 0.0, 1.0, 1e-12);
    return {res.argmax, res.value};
}

}  // namespace polcap

#endif  // POLCAP_PROTOCOL_HPP
