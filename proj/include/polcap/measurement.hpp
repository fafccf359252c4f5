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

#ifndef POLCAP_MEASUREMENT_HPP
#define POLCAP_MEASUREMENT_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "polcap/capacity.hpp"
#include "polcap/channel.hpp"
#include "polcap/classical.hpp"
#include "polcap/errors.hpp"
#include "polcap/group.hpp"
#include "polcap/qstate.hpp"

namespace polcap {

/// Two-outcome projective measurement on the two-photon block: singlet vs triplet subspace.
struct SingletTripletMeasurement {
    ComplexMatrix projector_s;
    ComplexMatrix projector_t;

    static SingletTripletMeasurement make() {
        ComplexMatrix s(4);
        s(0, 0) = 1.0;
        return {s, ComplexMatrix::identity(4) - s};
    }

    /// tr(O_S ρ) for a two-photon block state, or for a two-slot state's two-photon part.
    [[nodiscard]] double singlet_probability(const DensityOperator &rho) const {
        if (rho.basis() == BasisTag::two_photon) {
            return (projector_s * rho.matrix()).trace().real();
        }
        require_two_slot(rho, "singlet_probability");
        return (embed_block(projector_s, 2) * rho.matrix()).trace().real();
    }
};

struct OutcomeProbs {
    double singlet;
    double triplet;
};

/// Outcome statistics for an input with Werner parameter c after the channel: the output
/// is W_{ηc}, so P(singlet) = (1 − 3ηc)/4 and P(triplet) = 3(1 + ηc)/4.
inline OutcomeProbs conditional_probs(double c, double eta) {
    if (!CRange::of(InputMode::entangled).contains(c)) {
        throw ContractError("Werner parameter must lie in [-1, 1/3]");
    }
    require_eta(eta);
    const double ps = std::clamp((1.0 - 3.0 * eta * c) / 4.0, 0.0, 1.0);
    return {ps, 1.0 - ps};
}

/// Row-stochastic 2×2 matrix P(outcome | input); outcome 0 is singlet, 1 is triplet.
class BinaryChannelStats {
public:
    using Rows = std::array<std::array<double, 2>, 2>;

    explicit BinaryChannelStats(const Rows &rows) : rows_(rows) {
        for (const auto &row : rows_) {
            if (row[0] < 0.0 || row[1] < 0.0 || row[0] > 1.0 || row[1] > 1.0 ||
                std::abs(row[0] + row[1] - 1.0) > 1e-12) {
                throw ContractError("conditional probabilities must form a row-stochastic matrix");
            }
        }
    }

    /// Channel seen by the singlet/triplet measurement for inputs with Werner parameters c0, c1.
    static BinaryChannelStats from_werner_inputs(double c0, double c1, double eta) {
        const auto a = conditional_probs(c0, eta), b = conditional_probs(c1, eta);
        return BinaryChannelStats(Rows{{{a.singlet, a.triplet}, {b.singlet, b.triplet}}});
    }

    [[nodiscard]] const Rows &rows() const noexcept { return rows_; }

private:
    Rows rows_;
};

/// I(X;Y) = H(Y) − Σ_x p(x) H(Y | x), bits.
inline double mutual_information(const std::array<double, 2> &prior, const BinaryChannelStats &stats) {
    const auto &w = stats.rows();
    const std::array<double, 2> out{prior[0] * w[0][0] + prior[1] * w[1][0], prior[0] * w[0][1] + prior[1] * w[1][1]};
    double mi = shannon_entropy(out);
    for (std::size_t x = 0; x < 2; ++x) {
        mi -= prior[x] * shannon_entropy(w[x]);
    }
    return std::max(0.0, mi);
}

struct OptimalPrior {
    std::array<double, 2> prior;
    double mutual_information;
};

/// MI is concave in the prior, so golden-section search on p(x = 0) finds the global maximum.
inline OptimalPrior optimize_prior(const BinaryChannelStats &stats) {
    const auto res = golden_section_maximize(
        [&](double p) { return mutual_information({p, 1.0 - p}, stats); }, 0.0, 1.0, 1e-12);
    return {{res.argmax, 1.0 - res.argmax}, res.value};
}

struct SaturationReport {
    double mi_max;
    double chi2;
    bool saturated;
    std::array<double, 2> prior;
};

/// Compares the best singlet/triplet mutual information for the extreme input pair with the
/// two-photon Holevo bound.
inline SaturationReport saturation_check(InputMode mode, double eta) {
    const CRange range = CRange::of(mode);
    const auto best = optimize_prior(BinaryChannelStats::from_werner_inputs(range.c_min, range.c_max, eta));
    const double chi2 = chi2_bound(range, eta).chi2;
    return {best.mutual_information, chi2, std::abs(best.mutual_information - chi2) < 1e-9, best.prior};
}

/// Noiseless which-slot readout of a single photon: MI equals the entropy of the prior.
inline double one_photon_slot_detection(const std::array<double, 2> &prior = {0.5, 0.5}) {
    const BinaryChannelStats identity(BinaryChannelStats::Rows{{{1.0, 0.0}, {0.0, 1.0}}});
    return mutual_information(prior, identity);
}

using JointCounts = std::array<std::array<std::uint64_t, 2>, 2>;

/// Plug-in mutual information of an input × outcome contingency table.
inline double plugin_mutual_information(const JointCounts &counts) {
    double total = 0.0;
    std::array<double, 2> row{}, col{};
    for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
            const auto n = static_cast<double>(counts[x][y]);
            total += n;
            row[x] += n;
            col[y] += n;
        }
    }
    if (total <= 0.0) {
        return 0.0;
    }
    double mi = 0.0;
    for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
            const auto n = static_cast<double>(counts[x][y]);
            if (n > 0.0) {
                mi += n / total * std::log2(n * total / (row[x] * col[y]));
            }
        }
    }
    return std::max(0.0, mi);
}

struct ShotSimulationResult {
    double empirical_mi;   // plug-in estimate, bits
    double std_error;      // bootstrap standard error
    double analytic_mi;    // MI of the same prior and channel, exact
    std::array<double, 2> prior;
    JointCounts counts;
    std::size_t shots;

    [[nodiscard]] double deviation() const { return std::abs(empirical_mi - analytic_mi); }
    [[nodiscard]] bool within_3_sigma() const { return deviation() <= 3.0 * std_error; }
};

inline constexpr std::size_t kBootstrapResamples = 200;
inline constexpr std::uint64_t kBootstrapStream = 0xb0075ULL << 32;

/// Standard deviation of the plug-in MI over multinomial resamples of the table.
inline double bootstrap_std_error(const JointCounts &counts, std::uint64_t seed, std::size_t resamples) {
    Rng rng = make_stream(seed, kBootstrapStream);
    std::uint64_t total = 0;
    std::array<double, 4> p{};
    for (std::size_t i = 0; i < 4; ++i) {
        total += counts[i / 2][i % 2];
    }
    for (std::size_t i = 0; i < 4; ++i) {
        p[i] = static_cast<double>(counts[i / 2][i % 2]) / static_cast<double>(total);
    }
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t r = 0; r < resamples; ++r) {
        JointCounts resample{};
        std::uint64_t left = total;
        double mass_left = 1.0;
        for (std::size_t i = 0; i < 4; ++i) {
            std::uint64_t n = left;
            if (i < 3) {
                const double pi = mass_left > 0.0 ? std::clamp(p[i] / mass_left, 0.0, 1.0) : 0.0;
                n = std::binomial_distribution<std::uint64_t>(left, pi)(rng);
            }
            resample[i / 2][i % 2] = n;
            left -= n;
            mass_left -= p[i];
        }
        const double mi = plugin_mutual_information(resample);
        sum += mi;
        sum_sq += mi * mi;
    }
    const double n = static_cast<double>(resamples);
    const double mean = sum / n;
    return std::sqrt(std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)));
}

/// End-to-end run of the two-photon scheme. Each shot draws an input from the optimal pair
/// (weights from the two-photon bound at η = q), sends it through one sampled noise
/// realization, and draws the singlet/triplet outcome by the Born rule. Shards use
/// make_stream(seed, shard) and are merged in order, so the result is a function of
/// (mode, q, shots, seed, shards).
inline ShotSimulationResult simulate_shots(InputMode mode, const NoiseModel &noise, std::size_t shots,
                                           std::uint64_t seed, std::size_t shards = 1) {
    const auto q = noise.mixture_q();
    if (!q) {
        throw ContractError("shot simulation needs a mixture-model noise (mixture_q)");
    }
    if (shots < 10000) {
        throw ContractError("shot simulation needs at least 10^4 shots");
    }
    if (shards == 0) {
        throw ContractError("shards must be positive");
    }
    const OptimalEnsemble opt = optimal_input_ensemble(mode, *q);
    const std::array<double, 2> prior = opt.pair_weights;
    // Items 3 and 4 of the optimal ensemble are the two-photon pair.
    const std::array<const ComplexMatrix *, 2> inputs{&opt.ensemble.items()[3].second.matrix(),
                                                      &opt.ensemble.items()[4].second.matrix()};

    std::vector<JointCounts> partial(shards, JointCounts{});
    run_shards(shards, [&](std::size_t shard) {
        Rng rng = make_stream(seed, shard);
        std::uniform_real_distribution<double> uniform(0.0, 1.0);
        auto &counts = partial[shard];
        const std::size_t n = shard_size(shots, shards, shard);
        for (std::size_t s = 0; s < n; ++s) {
            const std::size_t x = uniform(rng) < prior[0] ? 0 : 1;
            const ComplexMatrix out = conjugate(sample_realization(*q, rng).unitary(), *inputs[x]);
            // Photon-number readout always reports the two-photon block here (weight 1).
            const double p_singlet = out(basis::singlet, basis::singlet).real();
            const std::size_t y = uniform(rng) < p_singlet ? 0 : 1;
            ++counts[x][y];
        }
    });
    JointCounts counts{};
    for (const auto &c : partial) {
        for (std::size_t i = 0; i < 4; ++i) {
            counts[i / 2][i % 2] += c[i / 2][i % 2];
        }
    }
    const CRange range = CRange::of(mode);
    const double analytic =
        mutual_information(prior, BinaryChannelStats::from_werner_inputs(range.c_min, range.c_max, *q));
    return {plugin_mutual_information(counts), bootstrap_std_error(counts, seed, kBootstrapResamples), analytic, prior,
            counts, shots};
}

}  // namespace polcap

#endif  // POLCAP_MEASUREMENT_HPP
