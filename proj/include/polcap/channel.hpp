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

#ifndef POLCAP_CHANNEL_HPP
#define POLCAP_CHANNEL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "polcap/errors.hpp"
#include "polcap/group.hpp"
#include "polcap/matrix.hpp"
#include "polcap/qstate.hpp"

namespace polcap {

/// Residual decorrelation between the two slots.
///
/// `eta` shrinks the Werner parameter of two-photon states (isotropic depolarization of
/// slot B), `eta_prime` shrinks one-photon coherence between the slots. The sampleable
/// mixture model draws the relative transformation as the identity with probability q and
/// Haar-random otherwise, which gives eta = eta_prime = q.
class NoiseModel {
public:
    NoiseModel(double eta, double eta_prime) : eta_(eta), eta_prime_(eta_prime) {
        check_unit("eta", eta);
        check_unit("eta_prime", eta_prime);
    }

    static NoiseModel perfect() { return {1.0, 1.0}; }

    static NoiseModel mixture(double q) {
        NoiseModel m(q, q);
        m.mixture_q_ = q;
        return m;
    }

    [[nodiscard]] double eta() const noexcept { return eta_; }
    [[nodiscard]] double eta_prime() const noexcept { return eta_prime_; }
    [[nodiscard]] std::optional<double> mixture_q() const noexcept { return mixture_q_; }

private:
    static void check_unit(const char *name, double v) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ContractError(std::string(name) + " must lie in [0, 1]");
        }
    }

    double eta_;
    double eta_prime_;
    std::optional<double> mixture_q_;
};

/// One-photon block after the correlated twirl: ½[[a,0,b,0],[0,a,0,b],[b*,0,1−a,0],[0,b*,0,1−a]].
struct OnePhotonBlockSummary {
    double a;
    cplx b;

    [[nodiscard]] ComplexMatrix twirled_block() const {
        ComplexMatrix m(4);
        for (std::size_t p = 0; p < 2; ++p) {
            m(p, p) = 0.5 * a;
            m(p + 2, p + 2) = 0.5 * (1.0 - a);
            m(p, p + 2) = 0.5 * b;
            m(p + 2, p) = 0.5 * std::conj(b);
        }
        return m;
    }
};

/// a = total population of slot A, b = polarization-summed coherence between slot A and slot B.
inline OnePhotonBlockSummary one_photon_summary(const DensityOperator &rho1) {
    if (rho1.basis() != BasisTag::one_photon) {
        throw ContractError("one_photon_summary requires a one-photon block state");
    }
    const double a = rho1(0, 0).real() + rho1(1, 1).real();
    const cplx b = rho1(0, 2) + rho1(1, 3);
    return {std::clamp(a, 0.0, 1.0), b};
}

namespace detail {

inline ComplexMatrix twirl_one_photon(const ComplexMatrix &blk) {
    // Linear in the (unnormalized) block, so zero-weight blocks need no special case.
    const double w = blk.trace().real();
    const double a = blk(0, 0).real() + blk(1, 1).real();
    const cplx b = blk(0, 2) + blk(1, 3);
    ComplexMatrix m(4);
    for (std::size_t p = 0; p < 2; ++p) {
        m(p, p) = 0.5 * a;
        m(p + 2, p + 2) = 0.5 * (w - a);
        m(p, p + 2) = 0.5 * b;
        m(p + 2, p) = 0.5 * std::conj(b);
    }
    return m;
}

inline ComplexMatrix twirl_two_photon(const ComplexMatrix &blk) {
    const double w = blk.trace().real();
    const double s = blk(0, 0).real();
    const std::array<double, 4> d{s, (w - s) / 3.0, (w - s) / 3.0, (w - s) / 3.0};
    return ComplexMatrix::diagonal(d);
}

/// Two-photon block in (Psi-, HH, Psi+, VV) -> polarization product basis (HH, HV, VH, VV).
inline ComplexMatrix two_photon_to_product() {
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix q(4);
    q(1, 0) = r;
    q(2, 0) = -r;
    q(0, 1) = 1.0;
    q(1, 2) = r;
    q(2, 2) = r;
    q(3, 3) = 1.0;
    return q;
}

/// ρ ↦ η ρ + (1−η) ρ_A ⊗ 1/2 on the two-photon block (isotropic depolarization of slot B).
inline ComplexMatrix depolarize_slot_b(const ComplexMatrix &blk, double eta) {
    const ComplexMatrix q = two_photon_to_product();
    const ComplexMatrix prod = q * blk * q.adjoint();
    ComplexMatrix reduced(4);
    for (std::size_t pa = 0; pa < 2; ++pa) {
        for (std::size_t qa = 0; qa < 2; ++qa) {
            const cplx v = 0.5 * (prod(pa * 2, qa * 2) + prod(pa * 2 + 1, qa * 2 + 1));
            reduced(pa * 2, qa * 2) = v;
            reduced(pa * 2 + 1, qa * 2 + 1) = v;
        }
    }
    return blk * cplx(eta) + (q.adjoint() * reduced * q) * cplx(1.0 - eta);
}

inline double cross_block_magnitude(const ComplexMatrix &m) {
    double d = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (basis::block_of(i) != basis::block_of(j)) {
                d = std::max(d, std::abs(m(i, j)));
            }
        }
    }
    return d;
}

}  // namespace detail

/// Perfectly correlated twirl ∫dΩ U(Ω)⊗U(Ω) ρ U(Ω)†⊗U(Ω)†, evaluated in closed form:
/// cross-block coherences vanish, the one-photon block takes the (a, b) form and the
/// two-photon block becomes the Werner state with the input's Werner parameter.
inline DensityOperator lambda_perf_analytic(const DensityOperator &rho) {
    require_two_slot(rho, "lambda_perf_analytic");
    const auto &m = rho.matrix();
    ComplexMatrix out = embed_block(extract_block(m, 0), 0);
    out += embed_block(detail::twirl_one_photon(extract_block(m, 1)), 1);
    out += embed_block(detail::twirl_two_photon(extract_block(m, 2)), 2);
    return {std::move(out), BasisTag::two_slot};
}

/// Relative depolarization of slot B applied to a block-diagonal state. Slot-A/slot-B
/// coherences of the one-photon block are scaled by eta'; everything in slot B is
/// depolarized isotropically by eta, so a Werner block W_c goes to W_{ηc}.
inline DensityOperator lambda_dep_analytic(const DensityOperator &rho, const NoiseModel &noise) {
    require_two_slot(rho, "lambda_dep_analytic");
    constexpr double kBlockTolerance = 1e-12;
    if (detail::cross_block_magnitude(rho.matrix()) > kBlockTolerance) {
        throw ContractError("lambda_dep_analytic requires a photon-number block-diagonal state");
    }
    const auto &m = rho.matrix();
    ComplexMatrix one = extract_block(m, 1);
    const double eta = noise.eta(), eta_p = noise.eta_prime();
    const cplx bb_trace = 0.5 * (one(2, 2) + one(3, 3));
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            one(i, j + 2) *= eta_p;
            one(i + 2, j) *= eta_p;
            one(i + 2, j + 2) = eta * one(i + 2, j + 2) + (i == j ? (1.0 - eta) * bb_trace : cplx{});
        }
    }
    ComplexMatrix out = embed_block(extract_block(m, 0), 0);
    out += embed_block(one, 1);
    out += embed_block(detail::depolarize_slot_b(extract_block(m, 2), eta), 2);
    return {std::move(out), BasisTag::two_slot};
}

/// One draw of the physical noise: Ω_A Haar-random, Ω_B = Ω'·Ω_A.
struct NoiseRealization {
    GroupElementU2 slot_a;
    GroupElementU2 slot_b;

    [[nodiscard]] BlockUnitary unitary() const { return product_unitary(slot_a, slot_b); }
};

/// Mixture model: Ω' is the identity with probability q, Haar-random otherwise.
template <typename Engine>
NoiseRealization sample_realization(double q, Engine &rng) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const GroupElementU2 a = haar_sample(rng);
    if (uniform(rng) < q) {
        return {a, a};
    }
    return {a, compose(haar_sample(rng), a)};
}

struct AnalyticBackend {};

struct MonteCarloBackend {
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    std::size_t shards = 1;
};

inline std::size_t shard_size(std::size_t total, std::size_t shards, std::size_t index) {
    return total / shards + (index < total % shards ? 1 : 0);
}

/// Runs `work(shard)` for every shard, on its own thread when there is more than one.
template <typename Work>
void run_shards(std::size_t shards, Work &&work) {
    if (shards <= 1) {
        work(std::size_t{0});
        return;
    }
    std::vector<std::jthread> threads;
    threads.reserve(shards);
    for (std::size_t s = 0; s < shards; ++s) {
        threads.emplace_back([&work, s] { work(s); });
    }
}

/// Monte Carlo channel on several inputs at once, sharing the noise draws.
/// Shard s uses make_stream(seed, s); sums are merged in shard order, so the result depends
/// only on (seed, shards, samples).
inline std::vector<DensityOperator> lambda_full_mc(std::span<const DensityOperator> inputs, double q,
                                                   const MonteCarloBackend &mc) {
    if (mc.samples == 0 || mc.shards == 0) {
        throw ContractError("Monte Carlo backend needs positive samples and shards");
    }
    for (const auto &rho : inputs) {
        require_two_slot(rho, "lambda_full");
    }
    std::vector<std::vector<ComplexMatrix>> partial(mc.shards,
                                                    std::vector<ComplexMatrix>(inputs.size(), ComplexMatrix(9)));
    run_shards(mc.shards, [&](std::size_t shard) {
        Rng rng = make_stream(mc.seed, shard);
        auto &acc = partial[shard];
        const std::size_t n = shard_size(mc.samples, mc.shards, shard);
        for (std::size_t s = 0; s < n; ++s) {
            const BlockUnitary u = sample_realization(q, rng).unitary();
            for (std::size_t i = 0; i < inputs.size(); ++i) {
                acc[i] += conjugate(u, inputs[i].matrix());
            }
        }
    });
    std::vector<DensityOperator> out;
    out.reserve(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        ComplexMatrix sum(9);
        for (std::size_t shard = 0; shard < mc.shards; ++shard) {
            sum += partial[shard][i];
        }
        ComplexMatrix avg = (sum + sum.adjoint()) * cplx(0.5);
        avg *= cplx(1.0 / avg.trace().real());
        out.emplace_back(std::move(avg), BasisTag::two_slot);
    }
    return out;
}

/// Λ = (1 ⊗ Λ_dep) ∘ Λ_perf with a selectable evaluation backend.
struct ChannelMap {
    std::variant<AnalyticBackend, MonteCarloBackend> backend;
    NoiseModel noise;

    static ChannelMap analytic(NoiseModel noise) { return {AnalyticBackend{}, noise}; }
    static ChannelMap monte_carlo(NoiseModel noise, MonteCarloBackend mc) { return {mc, noise}; }

    DensityOperator operator()(const DensityOperator &rho) const;
};

inline DensityOperator lambda_full(const DensityOperator &rho, const ChannelMap &map) {
    if (std::holds_alternative<AnalyticBackend>(map.backend)) {
        return lambda_dep_analytic(lambda_perf_analytic(rho), map.noise);
    }
    const auto q = map.noise.mixture_q();
    if (!q) {
        throw ContractError("the Monte Carlo backend needs a mixture-model noise (mixture_q)");
    }
    return lambda_full_mc(std::span(&rho, 1), *q, std::get<MonteCarloBackend>(map.backend)).front();
}

inline DensityOperator ChannelMap::operator()(const DensityOperator &rho) const { return lambda_full(rho, *this); }

}  // namespace polcap

#endif  // POLCAP_CHANNEL_HPP
