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

#ifndef POLCAP_CAPACITY_HPP
#define POLCAP_CAPACITY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polcap/classical.hpp"
#include "polcap/errors.hpp"
#include "polcap/qstate.hpp"

namespace polcap {

/// Which two-photon inputs the sender may use.
enum class InputMode { entangled, separable };

/// Capacity curves additionally have a baseline that ignores polarization entirely.
enum class CurveMode { entangled, separable, baseline };

inline const char *to_string(InputMode m) { return m == InputMode::entangled ? "entangled" : "separable"; }

inline const char *to_string(CurveMode m) {
    switch (m) {
        case CurveMode::entangled: return "entangled";
        case CurveMode::separable: return "separable";
        case CurveMode::baseline: return "baseline";
    }
    return "";
}

/// Allowed interval of input Werner parameters: [−1, 1/3] for arbitrary states,
/// [−1/3, 1/3] for separable ones.
struct CRange {
    InputMode mode;
    double c_min;
    double c_max;

    static CRange of(InputMode mode) {
        return mode == InputMode::entangled ? CRange{mode, -1.0, 1.0 / 3.0} : CRange{mode, -1.0 / 3.0, 1.0 / 3.0};
    }

    [[nodiscard]] bool contains(double c, double slack = 1e-12) const {
        return c >= c_min - slack && c <= c_max + slack;
    }
};

inline void require_eta(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw ContractError("eta must lie in [0, 1]");
    }
}

/// Entropy of the Werner state W_c:
/// f(c) = 2 − (3/4)(1+c) log2(1+c) − (1/4)(1−3c) log2(1−3c).
inline double f_of_c(double c) {
    constexpr double kSlack = 1e-12;
    if (!(c >= -1.0 - kSlack && c <= 1.0 / 3.0 + kSlack)) {
        throw ContractError("f(c) is defined for c in [-1, 1/3]");
    }
    c = std::clamp(c, -1.0, 1.0 / 3.0);
    const double u = 1.0 + c, v = 1.0 - 3.0 * c;
    const double a = u > 0.0 ? u * std::log2(u) : 0.0;
    const double b = v > 0.0 ? v * std::log2(v) : 0.0;
    return 2.0 - 0.75 * a - 0.25 * b;
}

/// Supremum of f − chord over [α, β] = [η c_min, η c_max] and the two-point output
/// ensemble that attains it.
struct Chi2Bound {
    double chi2;                        // bits
    double gamma_opt;                   // maximizer of f − chord
    double mu;                          // chord slope, bits per unit c
    std::array<double, 2> output_probs; // weights on α and β
    double alpha;
    double beta;
};

inline Chi2Bound chi2_bound(const CRange &range, double eta) {
    require_eta(eta);
    const double alpha = eta * range.c_min, beta = eta * range.c_max;
    const double width = beta - alpha;
    if (!(width > 1e-15)) {
        return {0.0, alpha, 0.0, {0.5, 0.5}, alpha, beta};
    }
    const double fa = f_of_c(alpha), fb = f_of_c(beta);
    const double mu = (fb - fa) / width;
    const double t = std::exp2(4.0 * mu / 3.0);
    const double gamma = std::clamp((1.0 - t) / (3.0 + t), alpha, beta);
    const double chord = ((beta - gamma) * fa + (gamma - alpha) * fb) / width;
    const double chi2 = std::max(0.0, f_of_c(gamma) - chord);
    return {chi2, gamma, mu, {(beta - gamma) / width, (gamma - alpha) / width}, alpha, beta};
}

/// The one-photon sector carries exactly one bit: which slot holds the photon. Any
/// polarization works, and the bound 1 ≤ S(output) ≤ 2 caps it there for every eta'.
inline double chi1() { return 1.0; }

/// The vacuum block is one state and carries nothing on its own.
inline double chi0() { return 0.0; }

struct CombinedCapacity {
    double total;                    // bits
    std::vector<double> block_probs; // optimal probability of using each block
};

/// Optimal mixing of orthogonal sub-channels: χ = log2 Σ_k 2^{χ_k}, p_k ∝ 2^{χ_k}.
inline CombinedCapacity combine_subspace_capacities(std::span<const double> chis) {
    if (chis.empty()) {
        throw ContractError("need at least one block capacity");
    }
    for (const double c : chis) {
        if (c < 0.0) {
            throw ContractError("block capacities must be nonnegative");
        }
    }
    const double top = *std::max_element(chis.begin(), chis.end());
    std::vector<double> probs(chis.size());
    double z = 0.0;
    for (std::size_t k = 0; k < chis.size(); ++k) {
        probs[k] = std::exp2(chis[k] - top);
        z += probs[k];
    }
    for (auto &p : probs) {
        p /= z;
    }
    return {top + std::log2(z), std::move(probs)};
}

/// Two-photon alphabet described only by Werner parameters: {(q_j, c_j)}.
class WernerEnsemble {
public:
    WernerEnsemble(std::vector<std::pair<double, double>> items, const CRange &range) : items_(std::move(items)) {
        if (items_.empty()) {
            throw ContractError("Werner ensemble must not be empty");
        }
        double total = 0.0;
        for (const auto &[q, c] : items_) {
            if (q < 0.0) {
                throw ContractError("negative probability in Werner ensemble");
            }
            if (!range.contains(c)) {
                throw ContractError("Werner parameter outside the " + std::string(to_string(range.mode)) + " range");
            }
            total += q;
        }
        if (std::abs(total - 1.0) > tol::kProbSum) {
            throw ContractError("Werner ensemble probabilities do not sum to 1");
        }
    }

    [[nodiscard]] const std::vector<std::pair<double, double>> &items() const noexcept { return items_; }

private:
    std::vector<std::pair<double, double>> items_;
};

/// f(Σ q_j η c_j) − Σ q_j f(η c_j).
inline double holevo_of_werner_ensemble(const WernerEnsemble &ens, double eta) {
    require_eta(eta);
    double mean = 0.0, avg_f = 0.0;
    for (const auto &[q, c] : ens.items()) {
        mean += q * eta * c;
        avg_f += q * f_of_c(eta * c);
    }
    return std::max(0.0, f_of_c(mean) - avg_f);
}

/// Reference value for the two-photon capacity on a c-grid. The outputs W_{ηc} all commute,
/// so the Holevo maximization is the classical capacity of c ↦ {singlet, triplet} with
/// P(singlet | c) = (1 − 3ηc)/4, solved by Blahut–Arimoto.
inline double brute_force_chi2(const CRange &range, double eta, std::size_t grid_points) {
    require_eta(eta);
    if (grid_points < 11) {
        throw ContractError("brute_force_chi2 needs at least 11 grid points");
    }
    std::vector<std::vector<double>> w(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double c = range.c_min + (range.c_max - range.c_min) * static_cast<double>(i) /
                                           static_cast<double>(grid_points - 1);
        const double ps = std::clamp((1.0 - 3.0 * eta * c) / 4.0, 0.0, 1.0);
        w[i] = {ps, 1.0 - ps};
    }
    return blahut_arimoto(w, 1e-10, 100000).capacity;
}

/// Per-block Holevo quantities and the optimal block mixture.
struct CapacityBreakdown {
    double chi0;
    double chi1;
    double chi2;
    std::array<double, 3> block_probs;
    double total;
    double gamma_opt;
    double mu;
};

inline CapacityBreakdown capacity_breakdown(InputMode mode, double eta) {
    const Chi2Bound b = chi2_bound(CRange::of(mode), eta);
    const std::array<double, 3> chis{chi0(), chi1(), b.chi2};
    const auto combined = combine_subspace_capacities(chis);
    return {chis[0], chis[1], chis[2], {combined.block_probs[0], combined.block_probs[1], combined.block_probs[2]},
            combined.total, b.gamma_opt, b.mu};
}

struct OptimalEnsemble {
    StateEnsemble ensemble;
    std::vector<std::string> labels;      // one per ensemble item
    std::array<double, 2> pair_weights;   // within the two-photon block
    std::array<double, 2> pair_werner;    // input Werner parameters of the pair
    CapacityBreakdown breakdown;
};

/// Vacuum, a vertical photon in slot A or in slot B, and the extreme two-photon pair:
/// (|Psi->, |V_A V_B>) for entangled inputs, (|V_A H_B>, |V_A V_B>) for separable ones.
inline OptimalEnsemble optimal_input_ensemble(InputMode mode, double eta) {
    using basis::Slot;
    const CRange range = CRange::of(mode);
    const Chi2Bound b = chi2_bound(range, eta);
    const CapacityBreakdown br = capacity_breakdown(mode, eta);
    const auto pure = [](const std::vector<cplx> &k) { return DensityOperator::pure(k, BasisTag::two_slot); };

    const auto low = mode == InputMode::entangled ? basis::ket(basis::singlet) : basis::product_ket(Slot::v, Slot::h);
    const std::string low_label = mode == InputMode::entangled ? "|Psi->" : "|V_A H_B>";

    std::vector<StateEnsemble::Item> items;
    items.emplace_back(br.block_probs[0], pure(basis::ket(basis::vacuum)));
    items.emplace_back(0.5 * br.block_probs[1], pure(basis::product_ket(Slot::v, Slot::empty)));
    items.emplace_back(0.5 * br.block_probs[1], pure(basis::product_ket(Slot::empty, Slot::v)));
    items.emplace_back(br.block_probs[2] * b.output_probs[0], pure(low));
    items.emplace_back(br.block_probs[2] * b.output_probs[1], pure(basis::ket(basis::vv)));
    return {StateEnsemble(std::move(items)),
            {"|0_A 0_B>", "|V_A 0_B>", "|0_A V_B>", low_label, "|V_A V_B>"},
            b.output_probs,
            {range.c_min, range.c_max},
            br};
}

struct CurvePoint {
    double eta;
    double chi_total;
};

/// Total capacity log2(2^χ0 + 2^χ1 + 2^χ2) along an eta grid; the baseline uses χ2 = 0.
inline std::vector<CurvePoint> capacity_curve(CurveMode mode, std::span<const double> eta_grid) {
    std::vector<CurvePoint> out;
    out.reserve(eta_grid.size());
    for (const double eta : eta_grid) {
        require_eta(eta);
        double chi2 = 0.0;
        if (mode == CurveMode::entangled) {
            chi2 = chi2_bound(CRange::of(InputMode::entangled), eta).chi2;
        } else if (mode == CurveMode::separable) {
            chi2 = chi2_bound(CRange::of(InputMode::separable), eta).chi2;
        }
        const std::array<double, 3> chis{chi0(), chi1(), chi2};
        out.push_back({eta, combine_subspace_capacities(chis).total});
    }
    return out;
}

}  // namespace polcap

#endif  // POLCAP_CAPACITY_HPP
