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

#ifndef POLCAP_QSTATE_HPP
#define POLCAP_QSTATE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polcap/errors.hpp"
#include "polcap/matrix.hpp"

namespace polcap {

// Two temporal slots A and B, each holding vacuum or one photon polarized ↔ (H) or ↕ (V).
// The 9-dimensional joint space is ordered by photon number:
//
//   0      |0_A 0_B>
//   1..4   |H_A 0_B>, |V_A 0_B>, |0_A H_B>, |0_A V_B>
//   5..8   |Psi->, |H_A H_B>, |Psi+>, |V_A V_B>
//
// with |Psi±> = (|H_A V_B> ± |V_A H_B>)/√2. This ordering is part of the public interface.
namespace basis {
inline constexpr std::size_t kDim = 9;
inline constexpr std::size_t vacuum = 0;
inline constexpr std::size_t h_a = 1;
inline constexpr std::size_t v_a = 2;
inline constexpr std::size_t h_b = 3;
inline constexpr std::size_t v_b = 4;
inline constexpr std::size_t singlet = 5;
inline constexpr std::size_t hh = 6;
inline constexpr std::size_t psi_plus = 7;
inline constexpr std::size_t vv = 8;

inline constexpr std::array<std::size_t, 3> kBlockOffset{0, 1, 5};
inline constexpr std::array<std::size_t, 3> kBlockDim{1, 4, 4};

inline std::size_t block_of(std::size_t index) { return index == 0 ? 0 : (index < 5 ? 1 : 2); }

/// Single-slot occupation, ordered as the per-slot basis (|0>, |H>, |V>).
enum class Slot : std::size_t { empty = 0, h = 1, v = 2 };

/// Columns are the fixed-basis vectors written in the product basis |s_A> ⊗ |s_B>
/// (product index 3·s_A + s_B). A product-basis operator M maps to V† M V.
inline ComplexMatrix product_to_fixed() {
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix v(kDim);
    v(0, vacuum) = 1.0;
    v(3, h_a) = 1.0;
    v(6, v_a) = 1.0;
    v(1, h_b) = 1.0;
    v(2, v_b) = 1.0;
    v(5, singlet) = r;
    v(7, singlet) = -r;
    v(4, hh) = 1.0;
    v(5, psi_plus) = r;
    v(7, psi_plus) = r;
    v(8, vv) = 1.0;
    return v;
}

/// Unit vector of the fixed basis.
inline std::vector<cplx> ket(std::size_t index) {
    std::vector<cplx> k(kDim);
    k.at(index) = 1.0;
    return k;
}

/// |a>_A ⊗ |b>_B expressed in the fixed basis.
inline std::vector<cplx> product_ket(Slot a, Slot b) {
    std::vector<cplx> t(kDim);
    t[3 * static_cast<std::size_t>(a) + static_cast<std::size_t>(b)] = 1.0;
    return product_to_fixed().adjoint() * std::span<const cplx>(t);
}
}  // namespace basis

/// Which space a density operator lives on.
enum class BasisTag { two_slot, zero_photon, one_photon, two_photon };

inline std::size_t dim_of(BasisTag tag) {
    switch (tag) {
        case BasisTag::two_slot: return 9;
        case BasisTag::zero_photon: return 1;
        case BasisTag::one_photon: return 4;
        case BasisTag::two_photon: return 4;
    }
    return 0;
}

inline BasisTag block_tag(std::size_t photons) {
    switch (photons) {
        case 0: return BasisTag::zero_photon;
        case 1: return BasisTag::one_photon;
        case 2: return BasisTag::two_photon;
        default: throw ContractError("photon number must be 0, 1 or 2");
    }
}

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kNegativeEigen = 1e-10;
inline constexpr double kProbSum = 1e-12;
}  // namespace tol

/// Hermitian, positive semidefinite, unit-trace matrix tagged with the space it acts on.
/// Construction validates; instances are immutable afterwards.
class DensityOperator {
public:
    DensityOperator(ComplexMatrix m, BasisTag tag) : m_(std::move(m)), tag_(tag) {
        if (m_.dim() != dim_of(tag_)) {
            throw ContractError("matrix dimension " + std::to_string(m_.dim()) + " does not match basis tag");
        }
        validate();
    }

    /// |ψ><ψ|/<ψ|ψ>.
    static DensityOperator pure(std::span<const cplx> ket, BasisTag tag) {
        double norm2 = 0.0;
        for (const auto &a : ket) {
            norm2 += std::norm(a);
        }
        if (norm2 <= 0.0) {
            throw InvalidState("zero vector");
        }
        return {ComplexMatrix::outer(ket) * cplx(1.0 / norm2), tag};
    }

    static DensityOperator maximally_mixed(BasisTag tag) {
        const std::size_t n = dim_of(tag);
        return {ComplexMatrix::identity(n) * cplx(1.0 / static_cast<double>(n)), tag};
    }

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return m_; }
    [[nodiscard]] BasisTag basis() const noexcept { return tag_; }
    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
    [[nodiscard]] cplx operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    /// Ascending eigenvalues, clipped to [0, 1] (construction already rejected anything below -1e-10).
    [[nodiscard]] std::vector<double> eigenvalues() const {
        auto ev = hermitian_eigenvalues(m_);
        for (auto &x : ev) {
            x = std::clamp(x, 0.0, 1.0);
        }
        return ev;
    }

    /// <ψ|ρ|ψ> for a unit vector.
    [[nodiscard]] double expectation(std::span<const cplx> ket) const {
        const auto rk = m_ * ket;
        cplx s = 0.0;
        for (std::size_t i = 0; i < ket.size(); ++i) {
            s += std::conj(ket[i]) * rk[i];
        }
        return s.real();
    }

private:
    void validate() const {
        const double herm = hermiticity_defect(m_);
        if (herm > tol::kHermitian) {
            throw InvalidState("not Hermitian (defect " + std::to_string(herm) + ")");
        }
        const cplx tr = m_.trace();
        if (std::abs(tr - 1.0) > tol::kTrace) {
            throw InvalidState("trace " + std::to_string(tr.real()) + " differs from 1");
        }
        const auto ev = hermitian_eigenvalues(m_);
        if (ev.front() < -tol::kNegativeEigen) {
            throw InvalidState("negative eigenvalue " + std::to_string(ev.front()));
        }
    }

    ComplexMatrix m_;
    BasisTag tag_;
};

/// Von Neumann entropy in bits, with 0·log 0 = 0.
inline double von_neumann_entropy(const DensityOperator &rho) {
    double s = 0.0;
    for (const double lambda : rho.eigenvalues()) {
        if (lambda > 0.0) {
            s -= lambda * std::log2(lambda);
        }
    }
    return std::max(s, 0.0);
}

/// Photon-number truncation of a two-slot state: block weights and renormalized blocks.
struct BlockDecomposition {
    static constexpr double kAbsentWeight = 1e-14;

    std::array<double, 3> weights{};
    std::array<std::optional<DensityOperator>, 3> blocks;
};

inline void require_two_slot(const DensityOperator &rho, const char *what) {
    if (rho.basis() != BasisTag::two_slot) {
        throw ContractError(std::string(what) + " requires a state on the 9-dimensional two-slot space");
    }
}

inline ComplexMatrix extract_block(const ComplexMatrix &m, std::size_t k) {
    const std::size_t off = basis::kBlockOffset[k], n = basis::kBlockDim[k];
    ComplexMatrix b(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            b(i, j) = m(off + i, off + j);
        }
    }
    return b;
}

inline BlockDecomposition truncate_to_blocks(const DensityOperator &rho) {
    require_two_slot(rho, "truncate_to_blocks");
    BlockDecomposition out;
    for (std::size_t k = 0; k < 3; ++k) {
        auto b = extract_block(rho.matrix(), k);
        const double w = b.trace().real();
        out.weights[k] = w;
        if (w >= BlockDecomposition::kAbsentWeight) {
            b *= cplx(1.0 / w);
            // Restore exact Hermiticity of the diagonal after rescaling.
            for (std::size_t i = 0; i < b.dim(); ++i) {
                b(i, i) = b(i, i).real();
            }
            out.blocks[k].emplace(std::move(b), block_tag(k));
        }
    }
    return out;
}

/// Places a block-space operator into the 9×9 matrix at block k (everything else zero).
inline ComplexMatrix embed_block(const ComplexMatrix &block, std::size_t k) {
    if (block.dim() != basis::kBlockDim.at(k)) {
        throw ContractError("block dimension mismatch");
    }
    ComplexMatrix m(basis::kDim);
    const std::size_t off = basis::kBlockOffset[k];
    for (std::size_t i = 0; i < block.dim(); ++i) {
        for (std::size_t j = 0; j < block.dim(); ++j) {
            m(off + i, off + j) = block(i, j);
        }
    }
    return m;
}

inline DensityOperator embed(const DensityOperator &block) {
    std::size_t k = 0;
    switch (block.basis()) {
        case BasisTag::two_slot: return block;
        case BasisTag::zero_photon: k = 0; break;
        case BasisTag::one_photon: k = 1; break;
        case BasisTag::two_photon: k = 2; break;
    }
    return {embed_block(block.matrix(), k), BasisTag::two_slot};
}

/// Σ_k w_k ρ^(k): the block-diagonal part of the state that was truncated.
inline DensityOperator reassemble(const BlockDecomposition &d) {
    ComplexMatrix m(basis::kDim);
    for (std::size_t k = 0; k < 3; ++k) {
        if (d.blocks[k]) {
            m += embed_block(d.blocks[k]->matrix(), k) * cplx(d.weights[k]);
        }
    }
    return {std::move(m), BasisTag::two_slot};
}

/// Weighted list of states on a common space.
class StateEnsemble {
public:
    using Item = std::pair<double, DensityOperator>;

    explicit StateEnsemble(std::vector<Item> items) : items_(std::move(items)) {
        if (items_.empty()) {
            throw ContractError("ensemble must not be empty");
        }
        double total = 0.0;
        for (const auto &[p, rho] : items_) {
            if (p < 0.0) {
                throw ContractError("negative ensemble probability");
            }
            if (rho.basis() != items_.front().second.basis()) {
                throw ContractError("ensemble members live on different spaces");
            }
            total += p;
        }
        if (std::abs(total - 1.0) > tol::kProbSum) {
            throw ContractError("ensemble probabilities sum to " + std::to_string(total));
        }
    }

    [[nodiscard]] const std::vector<Item> &items() const noexcept { return items_; }
    [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
    [[nodiscard]] BasisTag basis() const { return items_.front().second.basis(); }

private:
    std::vector<Item> items_;
};

template <typename F>
concept StateMap = requires(const F &f, const DensityOperator &rho) {
    { f(rho) } -> std::convertible_to<DensityOperator>;
};

/// χ = S(Σ p_i Λ(ρ_i)) − Σ p_i S(Λ(ρ_i)).
template <StateMap Channel>
double holevo_quantity(const StateEnsemble &ensemble, const Channel &channel) {
    std::optional<ComplexMatrix> avg;
    std::optional<BasisTag> out_tag;
    double mean_entropy = 0.0;
    for (const auto &[p, rho] : ensemble.items()) {
        const DensityOperator out = channel(rho);
        if (!avg) {
            avg.emplace(out.dim());
            out_tag = out.basis();
        } else if (out.basis() != *out_tag) {
            throw ContractError("channel outputs live on different spaces");
        }
        *avg += out.matrix() * cplx(p);
        mean_entropy += p * von_neumann_entropy(out);
    }
    return von_neumann_entropy(DensityOperator(std::move(*avg), *out_tag)) - mean_entropy;
}

/// W_c = −c|Psi-><Psi-| + (1+c)·1/4 on the two-photon block, diagonal in (Psi-, HH, Psi+, VV).
inline DensityOperator werner_state(double c) {
    constexpr double kSlack = 1e-12;
    if (!(c >= -1.0 - kSlack && c <= 1.0 / 3.0 + kSlack)) {
        throw InvalidState("Werner parameter " + std::to_string(c) + " outside [-1, 1/3] is not positive");
    }
    c = std::clamp(c, -1.0, 1.0 / 3.0);
    const double t = (1.0 + c) / 4.0;
    const std::array<double, 4> d{(1.0 - 3.0 * c) / 4.0, t, t, t};
    return {ComplexMatrix::diagonal(d), BasisTag::two_photon};
}

/// c = 1/3 − (4/3)<Psi-|ρ|Psi->.
inline double werner_parameter(const DensityOperator &rho) {
    if (rho.basis() != BasisTag::two_photon) {
        throw ContractError("werner_parameter requires a two-photon block state");
    }
    const double c = 1.0 / 3.0 - 4.0 / 3.0 * rho(0, 0).real();
    return std::clamp(c, -1.0, 1.0 / 3.0);
}

}  // namespace polcap

#endif  // POLCAP_QSTATE_HPP
