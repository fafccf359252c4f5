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

#ifndef POLCAP_GROUP_HPP
#define POLCAP_GROUP_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>

#include "polcap/errors.hpp"
#include "polcap/matrix.hpp"
#include "polcap/qstate.hpp"

namespace polcap {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent stream for worker `stream` of a run seeded with `seed`.
inline Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

/// 2×2 row-major block.
using Mat2 = std::array<cplx, 4>;

inline Mat2 mul2(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 adjoint2(const Mat2 &a) { return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}; }

inline double wrap_phase(double alpha) {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    double r = std::fmod(alpha, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    return r >= kTwoPi ? 0.0 : r;
}

/// Element of U(2) stored as its SU(2) part and a separate overall phase α ∈ [0, 2π).
class GroupElementU2 {
public:
    static constexpr double kTolerance = 1e-12;

    GroupElementU2() : su2_{1.0, 0.0, 0.0, 1.0}, phase_(0.0) {}

    GroupElementU2(const Mat2 &su2, double phase) : su2_(su2), phase_(wrap_phase(phase)) {
        const Mat2 p = mul2(su2_, adjoint2(su2_));
        const double unit = std::max({std::abs(p[0] - 1.0), std::abs(p[1]), std::abs(p[2]), std::abs(p[3] - 1.0)});
        const cplx det = su2_[0] * su2_[3] - su2_[1] * su2_[2];
        if (unit > kTolerance || std::abs(det - 1.0) > kTolerance) {
            throw ContractError("matrix is not special unitary");
        }
    }

    static GroupElementU2 identity() { return {}; }

    [[nodiscard]] const Mat2 &su2() const noexcept { return su2_; }
    [[nodiscard]] double phase() const noexcept { return phase_; }

    [[nodiscard]] ComplexMatrix su2_matrix() const { return ComplexMatrix(2, {su2_[0], su2_[1], su2_[2], su2_[3]}); }

private:
    Mat2 su2_;
    double phase_;
};

inline GroupElementU2 compose(const GroupElementU2 &a, const GroupElementU2 &b) {
    return {mul2(a.su2(), b.su2()), a.phase() + b.phase()};
}

inline GroupElementU2 inverse(const GroupElementU2 &a) { return {adjoint2(a.su2()), -a.phase()}; }

/// Haar-random U(2) element: SU(2) part from a normalized Gaussian quaternion, phase uniform.
template <typename Engine>
GroupElementU2 haar_sample(Engine &rng) {
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
    double x0, x1, x2, x3, n2;
    do {
        x0 = normal(rng);
        x1 = normal(rng);
        x2 = normal(rng);
        x3 = normal(rng);
        n2 = x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3;
    } while (n2 < 1e-300);
    const double inv = 1.0 / std::sqrt(n2);
    const cplx a(x0 * inv, x3 * inv), b(x2 * inv, x1 * inv);
    return {Mat2{a, b, -std::conj(b), std::conj(a)}, uniform(rng)};
}

/// Spin label stored as 2j.
struct Spin {
    int twice_j;
    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(twice_j) + 1; }
    bool operator==(const Spin &) const = default;
};

inline constexpr Spin kSpin0{0};
inline constexpr Spin kSpinHalf{1};
inline constexpr Spin kSpin1{2};

struct WignerD {
    Spin j;
    ComplexMatrix matrix;
};

/// Spin-1 matrix in the triplet basis (HH, Psi+, VV), written directly from the SU(2) entries.
inline std::array<cplx, 9> spin1_entries(const Mat2 &u) {
    const double s = std::numbers::sqrt2;
    const cplx a = u[0], b = u[1], c = u[2], d = u[3];
    return {a * a, s * a * b, b * b,
            s * a * c, a * d + b * c, s * b * d,
            c * c, s * c * d, d * d};
}

inline WignerD wigner_d(Spin j, const GroupElementU2 &omega) {
    switch (j.twice_j) {
        case 0: return {j, ComplexMatrix::identity(1)};
        case 1: return {j, omega.su2_matrix()};
        case 2: {
            const auto e = spin1_entries(omega.su2());
            ComplexMatrix m(3);
            for (std::size_t i = 0; i < 9; ++i) {
                m(i / 3, i % 3) = e[i];
            }
            return {j, std::move(m)};
        }
        default: throw ContractError("only j in {0, 1/2, 1} is supported");
    }
}

/// Single-slot unitary on (|0>, |H>, |V>): 1 ⊕ e^{iα} D^{1/2}.
inline ComplexMatrix slot_unitary(const GroupElementU2 &omega) {
    const cplx ph = std::polar(1.0, omega.phase());
    const auto &u = omega.su2();
    ComplexMatrix m(3);
    m(0, 0) = 1.0;
    m(1, 1) = ph * u[0];
    m(1, 2) = ph * u[1];
    m(2, 1) = ph * u[2];
    m(2, 2) = ph * u[3];
    return m;
}

/// U(Ω_A) ⊗ U(Ω_B) in the fixed two-slot basis, kept as its three photon-number blocks.
struct BlockUnitary {
    cplx u0{1.0};
    std::array<cplx, 16> u1{};
    std::array<cplx, 16> u2{};

    [[nodiscard]] const cplx *block(std::size_t k) const { return k == 0 ? &u0 : (k == 1 ? u1.data() : u2.data()); }

    [[nodiscard]] ComplexMatrix to_matrix() const {
        ComplexMatrix m(basis::kDim);
        m(0, 0) = u0;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                m(1 + i, 1 + j) = u1[i * 4 + j];
                m(5 + i, 5 + j) = u2[i * 4 + j];
            }
        }
        return m;
    }
};

inline BlockUnitary product_unitary(const GroupElementU2 &a, const GroupElementU2 &b) {
    BlockUnitary u;
    const cplx pa = std::polar(1.0, a.phase()), pb = std::polar(1.0, b.phase());
    const auto &da = a.su2();
    const auto &db = b.su2();
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            u.u1[i * 4 + j] = pa * da[i * 2 + j];
            u.u1[(i + 2) * 4 + (j + 2)] = pb * db[i * 2 + j];
        }
    }
    // Polarization product basis (HH, HV, VH, VV) -> (Psi-, HH, Psi+, VV).
    const double r = 1.0 / std::numbers::sqrt2;
    constexpr std::size_t kHH = 0, kHV = 1, kVH = 2, kVV = 3;
    std::array<cplx, 16> q{};
    q[kHV * 4 + 0] = r;
    q[kVH * 4 + 0] = -r;
    q[kHH * 4 + 1] = 1.0;
    q[kHV * 4 + 2] = r;
    q[kVH * 4 + 2] = r;
    q[kVV * 4 + 3] = 1.0;
    std::array<cplx, 16> prod{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            prod[i * 4 + j] = da[(i / 2) * 2 + (j / 2)] * db[(i % 2) * 2 + (j % 2)];
        }
    }
    const cplx ph = pa * pb;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < 4; ++k) {
                if (q[k * 4 + i] == cplx{}) {
                    continue;
                }
                for (std::size_t l = 0; l < 4; ++l) {
                    s += std::conj(q[k * 4 + i]) * prod[k * 4 + l] * q[l * 4 + j];
                }
            }
            u.u2[i * 4 + j] = ph * s;
        }
    }
    return u;
}

/// U(Ω) ⊗ U(Ω) in the fixed basis: 1 ⊕ e^{iα}(D^{1/2} ⊕ D^{1/2}) ⊕ e^{2iα}(D^0 ⊕ D^1).
inline ComplexMatrix two_slot_unitary(const GroupElementU2 &omega) {
    BlockUnitary u;
    const cplx ph = std::polar(1.0, omega.phase());
    const auto &d = omega.su2();
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            u.u1[i * 4 + j] = ph * d[i * 2 + j];
            u.u1[(i + 2) * 4 + (j + 2)] = ph * d[i * 2 + j];
        }
    }
    const cplx ph2 = ph * ph;
    const auto d1 = spin1_entries(d);
    u.u2[0] = ph2;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            u.u2[(i + 1) * 4 + (j + 1)] = ph2 * d1[i * 3 + j];
        }
    }
    return u.to_matrix();
}

/// U ρ U† for a block unitary, with ρ a full 9×9 matrix (cross-block entries included).
inline ComplexMatrix conjugate(const BlockUnitary &u, const ComplexMatrix &rho) {
    // tmp = U ρ, then out = tmp U†, each exploiting the block structure of U.
    ComplexMatrix tmp(basis::kDim);
    for (std::size_t bk = 0; bk < 3; ++bk) {
        const std::size_t off = basis::kBlockOffset[bk], n = basis::kBlockDim[bk];
        const cplx *ub = u.block(bk);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const cplx uik = ub[i * n + k];
                for (std::size_t c = 0; c < basis::kDim; ++c) {
                    tmp(off + i, c) += uik * rho(off + k, c);
                }
            }
        }
    }
    ComplexMatrix out(basis::kDim);
    for (std::size_t bk = 0; bk < 3; ++bk) {
        const std::size_t off = basis::kBlockOffset[bk], n = basis::kBlockDim[bk];
        const cplx *ub = u.block(bk);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const cplx ujk = std::conj(ub[j * n + k]);
                for (std::size_t r = 0; r < basis::kDim; ++r) {
                    out(r, off + j) += tmp(r, off + k) * ujk;
                }
            }
        }
    }
    return out;
}

struct MonteCarloEstimate {
    cplx value;
    double std_error;
};

/// Monte Carlo estimate of ∫ dΩ conj(D^j_{mn}(Ω)) D^{j'}_{m'n'}(Ω) over the Haar measure.
template <typename Engine>
MonteCarloEstimate mc_orthogonality(Spin j, std::size_t m, std::size_t n, Spin jp, std::size_t mp, std::size_t np,
                                    std::size_t samples, Engine &rng) {
    if (samples < 1000) {
        throw ContractError("mc_orthogonality needs at least 1000 samples");
    }
    if (m >= j.dim() || n >= j.dim() || mp >= jp.dim() || np >= jp.dim()) {
        throw ContractError("matrix index out of range for spin");
    }
    cplx sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        const auto omega = haar_sample(rng);
        const auto a = wigner_d(j, omega).matrix(m, n);
        const auto b = wigner_d(jp, omega).matrix(mp, np);
        const cplx x = std::conj(a) * b;
        sum += x;
        sum_sq += std::norm(x);
    }
    const double count = static_cast<double>(samples);
    const cplx mean = sum / count;
    const double var = std::max(0.0, sum_sq / count - std::norm(mean));
    return {mean, std::sqrt(var / (count - 1.0))};
}

}  // namespace polcap

#endif  // POLCAP_GROUP_HPP
