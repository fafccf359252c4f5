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

// Independent reference computations for the tests. Nothing here calls the code path it
// is used to check.

#ifndef POLCAP_TESTS_ORACLES_HPP
#define POLCAP_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "polcap/polcap.hpp"

namespace polcap::oracle {

/// U(Ω_A) ⊗ U(Ω_B) in the fixed basis via the explicit 9×9 Kronecker product of the
/// per-slot 3×3 unitaries and the basis change matrix.
inline ComplexMatrix tensor_product_unitary(const GroupElementU2 &a, const GroupElementU2 &b) {
    const ComplexMatrix v = basis::product_to_fixed();
    return v.adjoint() * kron(slot_unitary(a), slot_unitary(b)) * v;
}

/// Plain Monte Carlo average of U(Ω)⊗U(Ω) ρ (·)† with dense 9×9 algebra.
inline ComplexMatrix mc_twirl(const ComplexMatrix &rho, std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix acc(9);
    for (std::size_t s = 0; s < samples; ++s) {
        const auto omega = haar_sample(rng);
        const ComplexMatrix u = tensor_product_unitary(omega, omega);
        acc += u * rho * u.adjoint();
    }
    return acc * cplx(1.0 / static_cast<double>(samples));
}

/// Maximizer of a concave function of one variable on [lo, hi]: dense grid scan followed by
/// repeated local grid refinement (no golden-section logic).
inline std::pair<double, double> grid_maximize(const std::function<double(double)> &f, double lo, double hi) {
    double best_x = lo, best_v = f(lo);
    double a = lo, b = hi;
    for (int round = 0; round < 12; ++round) {
        constexpr int kPoints = 200;
        for (int i = 0; i <= kPoints; ++i) {
            const double x = a + (b - a) * i / kPoints;
            const double v = f(x);
            if (v > best_v) {
                best_v = v;
                best_x = x;
            }
        }
        const double h = (b - a) / kPoints;
        a = std::max(lo, best_x - 2 * h);
        b = std::min(hi, best_x + 2 * h);
    }
    return {best_x, best_v};
}

/// Binary-input binary-output MI by direct summation of p(x,y) log p(x,y)/(p(x)p(y)).
inline double binary_mi(double p0, const std::array<std::array<double, 2>, 2> &w) {
    const double px[2] = {p0, 1.0 - p0};
    double py[2] = {0.0, 0.0};
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            py[y] += px[x] * w[x][y];
        }
    }
    double mi = 0.0;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            const double pxy = px[x] * w[x][y];
            if (pxy > 0.0) {
                mi += pxy * std::log2(pxy / (px[x] * py[y]));
            }
        }
    }
    return mi;
}

/// max over the 3-simplex of Σ p_k χ_k + H(p), by nested grid refinement.
inline double simplex_maximize(const std::array<double, 3> &chi) {
    const auto objective = [&](double p0, double p1) {
        const double p2 = 1.0 - p0 - p1;
        if (p2 < 0.0) {
            return -1e300;
        }
        double v = 0.0;
        for (const double p : {p0, p1, p2}) {
            if (p > 0.0) {
                v -= p * std::log2(p);
            }
        }
        return v + p0 * chi[0] + p1 * chi[1] + p2 * chi[2];
    };
    const auto inner = [&](double p0) {
        return grid_maximize([&](double p1) { return objective(p0, p1); }, 0.0, 1.0 - p0).second;
    };
    return grid_maximize(inner, 0.0, 1.0).second;
}

/// Two-sample Kolmogorov–Smirnov statistic sup |F_a − F_b|.
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) {
            ++i;
        }
        while (j < b.size() && b[j] <= x) {
            ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
    }
    return d;
}

}  // namespace polcap::oracle

#endif  // POLCAP_TESTS_ORACLES_HPP
