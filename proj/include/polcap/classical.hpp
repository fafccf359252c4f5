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

#ifndef POLCAP_CLASSICAL_HPP
#define POLCAP_CLASSICAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "polcap/errors.hpp"

namespace polcap {

/// −x log2 x with 0·log 0 = 0.
inline double xlog2x_neg(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

/// Binary entropy in bits.
inline double binary_entropy(double p) { return xlog2x_neg(p) + xlog2x_neg(1.0 - p); }

inline double shannon_entropy(std::span<const double> p) {
    double h = 0.0;
    for (const double x : p) {
        h += xlog2x_neg(x);
    }
    return h;
}

struct GoldenSectionResult {
    double argmax;
    double value;
};

/// Maximizes a unimodal function on [lo, hi] until the bracket is narrower than `width`.
/// The endpoints are compared against the interior optimum so boundary maxima are found too.
template <typename F>
GoldenSectionResult golden_section_maximize(F &&f, double lo, double hi, double width = 1e-12) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && (b - a) > width; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    GoldenSectionResult best{0.5 * (a + b), f(0.5 * (a + b))};
    for (const double x : {lo, hi}) {
        const double v = f(x);
        if (v > best.value) {
            best = {x, v};
        }
    }
    return best;
}

struct BlahutArimotoResult {
    double capacity;             // bits
    std::vector<double> input;   // capacity-achieving input distribution
    std::size_t iterations;
    double gap;                  // upper bound minus capacity estimate, bits
};

/// Capacity of a discrete memoryless channel W[x][y] = P(y | x) by Blahut–Arimoto.
///
/// The lower bound log Σ_x p_x exp D(W_x || r) increases monotonically toward the capacity
/// and the upper bound max_x D(W_x || r) stays above it. Iteration stops once the two
/// bounds meet within `tolerance` bits, so the result is certified to that accuracy. A
/// small per-step change alone is not used as a stopping rule: on nearly useless channels
/// it fires while the estimate is still ~1e-6 low.
inline BlahutArimotoResult blahut_arimoto(const std::vector<std::vector<double>> &w, double tolerance = 1e-10,
                                          std::size_t max_iterations = 100000) {
    const std::size_t nx = w.size();
    if (nx == 0) {
        throw ContractError("channel needs at least one input");
    }
    const std::size_t ny = w.front().size();
    std::vector<double> p(nx, 1.0 / static_cast<double>(nx)), r(ny), d(nx);
    for (std::size_t it = 1; it <= max_iterations; ++it) {
        std::fill(r.begin(), r.end(), 0.0);
        for (std::size_t x = 0; x < nx; ++x) {
            for (std::size_t y = 0; y < ny; ++y) {
                r[y] += p[x] * w[x][y];
            }
        }
        // Divergences in nats.
        for (std::size_t x = 0; x < nx; ++x) {
            double dx = 0.0;
            for (std::size_t y = 0; y < ny; ++y) {
                if (w[x][y] > 0.0) {
                    dx += w[x][y] * std::log(w[x][y] / r[y]);
                }
            }
            d[x] = dx;
        }
        const double upper = *std::max_element(d.begin(), d.end());
        double z = 0.0;
        for (std::size_t x = 0; x < nx; ++x) {
            z += p[x] * std::exp(d[x] - upper);
        }
        const double lower = (upper + std::log(z)) / std::log(2.0);
        const double gap = upper / std::log(2.0) - lower;
        if (gap < tolerance) {
            return {std::max(0.0, lower), p, it, gap};
        }
        for (std::size_t x = 0; x < nx; ++x) {
            p[x] = p[x] * std::exp(d[x] - upper) / z;
        }
    }
    throw NumericError("Blahut-Arimoto did not converge");
}

}  // namespace polcap

#endif  // POLCAP_CLASSICAL_HPP
