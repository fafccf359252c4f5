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

#ifndef POLCAP_RANDOM_STATES_HPP
#define POLCAP_RANDOM_STATES_HPP

#include <random>

#include "polcap/matrix.hpp"
#include "polcap/qstate.hpp"

namespace polcap {

/// Ginibre-distributed mixed state: G G† / tr(G G†) with i.i.d. complex Gaussian G.
template <typename Engine>
DensityOperator random_density_operator(Engine &rng, BasisTag tag = BasisTag::two_slot) {
    std::normal_distribution<double> normal;
    const std::size_t n = dim_of(tag);
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g(i, j) = cplx(normal(rng), normal(rng));
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    rho = (rho + rho.adjoint()) * cplx(0.5 / rho.trace().real());
    return {std::move(rho), tag};
}

/// Haar-random pure state.
template <typename Engine>
DensityOperator random_pure_state(Engine &rng, BasisTag tag = BasisTag::two_slot) {
    std::normal_distribution<double> normal;
    std::vector<cplx> v(dim_of(tag));
    for (auto &x : v) {
        x = cplx(normal(rng), normal(rng));
    }
    return DensityOperator::pure(v, tag);
}

}  // namespace polcap

#endif  // POLCAP_RANDOM_STATES_HPP
