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

#include <Eigen/Eigenvalues>
#include <cmath>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "polcap/polcap.hpp"

using namespace polcap;

namespace {

DensityOperator two_slot_pure(const std::vector<cplx> &k) { return DensityOperator::pure(k, BasisTag::two_slot); }

/// Entropy through Eigen's Hermitian eigensolver, independent of the Jacobi routine.
double eigen_entropy(const ComplexMatrix &m) {
    Eigen::MatrixXcd e(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            e(i, j) = m(i, j);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e);
    double s = 0.0;
    for (const double l : solver.eigenvalues()) {
        if (l > 0.0) {
            s -= l * std::log2(l);
        }
    }
    return s;
}

}  // namespace

TEST(Matrix, hermitian_eigenvalues_match_eigen) {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rho = random_density_operator(rng);
        EXPECT_NEAR(von_neumann_entropy(rho), eigen_entropy(rho.matrix()), 1e-11);
    }
}

TEST(Matrix, kron_dimensions_and_entries) {
    const ComplexMatrix a(2, {1.0, 2.0, 3.0, 4.0});
    const ComplexMatrix b = ComplexMatrix::identity(3);
    const auto k = kron(a, b);
    ASSERT_EQ(k.dim(), 6u);
    EXPECT_EQ(k(0, 3), cplx(2.0));
    EXPECT_EQ(k(4, 1), cplx(3.0));
    EXPECT_EQ(k(4, 2), cplx(0.0));
}

TEST(DensityOperatorTest, rejects_invalid_matrices) {
    EXPECT_THROW(DensityOperator(ComplexMatrix::identity(4), BasisTag::zero_photon), ContractError);
    ComplexMatrix bad4(4);
    bad4(0, 1) = 0.2;
    bad4(0, 0) = bad4(1, 1) = bad4(2, 2) = bad4(3, 3) = 0.25;
    EXPECT_THROW(DensityOperator(bad4, BasisTag::two_photon), InvalidState);
    EXPECT_THROW(DensityOperator(ComplexMatrix::identity(4), BasisTag::two_photon), InvalidState);
    const std::array<double, 4> neg{1.1, -0.1, 0.0, 0.0};
    EXPECT_THROW(DensityOperator(ComplexMatrix::diagonal(neg), BasisTag::two_photon), InvalidState);
}

TEST(Entropy, spot_values) {
    EXPECT_NEAR(von_neumann_entropy(two_slot_pure(basis::ket(basis::singlet))), 0.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(DensityOperator::maximally_mixed(BasisTag::two_photon)), 2.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(werner_state(1.0 / 3.0)), std::log2(3.0), 1e-12);
}

TEST(Entropy, invariant_under_unitary_conjugation) {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto rho = random_density_operator(rng);
        const auto u = oracle::tensor_product_unitary(haar_sample(rng), haar_sample(rng));
        const DensityOperator rotated(conjugate(u, rho.matrix()), BasisTag::two_slot);
        EXPECT_NEAR(von_neumann_entropy(rotated), von_neumann_entropy(rho), 1e-10);
    }
}

TEST(Blocks, vacuum_has_single_block) {
    const auto d = truncate_to_blocks(two_slot_pure(basis::ket(basis::vacuum)));
    EXPECT_DOUBLE_EQ(d.weights[0], 1.0);
    EXPECT_DOUBLE_EQ(d.weights[1], 0.0);
    EXPECT_DOUBLE_EQ(d.weights[2], 0.0);
    EXPECT_TRUE(d.blocks[0].has_value());
    EXPECT_FALSE(d.blocks[1].has_value());
    EXPECT_FALSE(d.blocks[2].has_value());
}

TEST(Blocks, superposition_of_vacuum_and_vv_splits_evenly) {
    auto k = basis::ket(basis::vacuum);
    k[basis::vv] = 1.0;
    const auto d = truncate_to_blocks(two_slot_pure(k));
    EXPECT_NEAR(d.weights[0], 0.5, 1e-15);
    EXPECT_NEAR(d.weights[1], 0.0, 1e-15);
    EXPECT_NEAR(d.weights[2], 0.5, 1e-15);
    ASSERT_TRUE(d.blocks[2].has_value());
    EXPECT_NEAR(von_neumann_entropy(*d.blocks[0]), 0.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(*d.blocks[2]), 0.0, 1e-12);
    EXPECT_NEAR(d.blocks[2]->matrix()(3, 3).real(), 1.0, 1e-15);
}

TEST(Blocks, reassembly_reproduces_block_diagonal_part) {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto rho = random_density_operator(rng);
        const auto d = truncate_to_blocks(rho);
        EXPECT_NEAR(d.weights[0] + d.weights[1] + d.weights[2], 1.0, 1e-12);
        const auto back = reassemble(d);
        for (std::size_t i = 0; i < 9; ++i) {
            for (std::size_t j = 0; j < 9; ++j) {
                const cplx expected = basis::block_of(i) == basis::block_of(j) ? rho(i, j) : cplx{};
                EXPECT_NEAR(std::abs(back(i, j) - expected), 0.0, 1e-14);
            }
        }
    }
}

TEST(Blocks, truncate_requires_two_slot_state) {
    EXPECT_THROW(truncate_to_blocks(werner_state(0.0)), ContractError);
}

TEST(Werner, endpoints) {
    EXPECT_NEAR(max_abs_diff(werner_state(-1.0).matrix(),
                             ComplexMatrix::diagonal(std::array<double, 4>{1.0, 0.0, 0.0, 0.0})),
                0.0, 1e-15);
    EXPECT_NEAR(max_abs_diff(werner_state(0.0).matrix(), ComplexMatrix::identity(4) * cplx(0.25)), 0.0, 1e-15);
    EXPECT_NEAR(werner_state(1.0 / 3.0)(0, 0).real(), 0.0, 1e-15);
    EXPECT_THROW(werner_state(0.34), InvalidState);
    EXPECT_THROW(werner_state(-1.01), InvalidState);
}

TEST(Werner, parameter_of_named_states) {
    const auto block2 = [](const std::vector<cplx> &k) { return *truncate_to_blocks(two_slot_pure(k)).blocks[2]; };
    using basis::Slot;
    EXPECT_NEAR(werner_parameter(block2(basis::ket(basis::singlet))), -1.0, 1e-15);
    EXPECT_NEAR(werner_parameter(block2(basis::ket(basis::vv))), 1.0 / 3.0, 1e-15);
    // |<Psi-|V_A H_B>|^2 = 1/2 from the explicit vectors.
    const auto vh = basis::product_ket(Slot::v, Slot::h);
    EXPECT_NEAR(std::norm(vh[basis::singlet]), 0.5, 1e-15);
    EXPECT_NEAR(werner_parameter(block2(vh)), -1.0 / 3.0, 1e-15);
    EXPECT_THROW(werner_parameter(two_slot_pure(basis::ket(basis::vv))), ContractError);
}

TEST(Werner, parameter_round_trip_on_grid) {
    for (int i = 0; i < 100; ++i) {
        const double c = -1.0 + (4.0 / 3.0) * i / 99.0;
        EXPECT_NEAR(werner_parameter(werner_state(c)), c, 1e-12);
    }
}

TEST(Holevo, single_member_ensemble_is_zero) {
    Rng rng(5);
    const StateEnsemble ens({{1.0, random_density_operator(rng)}});
    EXPECT_NEAR(holevo_quantity(ens, ChannelMap::analytic(NoiseModel{0.3, 0.7})), 0.0, 1e-12);
}

TEST(Holevo, singlet_versus_vv_through_perfect_channel) {
    // f(-1/3) - f(-1)/2 - f(1/3)/2 by direct evaluation of the entropy formula.
    const double f_m13 = 2.0 - 0.75 * (2.0 / 3.0) * std::log2(2.0 / 3.0) - 0.25 * 2.0 * std::log2(2.0);
    const double expected = f_m13 - 0.5 * 0.0 - 0.5 * std::log2(3.0);
    ASSERT_NEAR(expected, 1.0, 1e-12);
    const StateEnsemble ens({{0.5, two_slot_pure(basis::ket(basis::singlet))}, {0.5, two_slot_pure(basis::ket(basis::vv))}});
    EXPECT_NEAR(holevo_quantity(ens, ChannelMap::analytic(NoiseModel::perfect())), 1.0, 1e-12);
}

TEST(Holevo, identity_channel_on_orthogonal_pair) {
    const auto identity = [](const DensityOperator &rho) { return rho; };
    const StateEnsemble ens({{0.5, two_slot_pure(basis::ket(basis::h_a))}, {0.5, two_slot_pure(basis::ket(basis::v_b))}});
    EXPECT_NEAR(holevo_quantity(ens, identity), 1.0, 1e-12);
}

TEST(Holevo, rejects_mixed_spaces) {
    EXPECT_THROW(StateEnsemble({{0.5, werner_state(0.0)}, {0.5, two_slot_pure(basis::ket(basis::vv))}}),
                 ContractError);
    EXPECT_THROW(StateEnsemble({{0.4, werner_state(0.0)}, {0.5, werner_state(0.1)}}), ContractError);
}

TEST(Holevo, block_refinement_preserves_average_output) {
    // Splitting a member into its photon-number sub-ensemble leaves the average output of a
    // block-diagonal channel unchanged. χ itself grows by exactly p·H(block weights), since
    // the outputs of the separate blocks are mutually orthogonal.
    Rng rng(21);
    const ChannelMap channel = ChannelMap::analytic(NoiseModel{0.6, 0.4});
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_density_operator(rng);
        const auto b = random_pure_state(rng);
        const double pa = 0.3;
        const StateEnsemble coarse({{pa, a}, {1.0 - pa, b}});
        const auto d = truncate_to_blocks(a);

        std::vector<StateEnsemble::Item> fine{{1.0 - pa, b}};
        ComplexMatrix sub_average(9);
        double h_blocks = 0.0;
        for (std::size_t k = 0; k < 3; ++k) {
            if (d.blocks[k]) {
                fine.emplace_back(pa * d.weights[k], embed(*d.blocks[k]));
                sub_average += channel(embed(*d.blocks[k])).matrix() * cplx(d.weights[k]);
                h_blocks -= d.weights[k] * std::log2(d.weights[k]);
            }
        }
        EXPECT_LT(max_abs_diff(sub_average, channel(a).matrix()), 1e-12);

        double total = 0.0;
        for (const auto &it : fine) {
            total += it.first;
        }
        fine.front().first += 1.0 - total;
        const double chi_fine = holevo_quantity(StateEnsemble(fine), channel);
        const double chi_coarse = holevo_quantity(coarse, channel);
        EXPECT_NEAR(chi_fine - chi_coarse, pa * h_blocks, 1e-10);
        EXPECT_GE(chi_fine, chi_coarse - 1e-12);
    }
}
