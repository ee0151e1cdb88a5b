// Copyright 2026 The CSDC Simulator Authors
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

#include "csdc/measurement.h"

#include <cmath>
#include <numeric>

#include "csdc/basis_algebra.h"
#include "csdc/gate.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace csdc;
using csdc::testing_util::binomial_sigma;
using csdc::testing_util::random_state;
using csdc::testing_util::register_of;

namespace {

const double r2 = 1 / std::sqrt(2.0);

StateVector hadamard_on_control_of_ghz() {
    auto ghz = ghz_state_vector(1, {QubitId::home(1), QubitId::travel(1), QubitId::control(1, 1)});
    return apply_gate(ghz, Gate::Hadamard, QubitId::control(1, 1));
}

}  // namespace

TEST(measurement, controller_collapse_branches) {
    auto s = hadamard_on_control_of_ghz();
    auto p = qubit_probabilities(s, QubitId::control(1, 1), MeasurementBasis::Computational);
    EXPECT_NEAR(p[0], 0.5, kTolerance);
    EXPECT_NEAR(p[1], 0.5, kTolerance);

    Projection zero = project_qubit(s, QubitId::control(1, 1), MeasurementBasis::Computational, 0);
    ASSERT_TRUE(zero.post_state);
    EXPECT_EQ(zero.post_state->qubits(), (std::vector<QubitId>{QubitId::home(1), QubitId::travel(1)}));
    EXPECT_LT(max_residual(*zero.post_state, make_state(zero.post_state->qubits(), {r2, 0, 0, r2})), kTolerance);

    Projection one = project_qubit(s, QubitId::control(1, 1), MeasurementBasis::Computational, 1);
    EXPECT_LT(max_residual(*one.post_state, make_state(one.post_state->qubits(), {r2, 0, 0, -r2})), kTolerance);
}

TEST(measurement, plus_state_in_diagonal_basis) {
    auto plus = make_state({QubitId::home(1)}, {r2, r2});
    RandomStream rng(1);
    for (int i = 0; i < 100; i++) {
        auto m = measure_qubit(plus, QubitId::home(1), MeasurementBasis::Diagonal, rng);
        EXPECT_EQ(m.outcome, 0);
        EXPECT_NEAR(m.probability, 1, kTolerance);
        EXPECT_EQ(m.post_state.qubit_count(), 0u);
    }
}

TEST(measurement, computational_frequency_on_plus) {
    auto plus = make_state({QubitId::home(1)}, {r2, r2});
    RandomStream rng(2024);
    const int trials = 10000;
    int zeros = 0;
    for (int i = 0; i < trials; i++) {
        zeros += measure_qubit(plus, QubitId::home(1), MeasurementBasis::Computational, rng).outcome == 0;
    }
    // 3 sigma of a fair binomial at 10^4 draws is 0.015.
    EXPECT_NEAR(static_cast<double>(zeros) / trials, 0.5, 3 * binomial_sigma(0.5, trials));
}

TEST(measurement, bell_eigenstate) {
    auto psi = bell_state_vector(BellOutcome::PsiPlus, QubitId::home(1), QubitId::travel(1));
    RandomStream rng(4);
    auto m = measure_bell(psi, QubitId::home(1), QubitId::travel(1), rng);
    EXPECT_EQ(m.outcome, BellOutcome::PsiPlus);
    EXPECT_NEAR(m.probability, 1, kTolerance);
}

TEST(measurement, bell_errors) {
    auto psi = bell_state_vector(BellOutcome::PsiPlus, QubitId::home(1), QubitId::travel(1));
    RandomStream rng(4);
    EXPECT_THROW(measure_bell(psi, QubitId::home(1), QubitId::home(1), rng), std::invalid_argument);
    EXPECT_THROW(measure_bell(psi, QubitId::home(1), QubitId::home(2), rng), std::invalid_argument);
    EXPECT_THROW(measure_qubit(psi, QubitId::home(3), MeasurementBasis::Diagonal, rng), std::invalid_argument);
}

TEST(measurement, bell_vectors_are_orthonormal) {
    for (auto a : kAllBellOutcomes) {
        for (auto b : kAllBellOutcomes) {
            auto va = bell_vector(a);
            auto vb = bell_vector(b);
            Amplitude dot = 0;
            for (size_t i = 0; i < 4; i++) {
                dot += std::conj(va[i]) * vb[i];
            }
            EXPECT_NEAR(std::abs(dot - Amplitude(a == b ? 1 : 0)), 0, kTolerance);
        }
    }
}

TEST(measurement, diagonal_basis_is_orthonormal) {
    for (auto basis : {MeasurementBasis::Computational, MeasurementBasis::Diagonal}) {
        auto v0 = basis_vector(basis, 0);
        auto v1 = basis_vector(basis, 1);
        EXPECT_NEAR(std::abs(std::conj(v0[0]) * v1[0] + std::conj(v0[1]) * v1[1]), 0, kTolerance);
        EXPECT_NEAR(std::norm(v0[0]) + std::norm(v0[1]), 1, kTolerance);
    }
}

TEST(measurement, branch_probabilities_sum_to_one) {
    RandomStream rng(17);
    for (int trial = 0; trial < 100; trial++) {
        auto s = random_state(4, rng);
        for (auto basis : {MeasurementBasis::Computational, MeasurementBasis::Diagonal}) {
            auto p = qubit_probabilities(s, s.qubits()[rng.below(4)], basis);
            EXPECT_NEAR(p[0] + p[1], 1, kTolerance);
        }
        auto b = bell_probabilities(s, s.qubits()[1], s.qubits()[3]);
        EXPECT_NEAR(std::accumulate(b.begin(), b.end(), 0.0), 1, kTolerance);
    }
}

TEST(measurement, post_states_are_normalized) {
    RandomStream rng(23);
    for (int trial = 0; trial < 100; trial++) {
        auto s = random_state(5, rng);
        auto m = measure_bell(s, s.qubits()[4], s.qubits()[0], rng);
        EXPECT_NEAR(m.post_state.norm(), 1, kTolerance);
        EXPECT_EQ(m.post_state.qubit_count(), 3u);
        auto q = measure_qubit(m.post_state, m.post_state.qubits()[1], MeasurementBasis::Diagonal, rng);
        EXPECT_NEAR(q.post_state.norm(), 1, kTolerance);
    }
}

TEST(measurement, unmeasured_eigenstate_reproduces_its_outcome) {
    // |1> (x) |+>: measuring the first qubit does not disturb the second.
    auto s = tensor(StateVector::basis({QubitId::home(1)}, 1), make_state({QubitId::travel(1)}, {r2, r2}));
    RandomStream rng(8);
    for (int i = 0; i < 20; i++) {
        auto first = measure_qubit(s, QubitId::home(1), MeasurementBasis::Computational, rng);
        EXPECT_EQ(first.outcome, 1);
        auto second = measure_qubit(first.post_state, QubitId::travel(1), MeasurementBasis::Diagonal, rng);
        EXPECT_EQ(second.outcome, 0);
        EXPECT_NEAR(second.probability, 1, kTolerance);
    }
}

TEST(measurement, same_seed_same_outcomes) {
    RandomStream state_rng(31);
    auto s = random_state(4, state_rng);
    std::vector<int> first, second;
    for (auto *out : {&first, &second}) {
        RandomStream rng(99);
        for (int i = 0; i < 200; i++) {
            out->push_back(measure_qubit(s, s.qubits()[i % 4], MeasurementBasis::Diagonal, rng).outcome);
            out->push_back(static_cast<int>(measure_bell(s, s.qubits()[0], s.qubits()[2], rng).outcome));
        }
    }
    EXPECT_EQ(first, second);
}

TEST(measurement, zero_probability_branch_is_never_sampled) {
    auto zero = StateVector::basis({QubitId::home(1)}, 0);
    EXPECT_FALSE(project_qubit(zero, QubitId::home(1), MeasurementBasis::Computational, 1).post_state);
    RandomStream rng(0);
    for (int i = 0; i < 1000; i++) {
        EXPECT_EQ(measure_qubit(zero, QubitId::home(1), MeasurementBasis::Computational, rng).outcome, 0);
    }
}

TEST(measurement, bell_outcome_names_round_trip) {
    for (auto b : kAllBellOutcomes) {
        EXPECT_EQ(parse_bell_outcome(to_string(b)), b);
    }
    EXPECT_EQ(parse_bell_outcome("PSI"), std::nullopt);
    EXPECT_EQ(to_string(BellOutcome::PhiMinus), "PHI-");
}
