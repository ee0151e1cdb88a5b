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

#include "csdc/basis_algebra.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csdc {

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

struct CanonicalGhz {
    size_t first;
    size_t second;
    int sign;
    const char *ket;
};

// Indexed by GHZ index - 1; computational indices over (h, t, c) with h as the high bit.
constexpr std::array<CanonicalGhz, 8> kCanonical{{
    {0b000, 0b111, +1, "(|000>+|111>)"},
    {0b000, 0b111, -1, "(|000>-|111>)"},
    {0b100, 0b011, +1, "(|100>+|011>)"},
    {0b100, 0b011, -1, "(|100>-|011>)"},
    {0b010, 0b101, +1, "(|010>+|101>)"},
    {0b010, 0b101, -1, "(|010>-|101>)"},
    {0b110, 0b001, +1, "(|110>+|001>)"},
    {0b110, 0b001, -1, "(|110>-|001>)"},
}};

// Left-hand kets exactly as printed, including the ones that collide (|001> appears four times).
constexpr std::array<CanonicalGhz, 8> kPrinted{{
    {0b000, 0b111, +1, "(|000>+|111>)"},
    {0b000, 0b111, -1, "(|000>-|111>)"},
    {0b100, 0b001, +1, "(|100>+|001>)"},
    {0b100, 0b001, -1, "(|100>-|001>)"},
    {0b010, 0b101, +1, "(|010>+|101>)"},
    {0b010, 0b101, -1, "(|010>-|101>)"},
    {0b110, 0b001, +1, "(|110>+|001>)"},
    {0b110, 0b001, -1, "(|110>-|001>)"},
}};

// One printed term: coefficient times |s_h>|s_t>|s_c> with s = 0 for |+> and 1 for |->.
struct DiagonalTerm {
    int h, t, c, sign;
};

// Printed right-hand sides, each with the common prefactor 1/2.
const std::array<std::array<DiagonalTerm, 4>, 8> kPrintedExpansions{{
    {{{0, 0, 0, +1}, {0, 1, 1, +1}, {1, 0, 1, +1}, {1, 1, 0, +1}}},
    {{{0, 1, 0, +1}, {0, 0, 1, +1}, {1, 0, 0, +1}, {1, 1, 1, +1}}},
    {{{0, 0, 0, +1}, {0, 1, 0, +1}, {1, 0, 1, -1}, {1, 1, 1, -1}}},
    {{{0, 0, 1, +1}, {0, 1, 1, +1}, {1, 0, 0, -1}, {1, 1, 0, -1}}},
    {{{0, 0, 0, +1}, {0, 1, 1, -1}, {1, 0, 1, +1}, {1, 1, 0, -1}}},
    {{{0, 0, 1, +1}, {0, 1, 0, -1}, {1, 0, 0, +1}, {1, 1, 1, -1}}},
    {{{0, 0, 0, +1}, {0, 1, 1, -1}, {1, 1, 0, +1}, {1, 0, 1, -1}}},
    {{{0, 0, 1, +1}, {0, 1, 0, -1}, {1, 1, 1, +1}, {1, 0, 0, -1}}},
}};

std::array<QubitId, 3> default_triple() {
    return {QubitId::home(1), QubitId::travel(1), QubitId::control(1, 1)};
}

StateVector two_term_state(const CanonicalGhz &g, const std::array<QubitId, 3> &triple) {
    std::vector<Amplitude> amps(8);
    amps[g.first] += kInvSqrt2;
    amps[g.second] += g.sign * kInvSqrt2;
    return StateVector({triple.begin(), triple.end()}, std::move(amps));
}

void require_index(int index) {
    if (index < 1 || index > 8) {
        throw std::invalid_argument("GHZ index must be in 1..8, got " + std::to_string(index));
    }
}

struct PrintedSwapTerm {
    BellOutcome pair13;
    BellOutcome pair24;
    int sign;
};

using B = BellOutcome;

// |psi+>_12 (x) |right>_34 = 1/2 * sum of these terms, indexed by `right`.
const std::array<std::array<PrintedSwapTerm, 4>, 4> kPrintedSwaps{{
    {{{B::PsiPlus, B::PsiPlus, +1}, {B::PsiMinus, B::PsiMinus, -1}, {B::PhiPlus, B::PhiPlus, +1}, {B::PhiMinus, B::PhiMinus, -1}}},
    {{{B::PsiPlus, B::PsiMinus, +1}, {B::PsiMinus, B::PsiPlus, -1}, {B::PhiPlus, B::PhiMinus, -1}, {B::PhiMinus, B::PhiPlus, +1}}},
    {{{B::PsiPlus, B::PhiPlus, +1}, {B::PsiMinus, B::PhiMinus, -1}, {B::PhiPlus, B::PsiPlus, +1}, {B::PhiMinus, B::PsiMinus, -1}}},
    {{{B::PsiPlus, B::PhiMinus, +1}, {B::PsiMinus, B::PhiPlus, -1}, {B::PhiPlus, B::PsiMinus, -1}, {B::PhiMinus, B::PsiPlus, +1}}},
}};

size_t bell_slot(BellOutcome b) {
    return static_cast<size_t>(b);
}

}  // namespace

StateVector bell_state_vector(BellOutcome outcome, const QubitId &first, const QubitId &second) {
    if (first == second) {
        throw std::invalid_argument("Bell state needs two distinct qubits");
    }
    auto v = bell_vector(outcome);
    return StateVector({first, second}, {v.begin(), v.end()});
}

StateVector ghz_state_vector(int index, const std::array<QubitId, 3> &triple) {
    require_index(index);
    return two_term_state(kCanonical[index - 1], triple);
}

StateVector ghz_register_state(std::vector<QubitId> qubits) {
    if (qubits.size() < 2) {
        throw std::invalid_argument("a GHZ register needs at least two qubits");
    }
    std::vector<Amplitude> amps(size_t{1} << qubits.size());
    amps.front() = kInvSqrt2;
    amps.back() = kInvSqrt2;
    return StateVector(std::move(qubits), std::move(amps));
}

double ghz_gram_residual() {
    auto triple = default_triple();
    std::vector<StateVector> basis;
    for (int i = 1; i <= 8; i++) {
        basis.push_back(ghz_state_vector(i, triple));
    }
    double worst = 0;
    for (size_t i = 0; i < 8; i++) {
        for (size_t j = 0; j < 8; j++) {
            Amplitude expected = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(inner_product(basis[i], basis[j]) - expected));
        }
    }
    return worst;
}

GhzExpansionReport verify_ghz_expansion(int index) {
    require_index(index);
    auto triple = default_triple();

    std::vector<Amplitude> amps(8);
    for (const auto &term : kPrintedExpansions[index - 1]) {
        auto h = basis_vector(MeasurementBasis::Diagonal, term.h);
        auto t = basis_vector(MeasurementBasis::Diagonal, term.t);
        auto c = basis_vector(MeasurementBasis::Diagonal, term.c);
        for (size_t x = 0; x < 8; x++) {
            amps[x] += 0.5 * term.sign * h[(x >> 2) & 1] * t[(x >> 1) & 1] * c[x & 1];
        }
    }
    // Raw amplitudes are compared, so a wrong prefactor in the printed form shows up as a residual.
    auto residual_against = [&](const StateVector &target) {
        double worst = 0;
        for (size_t x = 0; x < 8; x++) {
            worst = std::max(worst, std::abs(amps[x] - target.amplitude(x)));
        }
        return worst;
    };

    GhzExpansionReport report;
    report.index = index;
    report.canonical_ket = kCanonical[index - 1].ket;
    report.printed_ket = kPrinted[index - 1].ket;
    report.max_residual = residual_against(ghz_state_vector(index, triple));
    report.holds = report.max_residual < kTolerance;
    report.printed_ket_residual = residual_against(two_term_state(kPrinted[index - 1], triple));
    return report;
}

SwapReport verify_swap_identity(BellOutcome left, BellOutcome right) {
    // Photons 1..4.
    const QubitId p1 = QubitId::home(1);
    const QubitId p2 = QubitId::home(2);
    const QubitId p3 = QubitId::home(3);
    const QubitId p4 = QubitId::home(4);
    const std::array<QubitId, 4> order{p1, p2, p3, p4};

    StateVector initial = tensor(bell_state_vector(left, p1, p2), bell_state_vector(right, p3, p4));

    SwapReport report;
    report.left = left;
    report.right = right;
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            StateVector basis_element = reorder(
                tensor(bell_state_vector(kAllBellOutcomes[i], p1, p3), bell_state_vector(kAllBellOutcomes[j], p2, p4)),
                order);
            report.amplitudes[i][j] = inner_product(basis_element, initial);
        }
    }

    double worst = 0;
    if (left == BellOutcome::PsiPlus) {
        std::array<std::array<Amplitude, 4>, 4> expected{};
        for (const auto &term : kPrintedSwaps[bell_slot(right)]) {
            expected[bell_slot(term.pair13)][bell_slot(term.pair24)] = 0.5 * term.sign;
        }
        for (size_t i = 0; i < 4; i++) {
            for (size_t j = 0; j < 4; j++) {
                worst = std::max(worst, std::abs(report.amplitudes[i][j] - expected[i][j]));
            }
        }
        report.holds = worst < kTolerance;
    } else {
        size_t nonzero = 0;
        for (const auto &row : report.amplitudes) {
            for (const auto &a : row) {
                double m = std::abs(a);
                if (m > kTolerance) {
                    nonzero++;
                    worst = std::max(worst, std::abs(m - 0.5));
                } else {
                    worst = std::max(worst, m);
                }
            }
        }
        report.holds = nonzero == 4 && worst < kTolerance;
    }
    report.max_residual = worst;
    return report;
}

}  // namespace csdc
