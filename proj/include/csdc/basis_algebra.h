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

#ifndef CSDC_BASIS_ALGEBRA_H
#define CSDC_BASIS_ALGEBRA_H

#include <array>
#include <string>
#include <vector>

#include "csdc/measurement.h"
#include "csdc/state_vector.h"

namespace csdc {

StateVector bell_state_vector(BellOutcome outcome, const QubitId &first, const QubitId &second);

/// Canonical orthonormal GHZ basis on an (h, t, c) triple:
///   1, 2 -> (|000> +- |111>)/sqrt2     3, 4 -> (|100> +- |011>)/sqrt2
///   5, 6 -> (|010> +- |101>)/sqrt2     7, 8 -> (|110> +- |001>)/sqrt2
/// Throws std::invalid_argument for an index outside 1..8.
StateVector ghz_state_vector(int index, const std::array<QubitId, 3> &triple);

/// (|0...0> + |1...1>)/sqrt2 over any register of at least two qubits.
StateVector ghz_register_state(std::vector<QubitId> qubits);

/// Max |G - I| over the Gram matrix of the eight canonical GHZ vectors.
double ghz_gram_residual();

/// Result of rebuilding a printed diagonal-basis GHZ expansion.
struct GhzExpansionReport {
    int index = 0;
    /// Printed expansion matches the canonical vector for this index within kTolerance.
    bool holds = false;
    double max_residual = 0;
    /// Computational-basis ket printed on the left-hand side, e.g. "(|100>+|001>)".
    std::string printed_ket;
    std::string canonical_ket;
    /// Residual between the printed expansion and the printed left-hand ket.
    double printed_ket_residual = 0;
};

/// Substitutes |+-> = (|0> +- |1>)/sqrt2 into the printed right-hand expansion for `index` and
/// compares with ghz_state_vector(index). Throws std::invalid_argument outside 1..8.
GhzExpansionReport verify_ghz_expansion(int index);

struct SwapReport {
    BellOutcome left = BellOutcome::PsiPlus;
    BellOutcome right = BellOutcome::PsiPlus;
    bool holds = false;
    double max_residual = 0;
    /// amplitudes[i][j] = (<B_i|_13 <B_j|_24) (|left>_12 |right>_34), indexed by kAllBellOutcomes.
    std::array<std::array<Amplitude, 4>, 4> amplitudes{};
};

/// Re-expands |left>_12 (x) |right>_34 in the Bell bases of pairs (1,3) and (2,4).
///
/// For left = PsiPlus the sixteen amplitudes are compared against the reference swap identities
/// term by term. For every other left state the check is structural: exactly four joint outcomes
/// with amplitude magnitude 1/2 and all other amplitudes zero.
SwapReport verify_swap_identity(BellOutcome left, BellOutcome right);

}  // namespace csdc

#endif
