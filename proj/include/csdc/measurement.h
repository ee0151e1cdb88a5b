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

#ifndef CSDC_MEASUREMENT_H
#define CSDC_MEASUREMENT_H

#include <array>
#include <optional>
#include <string_view>

#include "csdc/random.h"
#include "csdc/state_vector.h"

namespace csdc {

/// Computational is {|0>, |1>}; Diagonal is {|+>, |->}. Outcome 0 is |0> or |+>.
enum class MeasurementBasis { Computational, Diagonal };

/// The four Bell states on an ordered pair (a, b):
///   PsiPlus  = (|0a 1b> + |1a 0b>)/sqrt2   PsiMinus = (|0a 1b> - |1a 0b>)/sqrt2
///   PhiPlus  = (|0a 0b> + |1a 1b>)/sqrt2   PhiMinus = (|0a 0b> - |1a 1b>)/sqrt2
enum class BellOutcome { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

inline constexpr std::array<BellOutcome, 4> kAllBellOutcomes{
    BellOutcome::PsiPlus, BellOutcome::PsiMinus, BellOutcome::PhiPlus, BellOutcome::PhiMinus};

/// "PSI+", "PSI-", "PHI+", "PHI-".
std::string_view to_string(BellOutcome outcome);
std::optional<BellOutcome> parse_bell_outcome(std::string_view text);
/// "Z" or "X".
std::string_view to_string(MeasurementBasis basis);

/// Branch probabilities at or below this are treated as exactly zero and never sampled.
inline constexpr double kZeroProbability = 1e-13;

std::array<Amplitude, 2> basis_vector(MeasurementBasis basis, int outcome);
/// Amplitudes over |00>, |01>, |10>, |11> of the ordered pair.
std::array<Amplitude, 4> bell_vector(BellOutcome outcome);

struct Projection {
    double probability = 0;
    /// Renormalized remainder with the measured qubits removed; empty when probability is zero.
    std::optional<StateVector> post_state;
};

/// Projects `target` onto the given basis outcome without sampling.
Projection project_qubit(const StateVector &state, const QubitId &target, MeasurementBasis basis, int outcome);
/// Projects the ordered pair onto a Bell state without sampling.
Projection project_bell(const StateVector &state, const QubitId &first, const QubitId &second, BellOutcome outcome);

std::array<double, 2> qubit_probabilities(const StateVector &state, const QubitId &target, MeasurementBasis basis);
std::array<double, 4> bell_probabilities(const StateVector &state, const QubitId &first, const QubitId &second);

struct QubitMeasurement {
    int outcome;
    double probability;
    StateVector post_state;
};

struct BellMeasurement {
    BellOutcome outcome;
    double probability;
    StateVector post_state;
};

/// Samples a Born-rule outcome and collapses. The measured qubit leaves the register.
QubitMeasurement measure_qubit(const StateVector &state, const QubitId &target, MeasurementBasis basis, RandomStream &rng);

/// Samples a Bell-basis outcome on the ordered pair and collapses. Both qubits leave the register.
BellMeasurement measure_bell(const StateVector &state, const QubitId &first, const QubitId &second, RandomStream &rng);

}  // namespace csdc

#endif
