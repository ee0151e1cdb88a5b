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

#include "csdc/gate.h"

#include <cmath>
#include <stdexcept>

namespace csdc {

Matrix2 gate_matrix(Gate gate) {
    const double r = 1 / std::sqrt(2.0);
    switch (gate) {
        case Gate::Identity:
            return {1, 0, 0, 1};
        case Gate::PauliX:
            return {0, 1, 1, 0};
        case Gate::MinusIPauliY:
            // -i * [[0, -i], [i, 0]]
            return {0, -1, 1, 0};
        case Gate::PauliZ:
            return {1, 0, 0, -1};
        case Gate::Hadamard:
            return {r, r, r, -r};
    }
    throw std::invalid_argument("unknown gate");
}

std::string_view gate_name(Gate gate) {
    switch (gate) {
        case Gate::Identity:
            return "I";
        case Gate::PauliX:
            return "X";
        case Gate::MinusIPauliY:
            return "-iY";
        case Gate::PauliZ:
            return "Z";
        case Gate::Hadamard:
            return "H";
    }
    return "?";
}

StateVector apply_matrix(const StateVector &state, const Matrix2 &m, const QubitId &target) {
    size_t bit = state.mask(state.position(target));
    std::vector<Amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (size_t i = 0; i < amps.size(); i++) {
        if (i & bit) {
            continue;
        }
        Amplitude a0 = amps[i];
        Amplitude a1 = amps[i | bit];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[i | bit] = m[2] * a0 + m[3] * a1;
    }
    return StateVector(state.qubits(), std::move(amps));
}

StateVector apply_gate(const StateVector &state, Gate gate, const QubitId &target) {
    return apply_matrix(state, gate_matrix(gate), target);
}

StateVector apply_cnot(const StateVector &state, const QubitId &control, const QubitId &target) {
    if (control == target) {
        throw std::invalid_argument("apply_cnot: control and target coincide");
    }
    size_t c = state.mask(state.position(control));
    size_t t = state.mask(state.position(target));
    std::vector<Amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (size_t i = 0; i < amps.size(); i++) {
        if ((i & c) && !(i & t)) {
            std::swap(amps[i], amps[i | t]);
        }
    }
    return StateVector(state.qubits(), std::move(amps));
}

}  // namespace csdc
