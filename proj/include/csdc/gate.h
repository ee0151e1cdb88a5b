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

#ifndef CSDC_GATE_H
#define CSDC_GATE_H

#include <array>
#include <string_view>

#include "csdc/state_vector.h"

namespace csdc {

/// Single-qubit gates used by the protocol: the four encoding unitaries plus the controllers'
/// Hadamard.
enum class Gate { Identity, PauliX, MinusIPauliY, PauliZ, Hadamard };

inline constexpr std::array<Gate, 5> kAllGates{
    Gate::Identity, Gate::PauliX, Gate::MinusIPauliY, Gate::PauliZ, Gate::Hadamard};

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Amplitude, 4>;

Matrix2 gate_matrix(Gate gate);
std::string_view gate_name(Gate gate);

StateVector apply_gate(const StateVector &state, Gate gate, const QubitId &target);
StateVector apply_matrix(const StateVector &state, const Matrix2 &matrix, const QubitId &target);

/// Controlled-NOT with `control` and `target` in the register.
StateVector apply_cnot(const StateVector &state, const QubitId &control, const QubitId &target);

}  // namespace csdc

#endif
