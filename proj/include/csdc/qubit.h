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

#ifndef CSDC_QUBIT_H
#define CSDC_QUBIT_H

#include <compare>
#include <cstdint>
#include <string>

namespace csdc {

/// Which sequence a photon belongs to. Control qubits carry a controller number starting at 1;
/// ancillas are the eavesdropper's probe qubits.
enum class Role : uint8_t { Home, Travel, Control, Ancilla };

struct QubitId {
    int triplet = 0;
    Role role = Role::Home;
    int controller = 0;

    static QubitId home(int triplet) {
        return {triplet, Role::Home, 0};
    }
    static QubitId travel(int triplet) {
        return {triplet, Role::Travel, 0};
    }
    static QubitId control(int triplet, int controller) {
        return {triplet, Role::Control, controller};
    }
    static QubitId ancilla(int triplet) {
        return {triplet, Role::Ancilla, 0};
    }

    /// Short label such as "h3", "t3", "c1.3" or "a3".
    std::string label() const;

    auto operator<=>(const QubitId &) const = default;
};

}  // namespace csdc

#endif
