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

#include "csdc/qubit.h"

namespace csdc {

std::string QubitId::label() const {
    switch (role) {
        case Role::Home:
            return "h" + std::to_string(triplet);
        case Role::Travel:
            return "t" + std::to_string(triplet);
        case Role::Control:
            return "c" + std::to_string(controller) + "." + std::to_string(triplet);
        case Role::Ancilla:
            return "a" + std::to_string(triplet);
    }
    return "?";
}

}  // namespace csdc
