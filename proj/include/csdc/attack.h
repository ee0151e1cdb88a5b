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

#ifndef CSDC_ATTACK_H
#define CSDC_ATTACK_H

#include <string>
#include <variant>
#include <vector>

#include "csdc/measurement.h"
#include "csdc/random.h"
#include "csdc/state_vector.h"

namespace csdc {

enum class InterceptBasis { RandomZX, AlwaysZ, AlwaysX };

struct NoAttack {
    bool operator==(const NoAttack &) const = default;
};

/// Eve measures every travel photon in transit and forwards the eigenstate she observed.
struct InterceptResend {
    InterceptBasis basis_strategy = InterceptBasis::RandomZX;
    bool operator==(const InterceptResend &) const = default;
};

/// Eve couples a fresh |0> ancilla to every travel photon with a controlled-NOT (travel photon as
/// control) and reads the ancillas out in the computational basis once the checking
/// announcements are over.
struct EntangleMeasure {
    bool operator==(const EntangleMeasure &) const = default;
};

using AttackModel = std::variant<NoAttack, InterceptResend, EntangleMeasure>;

/// "none", "intercept-resend:random", "intercept-resend:z", "intercept-resend:x", "entangle-measure".
std::string attack_label(const AttackModel &attack);

/// Something Eve did to one travel photon.
struct EveRecord {
    enum class Kind { Intercept, Probe, AncillaReadout };
    Kind kind;
    int triplet;
    MeasurementBasis basis = MeasurementBasis::Computational;
    int outcome = -1;
};

/// Applies the attack to `travel`, which must be a travel qubit of `state`. Anything Eve measures or
/// couples is appended to `log`.
StateVector tap(const AttackModel &attack, const QubitId &travel, const StateVector &state, RandomStream &eve,
                std::vector<EveRecord> &log);

/// Exact probability that one checked triplet violates the coincidence rule under `attack`, with
/// the checking basis uniform over {Computational, Diagonal} and `party_count` parties sharing
/// (|0...0> + |1...1>)/sqrt2.
///
/// Computed by direct enumeration of Eve's basis choice, her outcome, the checking basis and every
/// joint outcome string; it shares no code with the statevector simulator.
double detection_oracle(const AttackModel &attack, int party_count = 3);

/// 1 - (1 - p)^k: chance that at least one of k independent checked triplets trips the check.
double session_abort_probability(double per_triplet, int checked_triplets);

}  // namespace csdc

#endif
