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

#include "csdc/attack.h"

#include <cmath>
#include <stdexcept>

#include "csdc/gate.h"

namespace csdc {

std::string attack_label(const AttackModel &attack) {
    struct Visitor {
        std::string operator()(const NoAttack &) const {
            return "none";
        }
        std::string operator()(const InterceptResend &a) const {
            switch (a.basis_strategy) {
                case InterceptBasis::RandomZX:
                    return "intercept-resend:random";
                case InterceptBasis::AlwaysZ:
                    return "intercept-resend:z";
                case InterceptBasis::AlwaysX:
                    return "intercept-resend:x";
            }
            return "intercept-resend:?";
        }
        std::string operator()(const EntangleMeasure &) const {
            return "entangle-measure";
        }
    };
    return std::visit(Visitor{}, attack);
}

StateVector tap(const AttackModel &attack, const QubitId &travel, const StateVector &state, RandomStream &eve,
                std::vector<EveRecord> &log) {
    if (travel.role != Role::Travel) {
        throw std::invalid_argument("tap: " + travel.label() + " is not a travel qubit");
    }
    if (std::holds_alternative<NoAttack>(attack)) {
        return state;
    }
    if (const auto *ir = std::get_if<InterceptResend>(&attack)) {
        MeasurementBasis basis = MeasurementBasis::Computational;
        switch (ir->basis_strategy) {
            case InterceptBasis::RandomZX:
                basis = eve.coin() ? MeasurementBasis::Diagonal : MeasurementBasis::Computational;
                break;
            case InterceptBasis::AlwaysZ:
                basis = MeasurementBasis::Computational;
                break;
            case InterceptBasis::AlwaysX:
                basis = MeasurementBasis::Diagonal;
                break;
        }
        QubitMeasurement m = measure_qubit(state, travel, basis, eve);
        log.push_back({EveRecord::Kind::Intercept, travel.triplet, basis, m.outcome});
        auto v = basis_vector(basis, m.outcome);
        StateVector resent({travel}, {v.begin(), v.end()});
        return reorder(tensor(m.post_state, resent), state.qubits());
    }
    QubitId ancilla = QubitId::ancilla(travel.triplet);
    StateVector with_ancilla = tensor(state, StateVector::basis({ancilla}, 0));
    log.push_back({EveRecord::Kind::Probe, travel.triplet, MeasurementBasis::Computational, -1});
    return apply_cnot(with_ancilla, travel, ancilla);
}

namespace {

using Vec = std::vector<Amplitude>;

// <bit|outcome> for the two checking bases, laid out [basis][outcome][bit].
const double kR = 1 / std::sqrt(2.0);
const Amplitude kBasis[2][2][2] = {
    {{1, 0}, {0, 1}},
    {{kR, kR}, {kR, -kR}},
};

struct Branch {
    double weight;
    Vec amplitudes;    // over parties (bit p set = party p reads 1, party 0 highest), ancilla lowest
    bool has_ancilla;  // true when the last index bit belongs to Eve's ancilla
};

size_t party_bit(int parties, int party) {
    return size_t{1} << (parties - 1 - party);
}

// Probability that a branch violates the coincidence rule in basis b.
double violation_probability(const Branch &branch, int parties, int b) {
    const size_t outcomes = size_t{1} << parties;
    const size_t ancilla_states = branch.has_ancilla ? 2 : 1;
    double total = 0;
    for (size_t s = 0; s < outcomes; s++) {
        int ones = __builtin_popcountll(s);
        bool violates = b == 0 ? (ones != 0 && ones != parties) : (ones % 2 == 1);
        if (!violates) {
            continue;
        }
        for (size_t a = 0; a < ancilla_states; a++) {
            Amplitude amp = 0;
            for (size_t x = 0; x < outcomes; x++) {
                Amplitude overlap = 1;
                for (int p = 0; p < parties; p++) {
                    int xs = (x & party_bit(parties, p)) ? 1 : 0;
                    int ss = (s & party_bit(parties, p)) ? 1 : 0;
                    overlap *= std::conj(kBasis[b][ss][xs]);
                }
                size_t index = branch.has_ancilla ? ((x << 1) | a) : x;
                amp += overlap * branch.amplitudes[index];
            }
            total += std::norm(amp);
        }
    }
    return branch.weight * total;
}

}  // namespace

double detection_oracle(const AttackModel &attack, int party_count) {
    if (party_count < 3) {
        throw std::invalid_argument("detection_oracle needs at least three parties");
    }
    const int parties = party_count;
    const size_t dim = size_t{1} << parties;
    const int travel = 1;
    const size_t tbit = party_bit(parties, travel);

    Vec ghz(dim, 0);
    ghz.front() = kR;
    ghz.back() = kR;

    std::vector<Branch> branches;
    if (std::holds_alternative<NoAttack>(attack)) {
        branches.push_back({1, ghz, false});
    } else if (const auto *ir = std::get_if<InterceptResend>(&attack)) {
        double weight_z = 0.5;
        if (ir->basis_strategy == InterceptBasis::AlwaysZ) {
            weight_z = 1;
        } else if (ir->basis_strategy == InterceptBasis::AlwaysX) {
            weight_z = 0;
        }
        for (int eb = 0; eb < 2; eb++) {
            double w = eb == 0 ? weight_z : 1 - weight_z;
            if (w == 0) {
                continue;
            }
            for (int e = 0; e < 2; e++) {
                // Project the travel photon onto Eve's outcome and re-emit that eigenstate. The
                // branch vector is left unnormalized so its squared norm carries the probability.
                Vec phi(dim, 0);
                for (size_t x = 0; x < dim; x++) {
                    size_t rest = x & ~tbit;
                    int xt = (x & tbit) ? 1 : 0;
                    Amplitude projected = std::conj(kBasis[eb][e][0]) * ghz[rest] +
                                          std::conj(kBasis[eb][e][1]) * ghz[rest | tbit];
                    phi[x] = kBasis[eb][e][xt] * projected;
                }
                branches.push_back({w, std::move(phi), false});
            }
        }
    } else {
        Vec phi(dim * 2, 0);
        for (size_t x = 0; x < dim; x++) {
            size_t a = (x & tbit) ? 1 : 0;
            phi[(x << 1) | a] = ghz[x];
        }
        branches.push_back({1, std::move(phi), true});
    }

    double p = 0;
    for (const auto &branch : branches) {
        for (int b = 0; b < 2; b++) {
            p += 0.5 * violation_probability(branch, parties, b);
        }
    }
    return p;
}

double session_abort_probability(double per_triplet, int checked_triplets) {
    return 1 - std::pow(1 - per_triplet, checked_triplets);
}

}  // namespace csdc
