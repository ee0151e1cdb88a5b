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

#include "csdc/state_vector.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace csdc {

namespace {

void require_distinct(const std::vector<QubitId> &qubits) {
    std::set<QubitId> seen(qubits.begin(), qubits.end());
    if (seen.size() != qubits.size()) {
        throw std::invalid_argument("register contains a duplicate qubit");
    }
}

}  // namespace

StateVector::StateVector(std::vector<QubitId> qubits, std::vector<Amplitude> amplitudes)
    : qubits_(std::move(qubits)), amplitudes_(std::move(amplitudes)) {
    if (qubits_.size() >= 8 * sizeof(size_t) - 1 || amplitudes_.size() != (size_t{1} << qubits_.size())) {
        throw std::invalid_argument(
            "amplitude vector length " + std::to_string(amplitudes_.size()) + " does not match 2^" +
            std::to_string(qubits_.size()));
    }
    require_distinct(qubits_);
    double n = norm();
    if (!(n > 0) || !std::isfinite(n)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite amplitude vector");
    }
    if (n != 1) {
        for (auto &a : amplitudes_) {
            a /= n;
        }
    }
}

StateVector StateVector::basis(std::vector<QubitId> qubits, size_t index) {
    std::vector<Amplitude> amps(size_t{1} << qubits.size());
    if (index >= amps.size()) {
        throw std::invalid_argument("basis index out of range");
    }
    amps[index] = 1;
    return StateVector(std::move(qubits), std::move(amps));
}

bool StateVector::contains(const QubitId &qubit) const {
    return std::find(qubits_.begin(), qubits_.end(), qubit) != qubits_.end();
}

size_t StateVector::position(const QubitId &qubit) const {
    auto it = std::find(qubits_.begin(), qubits_.end(), qubit);
    if (it == qubits_.end()) {
        throw std::invalid_argument("qubit " + qubit.label() + " is not in the register");
    }
    return static_cast<size_t>(it - qubits_.begin());
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

StateVector make_state(std::vector<QubitId> qubits, std::vector<Amplitude> amplitudes) {
    return StateVector(std::move(qubits), std::move(amplitudes));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    for (const auto &q : b.qubits()) {
        if (a.contains(q)) {
            throw std::invalid_argument("tensor: qubit " + q.label() + " appears in both registers");
        }
    }
    std::vector<QubitId> qubits = a.qubits();
    qubits.insert(qubits.end(), b.qubits().begin(), b.qubits().end());
    std::vector<Amplitude> amps;
    amps.reserve(a.dimension() * b.dimension());
    for (const auto &x : a.amplitudes()) {
        for (const auto &y : b.amplitudes()) {
            amps.push_back(x * y);
        }
    }
    return StateVector(std::move(qubits), std::move(amps));
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    if (a.qubits() != b.qubits()) {
        throw std::invalid_argument("inner_product: registers differ");
    }
    Amplitude total = 0;
    for (size_t i = 0; i < a.dimension(); i++) {
        total += std::conj(a.amplitude(i)) * b.amplitude(i);
    }
    return total;
}

StateVector reorder(const StateVector &state, std::span<const QubitId> order) {
    if (order.size() != state.qubit_count()) {
        throw std::invalid_argument("reorder: target order has the wrong number of qubits");
    }
    std::vector<size_t> source_mask;
    source_mask.reserve(order.size());
    for (const auto &q : order) {
        source_mask.push_back(state.mask(state.position(q)));
    }
    std::vector<QubitId> qubits(order.begin(), order.end());
    std::vector<Amplitude> amps(state.dimension());
    size_t n = order.size();
    for (size_t dst = 0; dst < amps.size(); dst++) {
        size_t src = 0;
        for (size_t k = 0; k < n; k++) {
            if (dst & (size_t{1} << (n - 1 - k))) {
                src |= source_mask[k];
            }
        }
        amps[dst] = state.amplitude(src);
    }
    return StateVector(std::move(qubits), std::move(amps));
}

double max_residual(const StateVector &a, const StateVector &b) {
    StateVector aligned = reorder(b, a.qubits());
    double worst = 0;
    for (size_t i = 0; i < a.dimension(); i++) {
        worst = std::max(worst, std::abs(a.amplitude(i) - aligned.amplitude(i)));
    }
    return worst;
}

double max_residual_up_to_phase(const StateVector &a, const StateVector &b) {
    StateVector aligned = reorder(b, a.qubits());
    Amplitude overlap = inner_product(a, aligned);
    Amplitude phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Amplitude{1};
    double worst = 0;
    for (size_t i = 0; i < a.dimension(); i++) {
        worst = std::max(worst, std::abs(a.amplitude(i) * phase - aligned.amplitude(i)));
    }
    return worst;
}

}  // namespace csdc
