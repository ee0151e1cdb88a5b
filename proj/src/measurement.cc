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

#include "csdc/measurement.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "csdc/errors.h"

namespace csdc {

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

// Contracts the qubits at `positions` against conj(coefficients), where coefficients is indexed by
// the bits of those qubits in the listed order. Returns the unnormalized remainder amplitudes and
// the surviving register.
std::pair<std::vector<QubitId>, std::vector<Amplitude>> contract(
    const StateVector &state, std::span<const size_t> positions, std::span<const Amplitude> coefficients) {
    size_t n = state.qubit_count();
    size_t k = positions.size();
    std::vector<bool> removed(n, false);
    for (size_t p : positions) {
        removed[p] = true;
    }
    std::vector<QubitId> rest;
    std::vector<size_t> rest_masks;
    for (size_t i = 0; i < n; i++) {
        if (!removed[i]) {
            rest.push_back(state.qubits()[i]);
            rest_masks.push_back(state.mask(i));
        }
    }
    std::vector<size_t> pick_masks;
    for (size_t p : positions) {
        pick_masks.push_back(state.mask(p));
    }

    std::vector<Amplitude> out(size_t{1} << rest.size());
    for (size_t r = 0; r < out.size(); r++) {
        size_t base = 0;
        for (size_t j = 0; j < rest.size(); j++) {
            if (r & (size_t{1} << (rest.size() - 1 - j))) {
                base |= rest_masks[j];
            }
        }
        Amplitude total = 0;
        for (size_t x = 0; x < coefficients.size(); x++) {
            if (coefficients[x] == Amplitude{0}) {
                continue;
            }
            size_t index = base;
            for (size_t j = 0; j < k; j++) {
                if (x & (size_t{1} << (k - 1 - j))) {
                    index |= pick_masks[j];
                }
            }
            total += std::conj(coefficients[x]) * state.amplitude(index);
        }
        out[r] = total;
    }
    return {std::move(rest), std::move(out)};
}

Projection finish(std::vector<QubitId> rest, std::vector<Amplitude> amps) {
    double p = 0;
    for (const auto &a : amps) {
        p += std::norm(a);
    }
    Projection result;
    result.probability = p;
    if (p > kZeroProbability) {
        result.post_state.emplace(std::move(rest), std::move(amps));
    } else {
        result.probability = 0;
    }
    return result;
}

template <size_t N>
size_t sample(const std::array<double, N> &probabilities, RandomStream &rng) {
    double total = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
    if (std::abs(total - 1) > 1e-9) {
        throw InternalError("measurement branch probabilities sum to " + std::to_string(total));
    }
    double u = rng.uniform() * total;
    double cumulative = 0;
    size_t last = N;
    for (size_t i = 0; i < N; i++) {
        if (probabilities[i] <= 0) {
            continue;
        }
        last = i;
        cumulative += probabilities[i];
        if (u < cumulative) {
            return i;
        }
    }
    return last;
}

}  // namespace

std::string_view to_string(BellOutcome outcome) {
    switch (outcome) {
        case BellOutcome::PsiPlus:
            return "PSI+";
        case BellOutcome::PsiMinus:
            return "PSI-";
        case BellOutcome::PhiPlus:
            return "PHI+";
        case BellOutcome::PhiMinus:
            return "PHI-";
    }
    return "?";
}

std::optional<BellOutcome> parse_bell_outcome(std::string_view text) {
    for (auto b : kAllBellOutcomes) {
        if (to_string(b) == text) {
            return b;
        }
    }
    return std::nullopt;
}

std::string_view to_string(MeasurementBasis basis) {
    return basis == MeasurementBasis::Computational ? "Z" : "X";
}

std::array<Amplitude, 2> basis_vector(MeasurementBasis basis, int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("measurement outcome must be 0 or 1");
    }
    if (basis == MeasurementBasis::Computational) {
        return outcome == 0 ? std::array<Amplitude, 2>{1, 0} : std::array<Amplitude, 2>{0, 1};
    }
    return outcome == 0 ? std::array<Amplitude, 2>{kInvSqrt2, kInvSqrt2}
                        : std::array<Amplitude, 2>{kInvSqrt2, -kInvSqrt2};
}

std::array<Amplitude, 4> bell_vector(BellOutcome outcome) {
    const double r = kInvSqrt2;
    switch (outcome) {
        case BellOutcome::PsiPlus:
            return {0, r, r, 0};
        case BellOutcome::PsiMinus:
            return {0, r, -r, 0};
        case BellOutcome::PhiPlus:
            return {r, 0, 0, r};
        case BellOutcome::PhiMinus:
            return {r, 0, 0, -r};
    }
    throw std::invalid_argument("unknown Bell outcome");
}

Projection project_qubit(const StateVector &state, const QubitId &target, MeasurementBasis basis, int outcome) {
    std::array<size_t, 1> positions{state.position(target)};
    auto coefficients = basis_vector(basis, outcome);
    auto [rest, amps] = contract(state, positions, coefficients);
    return finish(std::move(rest), std::move(amps));
}

Projection project_bell(const StateVector &state, const QubitId &first, const QubitId &second, BellOutcome outcome) {
    if (first == second) {
        throw std::invalid_argument("Bell measurement needs two distinct qubits");
    }
    std::array<size_t, 2> positions{state.position(first), state.position(second)};
    auto coefficients = bell_vector(outcome);
    auto [rest, amps] = contract(state, positions, coefficients);
    return finish(std::move(rest), std::move(amps));
}

std::array<double, 2> qubit_probabilities(const StateVector &state, const QubitId &target, MeasurementBasis basis) {
    return {project_qubit(state, target, basis, 0).probability, project_qubit(state, target, basis, 1).probability};
}

std::array<double, 4> bell_probabilities(const StateVector &state, const QubitId &first, const QubitId &second) {
    std::array<double, 4> result{};
    for (size_t i = 0; i < 4; i++) {
        result[i] = project_bell(state, first, second, kAllBellOutcomes[i]).probability;
    }
    return result;
}

QubitMeasurement measure_qubit(const StateVector &state, const QubitId &target, MeasurementBasis basis, RandomStream &rng) {
    std::array<Projection, 2> branches{
        project_qubit(state, target, basis, 0), project_qubit(state, target, basis, 1)};
    size_t k = sample(std::array<double, 2>{branches[0].probability, branches[1].probability}, rng);
    return {static_cast<int>(k), branches[k].probability, std::move(*branches[k].post_state)};
}

BellMeasurement measure_bell(const StateVector &state, const QubitId &first, const QubitId &second, RandomStream &rng) {
    std::array<Projection, 4> branches;
    std::array<double, 4> probabilities{};
    for (size_t i = 0; i < 4; i++) {
        branches[i] = project_bell(state, first, second, kAllBellOutcomes[i]);
        probabilities[i] = branches[i].probability;
    }
    size_t k = sample(probabilities, rng);
    return {kAllBellOutcomes[k], branches[k].probability, std::move(*branches[k].post_state)};
}

}  // namespace csdc
