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

#ifndef CSDC_TEST_UTIL_H
#define CSDC_TEST_UTIL_H

#include <cmath>
#include <vector>

#include "csdc/random.h"
#include "csdc/state_vector.h"

namespace csdc::testing_util {

/// Register h1, t1, c1.1, h2, ... truncated to n qubits.
inline std::vector<QubitId> register_of(size_t n) {
    std::vector<QubitId> qubits;
    for (size_t i = 0; i < n; i++) {
        int triplet = static_cast<int>(i / 3) + 1;
        switch (i % 3) {
            case 0:
                qubits.push_back(QubitId::home(triplet));
                break;
            case 1:
                qubits.push_back(QubitId::travel(triplet));
                break;
            default:
                qubits.push_back(QubitId::control(triplet, 1));
                break;
        }
    }
    return qubits;
}

/// Haar-ish random state: independent Gaussian real and imaginary parts, normalized.
inline StateVector random_state(size_t n, RandomStream &rng) {
    std::vector<Amplitude> amps(size_t{1} << n);
    for (auto &a : amps) {
        // Box-Muller keeps the draw reproducible across standard libraries.
        double u1 = 1 - rng.uniform();
        double u2 = rng.uniform();
        double r = std::sqrt(-2 * std::log(u1));
        a = Amplitude(r * std::cos(2 * M_PI * u2), r * std::sin(2 * M_PI * u2));
    }
    return StateVector(register_of(n), std::move(amps));
}

inline double binomial_sigma(double p, double n) {
    return std::sqrt(p * (1 - p) / n);
}

}  // namespace csdc::testing_util

#endif
