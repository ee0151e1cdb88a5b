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

#ifndef CSDC_STATE_VECTOR_H
#define CSDC_STATE_VECTOR_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "csdc/qubit.h"

namespace csdc {

using Amplitude = std::complex<double>;

/// Equality tolerance for amplitudes and norms.
inline constexpr double kTolerance = 1e-12;

/// Dense amplitude vector over an ordered register of labeled qubits.
///
/// Qubit 0 of the register is the most significant bit of the amplitude index, so the amplitude
/// of |b0 b1 ... b(n-1)> sits at index b0*2^(n-1) + ... + b(n-1). Every constructed state has unit
/// L2 norm. A register with zero qubits holds a single scalar amplitude.
class StateVector {
   public:
    /// Validates that the register is duplicate free and the vector has length 2^n, then rescales
    /// to unit norm. Throws std::invalid_argument on length mismatch, duplicates or a zero vector.
    StateVector(std::vector<QubitId> qubits, std::vector<Amplitude> amplitudes);

    /// The computational basis state |index> over the given register.
    static StateVector basis(std::vector<QubitId> qubits, size_t index);

    size_t qubit_count() const {
        return qubits_.size();
    }
    size_t dimension() const {
        return amplitudes_.size();
    }
    const std::vector<QubitId> &qubits() const {
        return qubits_;
    }
    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }
    Amplitude amplitude(size_t index) const {
        return amplitudes_[index];
    }

    bool contains(const QubitId &qubit) const;
    /// Register position of a qubit. Throws std::invalid_argument if absent.
    size_t position(const QubitId &qubit) const;
    /// Bit mask selecting the given register position inside an amplitude index.
    size_t mask(size_t position) const {
        return size_t{1} << (qubits_.size() - 1 - position);
    }

    double norm() const;

   private:
    std::vector<QubitId> qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// Same as the StateVector constructor; kept as a free function for symmetry with the other
/// constructors.
StateVector make_state(std::vector<QubitId> qubits, std::vector<Amplitude> amplitudes);

/// Kronecker product. Registers must be disjoint; the result register is a's qubits then b's.
StateVector tensor(const StateVector &a, const StateVector &b);

/// <a|b>. Both registers must list the same qubits in the same order.
Amplitude inner_product(const StateVector &a, const StateVector &b);

/// The same state with its register permuted into `order`, which must be a permutation of the
/// current register.
StateVector reorder(const StateVector &state, std::span<const QubitId> order);

/// Max |a_i - b_i| after reordering b onto a's register.
double max_residual(const StateVector &a, const StateVector &b);

/// max over i of |a_i - b_i| treating the two as equal up to a global phase.
double max_residual_up_to_phase(const StateVector &a, const StateVector &b);

}  // namespace csdc

#endif
