// Copyright 2026 The qvsim Authors
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

#ifndef QVSIM_STATEVECTOR_H
#define QVSIM_STATEVECTOR_H

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qvsim/gate.h"

namespace qvsim {

/// Raised when a register would not fit in the configured memory budget.
struct CapacityError : std::runtime_error {
    CapacityError(int num_qubits, std::uint64_t required_bytes, std::uint64_t budget_bytes);

    int num_qubits;
    std::uint64_t required_bytes;
    std::uint64_t budget_bytes;
};

/// Bytes needed to hold 2^n complex doubles.
std::uint64_t statevector_bytes(int num_qubits);
/// 90% of the memory the OS reports as available.
std::uint64_t default_memory_budget();

/// Dense n-qubit register. Qubit k is bit k of an amplitude index.
class Statevector {
   public:
    /// Copies amplitudes verbatim; the length must be a power of two >= 2.
    static Statevector from_amplitudes(std::span<const Complex> amplitudes);

    int num_qubits() const {
        return num_qubits_;
    }
    std::uint64_t size() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    std::span<Complex> amplitudes() {
        return amplitudes_;
    }
    const Complex &operator[](std::uint64_t index) const {
        return amplitudes_[index];
    }

   private:
    friend Statevector new_zero_state(int num_qubits, std::uint64_t memory_budget_bytes);
    Statevector(int num_qubits, std::vector<Complex> amplitudes);

    int num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// |0...0> on `num_qubits` qubits. Throws CapacityError before allocating when
/// 16 * 2^n bytes exceeds the budget.
Statevector new_zero_state(int num_qubits, std::uint64_t memory_budget_bytes = default_memory_budget());

/// Applies a gate in place. `threads` > 1 splits the amplitude groups across an
/// OpenMP team.
void apply_gate(Statevector &state, const GateOp &gate, int threads = 1);

/// Exchanges amplitudes whose bits q0 and q1 differ. No matrix multiply.
void apply_swap(Statevector &state, int q0, int q1, int threads = 1);

/// |a_i|^2 for each index.
std::vector<double> probabilities(const Statevector &state, int threads = 1);

double norm_squared(const Statevector &state);

}  // namespace qvsim

#endif
