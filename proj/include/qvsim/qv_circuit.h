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

#ifndef QVSIM_QV_CIRCUIT_H
#define QVSIM_QV_CIRCUIT_H

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qvsim/gate.h"
#include "qvsim/haar_random.h"
#include "qvsim/statevector.h"

namespace qvsim {

/// How a layer's qubit permutation is realized.
enum class PermutationMode {
    /// Explicit SWAP gates on the register.
    SwapGates,
    /// Track a logical-to-physical layout and retarget the SU4 gates instead.
    /// Costs no gates; the final state equals the SwapGates state up to a
    /// relabeling of qubits, so the probability multiset (and HOP) is the same.
    Relabel,
};

/// One permutation followed by floor(n/2) SU4 gates on post-permutation
/// positions (2j, 2j+1).
struct QvLayer {
    QubitPermutation permutation;
    std::vector<Transposition> swaps;
    std::vector<GateOp> su4_gates;
};

struct QvCircuit {
    int width = 0;
    std::uint64_t master_seed = 0;
    std::uint64_t trial_index = 0;
    PermutationMode permutation_mode = PermutationMode::SwapGates;
    std::vector<QvLayer> layers;
    /// What the executor runs: per layer the swaps, then the SU4 gates (each
    /// optionally followed by a noise Pauli).
    std::vector<GateOp> flattened_ops;
};

struct NoiseConfig {
    /// Probability that a random non-identity two-qubit Pauli follows an SU4 gate.
    double two_qubit_depolarizing_p = 0;
};

struct GateCounts {
    std::uint64_t su4 = 0;
    std::uint64_t swap = 0;
    std::uint64_t pauli = 0;
    std::uint64_t total = 0;

    bool operator==(const GateCounts &) const = default;
};

/// Ops applied by one execute() call, by kind.
struct ExecutionTrace {
    std::uint64_t su4 = 0;
    std::uint64_t swap = 0;
    std::uint64_t pauli = 0;
    std::uint64_t generic1q = 0;
    std::uint64_t generic2q = 0;

    std::uint64_t total() const {
        return su4 + swap + pauli + generic1q + generic2q;
    }
};

struct EngineConfig {
    int threads = 1;
    /// Run defer_swaps and then fuse_gates over the op list before applying it.
    bool fusion = false;
    std::uint64_t memory_budget_bytes = default_memory_budget();
    /// Execution is abandoned with TimeLimitExceeded once this passes. Checked between gates.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct ExecutionResult {
    Statevector final_state;
    /// Wall time of fusion (when enabled) plus gate application.
    double elapsed_seconds;
    ExecutionTrace trace;
};

struct TimeLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// QV model circuit of the given width with width layers, drawn from the
/// stream derive_seed(master_seed, width, trial_index). Throws
/// std::invalid_argument for width < 2.
QvCircuit generate_qv_circuit(
    int width,
    std::uint64_t master_seed,
    std::uint64_t trial_index,
    PermutationMode mode = PermutationMode::SwapGates);

/// su4 and pauli are tallied from flattened_ops. In SwapGates mode the swap
/// count is recomputed from each layer's permutation as n - cycles and must
/// agree with the stored swap lists and ops (std::logic_error otherwise).
GateCounts count_gates(const QvCircuit &circuit);

/// Applies flattened_ops to |0...0>. Circuit construction is not timed; the
/// clock starts right before fusion and stops after the last gate.
ExecutionResult execute(const QvCircuit &circuit, const EngineConfig &config = {});

/// Copy of `circuit` where every SU4 op is followed, with probability p, by a
/// uniformly chosen non-identity Pauli on the same targets.
QvCircuit inject_pauli_noise(const QvCircuit &circuit, const NoiseConfig &noise, RngStream &rng);

}  // namespace qvsim

#endif
