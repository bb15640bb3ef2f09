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

#include "qvsim/qv_circuit.h"

#include <numeric>
#include <string>

#include "qvsim/fusion.h"

namespace qvsim {

QvCircuit generate_qv_circuit(int width, std::uint64_t master_seed, std::uint64_t trial_index, PermutationMode mode) {
    if (width < 2) {
        throw std::invalid_argument("QV circuits need width >= 2, got " + std::to_string(width) + ".");
    }
    RngStream rng(derive_seed(master_seed, static_cast<std::uint64_t>(width), trial_index));

    QvCircuit c;
    c.width = width;
    c.master_seed = master_seed;
    c.trial_index = trial_index;
    c.permutation_mode = mode;
    c.layers.reserve(width);

    // physical[p] is the register wire currently holding logical position p.
    std::vector<int> physical(width);
    std::iota(physical.begin(), physical.end(), 0);

    for (int layer = 0; layer < width; layer++) {
        QvLayer l{sample_permutation(rng, width), {}, {}};
        if (mode == PermutationMode::SwapGates) {
            l.swaps = permutation_to_swaps(l.permutation);
            for (auto [a, b] : l.swaps) {
                c.flattened_ops.push_back(GateOp::swap(a, b));
            }
        } else {
            std::vector<int> next(width);
            for (int i = 0; i < width; i++) {
                next[l.permutation[i]] = physical[i];
            }
            physical = std::move(next);
        }
        for (int j = 0; j + 1 < width; j += 2) {
            Matrix4 u = sample_haar_su4(rng);
            GateOp g = GateOp::su4(u, physical[j], physical[j + 1]);
            l.su4_gates.push_back(g);
            c.flattened_ops.push_back(g);
        }
        c.layers.push_back(std::move(l));
    }
    return c;
}

GateCounts count_gates(const QvCircuit &circuit) {
    GateCounts counts;
    std::uint64_t swap_ops = 0;
    for (const GateOp &g : circuit.flattened_ops) {
        switch (g.kind()) {
            case GateKind::SU4:
                counts.su4++;
                break;
            case GateKind::SWAP:
                swap_ops++;
                break;
            case GateKind::PAULI2:
                counts.pauli++;
                break;
            default:
                break;
        }
    }
    if (circuit.permutation_mode == PermutationMode::SwapGates) {
        std::uint64_t stored = 0;
        for (const QvLayer &l : circuit.layers) {
            std::uint64_t expected = static_cast<std::uint64_t>(l.permutation.size() - l.permutation.cycle_count());
            if (l.swaps.size() != expected) {
                throw std::logic_error("Layer swap list does not match its permutation's cycle structure.");
            }
            counts.swap += expected;
            stored += l.swaps.size();
        }
        if (stored != swap_ops) {
            throw std::logic_error("Circuit op list carries a different number of SWAPs than its layers.");
        }
    } else {
        counts.swap = swap_ops;
    }
    counts.total = circuit.flattened_ops.size();
    return counts;
}

ExecutionResult execute(const QvCircuit &circuit, const EngineConfig &config) {
    Statevector state = new_zero_state(circuit.width, config.memory_budget_bytes);
    const int threads = std::max(1, config.threads);
    ExecutionTrace trace;

    auto start = std::chrono::steady_clock::now();
    std::vector<GateOp> fused;
    std::span<const GateOp> ops = circuit.flattened_ops;
    if (config.fusion) {
        fused = fuse_gates(defer_swaps(ops, circuit.width));
        ops = fused;
    }
    for (const GateOp &g : ops) {
        if (config.deadline && std::chrono::steady_clock::now() >= *config.deadline) {
            throw TimeLimitExceeded(
                "Time limit reached while executing a width-" + std::to_string(circuit.width) + " circuit.");
        }
        apply_gate(state, g, threads);
        switch (g.kind()) {
            case GateKind::SU4:
                trace.su4++;
                break;
            case GateKind::SWAP:
                trace.swap++;
                break;
            case GateKind::PAULI2:
                trace.pauli++;
                break;
            case GateKind::GENERIC1Q:
                trace.generic1q++;
                break;
            case GateKind::GENERIC2Q:
                trace.generic2q++;
                break;
        }
    }
    auto stop = std::chrono::steady_clock::now();
    double elapsed = std::chrono::duration<double>(stop - start).count();
    return ExecutionResult{std::move(state), elapsed, trace};
}

QvCircuit inject_pauli_noise(const QvCircuit &circuit, const NoiseConfig &noise, RngStream &rng) {
    const double p = noise.two_qubit_depolarizing_p;
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("Noise probability must lie in [0, 1].");
    }
    QvCircuit out = circuit;
    out.flattened_ops.clear();
    out.flattened_ops.reserve(circuit.flattened_ops.size());
    for (const GateOp &g : circuit.flattened_ops) {
        out.flattened_ops.push_back(g);
        if (g.kind() == GateKind::SU4 && rng.uniform() < p) {
            int code = 1 + static_cast<int>(rng.uniform_below(15));
            auto t = g.targets();
            out.flattened_ops.push_back(GateOp::pauli2(code, t[0], t[1]));
        }
    }
    return out;
}

}  // namespace qvsim
