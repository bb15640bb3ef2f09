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

#include "qvsim/fusion.h"

#include <gtest/gtest.h>

#include "dense_oracle.h"
#include "qvsim/haar_random.h"
#include "qvsim/qv_circuit.h"

using namespace qvsim;
using namespace qvsim::testing;

namespace {

std::vector<Complex> run(std::span<const GateOp> ops, int n) {
    Statevector s = new_zero_state(n);
    for (const auto &g : ops) {
        apply_gate(s, g);
    }
    return std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end());
}

}  // namespace

TEST(fusion, merges_consecutive_gates_on_same_pair) {
    RngStream rng(1);
    GateOp a = GateOp::su4(sample_haar_su4(rng), 0, 1);
    GateOp b = GateOp::su4(sample_haar_su4(rng), 0, 1);
    std::vector<GateOp> ops{a, b};
    auto fused = fuse_gates(ops);
    ASSERT_EQ(fused.size(), 1u);
    ASSERT_EQ(fused[0].kind(), GateKind::GENERIC2Q);
    Matrix4 expected = multiply(b.matrix4(), a.matrix4());
    for (int i = 0; i < 16; i++) {
        ASSERT_LT(std::abs(fused[0].matrix4()[i] - expected[i]), 1e-15);
    }
}

TEST(fusion, merges_reversed_target_order) {
    RngStream rng(2);
    std::vector<GateOp> ops{
        GateOp::su4(sample_haar_su4(rng), 1, 3),
        GateOp::su4(sample_haar_su4(rng), 3, 1),
    };
    auto fused = fuse_gates(ops);
    ASSERT_EQ(fused.size(), 1u);
    ASSERT_LT(max_abs_diff(run(fused, 4), run(ops, 4)), 1e-12);
}

TEST(fusion, blocked_by_intervening_gate) {
    RngStream rng(3);
    std::vector<GateOp> ops{
        GateOp::su4(sample_haar_su4(rng), 0, 1),
        GateOp::su4(sample_haar_su4(rng), 1, 2),
        GateOp::su4(sample_haar_su4(rng), 0, 1),
    };
    ASSERT_EQ(fuse_gates(ops).size(), 3u);

    // A gate on unrelated qubits does not block.
    std::vector<GateOp> ops2{
        GateOp::su4(sample_haar_su4(rng), 0, 1),
        GateOp::su4(sample_haar_su4(rng), 2, 3),
        GateOp::su4(sample_haar_su4(rng), 0, 1),
    };
    auto fused = fuse_gates(ops2);
    ASSERT_EQ(fused.size(), 2u);
    ASSERT_LT(max_abs_diff(run(fused, 4), run(ops2, 4)), 1e-12);
}

TEST(fusion, single_qubit_gate_blocks_pair) {
    RngStream rng(4);
    std::vector<GateOp> ops{
        GateOp::su4(sample_haar_su4(rng), 0, 1),
        GateOp::generic1q(pauli_matrix(1), 0),
        GateOp::su4(sample_haar_su4(rng), 0, 1),
    };
    auto fused = fuse_gates(ops);
    ASSERT_EQ(fused.size(), 3u);
}

TEST(fusion, empty_input) {
    std::vector<GateOp> none;
    ASSERT_TRUE(fuse_gates(none).empty());
    auto d = defer_swaps(none, 3);
    ASSERT_TRUE(d.empty());
}

TEST(fusion, defer_swaps_preserves_state) {
    RngStream rng(5);
    for (int n = 2; n <= 6; n++) {
        for (int c = 0; c < 10; c++) {
            std::vector<GateOp> ops;
            for (int k = 0; k < 4 * n; k++) {
                int a = static_cast<int>(rng.uniform_below(n));
                int b = static_cast<int>(rng.uniform_below(n - 1));
                b += b >= a;
                if (rng.uniform() < 0.5) {
                    ops.push_back(GateOp::swap(a, b));
                } else {
                    ops.push_back(GateOp::su4(sample_haar_su4(rng), a, b));
                }
            }
            auto deferred = defer_swaps(ops, n);
            int swaps = 0;
            for (const auto &g : deferred) {
                swaps += g.kind() == GateKind::SWAP;
            }
            ASSERT_LE(swaps, n - 1);
            ASSERT_LT(max_abs_diff(run(deferred, n), oracle_run(ops, n)), 1e-10);
        }
    }
}

TEST(fusion, qv_circuits_unchanged_by_fusion) {
    for (int n = 2; n <= 8; n++) {
        for (std::uint64_t t = 0; t < 5; t++) {
            QvCircuit c = generate_qv_circuit(n, 99, t);
            EngineConfig plain;
            EngineConfig fused;
            fused.fusion = true;
            auto a = execute(c, plain);
            auto b = execute(c, fused);
            ASSERT_LT(max_abs_diff(a.final_state.amplitudes(), b.final_state.amplitudes()), 1e-10);
            auto pa = probabilities(a.final_state);
            auto pb = probabilities(b.final_state);
            ASSERT_LT(max_abs_diff(pa, pb), 1e-12);
        }
    }
}
