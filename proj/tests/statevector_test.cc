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

#include "qvsim/statevector.h"

#include <gtest/gtest.h>

#include "dense_oracle.h"
#include "qvsim/haar_random.h"

using namespace qvsim;
using namespace qvsim::testing;

namespace {

GateOp random_gate(int n, RngStream &rng) {
    int a = static_cast<int>(rng.uniform_below(n));
    int b = static_cast<int>(rng.uniform_below(n - 1));
    if (b >= a) {
        b++;
    }
    switch (rng.uniform_below(4)) {
        case 0:
            return GateOp::swap(a, b);
        case 1: {
            // Diagonal phases times a Hadamard: a generic single-qubit unitary.
            Matrix2 m{Complex(0, 1) * std::polar(1.0, rng.uniform()), 0, 0, std::polar(1.0, -rng.uniform())};
            Matrix2 h{M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};
            Matrix2 out{};
            for (int i = 0; i < 2; i++) {
                for (int j = 0; j < 2; j++) {
                    out[i * 2 + j] = m[i * 2] * h[j] + m[i * 2 + 1] * h[2 + j];
                }
            }
            return GateOp::generic1q(out, a);
        }
        case 2:
            return GateOp::pauli2(1 + static_cast<int>(rng.uniform_below(15)), a, b);
        default:
            return GateOp::su4(sample_haar_su4(rng), a, b);
    }
}

}  // namespace

TEST(statevector, zero_state) {
    Statevector s = new_zero_state(1);
    ASSERT_EQ(s.size(), 2u);
    ASSERT_EQ(s[0], Complex(1));
    ASSERT_EQ(s[1], Complex(0));

    Statevector s3 = new_zero_state(3);
    ASSERT_EQ(s3.size(), 8u);
    ASSERT_EQ(s3[0], Complex(1));
    for (int i = 1; i < 8; i++) {
        ASSERT_EQ(s3[i], Complex(0));
    }
    ASSERT_THROW(new_zero_state(0), std::invalid_argument);
}

TEST(statevector, capacity_error_before_allocating) {
    ASSERT_EQ(statevector_bytes(10), 16384u);
    try {
        new_zero_state(10, 16383);
        FAIL();
    } catch (const CapacityError &e) {
        ASSERT_EQ(e.num_qubits, 10);
        ASSERT_EQ(e.required_bytes, 16384u);
        ASSERT_EQ(e.budget_bytes, 16383u);
    }
    ASSERT_NO_THROW(new_zero_state(10, 16384));
    // 2^40 amplitudes would be 16 TiB; must fail cleanly rather than attempt it.
    ASSERT_THROW(new_zero_state(40, 1ull << 36), CapacityError);
}

TEST(statevector, from_amplitudes_validates_length) {
    std::vector<Complex> three(3);
    ASSERT_THROW(Statevector::from_amplitudes(three), std::invalid_argument);
    std::vector<Complex> one(1);
    ASSERT_THROW(Statevector::from_amplitudes(one), std::invalid_argument);
    std::vector<Complex> four{1, 0, 0, 0};
    ASSERT_EQ(Statevector::from_amplitudes(four).num_qubits(), 2);
}

TEST(statevector, hadamard) {
    Statevector s = new_zero_state(1);
    Matrix2 h{M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};
    apply_gate(s, GateOp::generic1q(h, 0));
    ASSERT_NEAR(s[0].real(), M_SQRT1_2, 1e-15);
    ASSERT_NEAR(s[1].real(), M_SQRT1_2, 1e-15);
    auto p = probabilities(s);
    ASSERT_NEAR(p[0], 0.5, 1e-15);
    ASSERT_NEAR(p[1], 0.5, 1e-15);
}

TEST(statevector, swap_moves_excitation) {
    // |q1=0, q0=1> has index 1; after SWAP(0,1) it is |q1=1, q0=0>, index 2.
    std::vector<Complex> amps{0, 1, 0, 0};
    Statevector s = Statevector::from_amplitudes(amps);
    apply_gate(s, GateOp::swap(0, 1));
    ASSERT_EQ(s[2], Complex(1));
    ASSERT_EQ(s[1], Complex(0));
}

TEST(statevector, probabilities_basis_state) {
    std::vector<Complex> amps(8);
    amps[5] = Complex(0, 1);
    auto p = probabilities(Statevector::from_amplitudes(amps));
    for (int i = 0; i < 8; i++) {
        ASSERT_EQ(p[i], i == 5 ? 1.0 : 0.0);
    }
}

TEST(statevector, targets_out_of_range) {
    Statevector s = new_zero_state(3);
    ASSERT_THROW(apply_gate(s, GateOp::swap(0, 3)), std::out_of_range);
    ASSERT_THROW(apply_gate(s, GateOp::su4(identity4(), 5, 1)), std::out_of_range);
    ASSERT_THROW(apply_swap(s, 0, 7), std::out_of_range);
}

TEST(statevector, su4_on_non_adjacent_targets_matches_oracle) {
    RngStream rng(5);
    auto init = random_state(4, rng);
    GateOp g = GateOp::su4(sample_haar_su4(rng), 0, 2);
    Statevector s = Statevector::from_amplitudes(init);
    apply_gate(s, g);
    std::vector<GateOp> ops{g};
    ASSERT_LT(max_abs_diff(s.amplitudes(), oracle_run(ops, 4, init)), 1e-12);
}

TEST(statevector, target_order_matters_and_is_honored) {
    RngStream rng(6);
    Matrix4 u = sample_haar_su4(rng);
    for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{3, 1}, std::pair{2, 4}, std::pair{4, 0}}) {
        auto init = random_state(5, rng);
        GateOp g = GateOp::su4(u, a, b);
        Statevector s = Statevector::from_amplitudes(init);
        apply_gate(s, g);
        std::vector<GateOp> ops{g};
        ASSERT_LT(max_abs_diff(s.amplitudes(), oracle_run(ops, 5, init)), 1e-12) << a << "," << b;
    }
}

TEST(statevector, random_circuits_match_dense_oracle) {
    RngStream rng(7);
    for (int n = 2; n <= 6; n++) {
        for (int c = 0; c < 10; c++) {
            std::vector<GateOp> ops;
            for (int k = 0; k < 3 * n; k++) {
                ops.push_back(random_gate(n, rng));
            }
            Statevector s = new_zero_state(n);
            for (const auto &g : ops) {
                apply_gate(s, g);
            }
            ASSERT_LT(max_abs_diff(s.amplitudes(), oracle_run(ops, n)), 1e-10) << "n=" << n;
        }
    }
}

TEST(statevector, norm_preserved) {
    RngStream rng(8);
    for (int n : {2, 5, 9, 12}) {
        Statevector s = Statevector::from_amplitudes(random_state(n, rng));
        for (int k = 0; k < 40; k++) {
            apply_gate(s, random_gate(n, rng));
            ASSERT_NEAR(norm_squared(s), 1.0, 1e-12);
        }
    }
}

TEST(statevector, swap_equals_swap_matrix_gate) {
    RngStream rng(9);
    for (int trial = 0; trial < 30; trial++) {
        int n = 2 + static_cast<int>(rng.uniform_below(7));
        int a = static_cast<int>(rng.uniform_below(n));
        int b = static_cast<int>(rng.uniform_below(n - 1));
        b += b >= a;
        auto init = random_state(n, rng);
        Statevector s1 = Statevector::from_amplitudes(init);
        Statevector s2 = Statevector::from_amplitudes(init);
        apply_swap(s1, a, b);
        apply_gate(s2, GateOp::generic2q(swap_matrix(), a, b));
        ASSERT_LT(max_abs_diff(s1.amplitudes(), s2.amplitudes()), 1e-14);
    }
}

TEST(statevector, multithreaded_matches_single_threaded) {
    RngStream rng(10);
    const int n = 16;  // enough amplitude groups to cross the parallel threshold
    auto init = random_state(n, rng);
    Statevector s1 = Statevector::from_amplitudes(init);
    Statevector s4 = Statevector::from_amplitudes(init);
    for (int k = 0; k < 20; k++) {
        GateOp g = random_gate(n, rng);
        apply_gate(s1, g, 1);
        apply_gate(s4, g, 4);
    }
    ASSERT_EQ(max_abs_diff(s1.amplitudes(), s4.amplitudes()), 0.0);
    auto p1 = probabilities(s1, 1);
    auto p4 = probabilities(s4, 4);
    ASSERT_EQ(p1, p4);
}
