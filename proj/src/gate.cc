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

#include "qvsim/gate.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace qvsim {

namespace {

void check_targets(std::span<const int> targets) {
    for (int t : targets) {
        if (t < 0) {
            throw std::invalid_argument("Gate target must be non-negative, got " + std::to_string(t) + ".");
        }
    }
    if (targets.size() == 2 && targets[0] == targets[1]) {
        throw std::invalid_argument("Two-qubit gate targets must be distinct, got " + std::to_string(targets[0]) + " twice.");
    }
}

void check_unitary(std::span<const Complex> matrix, int dim) {
    double residual = unitarity_residual(matrix, dim);
    if (!(residual < kUnitarityTolerance)) {
        throw std::invalid_argument("Gate matrix is not unitary (residual " + std::to_string(residual) + ").");
    }
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::SU4:
            return "SU4";
        case GateKind::SWAP:
            return "SWAP";
        case GateKind::PAULI2:
            return "PAULI2";
        case GateKind::GENERIC1Q:
            return "GENERIC1Q";
        case GateKind::GENERIC2Q:
            return "GENERIC2Q";
    }
    return "?";
}

GateKind parse_gate_kind(std::string_view name) {
    for (GateKind k : {GateKind::SU4, GateKind::SWAP, GateKind::PAULI2, GateKind::GENERIC1Q, GateKind::GENERIC2Q}) {
        if (gate_kind_name(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("Unknown gate kind '" + std::string(name) + "'.");
}

double unitarity_residual(std::span<const Complex> matrix, int dim) {
    double worst = 0;
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            Complex acc = 0;
            for (int k = 0; k < dim; k++) {
                acc += std::conj(matrix[k * dim + i]) * matrix[k * dim + j];
            }
            if (i == j) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

Complex determinant(std::span<const Complex> matrix, int dim) {
    std::vector<Complex> a(matrix.begin(), matrix.begin() + dim * dim);
    Complex det = 1;
    for (int col = 0; col < dim; col++) {
        int pivot = col;
        for (int r = col + 1; r < dim; r++) {
            if (std::abs(a[r * dim + col]) > std::abs(a[pivot * dim + col])) {
                pivot = r;
            }
        }
        if (a[pivot * dim + col] == Complex(0)) {
            return 0;
        }
        if (pivot != col) {
            for (int c = 0; c < dim; c++) {
                std::swap(a[pivot * dim + c], a[col * dim + c]);
            }
            det = -det;
        }
        Complex p = a[col * dim + col];
        det *= p;
        for (int r = col + 1; r < dim; r++) {
            Complex f = a[r * dim + col] / p;
            for (int c = col; c < dim; c++) {
                a[r * dim + c] -= f * a[col * dim + c];
            }
        }
    }
    return det;
}

Matrix4 multiply(const Matrix4 &a, const Matrix4 &b) {
    Matrix4 out{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            Complex acc = 0;
            for (int k = 0; k < 4; k++) {
                acc += a[i * 4 + k] * b[k * 4 + j];
            }
            out[i * 4 + j] = acc;
        }
    }
    return out;
}

Matrix4 exchange_local_qubits(const Matrix4 &m) {
    // Local index 1 (|b1=0,b0=1>) and 2 trade places under the relabeling.
    constexpr std::array<int, 4> perm{0, 2, 1, 3};
    Matrix4 out{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            out[perm[i] * 4 + perm[j]] = m[i * 4 + j];
        }
    }
    return out;
}

Matrix4 identity4() {
    Matrix4 m{};
    for (int i = 0; i < 4; i++) {
        m[i * 4 + i] = 1;
    }
    return m;
}

Matrix4 swap_matrix() {
    Matrix4 m{};
    m[0 * 4 + 0] = 1;
    m[1 * 4 + 2] = 1;
    m[2 * 4 + 1] = 1;
    m[3 * 4 + 3] = 1;
    return m;
}

Matrix2 pauli_matrix(int which) {
    const Complex i(0, 1);
    switch (which) {
        case 0:
            return {1, 0, 0, 1};
        case 1:
            return {0, 1, 1, 0};
        case 2:
            return {0, -i, i, 0};
        case 3:
            return {1, 0, 0, -1};
    }
    throw std::invalid_argument("Pauli index must be in [0, 3], got " + std::to_string(which) + ".");
}

Matrix4 kron(const Matrix2 &high, const Matrix2 &low) {
    Matrix4 out{};
    for (int hr = 0; hr < 2; hr++) {
        for (int hc = 0; hc < 2; hc++) {
            for (int lr = 0; lr < 2; lr++) {
                for (int lc = 0; lc < 2; lc++) {
                    out[(hr * 2 + lr) * 4 + (hc * 2 + lc)] = high[hr * 2 + hc] * low[lr * 2 + lc];
                }
            }
        }
    }
    return out;
}

GateOp GateOp::su4(const Matrix4 &matrix, int q0, int q1) {
    std::array<int, 2> t{q0, q1};
    return from_parts(GateKind::SU4, t, matrix);
}

GateOp GateOp::swap(int q0, int q1) {
    std::array<int, 2> t{q0, q1};
    return from_parts(GateKind::SWAP, t, swap_matrix());
}

GateOp GateOp::pauli2(int code, int q0, int q1) {
    if (code < 1 || code > 15) {
        throw std::invalid_argument("Two-qubit Pauli code must be in [1, 15], got " + std::to_string(code) + ".");
    }
    std::array<int, 2> t{q0, q1};
    return from_parts(GateKind::PAULI2, t, kron(pauli_matrix(code >> 2), pauli_matrix(code & 3)));
}

GateOp GateOp::generic1q(const Matrix2 &matrix, int q) {
    std::array<int, 1> t{q};
    return from_parts(GateKind::GENERIC1Q, t, matrix);
}

GateOp GateOp::generic2q(const Matrix4 &matrix, int q0, int q1) {
    std::array<int, 2> t{q0, q1};
    return from_parts(GateKind::GENERIC2Q, t, matrix);
}

GateOp GateOp::from_parts(GateKind kind, std::span<const int> targets, std::span<const Complex> matrix) {
    size_t arity = kind == GateKind::GENERIC1Q ? 1 : 2;
    if (targets.size() != arity) {
        throw std::invalid_argument(
            std::string(gate_kind_name(kind)) + " gate needs " + std::to_string(arity) + " targets, got " +
            std::to_string(targets.size()) + ".");
    }
    int dim = arity == 1 ? 2 : 4;
    if (matrix.size() != static_cast<size_t>(dim * dim)) {
        throw std::invalid_argument(
            std::string(gate_kind_name(kind)) + " gate needs a " + std::to_string(dim) + "x" + std::to_string(dim) +
            " matrix, got " + std::to_string(matrix.size()) + " entries.");
    }
    check_targets(targets);
    check_unitary(matrix, dim);
    if (kind == GateKind::SU4) {
        Complex det = determinant(matrix, 4);
        if (!(std::abs(det - 1.0) < kDeterminantTolerance)) {
            throw std::invalid_argument("SU4 gate matrix must have determinant 1.");
        }
    }
    if (kind == GateKind::SWAP && !std::equal(matrix.begin(), matrix.end(), swap_matrix().begin())) {
        throw std::invalid_argument("SWAP gate carries a matrix other than the SWAP matrix.");
    }

    GateOp g;
    g.kind_ = kind;
    g.arity_ = static_cast<int>(arity);
    std::copy(targets.begin(), targets.end(), g.targets_.begin());
    std::copy(matrix.begin(), matrix.end(), g.matrix_.begin());
    return g;
}

int GateOp::min_register_width() const {
    int m = targets_[0];
    if (arity_ == 2) {
        m = std::max(m, targets_[1]);
    }
    return m + 1;
}

}  // namespace qvsim
