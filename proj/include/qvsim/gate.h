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

#ifndef QVSIM_GATE_H
#define QVSIM_GATE_H

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string_view>

namespace qvsim {

using Complex = std::complex<double>;

/// Row-major 2x2 matrix.
using Matrix2 = std::array<Complex, 4>;
/// Row-major 4x4 matrix.
using Matrix4 = std::array<Complex, 16>;

enum class GateKind : std::uint8_t { SU4, SWAP, PAULI2, GENERIC1Q, GENERIC2Q };

std::string_view gate_kind_name(GateKind kind);
/// Inverse of gate_kind_name. Throws std::invalid_argument on unknown names.
GateKind parse_gate_kind(std::string_view name);

/// Tolerance on max |U^dagger U - I| accepted at construction.
inline constexpr double kUnitarityTolerance = 1e-12;
/// Tolerance on |det U - 1| accepted for SU4 gates.
inline constexpr double kDeterminantTolerance = 1e-10;

/// A one- or two-qubit unitary with its target qubits.
///
/// Local basis convention for two-qubit gates: the matrix row/column index is
/// `b0 | (b1 << 1)` where b0 is the bit of targets()[0] and b1 the bit of
/// targets()[1]. So targets()[0] is the least-significant local bit, matching
/// the register-wide convention (qubit k is bit k of an amplitude index).
///
/// Unitarity is validated once here, never when the gate is applied.
class GateOp {
   public:
    static GateOp su4(const Matrix4 &matrix, int q0, int q1);
    static GateOp swap(int q0, int q1);
    /// `code` in [1, 15]: low two bits select the Pauli on q0, high two bits
    /// the Pauli on q1 (0=I, 1=X, 2=Y, 3=Z).
    static GateOp pauli2(int code, int q0, int q1);
    static GateOp generic1q(const Matrix2 &matrix, int q);
    static GateOp generic2q(const Matrix4 &matrix, int q0, int q1);

    /// Builds a gate of any kind from raw parts, running every check a factory
    /// would. Used by deserialization.
    static GateOp from_parts(GateKind kind, std::span<const int> targets, std::span<const Complex> matrix);

    GateKind kind() const {
        return kind_;
    }
    int arity() const {
        return arity_;
    }
    int dim() const {
        return arity_ == 1 ? 2 : 4;
    }
    std::span<const int> targets() const {
        return {targets_.data(), static_cast<size_t>(arity_)};
    }
    /// dim() x dim() row-major entries.
    std::span<const Complex> matrix() const {
        return {matrix_.data(), static_cast<size_t>(dim() * dim())};
    }
    const Matrix4 &matrix4() const {
        return matrix_;
    }
    /// Highest target index plus one.
    int min_register_width() const;

    bool operator==(const GateOp &other) const = default;

   private:
    GateOp() = default;

    GateKind kind_ = GateKind::GENERIC1Q;
    int arity_ = 1;
    std::array<int, 2> targets_{0, 0};
    Matrix4 matrix_{};
};

/// max_ij |(U^dagger U - I)_ij| for a dim x dim row-major matrix.
double unitarity_residual(std::span<const Complex> matrix, int dim);
/// Determinant of a dim x dim row-major matrix via partial-pivot elimination.
Complex determinant(std::span<const Complex> matrix, int dim);

/// a * b for row-major 4x4 matrices.
Matrix4 multiply(const Matrix4 &a, const Matrix4 &b);
/// Re-expresses a two-qubit matrix with its two targets listed in the opposite order.
Matrix4 exchange_local_qubits(const Matrix4 &m);
Matrix4 identity4();
Matrix4 swap_matrix();
Matrix2 pauli_matrix(int which);
/// Kronecker product with `high` acting on the more significant local bit.
Matrix4 kron(const Matrix2 &high, const Matrix2 &low);

}  // namespace qvsim

#endif
