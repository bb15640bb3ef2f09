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

#ifndef QVSIM_CIRCUIT_IO_H
#define QVSIM_CIRCUIT_IO_H

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qvsim/qv_circuit.h"

namespace qvsim {

inline constexpr int kCircuitFormatVersion = 1;

/// Raised for malformed, mis-dimensioned or non-unitary interchange documents.
struct CircuitFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Circuit interchange document (JSON). Layout:
///
///     {"format_version": 1, "width": n, "master_seed": s, "trial_index": t,
///      "permutation_mode": "swap_gates" | "relabel",
///      "layers": [{"permutation": [...]}, ...],
///      "ops": [{"kind": "SU4", "layer": 0, "targets": [0, 1],
///               "matrix": [[["re", "im"], ...], ...]}, ...]}
///
/// Matrix entries are C99 hex-float strings so every bit survives. One op per
/// line; the output is a pure function of the circuit.
std::string serialize_circuit(const QvCircuit &circuit);

/// Inverse of serialize_circuit. Every gate is re-validated (dimensions,
/// target range, unitarity, SU4 determinant) and every layer's swaps must
/// realize its permutation. Throws CircuitFormatError.
QvCircuit deserialize_circuit(std::string_view text);

void write_circuit_file(const QvCircuit &circuit, const std::filesystem::path &path);
QvCircuit read_circuit_file(const std::filesystem::path &path);

/// Shortest string that strtod maps back to exactly `x`, in hex-float form.
std::string hex_double(double x);

}  // namespace qvsim

#endif
