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

#include <unistd.h>

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

namespace qvsim {

namespace {

// Below this many amplitude groups the OpenMP fork costs more than it saves.
constexpr std::int64_t kParallelGroupThreshold = 1 << 12;

inline std::uint64_t insert_zero_bit(std::uint64_t x, int bit) {
    std::uint64_t low = x & ((std::uint64_t{1} << bit) - 1);
    return ((x >> bit) << (bit + 1)) | low;
}

void check_target(const Statevector &state, int q) {
    if (q < 0 || q >= state.num_qubits()) {
        throw std::out_of_range(
            "Target qubit " + std::to_string(q) + " is out of range for a " + std::to_string(state.num_qubits()) +
            "-qubit register.");
    }
}

void apply_1q(Statevector &state, const Complex *m, int q, int threads) {
    Complex *a = state.amplitudes().data();
    const std::int64_t groups = static_cast<std::int64_t>(state.size() >> 1);
    const std::uint64_t stride = std::uint64_t{1} << q;
    const Complex m00 = m[0], m01 = m[1], m10 = m[2], m11 = m[3];
#pragma omp parallel for num_threads(threads) if (threads > 1 && groups >= kParallelGroupThreshold) schedule(static)
    for (std::int64_t g = 0; g < groups; g++) {
        std::uint64_t i0 = insert_zero_bit(static_cast<std::uint64_t>(g), q);
        std::uint64_t i1 = i0 | stride;
        Complex v0 = a[i0];
        Complex v1 = a[i1];
        a[i0] = m00 * v0 + m01 * v1;
        a[i1] = m10 * v0 + m11 * v1;
    }
}

void apply_2q(Statevector &state, const Complex *m, int q0, int q1, int threads) {
    // Complex is layout-compatible with double[2].
    double *d = reinterpret_cast<double *>(state.amplitudes().data());
    const int lo = std::min(q0, q1);
    const int hi = std::max(q0, q1);
    const std::uint64_t slo = std::uint64_t{1} << lo;
    const std::uint64_t shi = std::uint64_t{1} << hi;
    const std::uint64_t off[4] = {
        0, std::uint64_t{2} << q0, std::uint64_t{2} << q1, (std::uint64_t{2} << q0) | (std::uint64_t{2} << q1)};
    double ur[16], ui[16];
    for (int k = 0; k < 16; k++) {
        ur[k] = m[k].real();
        ui[k] = m[k].imag();
    }

    // Groups are enumerated as (outer, mid) blocks, each covering a contiguous
    // run of slo base indices whose target bits are both zero.
    const std::uint64_t mids = shi / (2 * slo);
    const std::int64_t blocks = static_cast<std::int64_t>((state.size() / (2 * shi)) * mids);
    const std::int64_t groups = static_cast<std::int64_t>(state.size() >> 2);
#pragma omp parallel for num_threads(threads) if (threads > 1 && groups >= kParallelGroupThreshold) schedule(static)
    for (std::int64_t b = 0; b < blocks; b++) {
        std::uint64_t ub = static_cast<std::uint64_t>(b);
        std::uint64_t start = (ub / mids) * 2 * shi + (ub % mids) * 2 * slo;
        // The four runs below are disjoint: every offset is at least 2 * slo doubles.
        double *__restrict p0 = d + 2 * start;
        double *__restrict p1 = p0 + off[1];
        double *__restrict p2 = p0 + off[2];
        double *__restrict p3 = p0 + off[3];
        for (std::uint64_t i = 0; i < 2 * slo; i += 2) {
            const double v0r = p0[i], v0i = p0[i + 1];
            const double v1r = p1[i], v1i = p1[i + 1];
            const double v2r = p2[i], v2i = p2[i + 1];
            const double v3r = p3[i], v3i = p3[i + 1];
#define QVSIM_ROW(r, dst)                                                                                        \
    dst[i] = ur[4 * r] * v0r - ui[4 * r] * v0i + ur[4 * r + 1] * v1r - ui[4 * r + 1] * v1i + ur[4 * r + 2] * v2r - \
             ui[4 * r + 2] * v2i + ur[4 * r + 3] * v3r - ui[4 * r + 3] * v3i;                                    \
    dst[i + 1] = ur[4 * r] * v0i + ui[4 * r] * v0r + ur[4 * r + 1] * v1i + ui[4 * r + 1] * v1r +                 \
                 ur[4 * r + 2] * v2i + ui[4 * r + 2] * v2r + ur[4 * r + 3] * v3i + ui[4 * r + 3] * v3r;
            QVSIM_ROW(0, p0)
            QVSIM_ROW(1, p1)
            QVSIM_ROW(2, p2)
            QVSIM_ROW(3, p3)
#undef QVSIM_ROW
        }
    }
}

std::uint64_t read_mem_available() {
    std::ifstream in("/proc/meminfo");
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("MemAvailable:", 0) == 0) {
            std::istringstream fields(line.substr(13));
            std::uint64_t kib = 0;
            fields >> kib;
            return kib * 1024;
        }
    }
    long pages = sysconf(_SC_PHYS_PAGES);
    long page_size = sysconf(_SC_PAGE_SIZE);
    if (pages > 0 && page_size > 0) {
        return static_cast<std::uint64_t>(pages) * static_cast<std::uint64_t>(page_size);
    }
    return 0;
}

}  // namespace

CapacityError::CapacityError(int num_qubits, std::uint64_t required_bytes, std::uint64_t budget_bytes)
    : std::runtime_error(
          "A " + std::to_string(num_qubits) + "-qubit statevector needs " + std::to_string(required_bytes) +
          " bytes, exceeding the memory budget of " + std::to_string(budget_bytes) + " bytes."),
      num_qubits(num_qubits),
      required_bytes(required_bytes),
      budget_bytes(budget_bytes) {
}

std::uint64_t statevector_bytes(int num_qubits) {
    if (num_qubits >= 60) {
        return UINT64_MAX;
    }
    return sizeof(Complex) << num_qubits;
}

std::uint64_t default_memory_budget() {
    static const std::uint64_t budget = static_cast<std::uint64_t>(static_cast<double>(read_mem_available()) * 0.9);
    return budget;
}

Statevector::Statevector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
}

Statevector Statevector::from_amplitudes(std::span<const Complex> amplitudes) {
    size_t n = amplitudes.size();
    if (n < 2 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("Amplitude count must be a power of two >= 2, got " + std::to_string(n) + ".");
    }
    int q = std::countr_zero(n);
    return Statevector(q, std::vector<Complex>(amplitudes.begin(), amplitudes.end()));
}

Statevector new_zero_state(int num_qubits, std::uint64_t memory_budget_bytes) {
    if (num_qubits < 1) {
        throw std::invalid_argument("A register needs at least one qubit, got " + std::to_string(num_qubits) + ".");
    }
    std::uint64_t need = statevector_bytes(num_qubits);
    if (need > memory_budget_bytes) {
        throw CapacityError(num_qubits, need, memory_budget_bytes);
    }
    std::vector<Complex> amps(std::uint64_t{1} << num_qubits);
    amps[0] = 1;
    return Statevector(num_qubits, std::move(amps));
}

void apply_gate(Statevector &state, const GateOp &gate, int threads) {
    auto t = gate.targets();
    for (int q : t) {
        check_target(state, q);
    }
    if (gate.kind() == GateKind::SWAP) {
        apply_swap(state, t[0], t[1], threads);
    } else if (gate.arity() == 1) {
        apply_1q(state, gate.matrix().data(), t[0], threads);
    } else {
        apply_2q(state, gate.matrix().data(), t[0], t[1], threads);
    }
}

void apply_swap(Statevector &state, int q0, int q1, int threads) {
    check_target(state, q0);
    check_target(state, q1);
    if (q0 == q1) {
        throw std::invalid_argument("SWAP targets must be distinct.");
    }
    Complex *a = state.amplitudes().data();
    const std::int64_t groups = static_cast<std::int64_t>(state.size() >> 2);
    const int lo = std::min(q0, q1);
    const int hi = std::max(q0, q1);
    const std::uint64_t slo = std::uint64_t{1} << lo;
    const std::uint64_t shi = std::uint64_t{1} << hi;
#pragma omp parallel for num_threads(threads) if (threads > 1 && groups >= kParallelGroupThreshold) schedule(static)
    for (std::int64_t g = 0; g < groups; g++) {
        std::uint64_t base = insert_zero_bit(insert_zero_bit(static_cast<std::uint64_t>(g), lo), hi);
        std::swap(a[base | slo], a[base | shi]);
    }
}

std::vector<double> probabilities(const Statevector &state, int threads) {
    const auto amps = state.amplitudes();
    std::vector<double> p(amps.size());
    const std::int64_t n = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for num_threads(threads) if (threads > 1 && n >= kParallelGroupThreshold) schedule(static)
    for (std::int64_t i = 0; i < n; i++) {
        p[i] = std::norm(amps[i]);
    }
    return p;
}

double norm_squared(const Statevector &state) {
    double total = 0;
    for (const Complex &a : state.amplitudes()) {
        total += std::norm(a);
    }
    return total;
}

}  // namespace qvsim
