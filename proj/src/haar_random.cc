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

#include "qvsim/haar_random.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qvsim {

QubitPermutation::QubitPermutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
    const int n = size();
    std::vector<bool> seen(n, false);
    for (int v : mapping_) {
        if (v < 0 || v >= n || seen[v]) {
            throw std::invalid_argument("Qubit permutation is not a bijection on [0, " + std::to_string(n) + ").");
        }
        seen[v] = true;
    }
}

QubitPermutation QubitPermutation::identity(int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    return QubitPermutation(std::move(m));
}

int QubitPermutation::cycle_count() const {
    const int n = size();
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (int i = 0; i < n; i++) {
        if (seen[i]) {
            continue;
        }
        cycles++;
        for (int j = i; !seen[j]; j = mapping_[j]) {
            seen[j] = true;
        }
    }
    return cycles;
}

bool QubitPermutation::is_identity() const {
    for (int i = 0; i < size(); i++) {
        if (mapping_[i] != i) {
            return false;
        }
    }
    return true;
}

QubitPermutation QubitPermutation::inverse() const {
    std::vector<int> inv(mapping_.size());
    for (int i = 0; i < size(); i++) {
        inv[mapping_[i]] = i;
    }
    return QubitPermutation(std::move(inv));
}

Matrix4 sample_haar_su4(RngStream &rng) {
    constexpr int d = 4;
    while (true) {
        // Ginibre matrix, column-major while factoring.
        std::array<Complex, 16> a;
        for (auto &z : a) {
            double re = rng.normal();
            double im = rng.normal();
            z = Complex(re, im) * std::sqrt(0.5);
        }
        auto at = [&](int r, int c) -> Complex & {
            return a[c * d + r];
        };

        // Householder QR. Reflectors are stored to rebuild Q afterwards.
        std::array<std::array<Complex, d>, d> reflectors{};
        std::array<Complex, d> r_diag{};
        bool degenerate = false;
        for (int k = 0; k < d; k++) {
            double col_norm2 = 0;
            for (int r = k; r < d; r++) {
                col_norm2 += std::norm(at(r, k));
            }
            double col_norm = std::sqrt(col_norm2);
            if (col_norm < 1e-12) {
                degenerate = true;
                break;
            }
            Complex x0 = at(k, k);
            Complex phase = std::abs(x0) > 0 ? x0 / std::abs(x0) : Complex(1);
            Complex alpha = -phase * col_norm;

            auto &v = reflectors[k];
            v.fill(0);
            for (int r = k; r < d; r++) {
                v[r] = at(r, k);
            }
            v[k] -= alpha;
            double v_norm2 = 0;
            for (int r = k; r < d; r++) {
                v_norm2 += std::norm(v[r]);
            }
            double v_norm = std::sqrt(v_norm2);
            for (int r = k; r < d; r++) {
                v[r] /= v_norm;
            }
            // A <- (I - 2 v v^dagger) A on the trailing columns.
            for (int c = k; c < d; c++) {
                Complex dot = 0;
                for (int r = k; r < d; r++) {
                    dot += std::conj(v[r]) * at(r, c);
                }
                for (int r = k; r < d; r++) {
                    at(r, c) -= 2.0 * v[r] * dot;
                }
            }
            r_diag[k] = at(k, k);
        }
        if (degenerate) {
            continue;
        }

        // Q = H_0 H_1 H_2 H_3, built by applying reflectors to the identity in reverse.
        Matrix4 q = identity4();
        for (int k = d - 1; k >= 0; k--) {
            const auto &v = reflectors[k];
            for (int c = 0; c < d; c++) {
                Complex dot = 0;
                for (int r = k; r < d; r++) {
                    dot += std::conj(v[r]) * q[r * d + c];
                }
                for (int r = k; r < d; r++) {
                    q[r * d + c] -= 2.0 * v[r] * dot;
                }
            }
        }

        // Q * diag(R_kk / |R_kk|) is Haar-distributed on U(4).
        for (int c = 0; c < d; c++) {
            Complex ph = r_diag[c] / std::abs(r_diag[c]);
            for (int r = 0; r < d; r++) {
                q[r * d + c] *= ph;
            }
        }

        Complex det = determinant(q, d);
        Complex root = std::pow(det, 0.25);
        for (auto &z : q) {
            z /= root;
        }
        return q;
    }
}

QubitPermutation sample_permutation(RngStream &rng, int n) {
    if (n < 1) {
        throw std::invalid_argument("Permutation size must be at least 1, got " + std::to_string(n) + ".");
    }
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    for (int i = n - 1; i > 0; i--) {
        int j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(m[i], m[j]);
    }
    return QubitPermutation(std::move(m));
}

std::vector<Transposition> permutation_to_swaps(const QubitPermutation &perm) {
    const int n = perm.size();
    // content[w] is the original wire whose content currently sits on wire w.
    std::vector<int> content(n);
    std::vector<int> where(n);
    std::iota(content.begin(), content.end(), 0);
    std::iota(where.begin(), where.end(), 0);
    QubitPermutation inv = perm.inverse();

    std::vector<Transposition> swaps;
    for (int w = 0; w < n; w++) {
        int wanted = inv[w];
        if (content[w] == wanted) {
            continue;
        }
        int x = where[wanted];
        swaps.emplace_back(w, x);
        std::swap(content[w], content[x]);
        where[content[w]] = w;
        where[content[x]] = x;
    }
    return swaps;
}

}  // namespace qvsim
