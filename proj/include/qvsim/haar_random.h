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

#ifndef QVSIM_HAAR_RANDOM_H
#define QVSIM_HAAR_RANDOM_H

#include <utility>
#include <vector>

#include "qvsim/gate.h"
#include "qvsim/rng.h"

namespace qvsim {

/// mapping()[i] is the position qubit i moves to.
class QubitPermutation {
   public:
    /// Throws std::invalid_argument unless `mapping` is a bijection on [0, n).
    explicit QubitPermutation(std::vector<int> mapping);
    static QubitPermutation identity(int n);

    int size() const {
        return static_cast<int>(mapping_.size());
    }
    int operator[](int i) const {
        return mapping_[i];
    }
    const std::vector<int> &mapping() const {
        return mapping_;
    }
    int cycle_count() const;
    bool is_identity() const;
    QubitPermutation inverse() const;

    bool operator==(const QubitPermutation &) const = default;

   private:
    std::vector<int> mapping_;
};

using Transposition = std::pair<int, int>;

/// Haar-random unitary of dimension 4 with its determinant phase removed.
///
/// A complex Ginibre matrix is QR-factored with Householder reflections; Q is
/// then multiplied by the phases of R's diagonal, which makes it Haar on U(4),
/// and finally divided by a fourth root of its determinant. The removed factor
/// is a global phase, so outcome probabilities are unaffected.
Matrix4 sample_haar_su4(RngStream &rng);

/// Fisher-Yates shuffle; uniform over all n! permutations.
QubitPermutation sample_permutation(RngStream &rng, int n);

/// Minimal SWAP sequence (n minus the cycle count) that moves the content of
/// wire i to wire perm[i] when applied left to right.
std::vector<Transposition> permutation_to_swaps(const QubitPermutation &perm);

}  // namespace qvsim

#endif
