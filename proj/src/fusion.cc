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

#include <numeric>
#include <unordered_map>

#include "qvsim/haar_random.h"

namespace qvsim {

std::vector<GateOp> fuse_gates(std::span<const GateOp> ops) {
    std::vector<GateOp> out;
    out.reserve(ops.size());
    // Index into `out` of the last gate touching each qubit.
    std::unordered_map<int, size_t> last;

    for (const GateOp &g : ops) {
        auto t = g.targets();
        if (g.arity() == 2) {
            auto a = last.find(t[0]);
            auto b = last.find(t[1]);
            if (a != last.end() && b != last.end() && a->second == b->second) {
                GateOp &prev = out[a->second];
                auto pt = prev.targets();
                Matrix4 later = g.matrix4();
                if (pt[0] == t[1]) {
                    later = exchange_local_qubits(later);
                }
                prev = GateOp::generic2q(multiply(later, prev.matrix4()), pt[0], pt[1]);
                continue;
            }
        }
        out.push_back(g);
        for (int q : t) {
            last[q] = out.size() - 1;
        }
    }
    return out;
}

std::vector<GateOp> defer_swaps(std::span<const GateOp> ops, int width) {
    // loc[w] is the register wire currently holding the content of wire w.
    std::vector<int> loc(width);
    std::iota(loc.begin(), loc.end(), 0);
    std::vector<GateOp> out;
    out.reserve(ops.size());
    for (const GateOp &g : ops) {
        auto t = g.targets();
        if (g.kind() == GateKind::SWAP) {
            std::swap(loc[t[0]], loc[t[1]]);
        } else if (g.arity() == 1) {
            std::array<int, 1> moved{loc[t[0]]};
            out.push_back(GateOp::from_parts(g.kind(), moved, g.matrix()));
        } else {
            std::array<int, 2> moved{loc[t[0]], loc[t[1]]};
            out.push_back(GateOp::from_parts(g.kind(), moved, g.matrix()));
        }
    }
    // Content on wire loc[w] belongs on wire w.
    std::vector<int> restore(width);
    for (int w = 0; w < width; w++) {
        restore[loc[w]] = w;
    }
    for (auto [a, b] : permutation_to_swaps(QubitPermutation(std::move(restore)))) {
        out.push_back(GateOp::swap(a, b));
    }
    return out;
}

}  // namespace qvsim
