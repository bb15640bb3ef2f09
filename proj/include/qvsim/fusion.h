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

#ifndef QVSIM_FUSION_H
#define QVSIM_FUSION_H

#include <span>
#include <vector>

#include "qvsim/gate.h"

namespace qvsim {

/// Merges each two-qubit gate into the previous two-qubit gate on the same
/// qubit pair (in either target order) when no gate in between touched either
/// qubit. The merged gate is a GENERIC2Q holding later * earlier and sits at
/// the earlier gate's position. Single-qubit gates are passed through.
std::vector<GateOp> fuse_gates(std::span<const GateOp> ops);

/// Removes SWAP gates by tracking where each wire's content lives and
/// retargeting the gates that follow. A minimal SWAP sequence restoring the
/// original layout is appended, so the final state is unchanged.
std::vector<GateOp> defer_swaps(std::span<const GateOp> ops, int width);

}  // namespace qvsim

#endif
