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

#ifndef QVSIM_RNG_H
#define QVSIM_RNG_H

#include <cstdint>
#include <random>

namespace qvsim {

/// SplitMix64 finalizer. A bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

/// Seed of the stream for one circuit instance. For any two fixed arguments
/// the map is a bijection in the third, so neighbouring trials or master seeds
/// never share a stream.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t width, std::uint64_t trial_index);

/// Seedable random stream with platform-independent output.
///
/// Raw words come from std::mt19937_64, whose output sequence is fixed by the
/// standard. The <random> distributions are implementation-defined, so the
/// conversions to doubles, bounded integers and normals are done here.
class RngStream {
   public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t seed() const {
        return seed_;
    }
    std::uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on [0, bound). Unbiased (rejection sampling).
    std::uint64_t uniform_below(std::uint64_t bound);
    /// Standard normal via Box-Muller.
    double normal();
    /// Independent child stream labelled by `stream_id`.
    RngStream fork(std::uint64_t stream_id) const;

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0;
};

}  // namespace qvsim

#endif
