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

#include "qvsim/rng.h"

#include <cmath>
#include <numbers>

namespace qvsim {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t width, std::uint64_t trial_index) {
    return mix64(mix64(mix64(master_seed) ^ width) ^ trial_index);
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {
}

std::uint64_t RngStream::next_u64() {
    return engine_();
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::uniform_below(std::uint64_t bound) {
    if (bound <= 1) {
        return 0;
    }
    // Largest multiple of bound representable; values at or above it are rejected.
    std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
    while (true) {
        std::uint64_t x = next_u64();
        if (x <= limit) {
            return x % bound;
        }
    }
}

double RngStream::normal() {
    if (has_spare_normal_) {
        has_spare_normal_ = false;
        return spare_normal_;
    }
    double u1;
    do {
        u1 = uniform();
    } while (u1 == 0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    spare_normal_ = r * std::sin(theta);
    has_spare_normal_ = true;
    return r * std::cos(theta);
}

RngStream RngStream::fork(std::uint64_t stream_id) const {
    return RngStream(mix64(seed_ ^ mix64(stream_id)));
}

}  // namespace qvsim
