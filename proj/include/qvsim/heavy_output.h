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

#ifndef QVSIM_HEAVY_OUTPUT_H
#define QVSIM_HEAVY_OUTPUT_H

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qvsim/rng.h"
#include "qvsim/statevector.h"

namespace qvsim {

/// Allowed |sum(p) - 1| for probability vectors handed to this module.
inline constexpr double kNormalizationTolerance = 1e-9;
/// HOP a width must beat (with margin) to pass.
inline constexpr double kHopThreshold = 2.0 / 3.0;

using OutcomeCounts = std::map<std::uint64_t, std::uint64_t>;

struct HeavyOutputReport {
    int width = 0;
    double median_probability = 0;
    std::uint64_t heavy_set_size = 0;
    double ideal_hop = 0;
    std::optional<double> sampled_hop;
    std::optional<std::uint64_t> shots;
};

struct QvDecision {
    int width = 0;
    double mean_hop = 0;
    double stderr_hop = 0;
    std::uint64_t trials = 0;
    bool passed = false;
    /// 2^width when passed, otherwise 0.
    std::uint64_t quantum_volume = 0;
};

/// Mean of the two middle order statistics. Throws std::invalid_argument on
/// an odd-length or non-normalized input.
double median_probability(std::span<const double> probs);

/// Indices whose probability is strictly greater than the median. Sorted.
std::vector<std::uint64_t> heavy_set(std::span<const double> probs);

/// Total probability carried by the heavy set.
double ideal_hop(std::span<const double> probs);

/// Probability mass of `probs` on an externally supplied heavy set. Used for
/// noisy trajectories, whose heavy set comes from the noiseless circuit.
double hop_on_set(std::span<const double> probs, std::span<const std::uint64_t> heavy);

/// Multinomial sample of `shots` full-register measurements.
OutcomeCounts sample_measurements(const Statevector &state, std::uint64_t shots, RngStream &rng);

/// Fraction of shots that landed in `heavy` (which must be sorted).
double sampled_hop(const OutcomeCounts &counts, std::span<const std::uint64_t> heavy);

HeavyOutputReport analyze_heavy_output(std::span<const double> probs);

/// Passes iff mean - 2 * stderr > 2/3, with stderr the sample standard
/// deviation over sqrt(trials). Needs at least two trials.
QvDecision qv_decision(std::span<const double> hops, int width);

}  // namespace qvsim

#endif
