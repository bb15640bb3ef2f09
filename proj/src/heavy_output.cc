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

#include "qvsim/heavy_output.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qvsim {

namespace {

void check_distribution(std::span<const double> probs) {
    if (probs.empty() || probs.size() % 2 != 0) {
        throw std::invalid_argument("Outcome distributions must have an even, non-zero length.");
    }
    double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (!(std::abs(total - 1.0) <= kNormalizationTolerance)) {
        throw std::invalid_argument("Outcome probabilities sum to " + std::to_string(total) + ", not 1.");
    }
}

}  // namespace

double median_probability(std::span<const double> probs) {
    check_distribution(probs);
    std::vector<double> v(probs.begin(), probs.end());
    size_t hi = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + hi, v.end());
    double upper = v[hi];
    double lower = *std::max_element(v.begin(), v.begin() + hi);
    return (lower + upper) / 2;
}

std::vector<std::uint64_t> heavy_set(std::span<const double> probs) {
    double median = median_probability(probs);
    std::vector<std::uint64_t> heavy;
    for (size_t i = 0; i < probs.size(); i++) {
        if (probs[i] > median) {
            heavy.push_back(i);
        }
    }
    return heavy;
}

double ideal_hop(std::span<const double> probs) {
    return hop_on_set(probs, heavy_set(probs));
}

double hop_on_set(std::span<const double> probs, std::span<const std::uint64_t> heavy) {
    double total = 0;
    for (std::uint64_t i : heavy) {
        total += probs[i];
    }
    return total;
}

OutcomeCounts sample_measurements(const Statevector &state, std::uint64_t shots, RngStream &rng) {
    if (shots < 1) {
        throw std::invalid_argument("At least one shot is required.");
    }
    auto amps = state.amplitudes();
    std::vector<double> cumulative(amps.size());
    double running = 0;
    for (size_t i = 0; i < amps.size(); i++) {
        running += std::norm(amps[i]);
        cumulative[i] = running;
    }
    OutcomeCounts counts;
    for (std::uint64_t s = 0; s < shots; s++) {
        double u = rng.uniform() * running;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        // Rounding can put u at the very top; fall back to the last non-empty bucket.
        while (it == cumulative.end() || (it != cumulative.begin() && *it == *(it - 1))) {
            --it;
        }
        std::uint64_t k = static_cast<std::uint64_t>(it - cumulative.begin());
        counts[k]++;
    }
    return counts;
}

double sampled_hop(const OutcomeCounts &counts, std::span<const std::uint64_t> heavy) {
    std::uint64_t shots = 0;
    std::uint64_t hits = 0;
    for (auto [outcome, n] : counts) {
        shots += n;
        if (std::binary_search(heavy.begin(), heavy.end(), outcome)) {
            hits += n;
        }
    }
    if (shots == 0) {
        return 0;
    }
    return static_cast<double>(hits) / static_cast<double>(shots);
}

HeavyOutputReport analyze_heavy_output(std::span<const double> probs) {
    HeavyOutputReport r;
    r.width = std::countr_zero(probs.size());
    r.median_probability = median_probability(probs);
    auto heavy = heavy_set(probs);
    r.heavy_set_size = heavy.size();
    r.ideal_hop = hop_on_set(probs, heavy);
    return r;
}

QvDecision qv_decision(std::span<const double> hops, int width) {
    if (hops.size() < 2) {
        throw std::invalid_argument("A QV decision needs at least two trials.");
    }
    const double n = static_cast<double>(hops.size());
    double mean = std::accumulate(hops.begin(), hops.end(), 0.0) / n;
    double ss = 0;
    for (double h : hops) {
        ss += (h - mean) * (h - mean);
    }
    double stderr_hop = std::sqrt(ss / (n - 1)) / std::sqrt(n);

    QvDecision d;
    d.width = width;
    d.mean_hop = mean;
    d.stderr_hop = stderr_hop;
    d.trials = hops.size();
    d.passed = mean - 2 * stderr_hop > kHopThreshold;
    d.quantum_volume = d.passed ? (std::uint64_t{1} << width) : 0;
    return d;
}

}  // namespace qvsim
