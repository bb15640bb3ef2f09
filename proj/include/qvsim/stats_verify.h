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

#ifndef QVSIM_STATS_VERIFY_H
#define QVSIM_STATS_VERIFY_H

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qvsim/qv_circuit.h"
#include "qvsim/rng.h"

namespace qvsim {

/// (1 + ln 2) / 2, the large-width limit of the noiseless heavy output probability.
inline constexpr double kAsymptoticHop = 0.8465735902799727;
inline constexpr double kDefaultSignificance = 0.01;

enum class FitReference { Exp1, FiniteNMarginal };

struct DistributionFitResult {
    std::uint64_t sample_size = 0;
    double ks_statistic = 0;
    double ks_threshold = 0;
    bool passed = false;
    FitReference reference = FitReference::Exp1;
    /// Set when every input value was identical (e.g. a uniform distribution).
    bool degenerate = false;
};

/// sup_x |F_n(x) - F(x)| for the empirical CDF of `samples`.
double ks_statistic(std::span<const double> samples, const std::function<double(double)> &cdf);

/// Survival function of the Kolmogorov distribution, P(K > lambda).
double kolmogorov_survival(double lambda);

/// lambda with P(K > lambda) = significance.
double kolmogorov_critical_value(double significance);

/// KS fit of N * p_i (N = probs.size()) against Exp(1).
DistributionFitResult porter_thomas_fit(std::span<const double> probs, double significance = kDefaultSignificance);

/// KS fit of squared amplitude magnitudes against the dimension-N marginal
/// with CDF 1 - (1 - y)^(N - 1). Throws std::invalid_argument for samples
/// outside [0, 1] or N < 2.
DistributionFitResult finite_n_marginal_fit(
    std::span<const double> samples, std::uint64_t dimension, double significance = kDefaultSignificance);

/// |v_0|^2 of `count` independent normalized complex Gaussian vectors of the
/// given dimension (i.e. first-outcome probabilities of Haar-random states).
std::vector<double> sample_haar_state_marginals(std::uint64_t dimension, std::uint64_t count, RngStream &rng);

struct HopConvergenceRow {
    int width = 0;
    std::uint64_t trials = 0;
    double mean_hop = 0;
    double stderr_hop = 0;
};

/// Mean ideal HOP over `trials` fresh noiseless circuits per width. Trial t at
/// width w uses generate_qv_circuit(w, master_seed, t).
std::vector<HopConvergenceRow> hop_convergence_suite(
    std::span<const int> widths, std::uint64_t trials, std::uint64_t master_seed, const EngineConfig &engine = {});

struct NoisyHopRow {
    double p = 0;
    std::uint64_t trials = 0;
    double mean_hop = 0;
    double stderr_hop = 0;
};

/// Mean HOP of noisy trajectories measured against the noiseless circuit's
/// heavy set. Each trial draws its noise from a stream forked off the trial
/// seed; the same stream is reused for every p, so rows differ only in p.
std::vector<NoisyHopRow> noisy_hop_suite(
    int width,
    std::span<const double> p_values,
    std::uint64_t trials,
    std::uint64_t master_seed,
    const EngineConfig &engine = {});

/// Fork label of the per-trial noise stream.
inline constexpr std::uint64_t kNoiseStreamId = 1;
/// Fork label of the per-trial measurement-sampling stream.
inline constexpr std::uint64_t kShotStreamId = 2;

}  // namespace qvsim

#endif
