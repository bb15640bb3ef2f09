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

#include "qvsim/stats_verify.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qvsim/heavy_output.h"

namespace qvsim {

namespace {

struct MeanStderr {
    double mean;
    double stderr_value;
};

MeanStderr mean_stderr(std::span<const double> xs) {
    const double n = static_cast<double>(xs.size());
    double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    if (xs.size() < 2) {
        return {mean, 0};
    }
    double ss = 0;
    for (double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    return {mean, std::sqrt(ss / (n - 1) / n)};
}

DistributionFitResult fit(
    std::vector<double> values, const std::function<double(double)> &cdf, double significance, FitReference ref) {
    DistributionFitResult r;
    r.reference = ref;
    r.sample_size = values.size();
    if (values.empty()) {
        throw std::invalid_argument("A goodness-of-fit test needs at least one sample.");
    }
    r.degenerate = std::all_of(values.begin(), values.end(), [&](double v) { return v == values.front(); });
    r.ks_statistic = ks_statistic(values, cdf);
    r.ks_threshold = kolmogorov_critical_value(significance) / std::sqrt(static_cast<double>(values.size()));
    r.passed = r.ks_statistic < r.ks_threshold;
    return r;
}

}  // namespace

double ks_statistic(std::span<const double> samples, const std::function<double(double)> &cdf) {
    std::vector<double> xs(samples.begin(), samples.end());
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        double f = cdf(xs[i]);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
        d = std::max(d, f - static_cast<double>(i) / n);
    }
    return d;
}

double kolmogorov_survival(double lambda) {
    if (lambda <= 0) {
        return 1;
    }
    if (lambda < 0.2) {
        // The alternating series converges slowly here and the value is 1 to double precision.
        return 1;
    }
    double sum = 0;
    for (int k = 1; k <= 100; k++) {
        double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1) ? term : -term;
        if (term < 1e-17) {
            break;
        }
    }
    return std::clamp(2 * sum, 0.0, 1.0);
}

double kolmogorov_critical_value(double significance) {
    if (!(significance > 0 && significance < 1)) {
        throw std::invalid_argument("Significance must lie in (0, 1).");
    }
    double lo = 0.2, hi = 5.0;
    for (int i = 0; i < 200; i++) {
        double mid = (lo + hi) / 2;
        if (kolmogorov_survival(mid) > significance) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

DistributionFitResult porter_thomas_fit(std::span<const double> probs, double significance) {
    const double n = static_cast<double>(probs.size());
    std::vector<double> eta(probs.size());
    std::transform(probs.begin(), probs.end(), eta.begin(), [n](double p) { return n * p; });
    return fit(
        std::move(eta), [](double x) { return x <= 0 ? 0.0 : -std::expm1(-x); }, significance, FitReference::Exp1);
}

DistributionFitResult finite_n_marginal_fit(
    std::span<const double> samples, std::uint64_t dimension, double significance) {
    if (dimension < 2) {
        throw std::invalid_argument("Marginal fit needs dimension >= 2.");
    }
    for (double y : samples) {
        if (!(y >= 0 && y <= 1)) {
            throw std::invalid_argument("Marginal samples must lie in [0, 1], got " + std::to_string(y) + ".");
        }
    }
    const double exponent = static_cast<double>(dimension - 1);
    return fit(
        std::vector<double>(samples.begin(), samples.end()),
        [exponent](double y) { return -std::expm1(exponent * std::log1p(-y)); },
        significance,
        FitReference::FiniteNMarginal);
}

std::vector<double> sample_haar_state_marginals(std::uint64_t dimension, std::uint64_t count, RngStream &rng) {
    std::vector<double> out;
    out.reserve(count);
    for (std::uint64_t s = 0; s < count; s++) {
        double first = 0;
        double total = 0;
        for (std::uint64_t k = 0; k < dimension; k++) {
            double re = rng.normal();
            double im = rng.normal();
            double m = re * re + im * im;
            if (k == 0) {
                first = m;
            }
            total += m;
        }
        out.push_back(first / total);
    }
    return out;
}

std::vector<HopConvergenceRow> hop_convergence_suite(
    std::span<const int> widths, std::uint64_t trials, std::uint64_t master_seed, const EngineConfig &engine) {
    std::vector<HopConvergenceRow> rows;
    for (int w : widths) {
        std::vector<double> hops;
        hops.reserve(trials);
        for (std::uint64_t t = 0; t < trials; t++) {
            QvCircuit c = generate_qv_circuit(w, master_seed, t);
            ExecutionResult r = execute(c, engine);
            hops.push_back(ideal_hop(probabilities(r.final_state, engine.threads)));
        }
        auto [mean, se] = mean_stderr(hops);
        rows.push_back({w, trials, mean, se});
    }
    return rows;
}

std::vector<NoisyHopRow> noisy_hop_suite(
    int width,
    std::span<const double> p_values,
    std::uint64_t trials,
    std::uint64_t master_seed,
    const EngineConfig &engine) {
    std::vector<std::vector<double>> hops(p_values.size());
    for (std::uint64_t t = 0; t < trials; t++) {
        QvCircuit c = generate_qv_circuit(width, master_seed, t);
        auto ideal = probabilities(execute(c, engine).final_state, engine.threads);
        auto heavy = heavy_set(ideal);
        RngStream trial_rng(derive_seed(master_seed, static_cast<std::uint64_t>(width), t));
        for (size_t k = 0; k < p_values.size(); k++) {
            RngStream noise_rng = trial_rng.fork(kNoiseStreamId);
            QvCircuit noisy = inject_pauli_noise(c, NoiseConfig{p_values[k]}, noise_rng);
            auto probs = probabilities(execute(noisy, engine).final_state, engine.threads);
            hops[k].push_back(hop_on_set(probs, heavy));
        }
    }
    std::vector<NoisyHopRow> rows;
    for (size_t k = 0; k < p_values.size(); k++) {
        auto [mean, se] = mean_stderr(hops[k]);
        rows.push_back({p_values[k], trials, mean, se});
    }
    return rows;
}

}  // namespace qvsim
