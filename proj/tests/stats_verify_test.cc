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

#include <gtest/gtest.h>

#include "qvsim/heavy_output.h"

using namespace qvsim;

namespace {

std::vector<double> exp1_samples(size_t n, RngStream &rng) {
    std::vector<double> xs(n);
    for (auto &x : xs) {
        x = -std::log1p(-rng.uniform());
    }
    return xs;
}

}  // namespace

TEST(stats_verify, asymptotic_hop_constant) {
    ASSERT_NEAR(kAsymptoticHop, (1 + std::log(2.0)) / 2, 1e-16);
}

TEST(stats_verify, ks_statistic_by_hand) {
    auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
    std::vector<double> one{0.5};
    ASSERT_NEAR(ks_statistic(one, uniform), 0.5, 1e-15);
    std::vector<double> three{0.7, 0.1, 0.4};
    ASSERT_NEAR(ks_statistic(three, uniform), 0.3, 1e-15);
}

TEST(stats_verify, kolmogorov_critical_values) {
    // Standard tabulated asymptotic values.
    ASSERT_NEAR(kolmogorov_critical_value(0.01), 1.6276, 1e-4);
    ASSERT_NEAR(kolmogorov_critical_value(0.05), 1.3581, 1e-4);
    ASSERT_NEAR(kolmogorov_critical_value(0.10), 1.2238, 1e-4);
    ASSERT_NEAR(kolmogorov_survival(1.3581), 0.05, 1e-4);
    ASSERT_EQ(kolmogorov_survival(0), 1.0);
    ASSERT_THROW(kolmogorov_critical_value(0), std::invalid_argument);
    ASSERT_THROW(kolmogorov_critical_value(1), std::invalid_argument);
}

TEST(stats_verify, porter_thomas_null_passes) {
    // Exp(1)/N as probabilities: the fit sees Exp(1) exactly. Null self-test.
    RngStream rng(1);
    int passes = 0;
    for (int rep = 0; rep < 100; rep++) {
        auto xs = exp1_samples(4096, rng);
        std::vector<double> p(xs.size());
        std::transform(xs.begin(), xs.end(), p.begin(), [](double x) { return x / 4096; });
        passes += porter_thomas_fit(p).passed;
    }
    ASSERT_GE(passes, 95);
}

TEST(stats_verify, porter_thomas_rejects_uniform) {
    std::vector<double> p(4096, 1.0 / 4096);
    auto r = porter_thomas_fit(p);
    ASSERT_FALSE(r.passed);
    ASSERT_TRUE(r.degenerate);
    ASSERT_EQ(r.reference, FitReference::Exp1);
    ASSERT_EQ(r.sample_size, 4096u);
}

TEST(stats_verify, porter_thomas_on_qv_circuit) {
    auto p = probabilities(execute(generate_qv_circuit(12, 3, 0)).final_state);
    auto r = porter_thomas_fit(p);
    ASSERT_TRUE(r.passed) << r.ks_statistic << " vs " << r.ks_threshold;
    ASSERT_FALSE(r.degenerate);
}

TEST(stats_verify, marginal_fit_small_dimensions) {
    RngStream rng(2);
    // N = 2: |v_0|^2 is uniform on [0, 1].
    auto ys2 = sample_haar_state_marginals(2, 5000, rng);
    ASSERT_TRUE(finite_n_marginal_fit(ys2, 2).passed);
    auto ys8 = sample_haar_state_marginals(8, 10000, rng);
    auto r8 = finite_n_marginal_fit(ys8, 8);
    ASSERT_TRUE(r8.passed);
    ASSERT_EQ(r8.reference, FitReference::FiniteNMarginal);
}

TEST(stats_verify, marginal_fit_rejects_exponential_approximation) {
    // Exp(1)/N is the large-N limit, distinguishable at N = 8 with 10,000 samples.
    RngStream rng(3);
    auto xs = exp1_samples(10000, rng);
    std::vector<double> ys;
    for (double x : xs) {
        ys.push_back(std::min(1.0, x / 8));
    }
    ASSERT_FALSE(finite_n_marginal_fit(ys, 8).passed);
}

TEST(stats_verify, marginal_null_self_test) {
    RngStream rng(4);
    int passes = 0;
    for (int rep = 0; rep < 100; rep++) {
        passes += finite_n_marginal_fit(sample_haar_state_marginals(8, 2000, rng), 8).passed;
    }
    ASSERT_GE(passes, 95);
}

TEST(stats_verify, marginal_fit_validates_inputs) {
    std::vector<double> bad{0.2, 1.5};
    ASSERT_THROW(finite_n_marginal_fit(bad, 8), std::invalid_argument);
    std::vector<double> neg{-0.1};
    ASSERT_THROW(finite_n_marginal_fit(neg, 8), std::invalid_argument);
    std::vector<double> ok{0.5};
    ASSERT_THROW(finite_n_marginal_fit(ok, 1), std::invalid_argument);
    std::vector<double> empty;
    ASSERT_THROW(finite_n_marginal_fit(empty, 8), std::invalid_argument);
}

TEST(stats_verify, hop_convergence_width_four) {
    // 20,000-trial reference run gave 0.8399 (per-trial sd about 0.049);
    // band is that mean +- 4 standard errors of a 200-trial mean.
    std::vector<int> widths{4};
    auto rows = hop_convergence_suite(widths, 200, 2024);
    ASSERT_EQ(rows.size(), 1u);
    ASSERT_EQ(rows[0].trials, 200u);
    ASSERT_GE(rows[0].mean_hop, 0.826);
    ASSERT_LE(rows[0].mean_hop, 0.854);
}

TEST(stats_verify, hop_convergence_deterministic) {
    std::vector<int> widths{3, 5};
    auto a = hop_convergence_suite(widths, 20, 9);
    auto b = hop_convergence_suite(widths, 20, 9);
    for (size_t i = 0; i < a.size(); i++) {
        ASSERT_EQ(a[i].mean_hop, b[i].mean_hop);
        ASSERT_EQ(a[i].stderr_hop, b[i].stderr_hop);
    }
    // Trial t of width w is generate_qv_circuit(w, seed, t).
    double sum = 0;
    for (std::uint64_t t = 0; t < 20; t++) {
        sum += ideal_hop(probabilities(execute(generate_qv_circuit(3, 9, t)).final_state));
    }
    ASSERT_NEAR(a[0].mean_hop, sum / 20, 1e-15);
}

TEST(stats_verify, noisy_suite_limits) {
    std::vector<double> ps{0.0, 0.01, 0.05, 0.2, 1.0};
    auto rows = noisy_hop_suite(6, ps, 40, 17);
    ASSERT_EQ(rows.size(), ps.size());
    std::vector<int> widths{6};
    auto clean = hop_convergence_suite(widths, 40, 17);
    ASSERT_NEAR(rows[0].mean_hop, clean[0].mean_hop, 1e-12);
    for (size_t i = 1; i < 4; i++) {
        ASSERT_LT(rows[i].mean_hop, rows[i - 1].mean_hop);
    }
    ASSERT_GT(rows[3].mean_hop, 0.4);
    ASSERT_THROW(noisy_hop_suite(6, std::vector<double>{2.0}, 4, 1), std::invalid_argument);
}

TEST(stats_verify, full_noise_width_ten) {
    // Every SU4 followed by a random Pauli. Measured band over 100 trials.
    std::vector<double> ps{1.0};
    auto rows = noisy_hop_suite(10, ps, 100, 5);
    ASSERT_GE(rows[0].mean_hop, 0.45);
    ASSERT_LE(rows[0].mean_hop, 0.60);
}
