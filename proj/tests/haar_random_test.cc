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

#include "qvsim/haar_random.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

using namespace qvsim;

namespace {

// Largest gap between the empirical CDFs of two samples.
double two_sample_ks(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    size_t i = 0, j = 0;
    double d = 0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) {
            i++;
        }
        while (j < b.size() && b[j] <= x) {
            j++;
        }
        d = std::max(d, std::abs(double(i) / a.size() - double(j) / b.size()));
    }
    return d;
}

std::vector<int> apply_swaps(int n, const std::vector<Transposition> &swaps) {
    std::vector<int> content(n);
    std::iota(content.begin(), content.end(), 0);
    for (auto [a, b] : swaps) {
        std::swap(content[a], content[b]);
    }
    return content;
}

// Fewest transpositions reaching each permutation of n elements, by BFS.
std::map<std::vector<int>, int> transposition_distances(int n) {
    std::vector<int> start(n);
    std::iota(start.begin(), start.end(), 0);
    std::map<std::vector<int>, int> dist{{start, 0}};
    std::queue<std::vector<int>> q;
    q.push(start);
    while (!q.empty()) {
        auto p = q.front();
        q.pop();
        for (int a = 0; a < n; a++) {
            for (int b = a + 1; b < n; b++) {
                auto next = p;
                std::swap(next[a], next[b]);
                if (dist.emplace(next, dist[p] + 1).second) {
                    q.push(next);
                }
            }
        }
    }
    return dist;
}

}  // namespace

TEST(haar_random, su4_is_special_unitary) {
    RngStream rng(1);
    for (int k = 0; k < 2000; k++) {
        Matrix4 u = sample_haar_su4(rng);
        ASSERT_LT(unitarity_residual(u, 4), 1e-12);
        ASSERT_LT(std::abs(determinant(u, 4) - Complex(1)), 1e-10);
    }
}

TEST(haar_random, first_moment_of_entries) {
    RngStream rng(2);
    const int draws = 10000;
    double sum2 = 0, sum4 = 0;
    for (int k = 0; k < draws; k++) {
        double p = std::norm(sample_haar_su4(rng)[0]);
        sum2 += p;
        sum4 += p * p;
    }
    ASSERT_NEAR(sum2 / draws, 0.25, 0.01);
    // E|U_00|^4 = 2 / (d (d + 1)) = 0.1 for d = 4.
    ASSERT_NEAR(sum4 / draws, 0.1, 0.01);
}

TEST(haar_random, left_invariance) {
    RngStream rng(3);
    Matrix4 v = sample_haar_su4(rng);
    const int draws = 10000;
    std::vector<double> plain, rotated;
    for (int k = 0; k < draws; k++) {
        plain.push_back(std::norm(sample_haar_su4(rng)[0]));
        rotated.push_back(std::norm(multiply(v, sample_haar_su4(rng))[0]));
    }
    ASSERT_LT(two_sample_ks(plain, rotated), 0.02);

    // |U_00|^2 of a Haar unitary of dimension 4 has CDF 1 - (1 - y)^3.
    std::sort(rotated.begin(), rotated.end());
    double d = 0;
    for (int i = 0; i < draws; i++) {
        double f = 1 - std::pow(1 - rotated[i], 3);
        d = std::max({d, std::abs(f - double(i) / draws), std::abs(f - double(i + 1) / draws)});
    }
    ASSERT_LT(d, 0.02);
}

TEST(haar_random, phases_spread_uniformly) {
    // Without the R-diagonal phase correction the argument of U_00 clusters;
    // Haar measure makes it uniform on (-pi, pi].
    RngStream rng(4);
    std::array<int, 8> bins{};
    const int draws = 8000;
    for (int k = 0; k < draws; k++) {
        double arg = std::arg(sample_haar_su4(rng)[0]);
        int b = std::min(7, static_cast<int>((arg + M_PI) / (2 * M_PI) * 8));
        bins[b]++;
    }
    for (int c : bins) {
        ASSERT_NEAR(c, 1000, 100);
    }
}

TEST(haar_random, deterministic_given_seed) {
    RngStream a(77), b(77);
    for (int k = 0; k < 10; k++) {
        ASSERT_EQ(sample_haar_su4(a), sample_haar_su4(b));
    }
}

TEST(permutation, validates_bijection) {
    ASSERT_THROW(QubitPermutation({0, 0}), std::invalid_argument);
    ASSERT_THROW(QubitPermutation({1, 2}), std::invalid_argument);
    ASSERT_NO_THROW(QubitPermutation({1, 0}));
    QubitPermutation p({2, 0, 1});
    ASSERT_EQ(p.inverse().mapping(), (std::vector<int>{1, 2, 0}));
    ASSERT_EQ(p.cycle_count(), 1);
    ASSERT_TRUE(QubitPermutation::identity(5).is_identity());
    ASSERT_EQ(QubitPermutation::identity(5).cycle_count(), 5);
}

TEST(permutation, single_qubit_is_identity) {
    RngStream rng(5);
    for (int k = 0; k < 100; k++) {
        ASSERT_TRUE(sample_permutation(rng, 1).is_identity());
    }
}

TEST(permutation, two_qubits_fair_coin) {
    RngStream rng(6);
    int swapped = 0;
    for (int k = 0; k < 10000; k++) {
        swapped += !sample_permutation(rng, 2).is_identity();
    }
    ASSERT_NEAR(swapped / 10000.0, 0.5, 0.02);
}

TEST(permutation, four_qubits_uniform) {
    RngStream rng(7);
    const int draws = 24000;
    std::map<std::vector<int>, int> counts;
    for (int k = 0; k < draws; k++) {
        counts[sample_permutation(rng, 4).mapping()]++;
    }
    ASSERT_EQ(counts.size(), 24u);
    const double expected = draws / 24.0;
    const double sigma = std::sqrt(draws * (1 / 24.0) * (23 / 24.0));
    double chi2 = 0;
    for (const auto &[perm, c] : counts) {
        ASSERT_NEAR(c, expected, 3 * sigma);
        chi2 += (c - expected) * (c - expected) / expected;
    }
    // 0.1% upper quantile of chi-square with 23 degrees of freedom.
    ASSERT_LT(chi2, 49.73);
}

TEST(permutation, to_swaps_examples) {
    ASSERT_TRUE(permutation_to_swaps(QubitPermutation::identity(4)).empty());
    auto s = permutation_to_swaps(QubitPermutation({1, 0}));
    ASSERT_EQ(s.size(), 1u);
    ASSERT_EQ(std::minmax(s[0].first, s[0].second), std::minmax(0, 1));
}

TEST(permutation, to_swaps_minimal_and_correct_exhaustive) {
    for (int n = 1; n <= 6; n++) {
        auto dist = transposition_distances(n);
        std::vector<int> m(n);
        std::iota(m.begin(), m.end(), 0);
        do {
            QubitPermutation p(m);
            auto swaps = permutation_to_swaps(p);
            ASSERT_EQ(static_cast<int>(swaps.size()), n - p.cycle_count());
            // The BFS distance of a permutation and of its inverse are equal.
            ASSERT_EQ(static_cast<int>(swaps.size()), dist.at(m));
            auto content = apply_swaps(n, swaps);
            for (int i = 0; i < n; i++) {
                ASSERT_EQ(content[p[i]], i);
            }
        } while (std::next_permutation(m.begin(), m.end()));
    }
}

TEST(rng, derive_seed_no_collisions) {
    std::set<std::uint64_t> seen;
    int total = 0;
    for (std::uint64_t s = 0; s < 10; s++) {
        for (std::uint64_t w = 2; w < 32; w++) {
            for (std::uint64_t t = 0; t < 34; t++) {
                seen.insert(derive_seed(s, w, t));
                total++;
            }
        }
    }
    ASSERT_GE(total, 10000);
    ASSERT_EQ(static_cast<int>(seen.size()), total);
}

TEST(rng, stream_basics) {
    RngStream a(3), b(3);
    for (int k = 0; k < 100; k++) {
        ASSERT_EQ(a.next_u64(), b.next_u64());
    }
    RngStream r(4);
    std::array<int, 7> hist{};
    for (int k = 0; k < 70000; k++) {
        double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        hist[r.uniform_below(7)]++;
    }
    for (int c : hist) {
        ASSERT_NEAR(c, 10000, 400);
    }
    ASSERT_EQ(r.uniform_below(1), 0u);
    RngStream base(9);
    ASSERT_NE(base.fork(1).seed(), base.fork(2).seed());
    ASSERT_EQ(base.fork(1).seed(), RngStream(9).fork(1).seed());
}

TEST(rng, normal_moments) {
    RngStream r(12);
    const int n = 100000;
    double s1 = 0, s2 = 0;
    for (int k = 0; k < n; k++) {
        double x = r.normal();
        s1 += x;
        s2 += x * x;
    }
    ASSERT_NEAR(s1 / n, 0.0, 0.02);
    ASSERT_NEAR(s2 / n, 1.0, 0.02);
}
