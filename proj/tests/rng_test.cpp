// Copyright 2026 The TGRE Authors
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

#include "tgre/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"

using namespace tgre;

// Known-answer vectors published with the Random123 reference implementation.
TEST(philox, known_answers) {
    EXPECT_EQ(philox4x32({0, 0, 0, 0}, {0, 0}),
              (std::array<std::uint32_t, 4>{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
              (std::array<std::uint32_t, 4>{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    EXPECT_EQ(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
              (std::array<std::uint32_t, 4>{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(counter_rng, pure_function_of_coordinates) {
    CounterRng a(42, 1, 7);
    CounterRng b(42, 1, 7);
    for (int i = 0; i < 100; ++i) {
        ASSERT_EQ(a(), b());
    }
    CounterRng other_index(42, 1, 8);
    CounterRng other_stream(42, 2, 7);
    CounterRng other_seed(43, 1, 7);
    CounterRng base(42, 1, 7);
    const auto first = base();
    EXPECT_NE(first, other_index());
    EXPECT_NE(first, other_stream());
    EXPECT_NE(first, other_seed());
}

TEST(counter_rng, uniform_moments) {
    CounterRng rng(1, 0, 0);
    const int n = 200000;
    double sum = 0;
    double sum2 = 0;
    for (int i = 0; i < n; ++i) {
        double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
        sum2 += u * u;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    // Standard error of the mean is sqrt(1/12/n) ~ 6.5e-4.
    EXPECT_NEAR(mean, 0.5, 5 * std::sqrt(1.0 / 12 / n));
    EXPECT_NEAR(var, 1.0 / 12, 2e-3);
}

TEST(counter_rng, below_is_in_range_and_unbiased) {
    CounterRng rng(9, 0, 0);
    std::vector<int> counts(7, 0);
    const int n = 70000;
    for (int i = 0; i < n; ++i) {
        auto v = rng.below(7);
        ASSERT_LT(v, 7u);
        ++counts[v];
    }
    double chi2 = 0;
    for (int c : counts) {
        chi2 += (c - n / 7.0) * (c - n / 7.0) / (n / 7.0);
    }
    // 6 degrees of freedom; the 0.999 quantile is 22.46.
    EXPECT_LT(chi2, 22.46);
}

TEST(counter_rng, shuffle_is_permutation) {
    CounterRng rng(3, 0, 0);
    std::vector<size_t> v(1000);
    std::iota(v.begin(), v.end(), size_t{0});
    rng.shuffle(std::span<size_t>(v));
    EXPECT_FALSE(std::is_sorted(v.begin(), v.end()));
    std::sort(v.begin(), v.end());
    for (size_t i = 0; i < v.size(); ++i) {
        ASSERT_EQ(v[i], i);
    }
}
