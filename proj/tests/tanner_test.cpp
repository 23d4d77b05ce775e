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

#include "tgre/tanner.hpp"

#include <map>

#include "gtest/gtest.h"

using namespace tgre;

using Checks = std::vector<std::vector<Label>>;

TEST(tanner, base_case) {
    EXPECT_EQ(expand_g(1).checks, (Checks{{1, 2}}));
    EXPECT_EQ(expand_gprime(1).checks, (Checks{{1, 2}}));
}

TEST(tanner, plain_small_levels) {
    EXPECT_EQ(expand_g(2).checks, (Checks{{1, 2, 3}, {1, 3, 4}}));
    EXPECT_EQ(expand_g(3).checks, (Checks{{1, 2, 3, 5}, {1, 3, 4, 7}, {1, 5, 6, 7}, {3, 5, 7, 8}}));
}

TEST(tanner, prime_small_levels) {
    EXPECT_EQ(expand_gprime(2).checks, (Checks{{1, 2, 4}, {2, 3, 4}}));
    EXPECT_EQ(expand_gprime(3).checks, (Checks{{1, 2, 4, 6}, {2, 3, 4, 8}, {2, 5, 6, 8}, {4, 6, 7, 8}}));
}

TEST(tanner, structural_invariants) {
    for (int level = 1; level <= 10; ++level) {
        for (auto g : {expand_g(level), expand_gprime(level)}) {
            const size_t n = size_t{1} << level;
            ASSERT_EQ(g.checks.size(), n / 2);
            std::map<Label, int> occurrences;
            for (const auto &c : g.checks) {
                ASSERT_EQ(c.size(), static_cast<size_t>(level + 1));
                ASSERT_TRUE(std::is_sorted(c.begin(), c.end()));
                for (Label u : c) {
                    ASSERT_GE(u, 1u);
                    ASSERT_LE(u, n);
                    ++occurrences[u];
                }
            }
            EXPECT_EQ(occurrences.size(), n);
            const bool plain = g.kind == TannerGraph::Kind::plain;
            for (size_t i = 1; i <= g.checks.size(); ++i) {
                const Label unique = plain ? static_cast<Label>(2 * i) : static_cast<Label>(2 * i - 1);
                const auto &c = g.checks[i - 1];
                ASSERT_TRUE(std::binary_search(c.begin(), c.end(), unique)) << "level " << level << " check " << i;
                ASSERT_EQ(occurrences[unique], 1);
            }
        }
    }
}

TEST(tanner, relabel_odd_blocks) {
    const auto g3 = expand_g(3);
    EXPECT_EQ(relabel_odd(g3, 0, 3).checks,
              (Checks{{1, 3, 5, 9}, {1, 5, 7, 13}, {1, 9, 11, 13}, {5, 9, 13, 15}}));
    EXPECT_EQ(relabel_odd(g3, 1, 3).checks.front(), (std::vector<Label>{17, 19, 21, 25}));
    EXPECT_EQ(relabel_odd(expand_g(1), 0, 1).checks, (Checks{{1, 3}}));
    EXPECT_THROW(relabel_odd(g3, 2, 3), std::invalid_argument);
}

TEST(tanner, relabel_even_doubles) {
    EXPECT_EQ(relabel_even(expand_gprime(2)).checks, (Checks{{2, 4, 8}, {4, 6, 8}}));
}

TEST(tanner, rejects_bad_levels) {
    EXPECT_THROW(expand_g(0), std::invalid_argument);
    EXPECT_THROW(expand_gprime(-1), std::invalid_argument);
}
