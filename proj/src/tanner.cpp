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

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tgre {

namespace {

// Cross-label offset: 1 for plain (odd cross-labels), 0 for prime (even cross-labels).
TannerGraph expand(int level, TannerGraph::Kind kind) {
    if (level < 1) {
        throw std::invalid_argument("Tanner graph level must be >= 1, got " + std::to_string(level));
    }
    if (level > 30) {
        throw std::invalid_argument("Tanner graph level too large: " + std::to_string(level));
    }
    const Label odd_shift = kind == TannerGraph::Kind::plain ? 1 : 0;
    std::vector<std::vector<Label>> checks{{1, 2}};
    for (int l = 2; l <= level; ++l) {
        const Label half = Label{1} << (l - 1);
        const size_t prev = checks.size();
        std::vector<std::vector<Label>> next(2 * prev);
        for (size_t i = 0; i < prev; ++i) {
            const Label cross = static_cast<Label>(2 * (i + 1)) - odd_shift;
            auto &first = next[i];
            first = checks[i];
            first.push_back(half + cross);

            auto &second = next[prev + i];
            second.reserve(checks[i].size() + 1);
            second.push_back(cross);
            for (Label u : checks[i]) {
                second.push_back(u + half);
            }
            std::sort(first.begin(), first.end());
            std::sort(second.begin(), second.end());
        }
        checks = std::move(next);
    }
    return TannerGraph{level, kind, std::move(checks)};
}

template <typename F>
TannerGraph map_labels(const TannerGraph &g, F f) {
    TannerGraph out{g.level, g.kind, {}};
    out.checks.reserve(g.checks.size());
    for (const auto &check : g.checks) {
        std::vector<Label> mapped;
        mapped.reserve(check.size());
        for (Label u : check) {
            mapped.push_back(f(u));
        }
        std::sort(mapped.begin(), mapped.end());
        out.checks.push_back(std::move(mapped));
    }
    return out;
}

}  // namespace

TannerGraph expand_g(int level) { return expand(level, TannerGraph::Kind::plain); }

TannerGraph expand_gprime(int level) { return expand(level, TannerGraph::Kind::prime); }

TannerGraph relabel_odd(const TannerGraph &g, int block, int total_level) {
    if (block != 0 && block != 1) {
        throw std::invalid_argument("relabel_odd: block must be 0 or 1, got " + std::to_string(block));
    }
    if (total_level < 1 || total_level > 29) {
        throw std::invalid_argument("relabel_odd: invalid total level " + std::to_string(total_level));
    }
    const Label offset = static_cast<Label>(block) * (Label{1} << (total_level + 1));
    return map_labels(g, [offset](Label u) { return 2 * u - 1 + offset; });
}

TannerGraph relabel_even(const TannerGraph &g) {
    return map_labels(g, [](Label u) { return 2 * u; });
}

}  // namespace tgre
