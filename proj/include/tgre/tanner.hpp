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

#pragma once

#include <cstdint>
#include <vector>

namespace tgre {

/// Qubit (variable node) label. Labels are 1-based and may be gapped.
using Label = std::uint32_t;

/// Recursively expanded Tanner graph: an ordered list of check-node supports.
struct TannerGraph {
    enum class Kind { plain, prime };

    int level = 0;
    Kind kind = Kind::plain;
    /// Each check is sorted ascending.
    std::vector<std::vector<Label>> checks;

    bool operator==(const TannerGraph &) const = default;
};

/// G_L: base [{1,2}]; each level joins two copies of the previous graph with odd cross-labels.
TannerGraph expand_g(int level);
/// G'_L: same recursion as expand_g with even cross-labels.
TannerGraph expand_gprime(int level);

/// Maps label u to 2u-1 + block * 2^(total_level+1). block must be 0 or 1.
TannerGraph relabel_odd(const TannerGraph &g, int block, int total_level);
/// Maps label u to 2u.
TannerGraph relabel_even(const TannerGraph &g);

}  // namespace tgre
