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

#include <cstddef>
#include <string>
#include <vector>

#include "tgre/codes.hpp"

/// Reference listings and parameters transcribed from the original publication.
namespace tgre::golden {

/// Operators in compact form ("Z1Z3Z9"), stabilizers in listing order.
struct Listing {
    int level;
    int a;
    std::vector<std::string> stabilizers;
    std::vector<std::string> logical_x;
    std::vector<std::string> logical_z;
};

struct DistanceRow {
    int level;
    int a;
    size_t n;
    size_t x;
    size_t z;
    size_t y;
    size_t d;
    Rational rate;
};

const std::vector<Listing> &ztgre_listings();
/// Includes the misprinted second X-type stabilizer.
const Listing &xztgre_3_1_printed();
const std::vector<DistanceRow> &distance_rows();

}  // namespace tgre::golden
