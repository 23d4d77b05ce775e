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
#include <optional>
#include <stdexcept>
#include <string>

#include "tgre/codes.hpp"

namespace tgre {

/// Thrown when an exhaustive search would exceed its enumeration budget.
class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_enumeration_budget = 1'000'000'000;

enum class DistanceMode { exact, estimated };

std::string to_string(DistanceMode mode);

/// Minimum weight found for one class of logical operators.
/// An empty weight means "unknown above the search bound".
struct ClassBound {
    std::optional<size_t> weight;
    std::optional<PauliOperator> certificate;
};

struct DistanceResult {
    ClassBound x;  ///< pure-X logicals
    ClassBound z;  ///< pure-Z logicals
    ClassBound y;  ///< logicals with both an X-part and a Z-part
    std::optional<size_t> d;
    DistanceMode mode = DistanceMode::exact;
    /// Candidates examined (exact) or randomized trials run (estimated).
    std::uint64_t search_effort = 0;
    /// Largest weight fully enumerated (exact mode only).
    size_t max_weight = 0;
};

/// Enumerates operators by increasing weight up to max_weight and reports, per class,
/// the least weight of an operator that commutes with every stabilizer but is not a stabilizer.
/// Throws BudgetExceeded when the projected enumeration exceeds budget.
DistanceResult exact_distance(
    const StabilizerCode &code, size_t max_weight, std::uint64_t budget = default_enumeration_budget);

/// Randomized information-set search over the normalizer of a CSS code. Each trial draws a column
/// permutation from (seed, trial), row-reduces the check matrix in that column order and keeps the
/// low-weight logical kernel elements carried by single non-pivot columns (exactly the low-weight
/// rows of the normalizer generator matrix in systematic form on the complementary information set).
/// Results are upper bounds and do not depend on the worker count.
/// With zero trials the bounds are the weights of the code's own logical operators.
DistanceResult estimate_distance(
    const StabilizerCode &code, std::uint64_t trials, std::uint64_t seed, unsigned workers = 0);

struct Theorem1Check {
    size_t expected = 0;
    size_t measured = 0;
    bool pass = false;
    PauliOperator witness;
};

/// Minimum weight over all nonempty products of Z-TGRE logical X generators, compared with
/// L for even L and L+1 for odd L. Brute force; requires 2 <= level <= 5.
Theorem1Check check_theorem1(int level);

struct Prop2Check {
    bool pass = false;
    size_t type2_weight = 0;
    /// Least weight over every stabilizer-equivalent form of every Type-2 logical.
    size_t min_equivalent_weight = 0;
    /// A form attaining min_equivalent_weight.
    PauliOperator witness;
    std::uint64_t group_elements = 0;
};

/// Exhaustive coset search: no stabilizer multiple of a Type-2 logical may be lighter than 1+2^(a+1).
Prop2Check check_prop2(const StabilizerCode &code, std::uint64_t budget = default_enumeration_budget);

}  // namespace tgre
