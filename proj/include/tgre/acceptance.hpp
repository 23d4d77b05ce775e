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
#include <functional>
#include <string>
#include <vector>

namespace tgre {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

struct AcceptanceOptions {
    /// Criterion ids to run; empty runs all twelve.
    std::vector<int> only;
    std::uint64_t distance_seed = 20260101;
    std::uint64_t sim_seed = 7;
    std::uint64_t distance_trials = 100000;
    std::uint64_t sim_trials = 10000;
    /// Worker count for the first run of stochastic criteria; 0 means default_workers().
    unsigned workers = 0;
    /// When set, CSV outputs of the stochastic criteria are written here.
    std::string artifact_dir;
};

/// Runs the acceptance criteria in id order, reporting each result as it completes.
/// A criterion passes only if its check holds and it finished within its runtime budget.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions &options, const std::function<void(const CriterionResult &)> &on_result = {});

/// "PASS  3 structural validation (1.2 s / 30 s): detail".
std::string format_result(const CriterionResult &r);

}  // namespace tgre
