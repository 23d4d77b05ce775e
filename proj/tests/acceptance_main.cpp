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

// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tgre/acceptance.hpp"

int main(int argc, char **argv) {
    CLI::App app{"TGRE acceptance suite"};
    tgre::AcceptanceOptions options;
    app.add_option("--only", options.only, "Criterion ids to run")->delimiter(',');
    app.add_option("--workers", options.workers, "Workers for the first run of stochastic criteria");
    app.add_option("--artifacts", options.artifact_dir, "Directory for CSV outputs");
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    size_t count = 0;
    tgre::run_acceptance(options, [&](const tgre::CriterionResult &r) {
        std::cout << tgre::format_result(r) << std::endl;
        all = all && r.pass;
        ++count;
    });
    std::cout << (all ? "all " : "not all ") << count << " criteria passed" << std::endl;
    return all ? 0 : 1;
}
