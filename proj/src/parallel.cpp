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

#include "tgre/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tgre {

unsigned default_workers() {
    if (const char *env = std::getenv("TGRE_WORKERS"); env != nullptr && *env != '\0') {
        try {
            int v = std::stoi(env);
            if (v >= 1) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception &) {
        }
        throw std::invalid_argument(std::string("TGRE_WORKERS must be a positive integer, got '") + env + "'");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_chunks(size_t count, unsigned workers, const std::function<void(unsigned, size_t, size_t)> &body) {
    workers = std::max(1u, workers);
    if (workers == 1 || count <= 1) {
        body(0, 0, count);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        size_t begin = count * w / workers;
        size_t end = count * (w + 1) / workers;
        threads.emplace_back([&, w, begin, end] {
            try {
                body(w, begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace tgre
