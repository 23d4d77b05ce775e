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
#include <functional>

namespace tgre {

/// Worker count from TGRE_WORKERS, falling back to the hardware concurrency (at least 1).
unsigned default_workers();

/// Splits [0, count) into contiguous chunks, one per worker, and runs
/// body(worker, begin, end) on each. Rethrows the first worker exception.
void parallel_chunks(size_t count, unsigned workers, const std::function<void(unsigned, size_t, size_t)> &body);

}  // namespace tgre
