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

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace tgre {

/// Philox4x32-10 block function.
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t m0 = 0xD2511F53u;
    constexpr std::uint32_t m1 = 0xCD9E8D57u;
    constexpr std::uint32_t w0 = 0x9E3779B9u;
    constexpr std::uint32_t w1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        std::uint64_t p0 = std::uint64_t{m0} * ctr[0];
        std::uint64_t p1 = std::uint64_t{m1} * ctr[2];
        ctr = {
            static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
            static_cast<std::uint32_t>(p1),
            static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
            static_cast<std::uint32_t>(p0),
        };
        key[0] += w0;
        key[1] += w1;
    }
    return ctr;
}

/// Counter-based generator: the stream is a pure function of (seed, stream, index),
/// so work items can be scheduled on any worker without changing their draws.
/// Satisfies UniformRandomBitGenerator.
class CounterRng {
   public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint32_t stream, std::uint64_t index)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          index_lo_(static_cast<std::uint32_t>(index)),
          index_hi_(static_cast<std::uint32_t>(index >> 32)),
          stream_(stream) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        if (pos_ == 2) {
            block_ = philox4x32({block_counter_++, index_lo_, index_hi_, stream_}, key_);
            pos_ = 0;
        }
        std::uint64_t out = (std::uint64_t{block_[2 * pos_]} << 32) | block_[2 * pos_ + 1];
        ++pos_;
        return out;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = max() - max() % bound;
        std::uint64_t r;
        do {
            r = (*this)();
        } while (r >= limit);
        return r % bound;
    }

    template <typename T>
    void shuffle(std::span<T> values) {
        for (size_t i = values.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

   private:
    std::array<std::uint32_t, 2> key_;
    std::uint32_t index_lo_;
    std::uint32_t index_hi_;
    std::uint32_t stream_;
    std::uint32_t block_counter_ = 0;
    std::array<std::uint32_t, 4> block_{};
    int pos_ = 2;
};

}  // namespace tgre
