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
#include <string_view>
#include <vector>

#include "tgre/codes.hpp"
#include "tgre/gf2.hpp"

namespace tgre {

enum class Schedule { flooding, serial };

std::string to_string(Schedule schedule);
/// Accepts "flooding" or "serial".
Schedule parse_schedule(std::string_view text);

struct DecoderConfig {
    size_t max_iterations = 100;
    Schedule schedule = Schedule::serial;
    double damping = 0.0;
    /// Physical depolarizing rate used to build the priors.
    double prior_p = 0.01;
    /// Decode the Z component first and condition the X component on it.
    bool z_first = false;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

struct DecodeOutcome {
    PauliOperator correction;
    bool converged = false;
    size_t iterations_used = 0;
};

/// Bit i is the symplectic product of stabilizer i with the error.
BitVector syndrome(const StabilizerCode &code, const PauliOperator &error);
BitVector syndrome(const StabilizerCode &code, const SymplecticVector &error);

/// Sum-product BP on a single binary check matrix, log domain.
class BinaryBp {
   public:
    BinaryBp() = default;
    BinaryBp(const BitMatrix &checks);

    size_t num_checks() const noexcept { return offsets_.size() - 1; }
    size_t num_vars() const noexcept { return num_vars_; }

    struct Run {
        bool converged = false;
        size_t iterations = 0;
    };

    /// Decodes check syndrome s (one bit per row of checks) given per-variable prior LLRs
    /// log(P(0)/P(1)). Writes the hard decision into decision.
    Run run(const std::vector<std::uint8_t> &s,
            const std::vector<double> &prior_llr,
            const DecoderConfig &cfg,
            std::vector<std::uint8_t> &decision);

   private:
    bool satisfied(const std::vector<std::uint8_t> &s, const std::vector<std::uint8_t> &decision) const;
    void check_update(size_t c, bool flip, double damping);

    size_t num_vars_ = 0;
    std::vector<size_t> offsets_{0};
    std::vector<std::uint32_t> edge_var_;
    std::vector<std::vector<std::uint32_t>> var_edges_;
    std::vector<double> check_msg_;
    std::vector<double> var_msg_;
    std::vector<double> posterior_;
    std::vector<double> forward_;
};

/// Two-stage decoupled BP for CSS-form codes. Not thread-safe; use one instance per thread.
class BpDecoder {
   public:
    BpDecoder(const StabilizerCode &code, DecoderConfig cfg);

    struct Result {
        SymplecticVector correction;
        bool converged = false;
        size_t iterations = 0;
    };

    /// s is ordered as code.stabilizers().
    const Result &decode(const BitVector &s);
    DecodeOutcome decode_outcome(const BitVector &s);

    const DecoderConfig &config() const noexcept { return cfg_; }

   private:
    const StabilizerCode &code_;
    DecoderConfig cfg_;
    BinaryBp x_stage_;  // Z-type checks, finds X components.
    BinaryBp z_stage_;  // X-type checks, finds Z components.
    std::vector<std::uint8_t> x_syndrome_;
    std::vector<std::uint8_t> z_syndrome_;
    std::vector<std::uint8_t> x_hat_;
    std::vector<std::uint8_t> z_hat_;
    std::vector<double> prior_;
    Result result_;
};

/// Convenience wrapper building a fresh decoder.
DecodeOutcome decode(const StabilizerCode &code, const BitVector &s, const DecoderConfig &cfg);

}  // namespace tgre
