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
#include <cstdint>
#include <optional>
#include <vector>

#include "tgre/codes.hpp"
#include "tgre/decoder.hpp"
#include "tgre/gf2.hpp"
#include "tgre/rng.hpp"

namespace tgre {

/// Stream id used for per-trial noise draws.
inline constexpr std::uint32_t noise_stream = 2;

/// Code-capacity depolarizing channel: X, Y, Z each with probability p/3.
struct NoiseModel {
    double p = 0.0;

    void validate() const;
};

SymplecticVector sample_error(size_t n, const NoiseModel &model, CounterRng &rng);

struct ResidualClass {
    bool block_fail = false;
    std::vector<bool> per_qubit_fail;
};

/// Logical qubit i fails when the residual anticommutes with X-bar_i or Z-bar_i.
/// Throws std::logic_error if the residual anticommutes with a stabilizer.
ResidualClass classify_residual(const StabilizerCode &code, const PauliOperator &residual);
ResidualClass classify_residual(const StabilizerCode &code, const SymplecticVector &residual);

struct Interval {
    double low = 0.0;
    double high = 0.0;
};

/// Wilson score interval for successes out of trials at the given normal quantile.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

struct SimReport {
    Family family = Family::xztgre;
    int level = 0;
    int rate_param = 0;
    size_t n = 0;
    size_t k = 0;
    double p = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t failures_block = 0;
    /// Decodes whose correction left part of the syndrome unexplained. Always block failures.
    std::uint64_t unsatisfied = 0;
    std::vector<std::uint64_t> failures_per_qubit;

    double ler_block() const;
    double ler_slq(size_t q) const;
    double ler_slq_avg() const;
    Interval block_interval() const;
    Interval slq_interval(size_t q) const;
    /// Wilson interval of the averaged rate, treating its mean failure count as out of trials.
    Interval slq_avg_interval() const;

    SimReport &operator+=(const SimReport &other);
    bool operator==(const SimReport &) const = default;
};

/// Monte Carlo over trials; trial t draws its noise from CounterRng(seed, noise_stream, t),
/// so the report does not depend on the worker count.
SimReport run_trials(
    const StabilizerCode &code,
    const NoiseModel &model,
    const DecoderConfig &cfg,
    std::uint64_t trials,
    std::uint64_t seed,
    unsigned workers = 0);

struct Crossing {
    size_t first = 0;
    size_t second = 0;
    std::optional<double> p;
};

struct ThresholdSweep {
    std::vector<double> p_grid;
    /// curves[c][g] is code c at p_grid[g].
    std::vector<std::vector<SimReport>> curves;
    std::vector<Crossing> crossings;
    std::optional<double> median;
    std::optional<double> min_crossing;
    std::optional<double> max_crossing;
};

/// Lowest p at which the log of a's averaged per-qubit rate crosses b's, by linear
/// interpolation between adjacent grid points. Points whose Wilson half-width is not below
/// 20% of the rate are skipped.
std::optional<double> curve_crossing(const std::vector<SimReport> &a, const std::vector<SimReport> &b);

/// Pairwise crossings and their median for precomputed curves on a shared grid.
ThresholdSweep analyze_curves(const std::vector<double> &p_grid, std::vector<std::vector<SimReport>> curves);

/// Runs every code at every grid point with the decoder prior set to that point, then
/// takes the median of all pairwise crossings.
ThresholdSweep sweep_threshold(
    const std::vector<const StabilizerCode *> &codes,
    const std::vector<double> &p_grid,
    const DecoderConfig &cfg,
    std::uint64_t trials,
    std::uint64_t seed,
    unsigned workers = 0);

}  // namespace tgre
