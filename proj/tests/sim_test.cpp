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

#include "tgre/sim.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "tgre/codes.hpp"
#include "tgre/decoder.hpp"

using namespace tgre;

namespace {

SimReport synthetic_point(double p, double rate, std::uint64_t trials = 100000) {
    SimReport r;
    r.p = p;
    r.k = 1;
    r.trials = trials;
    r.failures_block = static_cast<std::uint64_t>(std::llround(rate * static_cast<double>(trials)));
    r.failures_per_qubit = {r.failures_block};
    return r;
}

std::vector<SimReport> synthetic_curve(const std::vector<double> &p, double scale, double slope) {
    std::vector<SimReport> curve;
    for (double x : p) {
        curve.push_back(synthetic_point(x, scale * std::pow(x, slope)));
    }
    return curve;
}

}  // namespace

TEST(sample_error, zero_rate_is_identity) {
    for (std::uint64_t t = 0; t < 20; ++t) {
        CounterRng rng(1, noise_stream, t);
        EXPECT_TRUE(sample_error(50, NoiseModel{0.0}, rng).is_identity());
    }
}

TEST(sample_error, full_rate_splits_evenly) {
    size_t counts[3] = {0, 0, 0};
    CounterRng rng(3, noise_stream, 0);
    const SymplecticVector e = sample_error(30000, NoiseModel{1.0}, rng);
    for (size_t q = 0; q < e.num_qubits(); ++q) {
        const bool x = e.x.get(q);
        const bool z = e.z.get(q);
        ASSERT_TRUE(x || z);
        ++counts[x && z ? 1 : (x ? 0 : 2)];
    }
    double chi2 = 0;
    for (size_t c : counts) {
        const double d = static_cast<double>(c) - 10000.0;
        chi2 += d * d / 10000.0;
    }
    // 99.9% quantile of chi-square with two degrees of freedom.
    EXPECT_LT(chi2, 13.82);
}

TEST(sample_error, marginal_rate) {
    const double p = 0.3;
    const size_t n = 100000;
    CounterRng rng(5, noise_stream, 0);
    const size_t w = sample_error(n, NoiseModel{p}, rng).weight();
    const double sigma = std::sqrt(p * (1 - p) * n);
    EXPECT_LT(std::abs(static_cast<double>(w) - p * n), 5 * sigma);
}

TEST(sample_error, rejects_bad_rates) {
    CounterRng rng(0, 0, 0);
    EXPECT_THROW(sample_error(4, NoiseModel{-0.1}, rng), std::invalid_argument);
    EXPECT_THROW(sample_error(4, NoiseModel{1.5}, rng), std::invalid_argument);
}

TEST(classify_residual, stabilizers_are_harmless) {
    const StabilizerCode code = build_xztgre(4, 1);
    EXPECT_FALSE(classify_residual(code, PauliOperator{}).block_fail);
    for (const auto &s : code.stabilizers()) {
        const ResidualClass c = classify_residual(code, s);
        EXPECT_FALSE(c.block_fail);
        EXPECT_EQ(c.per_qubit_fail, std::vector<bool>(code.k(), false));
    }
}

TEST(classify_residual, logical_flags_its_own_qubit) {
    const StabilizerCode code = build_xztgre(4, 1);
    ASSERT_EQ(code.k(), 8u);
    for (size_t q = 0; q < code.k(); ++q) {
        std::vector<bool> expected(code.k(), false);
        expected[q] = true;
        for (const PauliOperator &op : {code.logical_z()[q], code.logical_x()[q] * code.stabilizers()[0]}) {
            const ResidualClass c = classify_residual(code, op);
            EXPECT_TRUE(c.block_fail);
            EXPECT_EQ(c.per_qubit_fail, expected);
        }
    }
}

TEST(classify_residual, rejects_detectable_residuals) {
    const StabilizerCode code = build_xztgre(3, 1);
    try {
        classify_residual(code, parse_pauli("Z2"));
        FAIL() << "expected logic_error";
    } catch (const std::logic_error &e) {
        EXPECT_NE(std::string(e.what()).find("S'_1"), std::string::npos) << e.what();
    }
}

TEST(wilson_interval, known_values) {
    const Interval a = wilson_interval(0, 10);
    EXPECT_EQ(a.low, 0.0);
    EXPECT_NEAR(a.high, 0.27753, 1e-4);
    const Interval b = wilson_interval(5, 10);
    EXPECT_NEAR(b.low, 0.23659, 1e-4);
    EXPECT_NEAR(b.high, 0.76341, 1e-4);
    const Interval c = wilson_interval(10, 10);
    EXPECT_EQ(c.high, 1.0);
    EXPECT_NEAR(c.low, 1.0 - a.high, 1e-12);
    EXPECT_THROW(wilson_interval(3, 2), std::invalid_argument);
    const Interval empty = wilson_interval(0, 0);
    EXPECT_EQ(empty.low, 0.0);
    EXPECT_EQ(empty.high, 1.0);
}

TEST(run_trials, zero_noise_never_fails) {
    const StabilizerCode code = build_xztgre(3, 1);
    const SimReport r = run_trials(code, NoiseModel{0.0}, DecoderConfig{}, 500, 1);
    EXPECT_EQ(r.trials, 500u);
    EXPECT_EQ(r.failures_block, 0u);
    EXPECT_EQ(r.unsatisfied, 0u);
    EXPECT_EQ(r.failures_per_qubit, std::vector<std::uint64_t>(code.k(), 0));
}

TEST(run_trials, independent_of_worker_count) {
    const StabilizerCode code = build_xztgre(4, 1);
    DecoderConfig cfg;
    cfg.prior_p = 0.07;
    const SimReport one = run_trials(code, NoiseModel{0.07}, cfg, 600, 42, 1);
    const SimReport three = run_trials(code, NoiseModel{0.07}, cfg, 600, 42, 3);
    EXPECT_EQ(one, three);
    const SimReport other_seed = run_trials(code, NoiseModel{0.07}, cfg, 600, 43, 1);
    EXPECT_FALSE(one == other_seed);
}

TEST(run_trials, accounting_invariants) {
    const StabilizerCode code = build_xztgre(4, 1);
    DecoderConfig cfg;
    cfg.prior_p = 0.1;
    const SimReport r = run_trials(code, NoiseModel{0.1}, cfg, 800, 9);
    EXPECT_EQ(r.n, code.n());
    EXPECT_EQ(r.k, code.k());
    EXPECT_EQ(r.level, 4);
    EXPECT_EQ(r.rate_param, 1);
    EXPECT_LE(r.unsatisfied, r.failures_block);
    std::uint64_t total = 0;
    for (std::uint64_t f : r.failures_per_qubit) {
        EXPECT_LE(f, r.failures_block);
        total += f;
    }
    EXPECT_GE(total + r.unsatisfied, r.failures_block);
    EXPECT_NEAR(r.ler_slq_avg(), static_cast<double>(total) / (800.0 * code.k()), 1e-12);
    EXPECT_GT(r.failures_block, 0u);
}

TEST(run_trials, error_rate_grows_with_noise) {
    const StabilizerCode code = build_xztgre(3, 1);
    DecoderConfig low_cfg;
    low_cfg.prior_p = 0.01;
    DecoderConfig high_cfg;
    high_cfg.prior_p = 0.05;
    const SimReport low = run_trials(code, NoiseModel{0.01}, low_cfg, 3000, 2);
    const SimReport high = run_trials(code, NoiseModel{0.05}, high_cfg, 3000, 2);
    EXPECT_LT(low.ler_block(), high.ler_block());
}

TEST(run_trials, longer_code_wins_at_low_noise) {
    DecoderConfig cfg;
    cfg.prior_p = 0.03;
    const SimReport small = run_trials(build_xztgre(3, 1), NoiseModel{0.03}, cfg, 3000, 3);
    const SimReport large = run_trials(build_xztgre(5, 1), NoiseModel{0.03}, cfg, 3000, 3);
    EXPECT_LT(large.ler_slq_avg(), small.ler_slq_avg());
}

TEST(sim_report, merging_adds_counts) {
    SimReport a = synthetic_point(0.05, 0.1, 1000);
    const SimReport b = synthetic_point(0.05, 0.2, 1000);
    a += b;
    EXPECT_EQ(a.trials, 2000u);
    EXPECT_EQ(a.failures_block, 300u);
    EXPECT_EQ(a.failures_per_qubit, std::vector<std::uint64_t>{300});
    EXPECT_NEAR(a.ler_block(), 0.15, 1e-12);
}

TEST(curve_crossing, synthetic_power_laws) {
    // a = 4p^2 and b = 64p^4 meet at p = 0.25; the oracle is exact so only grid
    // interpolation error remains.
    const std::vector<double> grid{0.15, 0.2, 0.3, 0.35};
    const auto a = synthetic_curve(grid, 4, 2);
    const auto b = synthetic_curve(grid, 64, 4);
    const auto crossing = curve_crossing(a, b);
    ASSERT_TRUE(crossing.has_value());
    // Logs are linear in log p, not in p, so allow for interpolation error.
    EXPECT_NEAR(*crossing, 0.25, 0.01);
    EXPECT_EQ(curve_crossing(b, a), crossing);
}

TEST(curve_crossing, parallel_curves_never_cross) {
    const std::vector<double> grid{0.05, 0.06, 0.07};
    EXPECT_FALSE(curve_crossing(synthetic_curve(grid, 1, 2), synthetic_curve(grid, 2, 2)).has_value());
}

TEST(curve_crossing, noisy_points_are_skipped) {
    const std::vector<double> grid{0.15, 0.2, 0.3, 0.35};
    auto a = synthetic_curve(grid, 4, 2);
    auto b = synthetic_curve(grid, 64, 4);
    // Too few trials at the middle points: the Wilson half-width exceeds 20% of the rate.
    a[1] = synthetic_point(grid[1], a[1].ler_block(), 20);
    a[2] = synthetic_point(grid[2], a[2].ler_block(), 20);
    const auto crossing = curve_crossing(a, b);
    ASSERT_TRUE(crossing.has_value());
    EXPECT_GT(*crossing, 0.15);
    EXPECT_LT(*crossing, 0.35);
}

TEST(analyze_curves, median_of_pairs) {
    const std::vector<double> grid{0.15, 0.2, 0.3};
    const ThresholdSweep sweep =
        analyze_curves(grid, {synthetic_curve(grid, 4, 2), synthetic_curve(grid, 64, 4), synthetic_curve(grid, 1024, 6)});
    ASSERT_EQ(sweep.crossings.size(), 3u);
    ASSERT_TRUE(sweep.median.has_value());
    EXPECT_NEAR(*sweep.median, 0.25, 0.01);
    EXPECT_LE(*sweep.min_crossing, *sweep.median);
    EXPECT_GE(*sweep.max_crossing, *sweep.median);
}

TEST(sweep_threshold, preconditions) {
    const StabilizerCode code = build_xztgre(3, 1);
    EXPECT_THROW(sweep_threshold({&code}, {0.05, 0.06}, DecoderConfig{}, 10, 1), std::invalid_argument);
    EXPECT_THROW(sweep_threshold({&code, &code}, {0.05}, DecoderConfig{}, 10, 1), std::invalid_argument);
}
