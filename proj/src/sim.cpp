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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tgre/parallel.hpp"

namespace tgre {

void NoiseModel::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("noise rate p must lie in [0, 1]");
    }
}

SymplecticVector sample_error(size_t n, const NoiseModel &model, CounterRng &rng) {
    model.validate();
    SymplecticVector e(n);
    const double third = model.p / 3.0;
    for (size_t i = 0; i < n; ++i) {
        const double u = rng.uniform();
        if (u >= model.p) {
            continue;
        }
        if (u < third) {
            e.x.set(i);
        } else if (u < 2.0 * third) {
            e.x.set(i);
            e.z.set(i);
        } else {
            e.z.set(i);
        }
    }
    return e;
}

namespace {

void fill_per_qubit(const StabilizerCode &code, const SymplecticVector &residual, ResidualClass &out) {
    const size_t k = code.k();
    out.per_qubit_fail.assign(k, false);
    out.block_fail = false;
    for (size_t q = 0; q < k; ++q) {
        if (symplectic_product(residual, code.logical_x_vectors()[q]) ||
            symplectic_product(residual, code.logical_z_vectors()[q])) {
            out.per_qubit_fail[q] = true;
            out.block_fail = true;
        }
    }
}

}  // namespace

ResidualClass classify_residual(const StabilizerCode &code, const SymplecticVector &residual) {
    for (size_t i = 0; i < code.stabilizer_vectors().size(); ++i) {
        if (symplectic_product(residual, code.stabilizer_vectors()[i])) {
            throw std::logic_error("classify_residual: residual anticommutes with " + code.stabilizer_name(i));
        }
    }
    ResidualClass out;
    fill_per_qubit(code, residual, out);
    return out;
}

ResidualClass classify_residual(const StabilizerCode &code, const PauliOperator &residual) {
    return classify_residual(code, code.to_symplectic(residual));
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (successes > trials) {
        throw std::invalid_argument("wilson_interval: more successes than trials");
    }
    if (trials == 0) {
        return {0.0, 1.0};
    }
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    // The score interval touches the boundary exactly at zero or full counts.
    return {successes == 0 ? 0.0 : std::max(0.0, centre - half), successes == trials ? 1.0 : std::min(1.0, centre + half)};
}

double SimReport::ler_block() const {
    return trials ? static_cast<double>(failures_block) / static_cast<double>(trials) : 0.0;
}

double SimReport::ler_slq(size_t q) const {
    return trials ? static_cast<double>(failures_per_qubit.at(q)) / static_cast<double>(trials) : 0.0;
}

double SimReport::ler_slq_avg() const {
    if (failures_per_qubit.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (size_t q = 0; q < failures_per_qubit.size(); ++q) {
        sum += ler_slq(q);
    }
    return sum / static_cast<double>(failures_per_qubit.size());
}

Interval SimReport::block_interval() const { return wilson_interval(failures_block, trials); }

Interval SimReport::slq_interval(size_t q) const { return wilson_interval(failures_per_qubit.at(q), trials); }

Interval SimReport::slq_avg_interval() const {
    const auto mean_failures = static_cast<std::uint64_t>(std::llround(ler_slq_avg() * static_cast<double>(trials)));
    return wilson_interval(mean_failures, trials);
}

SimReport &SimReport::operator+=(const SimReport &other) {
    trials += other.trials;
    failures_block += other.failures_block;
    unsatisfied += other.unsatisfied;
    if (failures_per_qubit.size() < other.failures_per_qubit.size()) {
        failures_per_qubit.resize(other.failures_per_qubit.size(), 0);
    }
    for (size_t q = 0; q < other.failures_per_qubit.size(); ++q) {
        failures_per_qubit[q] += other.failures_per_qubit[q];
    }
    return *this;
}

SimReport run_trials(
    const StabilizerCode &code,
    const NoiseModel &model,
    const DecoderConfig &cfg,
    std::uint64_t trials,
    std::uint64_t seed,
    unsigned workers) {
    model.validate();
    cfg.validate();
    if (trials < 1) {
        throw std::invalid_argument("run_trials: trials must be at least 1");
    }
    SimReport base;
    base.family = code.family();
    base.level = code.level();
    base.rate_param = code.rate_param();
    base.n = code.n();
    base.k = code.k();
    base.p = model.p;
    base.seed = seed;
    base.failures_per_qubit.assign(code.k(), 0);

    if (workers == 0) {
        workers = default_workers();
    }
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));
    std::vector<SimReport> partial(workers, base);
    parallel_chunks(trials, workers, [&](unsigned w, size_t begin, size_t end) {
        BpDecoder decoder(code, cfg);
        SimReport &local = partial[w];
        ResidualClass cls;
        for (size_t t = begin; t < end; ++t) {
            CounterRng rng(seed, noise_stream, t);
            SymplecticVector residual = sample_error(code.n(), model, rng);
            ++local.trials;
            if (residual.x.none() && residual.z.none()) {
                continue;
            }
            const auto &result = decoder.decode(syndrome(code, residual));
            residual *= result.correction;
            fill_per_qubit(code, residual, cls);
            if (!result.converged) {
                ++local.unsatisfied;
            }
            if (cls.block_fail || !result.converged) {
                ++local.failures_block;
            }
            for (size_t q = 0; q < cls.per_qubit_fail.size(); ++q) {
                local.failures_per_qubit[q] += cls.per_qubit_fail[q];
            }
        }
    });
    SimReport out = base;
    for (const auto &part : partial) {
        out += part;
    }
    return out;
}

std::optional<double> curve_crossing(const std::vector<SimReport> &a, const std::vector<SimReport> &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("curve_crossing: curves have different lengths");
    }
    auto usable = [](const SimReport &r) {
        const double rate = r.ler_slq_avg();
        const Interval ci = r.slq_avg_interval();
        return rate > 0.0 && 0.5 * (ci.high - ci.low) < 0.2 * rate;
    };
    std::optional<size_t> prev;
    double prev_diff = 0.0;
    for (size_t g = 0; g < a.size(); ++g) {
        if (!usable(a[g]) || !usable(b[g])) {
            continue;
        }
        const double diff = std::log(a[g].ler_slq_avg()) - std::log(b[g].ler_slq_avg());
        if (prev && prev_diff * diff < 0.0) {
            const double p0 = a[*prev].p;
            const double p1 = a[g].p;
            return p0 + (p1 - p0) * prev_diff / (prev_diff - diff);
        }
        prev = g;
        prev_diff = diff;
    }
    return std::nullopt;
}

ThresholdSweep analyze_curves(const std::vector<double> &p_grid, std::vector<std::vector<SimReport>> curves) {
    ThresholdSweep out;
    out.p_grid = p_grid;
    out.curves = std::move(curves);
    std::vector<double> found;
    for (size_t i = 0; i < out.curves.size(); ++i) {
        for (size_t j = i + 1; j < out.curves.size(); ++j) {
            Crossing c{i, j, curve_crossing(out.curves[i], out.curves[j])};
            if (c.p) {
                found.push_back(*c.p);
            }
            out.crossings.push_back(c);
        }
    }
    if (!found.empty()) {
        std::sort(found.begin(), found.end());
        const size_t m = found.size();
        out.median = m % 2 ? found[m / 2] : 0.5 * (found[m / 2 - 1] + found[m / 2]);
        out.min_crossing = found.front();
        out.max_crossing = found.back();
    }
    return out;
}

ThresholdSweep sweep_threshold(
    const std::vector<const StabilizerCode *> &codes,
    const std::vector<double> &p_grid,
    const DecoderConfig &cfg,
    std::uint64_t trials,
    std::uint64_t seed,
    unsigned workers) {
    if (codes.size() < 2) {
        throw std::invalid_argument("sweep_threshold needs at least two codes");
    }
    if (p_grid.size() < 2) {
        throw std::invalid_argument("sweep_threshold needs at least two grid points");
    }
    std::vector<std::vector<SimReport>> curves;
    for (const StabilizerCode *code : codes) {
        std::vector<SimReport> curve;
        for (double p : p_grid) {
            DecoderConfig point_cfg = cfg;
            point_cfg.prior_p = p;
            curve.push_back(run_trials(*code, NoiseModel{p}, point_cfg, trials, seed, workers));
        }
        curves.push_back(std::move(curve));
    }
    return analyze_curves(p_grid, std::move(curves));
}

}  // namespace tgre
