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

#include "tgre/distance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "tgre/parallel.hpp"
#include "tgre/rng.hpp"

namespace tgre {

namespace {

long double binomial(size_t n, size_t k) {
    if (k > n) {
        return 0;
    }
    long double r = 1;
    for (size_t i = 1; i <= k; ++i) {
        r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    }
    return r;
}

std::optional<size_t> min_known(const DistanceResult &r) {
    std::optional<size_t> d;
    for (const ClassBound *c : {&r.x, &r.z, &r.y}) {
        if (c->weight && (!d || *c->weight < *d)) {
            d = c->weight;
        }
    }
    return d;
}

/// Calls visit(combo) for every weight-w subset of columns whose XOR is zero.
/// Columns are packed syndromes of num_words words each.
void for_each_zero_sum(
    const std::vector<std::uint64_t> &columns,
    size_t num_columns,
    size_t num_words,
    size_t w,
    const std::function<void(const std::vector<size_t> &)> &visit) {
    if (w == 0 || w > num_columns) {
        return;
    }
    std::vector<size_t> combo(w);
    std::vector<std::uint64_t> acc((w + 1) * num_words, 0);
    std::function<void(size_t, size_t)> rec = [&](size_t depth, size_t start) {
        const std::uint64_t *prev = acc.data() + depth * num_words;
        std::uint64_t *cur = acc.data() + (depth + 1) * num_words;
        const size_t last = num_columns - (w - depth);
        for (size_t c = start; c <= last; ++c) {
            const std::uint64_t *col = columns.data() + c * num_words;
            combo[depth] = c;
            if (depth + 1 == w) {
                bool zero = true;
                for (size_t k = 0; k < num_words; ++k) {
                    if (prev[k] ^ col[k]) {
                        zero = false;
                        break;
                    }
                }
                if (zero) {
                    visit(combo);
                }
            } else {
                for (size_t k = 0; k < num_words; ++k) {
                    cur[k] = prev[k] ^ col[k];
                }
                rec(depth + 1, c + 1);
            }
        }
    };
    rec(0, 0);
}

/// Column-major packing of a check matrix: the syndrome of a single bit flip on each column.
std::vector<std::uint64_t> pack_columns(const BitMatrix &checks, size_t &num_words) {
    BitMatrix t = checks.transposed();
    num_words = std::max<size_t>(1, t.words_per_row());
    std::vector<std::uint64_t> out(t.rows() * num_words, 0);
    for (size_t c = 0; c < t.rows(); ++c) {
        auto row = t.row(c);
        std::copy(row.begin(), row.end(), out.begin() + c * num_words);
    }
    return out;
}

struct KernelElement {
    BitVector bits;
    bool logical;
};

PauliOperator x_operator(const StabilizerCode &code, const BitVector &x) {
    return code.from_symplectic(SymplecticVector(x, BitVector(code.n())));
}

PauliOperator z_operator(const StabilizerCode &code, const BitVector &z) {
    return code.from_symplectic(SymplecticVector(BitVector(code.n()), z));
}

size_t union_weight(const BitVector &a, const BitVector &b) {
    size_t total = 0;
    auto aw = a.words();
    auto bw = b.words();
    for (size_t k = 0; k < aw.size(); ++k) {
        total += std::popcount(aw[k] | bw[k]);
    }
    return total;
}

DistanceResult exact_css(const StabilizerCode &code, size_t max_weight) {
    const size_t n = code.n();
    const BitMatrix hx = code.x_check_matrix();
    const BitMatrix hz = code.z_check_matrix();
    const RowSpace x_group(hx);
    const RowSpace z_group(hz);
    size_t x_words = 0;
    size_t z_words = 0;
    // X-parts are constrained by the Z-type checks and vice versa.
    const auto x_columns = pack_columns(hz, x_words);
    const auto z_columns = pack_columns(hx, z_words);

    DistanceResult result;
    result.mode = DistanceMode::exact;
    result.max_weight = max_weight;
    std::vector<KernelElement> x_kernel;
    std::vector<KernelElement> z_kernel;

    auto enumerate = [&](const std::vector<std::uint64_t> &columns, size_t words, size_t w, const RowSpace &group,
                         std::vector<KernelElement> &out, ClassBound &bound, bool x_part) {
        result.search_effort += static_cast<std::uint64_t>(binomial(n, w));
        for_each_zero_sum(columns, n, words, w, [&](const std::vector<size_t> &combo) {
            BitVector v = BitVector::from_indices(n, combo);
            bool logical = !group.contains(v);
            if (logical && !bound.weight) {
                bound.weight = w;
                bound.certificate = x_part ? x_operator(code, v) : z_operator(code, v);
            }
            out.push_back({std::move(v), logical});
        });
    };

    for (size_t w = 1; w <= max_weight && w <= n; ++w) {
        const bool need_y = !result.y.weight;
        if (!result.x.weight || need_y) {
            enumerate(x_columns, x_words, w, x_group, x_kernel, result.x, true);
        }
        if (!result.z.weight || need_y) {
            enumerate(z_columns, z_words, w, z_group, z_kernel, result.z, false);
        }
        if (need_y) {
            // Every pair with union below w was already examined at a lower level.
            for (const auto &a : x_kernel) {
                for (const auto &b : z_kernel) {
                    if ((a.logical || b.logical) && union_weight(a.bits, b.bits) <= w) {
                        result.y.weight = w;
                        result.y.certificate = code.from_symplectic(SymplecticVector(a.bits, b.bits));
                        break;
                    }
                }
                if (result.y.weight) {
                    break;
                }
            }
        }
        if (result.x.weight && result.z.weight && result.y.weight) {
            break;
        }
    }
    result.d = min_known(result);
    return result;
}

DistanceResult exact_generic(const StabilizerCode &code, size_t max_weight) {
    const size_t n = code.n();
    const auto &stabs = code.stabilizer_vectors();
    const RowSpace group(code.stabilizer_matrix());
    const size_t words = std::max<size_t>(1, (stabs.size() + 63) / 64);
    // Syndrome columns for X, Z, Y on each qubit; column index = 3*qubit + pauli.
    std::vector<std::uint64_t> columns(3 * n * words, 0);
    for (size_t s = 0; s < stabs.size(); ++s) {
        for (size_t q = 0; q < n; ++q) {
            bool anti_x = stabs[s].z.get(q);
            bool anti_z = stabs[s].x.get(q);
            std::uint64_t bit = std::uint64_t{1} << (s & 63);
            if (anti_x) {
                columns[(3 * q + 0) * words + s / 64] |= bit;
            }
            if (anti_z) {
                columns[(3 * q + 1) * words + s / 64] |= bit;
            }
            if (anti_x != anti_z) {
                columns[(3 * q + 2) * words + s / 64] |= bit;
            }
        }
    }

    DistanceResult result;
    result.mode = DistanceMode::exact;
    result.max_weight = max_weight;
    for (size_t w = 1; w <= max_weight && w <= n; ++w) {
        result.search_effort += static_cast<std::uint64_t>(binomial(n, w) * std::pow(3.0L, static_cast<long double>(w)));
        std::vector<size_t> qubits(w);
        std::vector<int> paulis(w);
        std::vector<std::uint64_t> acc((w + 1) * words, 0);
        std::function<void(size_t, size_t)> rec = [&](size_t depth, size_t start) {
            for (size_t q = start; q + (w - depth) <= n; ++q) {
                qubits[depth] = q;
                for (int p = 0; p < 3; ++p) {
                    paulis[depth] = p;
                    const std::uint64_t *prev = acc.data() + depth * words;
                    std::uint64_t *cur = acc.data() + (depth + 1) * words;
                    const std::uint64_t *col = columns.data() + (3 * q + p) * words;
                    bool zero = true;
                    for (size_t k = 0; k < words; ++k) {
                        cur[k] = prev[k] ^ col[k];
                        zero = zero && cur[k] == 0;
                    }
                    if (depth + 1 < w) {
                        rec(depth + 1, q + 1);
                        continue;
                    }
                    if (!zero) {
                        continue;
                    }
                    SymplecticVector v(n);
                    bool has_x = false;
                    bool has_z = false;
                    for (size_t i = 0; i < w; ++i) {
                        if (paulis[i] != 1) {
                            v.x.set(qubits[i]);
                            has_x = true;
                        }
                        if (paulis[i] != 0) {
                            v.z.set(qubits[i]);
                            has_z = true;
                        }
                    }
                    ClassBound &bound = has_x && has_z ? result.y : (has_x ? result.x : result.z);
                    if (!bound.weight && !group.contains(v.flattened())) {
                        bound.weight = w;
                        bound.certificate = code.from_symplectic(v);
                    }
                }
            }
        };
        rec(0, 0);
        if (result.x.weight && result.z.weight && result.y.weight) {
            break;
        }
    }
    result.d = min_known(result);
    return result;
}

/// Orders candidates by (weight, support) and keeps the lightest capacity entries.
struct PoolOrder {
    bool operator()(const BitVector &a, const BitVector &b) const {
        size_t wa = a.popcount();
        size_t wb = b.popcount();
        return wa != wb ? wa < wb : a < b;
    }
};

class CandidatePool {
   public:
    CandidatePool(size_t capacity, size_t max_weight) : capacity_(capacity), max_weight_(max_weight) {}

    void offer(const BitVector &v, bool logical) {
        if (v.popcount() > max_weight_) {
            return;
        }
        if (entries_.size() >= capacity_) {
            if (!PoolOrder{}(v, std::prev(entries_.end())->first)) {
                return;
            }
        }
        entries_.emplace(v, logical);
        if (entries_.size() > capacity_) {
            entries_.erase(std::prev(entries_.end()));
        }
    }

    void merge(const CandidatePool &other) {
        for (const auto &[v, logical] : other.entries_) {
            offer(v, logical);
        }
    }

    const std::map<BitVector, bool, PoolOrder> &entries() const noexcept { return entries_; }
    size_t max_weight() const noexcept { return max_weight_; }

    std::optional<BitVector> lightest_logical() const {
        for (const auto &[v, logical] : entries_) {
            if (logical) {
                return v;
            }
        }
        return std::nullopt;
    }

   private:
    size_t capacity_;
    size_t max_weight_;
    std::map<BitVector, bool, PoolOrder> entries_;
};

constexpr size_t pool_capacity = 2048;
constexpr size_t pool_slack = 2;

std::vector<std::vector<std::uint32_t>> sparse_rows(const BitMatrix &m) {
    std::vector<std::vector<std::uint32_t>> out(m.rows());
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c : m.row_vector(r).ones()) {
            out[r].push_back(static_cast<std::uint32_t>(c));
        }
    }
    return out;
}

struct IsdWorkspace {
    std::vector<size_t> order;
    std::vector<size_t> position;
    std::vector<size_t> pivot_pos;
    std::vector<std::uint64_t> bits;
    std::vector<std::uint64_t> is_pivot;
    std::vector<std::uint32_t> column_weight;
};

/// One information-set trial on the kernel of checks. Columns are pivoted in a random order;
/// every non-pivot column j then determines the unique kernel element that is 1 on j, 0 on the
/// other non-pivot columns, and free on the pivot columns.
void isd_trial(
    const std::vector<std::vector<std::uint32_t>> &checks,
    size_t n,
    const RowSpace &group,
    CounterRng &rng,
    IsdWorkspace &ws,
    CandidatePool &pool) {
    const size_t rows = checks.size();
    const size_t stride = (n + 63) / 64;
    ws.order.resize(n);
    ws.position.resize(n);
    std::iota(ws.order.begin(), ws.order.end(), size_t{0});
    rng.shuffle(std::span<size_t>(ws.order));
    for (size_t i = 0; i < n; ++i) {
        ws.position[ws.order[i]] = i;
    }
    // Work in permuted column space: position i holds original column order[i]. Pivoting in
    // natural position order keeps each pivot row zero left of its pivot word.
    ws.bits.assign(rows * stride, 0);
    for (size_t r = 0; r < rows; ++r) {
        std::uint64_t *row = ws.bits.data() + r * stride;
        for (std::uint32_t c : checks[r]) {
            const size_t pos = ws.position[c];
            row[pos / 64] ^= std::uint64_t{1} << (pos % 64);
        }
    }
    ws.pivot_pos.clear();
    ws.is_pivot.assign(stride, 0);
    for (size_t pos = 0; pos < n && ws.pivot_pos.size() < rows; ++pos) {
        const size_t word = pos / 64;
        const std::uint64_t mask = std::uint64_t{1} << (pos % 64);
        const size_t next = ws.pivot_pos.size();
        size_t found = rows;
        for (size_t r = next; r < rows; ++r) {
            if (ws.bits[r * stride + word] & mask) {
                found = r;
                break;
            }
        }
        if (found == rows) {
            continue;
        }
        std::uint64_t *pivot = ws.bits.data() + next * stride;
        if (found != next) {
            std::swap_ranges(pivot + word, pivot + stride, ws.bits.data() + found * stride + word);
        }
        for (size_t r = 0; r < rows; ++r) {
            std::uint64_t *row = ws.bits.data() + r * stride;
            if (r != next && (row[word] & mask)) {
                for (size_t k = word; k < stride; ++k) {
                    row[k] ^= pivot[k];
                }
            }
        }
        ws.pivot_pos.push_back(pos);
        ws.is_pivot[word] |= mask;
    }
    const size_t rank = ws.pivot_pos.size();
    ws.column_weight.assign(n, 1u);
    for (size_t r = 0; r < rank; ++r) {
        const std::uint64_t *row = ws.bits.data() + r * stride;
        for (size_t k = 0; k < stride; ++k) {
            std::uint64_t w = row[k] & ~ws.is_pivot[k];
            while (w) {
                ++ws.column_weight[k * 64 + std::countr_zero(w)];
                w &= w - 1;
            }
        }
    }
    for (size_t pos = 0; pos < n; ++pos) {
        const size_t word = pos / 64;
        const std::uint64_t mask = std::uint64_t{1} << (pos % 64);
        if ((ws.is_pivot[word] & mask) || ws.column_weight[pos] > pool.max_weight()) {
            continue;
        }
        BitVector v(n);
        v.set(ws.order[pos]);
        for (size_t r = 0; r < rank; ++r) {
            if (ws.bits[r * stride + word] & mask) {
                v.set(ws.order[ws.pivot_pos[r]]);
            }
        }
        pool.offer(v, !group.contains(v));
    }
}

}  // namespace

std::string to_string(DistanceMode mode) { return mode == DistanceMode::exact ? "exact" : "estimated"; }

DistanceResult exact_distance(const StabilizerCode &code, size_t max_weight, std::uint64_t budget) {
    if (max_weight == 0) {
        throw std::invalid_argument("exact_distance: max_weight must be positive");
    }
    const size_t n = code.n();
    long double projected = 0;
    for (size_t w = 1; w <= max_weight && w <= n; ++w) {
        projected += binomial(n, w) * (code.is_css() ? 2.0L : std::pow(3.0L, static_cast<long double>(w)));
    }
    if (projected > static_cast<long double>(budget)) {
        throw BudgetExceeded(
            "exact distance search up to weight " + std::to_string(max_weight) + " on " + std::to_string(n) +
            " qubits needs ~" + std::to_string(static_cast<std::uint64_t>(projected)) + " candidates (budget " +
            std::to_string(budget) + ")");
    }
    return code.is_css() ? exact_css(code, max_weight) : exact_generic(code, max_weight);
}

DistanceResult estimate_distance(const StabilizerCode &code, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
    if (!code.is_css()) {
        throw std::invalid_argument("estimate_distance requires a CSS-form code");
    }
    const size_t n = code.n();
    DistanceResult result;
    result.mode = DistanceMode::estimated;
    result.search_effort = trials;

    const BitMatrix hx = code.x_check_matrix();
    const BitMatrix hz = code.z_check_matrix();
    const RowSpace x_group(hx);
    const RowSpace z_group(hz);
    const auto hx_rows = sparse_rows(hx);
    const auto hz_rows = sparse_rows(hz);

    // Initial bounds from the code's own logical operators.
    auto seed_bound = [&](bool x_class) {
        std::optional<BitVector> best;
        for (const auto *list : {&code.logical_x_vectors(), &code.logical_z_vectors()}) {
            for (const auto &v : *list) {
                const BitVector &part = x_class ? v.x : v.z;
                const BitVector &other = x_class ? v.z : v.x;
                if (other.none() && part.any() && (!best || PoolOrder{}(part, *best))) {
                    best = part;
                }
            }
        }
        return best;
    };
    const auto x_seed = seed_bound(true);
    const auto z_seed = seed_bound(false);
    const size_t x_cap = (x_seed ? x_seed->popcount() : n) + pool_slack;
    const size_t z_cap = (z_seed ? z_seed->popcount() : n) + pool_slack;

    CandidatePool x_pool(pool_capacity, x_cap);
    CandidatePool z_pool(pool_capacity, z_cap);
    if (x_seed) {
        x_pool.offer(*x_seed, true);
    }
    if (z_seed) {
        z_pool.offer(*z_seed, true);
    }

    if (trials > 0) {
        if (workers == 0) {
            workers = default_workers();
        }
        workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));
        std::vector<CandidatePool> x_local(workers, CandidatePool(pool_capacity, x_cap));
        std::vector<CandidatePool> z_local(workers, CandidatePool(pool_capacity, z_cap));
        parallel_chunks(trials, workers, [&](unsigned w, size_t begin, size_t end) {
            IsdWorkspace ws;
            for (size_t t = begin; t < end; ++t) {
                CounterRng x_rng(seed, 0, t);
                isd_trial(hz_rows, n, x_group, x_rng, ws, x_local[w]);
                CounterRng z_rng(seed, 1, t);
                isd_trial(hx_rows, n, z_group, z_rng, ws, z_local[w]);
            }
        });
        for (unsigned w = 0; w < workers; ++w) {
            x_pool.merge(x_local[w]);
            z_pool.merge(z_local[w]);
        }
    }

    if (auto best = x_pool.lightest_logical()) {
        result.x.weight = best->popcount();
        result.x.certificate = x_operator(code, *best);
    }
    if (auto best = z_pool.lightest_logical()) {
        result.z.weight = best->popcount();
        result.z.certificate = z_operator(code, *best);
    }

    // Mixed logicals: provided X-bar/Z-bar products, then pairs of pooled kernel elements.
    std::optional<std::pair<BitVector, BitVector>> best_y;
    size_t best_y_weight = 0;
    auto consider = [&](const BitVector &x, const BitVector &z) {
        size_t w = union_weight(x, z);
        if (!best_y || w < best_y_weight) {
            best_y = std::make_pair(x, z);
            best_y_weight = w;
        }
    };
    for (const auto &lx : code.logical_x_vectors()) {
        for (const auto &lz : code.logical_z_vectors()) {
            SymplecticVector prod = lx * lz;
            if (prod.x.any() && prod.z.any()) {
                consider(prod.x, prod.z);
            }
        }
    }
    for (const auto &[xv, x_logical] : x_pool.entries()) {
        for (const auto &[zv, z_logical] : z_pool.entries()) {
            if (x_logical || z_logical) {
                consider(xv, zv);
            }
        }
    }
    if (best_y) {
        result.y.weight = best_y_weight;
        result.y.certificate = code.from_symplectic(SymplecticVector(best_y->first, best_y->second));
    }
    result.d = min_known(result);
    return result;
}

Theorem1Check check_theorem1(int level) {
    if (level < 2 || level > 5) {
        throw std::invalid_argument("check_theorem1: level must be in [2, 5], got " + std::to_string(level));
    }
    const StabilizerCode code = build_ztgre(level);
    const auto &lx = code.logical_x_vectors();
    const size_t k = lx.size();
    BitVector cur(code.n());
    BitVector best;
    size_t best_weight = code.n() + 1;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
        cur ^= lx[std::countr_zero(i)].x;
        size_t w = cur.popcount();
        if (w < best_weight) {
            best_weight = w;
            best = cur;
        }
    }
    Theorem1Check out;
    out.expected = level % 2 == 0 ? static_cast<size_t>(level) : static_cast<size_t>(level) + 1;
    out.measured = best_weight;
    out.pass = out.expected == out.measured;
    out.witness = x_operator(code, best);
    return out;
}

Prop2Check check_prop2(const StabilizerCode &code, std::uint64_t budget) {
    if (code.family() != Family::xztgre) {
        throw std::invalid_argument("check_prop2 applies to XZ-TGRE codes");
    }
    const auto &stabs = code.stabilizer_vectors();
    std::vector<SymplecticVector> type2;
    for (size_t q = 0; q < code.k(); ++q) {
        type2.push_back(has_type2_logical_z(code, q) ? code.logical_z_vectors()[q] : code.logical_x_vectors()[q]);
    }
    if (stabs.size() >= 63 ||
        static_cast<long double>(std::uint64_t{1} << stabs.size()) * static_cast<long double>(type2.size()) >
            static_cast<long double>(budget)) {
        throw BudgetExceeded(
            "check_prop2: stabilizer group of 2^" + std::to_string(stabs.size()) + " elements exceeds budget");
    }
    Prop2Check out;
    out.type2_weight = type2_logical_weight(code.rate_param());
    out.min_equivalent_weight = code.n() + 1;
    SymplecticVector element(code.n());
    const std::uint64_t count = std::uint64_t{1} << stabs.size();
    for (std::uint64_t i = 0; i < count; ++i) {
        if (i > 0) {
            element *= stabs[std::countr_zero(i)];
        }
        for (const auto &t : type2) {
            size_t w = 0;
            auto ex = element.x.words();
            auto ez = element.z.words();
            auto tx = t.x.words();
            auto tz = t.z.words();
            for (size_t k = 0; k < ex.size(); ++k) {
                w += std::popcount((ex[k] ^ tx[k]) | (ez[k] ^ tz[k]));
            }
            if (w < out.min_equivalent_weight) {
                out.min_equivalent_weight = w;
                out.witness = code.from_symplectic(element * t);
            }
        }
    }
    out.group_elements = count;
    out.pass = out.min_equivalent_weight >= out.type2_weight;
    return out;
}

}  // namespace tgre
