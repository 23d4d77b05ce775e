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

#include "tgre/codes.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace tgre {

namespace {

std::vector<Label> sorted_unique(std::vector<Label> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Label> symmetric_difference(const std::vector<Label> &a, const std::vector<Label> &b) {
    std::vector<Label> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void check_level(int level, int lo, int hi, const char *what) {
    if (level < lo || level > hi) {
        throw std::invalid_argument(
            std::string(what) + ": level must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
            std::to_string(level));
    }
}

}  // namespace

std::string to_string(const Rational &r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

PauliOperator PauliOperator::x_type(std::vector<Label> support) { return {sorted_unique(std::move(support)), {}}; }

PauliOperator PauliOperator::z_type(std::vector<Label> support) { return {{}, sorted_unique(std::move(support))}; }

std::vector<Label> PauliOperator::support() const {
    std::vector<Label> out;
    std::set_union(x_support.begin(), x_support.end(), z_support.begin(), z_support.end(), std::back_inserter(out));
    return out;
}

size_t PauliOperator::weight() const { return support().size(); }

std::string PauliOperator::str() const {
    if (is_identity()) {
        return "I";
    }
    std::string out;
    for (Label q : support()) {
        bool x = std::binary_search(x_support.begin(), x_support.end(), q);
        bool z = std::binary_search(z_support.begin(), z_support.end(), q);
        out += x && z ? 'Y' : (x ? 'X' : 'Z');
        out += std::to_string(q);
    }
    return out;
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &other) {
    x_support = symmetric_difference(x_support, other.x_support);
    z_support = symmetric_difference(z_support, other.z_support);
    return *this;
}

PauliOperator parse_pauli(std::string_view text) {
    PauliOperator op;
    if (text == "I") {
        return op;
    }
    size_t i = 0;
    while (i < text.size()) {
        const char kind = text[i++];
        if (kind != 'X' && kind != 'Y' && kind != 'Z') {
            throw std::invalid_argument("bad Pauli letter in '" + std::string(text) + "'");
        }
        Label label = 0;
        const size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            label = label * 10 + static_cast<Label>(text[i++] - '0');
        }
        if (i == start || label == 0) {
            throw std::invalid_argument("missing qubit label in '" + std::string(text) + "'");
        }
        if (kind != 'Z') {
            op.x_support.push_back(label);
        }
        if (kind != 'X') {
            op.z_support.push_back(label);
        }
    }
    op.x_support = sorted_unique(std::move(op.x_support));
    op.z_support = sorted_unique(std::move(op.z_support));
    return op;
}

std::string to_string(Family family) { return family == Family::ztgre ? "ztgre" : "xztgre"; }

Family parse_family(std::string_view text) {
    if (text == "z" || text == "ztgre") {
        return Family::ztgre;
    }
    if (text == "xz" || text == "xztgre") {
        return Family::xztgre;
    }
    throw std::invalid_argument("unknown code family '" + std::string(text) + "' (expected z or xz)");
}

StabilizerCode::StabilizerCode(
    Family family,
    int level,
    int rate_param,
    std::vector<Label> qubit_labels,
    std::vector<PauliOperator> stabilizers,
    std::vector<PauliOperator> logical_x,
    std::vector<PauliOperator> logical_z)
    : family_(family),
      level_(level),
      rate_param_(rate_param),
      labels_(std::move(qubit_labels)),
      stabilizers_(std::move(stabilizers)),
      logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)) {
    if (labels_.empty()) {
        throw std::invalid_argument("code has no qubits");
    }
    if (!std::is_sorted(labels_.begin(), labels_.end()) ||
        std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
        throw std::invalid_argument("qubit labels must be strictly ascending");
    }
    if (labels_.front() == 0) {
        throw std::invalid_argument("qubit labels are 1-based");
    }
    if (logical_x_.size() != logical_z_.size()) {
        throw std::invalid_argument("logical X and Z lists differ in length");
    }
    index_.assign(static_cast<size_t>(labels_.back()) + 1, -1);
    for (size_t i = 0; i < labels_.size(); ++i) {
        index_[labels_[i]] = static_cast<std::int32_t>(i);
    }
    auto convert_all = [this](const std::vector<PauliOperator> &ops) {
        std::vector<SymplecticVector> out;
        out.reserve(ops.size());
        for (const auto &op : ops) {
            out.push_back(to_symplectic(op));
        }
        return out;
    };
    stab_vecs_ = convert_all(stabilizers_);
    lx_vecs_ = convert_all(logical_x_);
    lz_vecs_ = convert_all(logical_z_);
    for (size_t i = 0; i < stabilizers_.size(); ++i) {
        const auto &s = stabilizers_[i];
        if (s.z_support.empty() && !s.x_support.empty()) {
            x_rows_.push_back(i);
        } else if (s.x_support.empty() && !s.z_support.empty()) {
            z_rows_.push_back(i);
        } else {
            css_ = false;
        }
    }
}

bool StabilizerCode::has_label(Label label) const noexcept { return label < index_.size() && index_[label] >= 0; }

size_t StabilizerCode::index_of(Label label) const {
    if (!has_label(label)) {
        throw std::invalid_argument("label " + std::to_string(label) + " is not a qubit of this code");
    }
    return static_cast<size_t>(index_[label]);
}

SymplecticVector StabilizerCode::to_symplectic(const PauliOperator &op) const {
    SymplecticVector v(n());
    for (Label q : op.x_support) {
        v.x.flip(index_of(q));
    }
    for (Label q : op.z_support) {
        v.z.flip(index_of(q));
    }
    return v;
}

PauliOperator StabilizerCode::from_symplectic(const SymplecticVector &v) const {
    if (v.num_qubits() != n()) {
        throw std::invalid_argument("symplectic vector length does not match code length");
    }
    PauliOperator op;
    for (size_t i : v.x.ones()) {
        op.x_support.push_back(labels_[i]);
    }
    for (size_t i : v.z.ones()) {
        op.z_support.push_back(labels_[i]);
    }
    return op;
}

BitMatrix StabilizerCode::stabilizer_matrix() const {
    BitMatrix m(stab_vecs_.size(), 2 * n());
    for (size_t r = 0; r < stab_vecs_.size(); ++r) {
        m.set_row(r, stab_vecs_[r].flattened());
    }
    return m;
}

BitMatrix StabilizerCode::x_check_matrix() const {
    BitMatrix m(x_rows_.size(), n());
    for (size_t r = 0; r < x_rows_.size(); ++r) {
        m.set_row(r, stab_vecs_[x_rows_[r]].x);
    }
    return m;
}

BitMatrix StabilizerCode::z_check_matrix() const {
    BitMatrix m(z_rows_.size(), n());
    for (size_t r = 0; r < z_rows_.size(); ++r) {
        m.set_row(r, stab_vecs_[z_rows_[r]].z);
    }
    return m;
}

std::string StabilizerCode::stabilizer_name(size_t i) const {
    if (family_ == Family::xztgre && stabilizers_.size() % 2 == 0) {
        size_t half = stabilizers_.size() / 2;
        if (i >= half) {
            return "S'_" + std::to_string(i - half + 1);
        }
    }
    return "S_" + std::to_string(i + 1);
}

bool StabilizerCode::operator==(const StabilizerCode &other) const {
    return family_ == other.family_ && level_ == other.level_ && rate_param_ == other.rate_param_ &&
           labels_ == other.labels_ && stabilizers_ == other.stabilizers_ && logical_x_ == other.logical_x_ &&
           logical_z_ == other.logical_z_;
}

StabilizerCode build_ztgre(int level) {
    check_level(level, 2, 24, "build_ztgre");
    TannerGraph g = expand_g(level);
    const bool odd = level % 2 == 1;
    std::vector<Label> labels(size_t{1} << level);
    for (size_t i = 0; i < labels.size(); ++i) {
        labels[i] = static_cast<Label>(i + 1);
    }
    std::vector<PauliOperator> stabs, lx, lz;
    for (size_t i = 0; i < g.checks.size(); ++i) {
        const auto &check = g.checks[i];
        stabs.push_back(PauliOperator::z_type(check));
        std::vector<Label> xs = check;
        if (!odd) {
            for (Label &u : xs) {
                u = (u % 2 == 0) ? u - 1 : u + 1;
            }
        }
        lx.push_back(PauliOperator::x_type(std::move(xs)));
        Label unique = static_cast<Label>(odd ? 2 * (i + 1) : 2 * (i + 1) - 1);
        lz.push_back(PauliOperator::z_type({unique}));
    }
    return StabilizerCode(Family::ztgre, level, 0, std::move(labels), std::move(stabs), std::move(lx), std::move(lz));
}

StabilizerCode build_xztgre(int level, int a) {
    check_level(level, 2, 24, "build_xztgre");
    if (a < 1 || a >= level) {
        throw std::invalid_argument(
            "build_xztgre: a must satisfy 1 <= a < L (L=" + std::to_string(level) + ", a=" + std::to_string(a) + ")");
    }
    const int inner = level - a;
    const size_t num_odd_checks = size_t{1} << (level - 1);
    const size_t num_even_checks = size_t{1} << (inner - 1);
    const size_t per_family = size_t{1} << level;

    std::vector<Label> labels;
    const Label max_odd = (Label{1} << (level + 2)) - 1;
    const Label max_even = Label{1} << (inner + 1);
    for (Label u = 1; u <= max_odd; ++u) {
        if (u % 2 == 1 || u <= max_even) {
            labels.push_back(u);
        }
    }

    auto assemble = [&](const TannerGraph &odd_graph, const TannerGraph &even_graph, bool z_type) {
        const TannerGraph odd_blocks[2] = {relabel_odd(odd_graph, 0, level), relabel_odd(odd_graph, 1, level)};
        const TannerGraph even_part = relabel_even(even_graph);
        std::vector<PauliOperator> out;
        out.reserve(per_family);
        for (size_t i = 0; i < per_family; ++i) {
            std::vector<Label> support = odd_blocks[i / num_odd_checks].checks[i % num_odd_checks];
            const auto &even = even_part.checks[i % num_even_checks];
            support.insert(support.end(), even.begin(), even.end());
            out.push_back(z_type ? PauliOperator::z_type(std::move(support)) : PauliOperator::x_type(std::move(support)));
        }
        return out;
    };

    std::vector<PauliOperator> stabs = assemble(expand_g(level), expand_g(inner), true);
    std::vector<PauliOperator> x_stabs = assemble(expand_gprime(level), expand_gprime(inner), false);
    stabs.insert(stabs.end(), x_stabs.begin(), x_stabs.end());

    const TannerGraph even_g = relabel_even(expand_g(inner));
    const TannerGraph even_gprime = relabel_even(expand_gprime(inner));
    const Label stride = Label{1} << (inner + 1);
    const Label copies = Label{1} << (a + 1);
    std::vector<PauliOperator> lx, lz;
    // Type-1 X-bar paired with a Type-2 Z-bar.
    for (Label i = 1; i <= num_even_checks; ++i) {
        lx.push_back(PauliOperator::x_type(even_gprime.checks[i - 1]));
        std::vector<Label> support{4 * i - 2};
        for (Label m = 0; m < copies; ++m) {
            support.push_back(4 * i - 3 + m * stride);
        }
        lz.push_back(PauliOperator::z_type(std::move(support)));
    }
    // Type-1 Z-bar paired with a Type-2 X-bar.
    for (Label j = 1; j <= num_even_checks; ++j) {
        std::vector<Label> support{4 * j};
        for (Label m = 0; m < copies; ++m) {
            support.push_back(4 * j - 1 + m * stride);
        }
        lx.push_back(PauliOperator::x_type(std::move(support)));
        lz.push_back(PauliOperator::z_type(even_g.checks[j - 1]));
    }
    return StabilizerCode(Family::xztgre, level, a, std::move(labels), std::move(stabs), std::move(lx), std::move(lz));
}

int a_schedule(int level) {
    if (level < 2) {
        throw std::invalid_argument("a_schedule: level must be >= 2");
    }
    int a = 1;
    while (!(static_cast<long long>(level) < 1 + (1LL << (a + 1)) + a)) {
        ++a;
    }
    return a;
}

CodeParams code_params(Family family, int level, int a) {
    if (family == Family::ztgre) {
        check_level(level, 2, 40, "code_params");
        size_t n = size_t{1} << level;
        return {n, n / 2, Rational(1, 2), static_cast<size_t>(level) + 1};
    }
    check_level(level, 2, 40, "code_params");
    if (a < 1 || a >= level) {
        throw std::invalid_argument("code_params: a must satisfy 1 <= a < L");
    }
    size_t k = size_t{1} << (level - a);
    size_t n = k + (size_t{1} << (level + 1));
    return {n, k, Rational(1, 1 + (std::int64_t{1} << (a + 1))), static_cast<size_t>(2 * level - a + 2)};
}

size_t type2_logical_weight(int a) { return 1 + (size_t{1} << (a + 1)); }

bool has_type2_logical_z(const StabilizerCode &code, size_t q) {
    if (code.family() != Family::xztgre) {
        throw std::invalid_argument("Type-2 logicals exist only for XZ-TGRE codes");
    }
    return q < code.k() / 2;
}

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck &c) { return c.passed; });
}

const ValidationCheck *ValidationReport::find(std::string_view name) const {
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

ValidationReport validate_code(const StabilizerCode &code) {
    constexpr size_t max_listed = 8;
    const auto &stabs = code.stabilizer_vectors();
    const auto &lx = code.logical_x_vectors();
    const auto &lz = code.logical_z_vectors();
    ValidationReport report;

    auto record = [&report](std::string name, const std::vector<std::string> &failures, const std::string &ok_detail) {
        ValidationCheck check{std::move(name), failures.empty(), ok_detail};
        if (!failures.empty()) {
            std::ostringstream out;
            for (size_t i = 0; i < failures.size() && i < max_listed; ++i) {
                out << (i ? "; " : "") << failures[i];
            }
            if (failures.size() > max_listed) {
                out << "; ... (" << failures.size() << " total)";
            }
            check.detail = out.str();
        }
        report.checks.push_back(std::move(check));
    };

    {
        std::vector<std::string> bad;
        for (size_t i = 0; i < stabs.size(); ++i) {
            for (size_t j = i + 1; j < stabs.size(); ++j) {
                if (symplectic_product(stabs[i], stabs[j])) {
                    bad.push_back(code.stabilizer_name(i) + " anticommutes with " + code.stabilizer_name(j));
                }
            }
        }
        record("stabilizers_commute", bad, std::to_string(stabs.size()) + " generators pairwise commute");
    }

    const size_t stab_rank = rank(code.stabilizer_matrix());
    {
        std::vector<std::string> bad;
        if (stab_rank != stabs.size()) {
            bad.push_back(
                "rank " + std::to_string(stab_rank) + " < " + std::to_string(stabs.size()) + " generators");
        }
        record("stabilizers_independent", bad, "rank " + std::to_string(stab_rank));
    }

    {
        std::vector<std::string> bad;
        for (size_t q = 0; q < lx.size(); ++q) {
            for (size_t s = 0; s < stabs.size(); ++s) {
                if (symplectic_product(lx[q], stabs[s])) {
                    bad.push_back("Xbar_" + std::to_string(q + 1) + " anticommutes with " + code.stabilizer_name(s));
                }
                if (symplectic_product(lz[q], stabs[s])) {
                    bad.push_back("Zbar_" + std::to_string(q + 1) + " anticommutes with " + code.stabilizer_name(s));
                }
            }
        }
        record("logicals_commute_with_stabilizers", bad, "all logicals commute with all stabilizers");
    }

    {
        std::vector<std::string> bad;
        for (size_t i = 0; i < lx.size(); ++i) {
            for (size_t j = 0; j < lz.size(); ++j) {
                bool anti = symplectic_product(lx[i], lz[j]);
                if (anti != (i == j)) {
                    bad.push_back(
                        "Xbar_" + std::to_string(i + 1) + (anti ? " anticommutes" : " commutes") + " with Zbar_" +
                        std::to_string(j + 1));
                }
            }
            for (size_t j = i + 1; j < lx.size(); ++j) {
                if (symplectic_product(lx[i], lx[j])) {
                    bad.push_back("Xbar_" + std::to_string(i + 1) + " anticommutes with Xbar_" + std::to_string(j + 1));
                }
                if (symplectic_product(lz[i], lz[j])) {
                    bad.push_back("Zbar_" + std::to_string(i + 1) + " anticommutes with Zbar_" + std::to_string(j + 1));
                }
            }
        }
        record("logical_pairing", bad, std::to_string(lx.size()) + " anticommuting pairs, all cross pairs commute");
    }

    {
        std::vector<std::string> bad;
        RowSpace group(code.stabilizer_matrix());
        for (size_t q = 0; q < lx.size(); ++q) {
            if (group.contains(lx[q].flattened())) {
                bad.push_back("Xbar_" + std::to_string(q + 1) + " lies in the stabilizer group");
            }
            if (group.contains(lz[q].flattened())) {
                bad.push_back("Zbar_" + std::to_string(q + 1) + " lies in the stabilizer group");
            }
        }
        record("logicals_outside_stabilizer_group", bad, "no logical is a stabilizer");
    }

    {
        std::vector<std::string> bad;
        if (code.k() + stab_rank != code.n()) {
            bad.push_back(
                "k=" + std::to_string(code.k()) + " but n-rank=" + std::to_string(code.n()) + "-" +
                std::to_string(stab_rank));
        }
        record("logical_count", bad, "k = n - rank = " + std::to_string(code.k()));
    }
    return report;
}

}  // namespace tgre
