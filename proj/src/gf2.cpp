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

#include "tgre/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tgre {

namespace {

size_t words_for(size_t bits) { return (bits + 63) / 64; }

void xor_words(std::span<uint64_t> dst, std::span<const uint64_t> src) {
    for (size_t i = 0; i < dst.size(); ++i) {
        dst[i] ^= src[i];
    }
}

}  // namespace

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {}

BitVector BitVector::from_indices(size_t num_bits, std::span<const size_t> indices) {
    BitVector v(num_bits);
    for (size_t i : indices) {
        if (i >= num_bits) {
            throw std::out_of_range("bit index out of range");
        }
        v.set(i);
    }
    return v;
}

void BitVector::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

size_t BitVector::popcount() const noexcept {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

size_t BitVector::first_one() const noexcept {
    for (size_t k = 0; k < words_.size(); ++k) {
        if (words_[k]) {
            return k * 64 + std::countr_zero(words_[k]);
        }
    }
    return num_bits_;
}

std::vector<size_t> BitVector::ones() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < words_.size(); ++k) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    xor_words(words_, other.words_);
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    for (size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    for (size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

bool BitVector::dot(const BitVector &other) const {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    uint64_t acc = 0;
    for (size_t i = 0; i < words_.size(); ++i) {
        acc ^= words_[i] & other.words_[i];
    }
    return std::popcount(acc) & 1;
}

bool BitVector::operator<(const BitVector &other) const {
    if (num_bits_ != other.num_bits_) {
        return num_bits_ < other.num_bits_;
    }
    for (size_t k = 0; k < words_.size(); ++k) {
        uint64_t diff = words_[k] ^ other.words_[k];
        if (diff) {
            uint64_t lowest = diff & (~diff + 1);
            return (words_[k] & lowest) != 0;
        }
    }
    return false;
}

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), bits_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows, size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        m.set_row(r, rows[r]);
    }
    return m;
}

BitVector BitMatrix::row_vector(size_t r) const {
    BitVector v(cols_);
    std::copy(row(r).begin(), row(r).end(), v.words().begin());
    return v;
}

void BitMatrix::set_row(size_t r, const BitVector &v) {
    if (v.size() != cols_) {
        throw std::invalid_argument("row length mismatch");
    }
    std::copy(v.words().begin(), v.words().end(), row(r).begin());
}

void BitMatrix::xor_row_into(size_t src, size_t dst) noexcept {
    uint64_t *d = bits_.data() + dst * stride_;
    const uint64_t *s = bits_.data() + src * stride_;
    for (size_t i = 0; i < stride_; ++i) {
        d[i] ^= s[i];
    }
}

void BitMatrix::swap_rows(size_t a, size_t b) noexcept {
    if (a == b) {
        return;
    }
    std::swap_ranges(bits_.begin() + a * stride_, bits_.begin() + (a + 1) * stride_, bits_.begin() + b * stride_);
}

size_t BitMatrix::row_popcount(size_t r) const noexcept {
    size_t total = 0;
    for (uint64_t w : row(r)) {
        total += std::popcount(w);
    }
    return total;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        auto words = row(r);
        for (size_t k = 0; k < stride_; ++k) {
            uint64_t w = words[k];
            while (w) {
                t.set(k * 64 + std::countr_zero(w), r);
                w &= w - 1;
            }
        }
    }
    return t;
}

BitVector BitMatrix::multiply(const BitVector &x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("matrix-vector length mismatch");
    }
    BitVector out(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        auto words = row(r);
        auto xw = x.words();
        for (size_t k = 0; k < stride_; ++k) {
            acc ^= words[k] & xw[k];
        }
        if (std::popcount(acc) & 1) {
            out.set(r);
        }
    }
    return out;
}

RowReduction row_reduce(BitMatrix m) {
    std::vector<size_t> pivots;
    size_t next_row = 0;
    for (size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        size_t found = m.rows();
        for (size_t r = next_row; r < m.rows(); ++r) {
            if (m.get(r, c)) {
                found = r;
                break;
            }
        }
        if (found == m.rows()) {
            continue;
        }
        m.swap_rows(found, next_row);
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r != next_row && m.get(r, c)) {
                m.xor_row_into(next_row, r);
            }
        }
        pivots.push_back(c);
        ++next_row;
    }
    return {std::move(m), std::move(pivots)};
}

size_t rank(const BitMatrix &m) { return row_reduce(m).pivots.size(); }

bool in_row_space(const BitMatrix &m, const BitVector &v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("in_row_space: vector length does not match column count");
    }
    return RowSpace(m).contains(v);
}

std::optional<BitVector> solve(const BitMatrix &m, const BitVector &b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve: right-hand side length does not match row count");
    }
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c : m.row_vector(r).ones()) {
            aug.set(r, c);
        }
        aug.set(r, m.cols(), b.get(r));
    }
    auto red = row_reduce(std::move(aug));
    BitVector x(m.cols());
    for (size_t i = 0; i < red.pivots.size(); ++i) {
        if (red.pivots[i] == m.cols()) {
            return std::nullopt;
        }
        x.set(red.pivots[i], red.reduced.get(i, m.cols()));
    }
    return x;
}

BitMatrix kernel_basis(const BitMatrix &m) {
    auto red = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : red.pivots) {
        is_pivot[p] = true;
    }
    BitMatrix basis(m.cols() - red.pivots.size(), m.cols());
    size_t r = 0;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        basis.set(r, f);
        for (size_t i = 0; i < red.pivots.size(); ++i) {
            if (red.reduced.get(i, f)) {
                basis.set(r, red.pivots[i]);
            }
        }
        ++r;
    }
    return basis;
}

RowSpace::RowSpace(const BitMatrix &m) : cols_(m.cols()) {
    auto red = row_reduce(m);
    pivots_ = std::move(red.pivots);
    basis_ = BitMatrix(pivots_.size(), cols_);
    for (size_t i = 0; i < pivots_.size(); ++i) {
        std::copy(red.reduced.row(i).begin(), red.reduced.row(i).end(), basis_.row(i).begin());
    }
}

BitVector RowSpace::reduce(BitVector v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("RowSpace: vector length does not match column count");
    }
    for (size_t i = 0; i < pivots_.size(); ++i) {
        if (v.get(pivots_[i])) {
            xor_words(v.words(), basis_.row(i));
        }
    }
    return v;
}

bool RowSpace::contains(const BitVector &v) const { return reduce(v).none(); }

SymplecticVector::SymplecticVector(BitVector x_part, BitVector z_part) : x(std::move(x_part)), z(std::move(z_part)) {
    if (x.size() != z.size()) {
        throw std::invalid_argument("symplectic vector parts differ in length");
    }
}

size_t SymplecticVector::weight() const {
    size_t total = 0;
    auto xw = x.words();
    auto zw = z.words();
    for (size_t k = 0; k < xw.size(); ++k) {
        total += std::popcount(xw[k] | zw[k]);
    }
    return total;
}

SymplecticVector &SymplecticVector::operator*=(const SymplecticVector &other) {
    x ^= other.x;
    z ^= other.z;
    return *this;
}

BitVector SymplecticVector::flattened() const {
    size_t n = x.size();
    BitVector out(2 * n);
    for (size_t i : x.ones()) {
        out.set(i);
    }
    for (size_t i : z.ones()) {
        out.set(n + i);
    }
    return out;
}

bool symplectic_product(const SymplecticVector &u, const SymplecticVector &v) {
    if (u.num_qubits() != v.num_qubits()) {
        throw std::invalid_argument("symplectic_product: qubit count mismatch");
    }
    return u.x.dot(v.z) ^ u.z.dot(v.x);
}

}  // namespace tgre
