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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tgre {

/// Packed bit vector over GF(2). Bit i lives in word i/64 at position i%64.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);

    static BitVector from_indices(size_t num_bits, std::span<const size_t> indices);

    size_t size() const noexcept { return num_bits_; }
    size_t num_words() const noexcept { return words_.size(); }

    bool get(size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool value = true) noexcept {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(size_t i) noexcept { words_[i >> 6] ^= uint64_t{1} << (i & 63); }
    void clear() noexcept;

    size_t popcount() const noexcept;
    bool none() const noexcept;
    bool any() const noexcept { return !none(); }
    /// Index of the lowest set bit, or size() when empty.
    size_t first_one() const noexcept;
    std::vector<size_t> ones() const;

    BitVector &operator^=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
    friend BitVector operator|(BitVector a, const BitVector &b) { return a |= b; }
    friend BitVector operator&(BitVector a, const BitVector &b) { return a &= b; }

    /// Parity of the bitwise AND.
    bool dot(const BitVector &other) const;

    std::span<uint64_t> words() noexcept { return words_; }
    std::span<const uint64_t> words() const noexcept { return words_; }

    bool operator==(const BitVector &other) const = default;
    /// Total order: the vector holding the lowest differing bit sorts first.
    /// Among vectors of equal weight this is lexicographic order of supports.
    bool operator<(const BitVector &other) const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense row-major bit matrix over GF(2). Column 0 is the lowest bit of word 0 of each row.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    static BitMatrix from_rows(std::span<const BitVector> rows, size_t cols);

    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }
    size_t words_per_row() const noexcept { return stride_; }

    bool get(size_t r, size_t c) const noexcept { return (bits_[r * stride_ + (c >> 6)] >> (c & 63)) & 1; }
    void set(size_t r, size_t c, bool value = true) noexcept {
        uint64_t &w = bits_[r * stride_ + (c >> 6)];
        uint64_t mask = uint64_t{1} << (c & 63);
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(size_t r, size_t c) noexcept { bits_[r * stride_ + (c >> 6)] ^= uint64_t{1} << (c & 63); }

    std::span<uint64_t> row(size_t r) noexcept { return {bits_.data() + r * stride_, stride_}; }
    std::span<const uint64_t> row(size_t r) const noexcept { return {bits_.data() + r * stride_, stride_}; }
    BitVector row_vector(size_t r) const;
    void set_row(size_t r, const BitVector &v);

    /// row[dst] ^= row[src]
    void xor_row_into(size_t src, size_t dst) noexcept;
    void swap_rows(size_t a, size_t b) noexcept;
    size_t row_popcount(size_t r) const noexcept;

    BitMatrix transposed() const;
    /// Computes m * x for a column vector x of length cols().
    BitVector multiply(const BitVector &x) const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> bits_;
};

struct RowReduction {
    BitMatrix reduced;
    std::vector<size_t> pivots;
};

/// Reduced row-echelon form. Pivot rule: lowest-index nonzero column, topmost available row.
RowReduction row_reduce(BitMatrix m);
size_t rank(const BitMatrix &m);
bool in_row_space(const BitMatrix &m, const BitVector &v);
/// Some x with m*x = b, or nullopt when the system is inconsistent.
std::optional<BitVector> solve(const BitMatrix &m, const BitVector &b);
/// Basis of {x : m*x = 0}, one row per free column.
BitMatrix kernel_basis(const BitMatrix &m);

/// Precomputed reduced basis of a row space for repeated membership queries.
class RowSpace {
   public:
    RowSpace() = default;
    explicit RowSpace(const BitMatrix &m);

    size_t rank() const noexcept { return pivots_.size(); }
    size_t cols() const noexcept { return cols_; }
    /// Reduces v against the basis; the result is zero iff v is in the row space.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector &v) const;

   private:
    size_t cols_ = 0;
    BitMatrix basis_;
    std::vector<size_t> pivots_;
};

/// Binary image of an n-qubit Pauli operator (phase dropped).
struct SymplecticVector {
    BitVector x;
    BitVector z;

    SymplecticVector() = default;
    explicit SymplecticVector(size_t n) : x(n), z(n) {}
    SymplecticVector(BitVector x_part, BitVector z_part);

    size_t num_qubits() const noexcept { return x.size(); }
    /// Number of qubits acted on non-trivially.
    size_t weight() const;
    bool is_identity() const noexcept { return x.none() && z.none(); }

    SymplecticVector &operator*=(const SymplecticVector &other);
    friend SymplecticVector operator*(SymplecticVector a, const SymplecticVector &b) { return a *= b; }
    bool operator==(const SymplecticVector &other) const = default;

    /// Concatenation [x | z] of length 2n.
    BitVector flattened() const;
};

/// <u.x, v.z> + <u.z, v.x> mod 2. Zero exactly when the operators commute.
bool symplectic_product(const SymplecticVector &u, const SymplecticVector &v);

}  // namespace tgre
