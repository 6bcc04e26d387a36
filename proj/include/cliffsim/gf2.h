// Copyright 2026 The cliffsim Authors
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

#ifndef CLIFFSIM_GF2_H
#define CLIFFSIM_GF2_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cliffsim {

/// Fixed-length bit vector packed into 64-bit words. Bits past size() are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);

    /// Parses a string of '0'/'1' characters; bit k is character k.
    static BitVector from_string(std::string_view bits);
    static BitVector unit(size_t num_bits, size_t k);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }
    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    bool operator[](size_t k) const {
        return get(k);
    }
    void set(size_t k, bool value) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        return a ^= b;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        return a &= b;
    }
    friend BitVector operator|(BitVector a, const BitVector &b) {
        return a |= b;
    }
    bool operator==(const BitVector &other) const = default;

    size_t popcount() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    /// Index of the lowest set bit at or after `from`, or size() when there is none.
    size_t find_next(size_t from) const;
    size_t find_first() const {
        return find_next(0);
    }
    void clear();

    std::span<uint64_t> words() {
        return words_;
    }
    std::span<const uint64_t> words() const {
        return words_;
    }

    std::string str() const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Parity of the bitwise AND.
bool dot(const BitVector &a, const BitVector &b);

/// Dense binary matrix stored as a list of equal-length rows.
class Gf2Matrix {
   public:
    Gf2Matrix() = default;
    explicit Gf2Matrix(size_t num_cols) : num_cols_(num_cols) {
    }
    Gf2Matrix(size_t num_rows, size_t num_cols);

    static Gf2Matrix identity(size_t n);
    /// Each string is one row of '0'/'1'. An empty list needs `num_cols` to fix the width.
    static Gf2Matrix from_strings(const std::vector<std::string> &rows, size_t num_cols = 0);

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }
    const BitVector &row(size_t r) const {
        return rows_[r];
    }
    BitVector &row(size_t r) {
        return rows_[r];
    }
    const std::vector<BitVector> &rows() const {
        return rows_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool value) {
        rows_[r].set(c, value);
    }
    void append_row(BitVector row);

    /// M·v over GF(2).
    BitVector apply(const BitVector &v) const;
    Gf2Matrix transposed() const;
    Gf2Matrix operator*(const Gf2Matrix &rhs) const;
    bool operator==(const Gf2Matrix &other) const = default;

    std::string str() const;

   private:
    size_t num_cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Reduces `m` in place to reduced row echelon form. Pivot columns are scanned left to right and
/// the first row with a one in the column is chosen. Returns the pivot column of each leading row.
std::vector<size_t> reduce_to_rref(Gf2Matrix &m);

size_t rank(const Gf2Matrix &m);

/// Basis of {v : M v = 0}; it has num_cols - rank rows.
Gf2Matrix nullspace_basis(const Gf2Matrix &m);

/// Whether v lies in the row space of m. Throws std::invalid_argument on a width mismatch.
bool row_space_membership(const Gf2Matrix &m, const BitVector &v);

/// Elementary column operation. Add means column `target` ^= column `source`.
struct ColumnOp {
    enum class Kind : uint8_t { Swap, Add };
    Kind kind;
    size_t target;
    size_t source;

    static ColumnOp swap(size_t a, size_t b) {
        return {Kind::Swap, a, b};
    }
    static ColumnOp add(size_t target, size_t source) {
        return {Kind::Add, target, source};
    }
    bool operator==(const ColumnOp &) const = default;
};

void apply_column_op(Gf2Matrix &m, const ColumnOp &op);

struct ColumnReduction {
    Gf2Matrix reduced;
    std::vector<ColumnOp> ops;
    size_t rank = 0;
};

/// Gauss-Jordan elimination acting on columns. Row k with a pivot becomes the unit vector e_k
/// (counting only pivot rows), so a full-row-rank input reduces to [I | 0].
ColumnReduction column_reduce_with_ops(const Gf2Matrix &m);

/// A maximal independent subset of the rows of m, in their original order.
Gf2Matrix independent_rows(const Gf2Matrix &m);

bool same_row_space(const Gf2Matrix &a, const Gf2Matrix &b);

/// Incrementally built row echelon basis over a wide column space.
///
/// Every stored row only keeps the words between its first and last nonzero word, so inserting
/// rows with local support costs time proportional to the support rather than to the width.
/// The pivot of a row is its lowest set column.
class EchelonBasis {
   public:
    explicit EchelonBasis(size_t num_cols);

    size_t num_cols() const {
        return num_cols_;
    }
    size_t rank() const {
        return rows_.size();
    }

    /// Inserts the row whose nonzero words are `words`, starting at word index `first_word`.
    /// Returns true when the row was independent of the current basis.
    bool insert(std::span<const uint64_t> words, size_t first_word);
    bool insert(const BitVector &row) {
        return insert(row.words(), 0);
    }
    bool contains(std::span<const uint64_t> words, size_t first_word) const;
    bool contains_unit(size_t col) const;

    struct RowView {
        size_t pivot;
        size_t first_word;
        std::span<const uint64_t> words;
    };
    RowView row(size_t k) const;

    BitVector row_bits(size_t k) const;

   private:
    struct RowMeta {
        size_t offset;
        size_t first_word;
        size_t num_words;
        size_t pivot;
    };
    static constexpr uint32_t kNoRow = UINT32_MAX;

    /// Reduces the scratch window in place. Returns the new pivot column or num_cols_ if zero.
    size_t reduce(std::vector<uint64_t> &scratch, size_t &lo, size_t &hi) const;

    size_t num_cols_;
    size_t num_words_;
    std::vector<uint32_t> pivot_row_;
    std::vector<RowMeta> rows_;
    std::vector<uint64_t> pool_;
    std::vector<uint64_t> scratch_;
};

}  // namespace cliffsim

#endif
