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

#include "cliffsim/gf2.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace cliffsim {

namespace {

size_t words_for(size_t bits) {
    return (bits + 63) / 64;
}

}  // namespace

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector result(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            result.set(k, true);
        } else if (bits[k] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1': " + std::string(bits));
        }
    }
    return result;
}

BitVector BitVector::unit(size_t num_bits, size_t k) {
    BitVector result(num_bits);
    result.set(k, true);
    return result;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVector length mismatch");
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVector length mismatch");
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVector length mismatch");
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVector::find_next(size_t from) const {
    if (from >= num_bits_) {
        return num_bits_;
    }
    size_t w = from >> 6;
    uint64_t word = words_[w] & (~uint64_t{0} << (from & 63));
    while (true) {
        if (word) {
            return std::min(num_bits_, (w << 6) + std::countr_zero(word));
        }
        if (++w >= words_.size()) {
            return num_bits_;
        }
        word = words_[w];
    }
}

void BitVector::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

std::string BitVector::str() const {
    std::string result(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k)) {
            result[k] = '1';
        }
    }
    return result;
}

bool dot(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("BitVector length mismatch");
    }
    uint64_t acc = 0;
    auto wa = a.words();
    auto wb = b.words();
    for (size_t w = 0; w < wa.size(); w++) {
        acc ^= wa[w] & wb[w];
    }
    return std::popcount(acc) & 1;
}

Gf2Matrix::Gf2Matrix(size_t num_rows, size_t num_cols) : num_cols_(num_cols), rows_(num_rows, BitVector(num_cols)) {
}

Gf2Matrix Gf2Matrix::identity(size_t n) {
    Gf2Matrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string> &rows, size_t num_cols) {
    if (!rows.empty()) {
        num_cols = rows[0].size();
    }
    Gf2Matrix m(num_cols);
    for (const auto &r : rows) {
        m.append_row(BitVector::from_string(r));
    }
    return m;
}

void Gf2Matrix::append_row(BitVector row) {
    if (row.size() != num_cols_) {
        throw std::invalid_argument(
            "row has " + std::to_string(row.size()) + " bits but matrix has " + std::to_string(num_cols_) +
            " columns");
    }
    rows_.push_back(std::move(row));
}

BitVector Gf2Matrix::apply(const BitVector &v) const {
    if (v.size() != num_cols_) {
        throw std::invalid_argument("vector length does not match column count");
    }
    BitVector result(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        result.set(r, dot(rows_[r], v));
    }
    return result;
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(num_cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c = rows_[r].find_first(); c < num_cols_; c = rows_[r].find_next(c + 1)) {
            t.set(c, r, true);
        }
    }
    return t;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix &rhs) const {
    if (num_cols_ != rhs.num_rows()) {
        throw std::invalid_argument("matrix product dimension mismatch");
    }
    Gf2Matrix result(rows_.size(), rhs.num_cols());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t k = rows_[r].find_first(); k < num_cols_; k = rows_[r].find_next(k + 1)) {
            result.row(r) ^= rhs.row(k);
        }
    }
    return result;
}

std::string Gf2Matrix::str() const {
    std::string out;
    for (const auto &r : rows_) {
        out += r.str();
        out += '\n';
    }
    return out;
}

std::vector<size_t> reduce_to_rref(Gf2Matrix &m) {
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t c = 0; c < m.num_cols() && next < m.num_rows(); c++) {
        size_t found = m.num_rows();
        for (size_t r = next; r < m.num_rows(); r++) {
            if (m.get(r, c)) {
                found = r;
                break;
            }
        }
        if (found == m.num_rows()) {
            continue;
        }
        std::swap(m.row(found), m.row(next));
        for (size_t r = 0; r < m.num_rows(); r++) {
            if (r != next && m.get(r, c)) {
                m.row(r) ^= m.row(next);
            }
        }
        pivots.push_back(c);
        next++;
    }
    return pivots;
}

size_t rank(const Gf2Matrix &m) {
    Gf2Matrix copy = m;
    return reduce_to_rref(copy).size();
}

Gf2Matrix nullspace_basis(const Gf2Matrix &m) {
    Gf2Matrix reduced = m;
    std::vector<size_t> pivots = reduce_to_rref(reduced);
    std::vector<bool> is_pivot(m.num_cols(), false);
    for (size_t c : pivots) {
        is_pivot[c] = true;
    }
    Gf2Matrix basis(m.num_cols());
    for (size_t free = 0; free < m.num_cols(); free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector v(m.num_cols());
        v.set(free, true);
        for (size_t k = 0; k < pivots.size(); k++) {
            if (reduced.get(k, free)) {
                v.set(pivots[k], true);
            }
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

bool row_space_membership(const Gf2Matrix &m, const BitVector &v) {
    if (v.size() != m.num_cols()) {
        throw std::invalid_argument(
            "vector has " + std::to_string(v.size()) + " bits but matrix has " + std::to_string(m.num_cols()) +
            " columns");
    }
    EchelonBasis basis(m.num_cols());
    for (const auto &r : m.rows()) {
        basis.insert(r);
    }
    return basis.contains(v.words(), 0);
}

void apply_column_op(Gf2Matrix &m, const ColumnOp &op) {
    for (size_t r = 0; r < m.num_rows(); r++) {
        BitVector &row = m.row(r);
        if (op.kind == ColumnOp::Kind::Swap) {
            bool a = row.get(op.target);
            bool b = row.get(op.source);
            row.set(op.target, b);
            row.set(op.source, a);
        } else if (row.get(op.source)) {
            row.flip(op.target);
        }
    }
}

ColumnReduction column_reduce_with_ops(const Gf2Matrix &m) {
    ColumnReduction result{m, {}, 0};
    Gf2Matrix &work = result.reduced;
    size_t k = 0;
    for (size_t r = 0; r < work.num_rows() && k < work.num_cols(); r++) {
        size_t pivot = work.row(r).find_next(k);
        if (pivot >= work.num_cols()) {
            continue;
        }
        if (pivot != k) {
            ColumnOp op = ColumnOp::swap(k, pivot);
            apply_column_op(work, op);
            result.ops.push_back(op);
        }
        for (size_t c = 0; c < work.num_cols(); c++) {
            if (c != k && work.get(r, c)) {
                ColumnOp op = ColumnOp::add(c, k);
                apply_column_op(work, op);
                result.ops.push_back(op);
            }
        }
        k++;
    }
    result.rank = k;
    return result;
}

Gf2Matrix independent_rows(const Gf2Matrix &m) {
    EchelonBasis basis(m.num_cols());
    Gf2Matrix result(m.num_cols());
    for (const auto &r : m.rows()) {
        if (basis.insert(r)) {
            result.append_row(r);
        }
    }
    return result;
}

bool same_row_space(const Gf2Matrix &a, const Gf2Matrix &b) {
    if (a.num_cols() != b.num_cols()) {
        return false;
    }
    EchelonBasis ba(a.num_cols());
    for (const auto &r : a.rows()) {
        ba.insert(r);
    }
    EchelonBasis bb(b.num_cols());
    for (const auto &r : b.rows()) {
        bb.insert(r);
    }
    if (ba.rank() != bb.rank()) {
        return false;
    }
    for (const auto &r : b.rows()) {
        if (!ba.contains(r.words(), 0)) {
            return false;
        }
    }
    return true;
}

EchelonBasis::EchelonBasis(size_t num_cols)
    : num_cols_(num_cols),
      num_words_(words_for(num_cols)),
      pivot_row_(num_cols, kNoRow),
      scratch_(num_words_, 0) {
}

size_t EchelonBasis::reduce(std::vector<uint64_t> &scratch, size_t &lo, size_t &hi) const {
    while (true) {
        while (lo < hi && scratch[lo] == 0) {
            lo++;
        }
        if (lo == hi) {
            return num_cols_;
        }
        size_t col = (lo << 6) + std::countr_zero(scratch[lo]);
        uint32_t r = pivot_row_[col];
        if (r == kNoRow) {
            return col;
        }
        const RowMeta &meta = rows_[r];
        const uint64_t *src = pool_.data() + meta.offset;
        uint64_t *dst = scratch.data() + meta.first_word;
        for (size_t w = 0; w < meta.num_words; w++) {
            dst[w] ^= src[w];
        }
        hi = std::max(hi, meta.first_word + meta.num_words);
    }
}

bool EchelonBasis::insert(std::span<const uint64_t> words, size_t first_word) {
    size_t lo = first_word;
    size_t hi = first_word + words.size();
    if (hi > num_words_) {
        throw std::invalid_argument("row exceeds basis width");
    }
    std::copy(words.begin(), words.end(), scratch_.begin() + lo);
    size_t start = lo;
    size_t pivot = reduce(scratch_, lo, hi);
    bool added = pivot < num_cols_;
    if (added) {
        size_t end = hi;
        while (end > lo && scratch_[end - 1] == 0) {
            end--;
        }
        pivot_row_[pivot] = static_cast<uint32_t>(rows_.size());
        rows_.push_back({pool_.size(), lo, end - lo, pivot});
        pool_.insert(pool_.end(), scratch_.begin() + lo, scratch_.begin() + end);
    }
    std::fill(scratch_.begin() + start, scratch_.begin() + hi, 0);
    return added;
}

bool EchelonBasis::contains(std::span<const uint64_t> words, size_t first_word) const {
    thread_local std::vector<uint64_t> scratch;
    if (scratch.size() < num_words_) {
        scratch.assign(num_words_, 0);
    }
    size_t lo = first_word;
    size_t hi = first_word + words.size();
    if (hi > num_words_) {
        throw std::invalid_argument("row exceeds basis width");
    }
    std::copy(words.begin(), words.end(), scratch.begin() + lo);
    size_t start = lo;
    size_t pivot = reduce(scratch, lo, hi);
    std::fill(scratch.begin() + start, scratch.begin() + hi, 0);
    return pivot == num_cols_;
}

bool EchelonBasis::contains_unit(size_t col) const {
    uint64_t word = uint64_t{1} << (col & 63);
    return contains(std::span<const uint64_t>(&word, 1), col >> 6);
}

EchelonBasis::RowView EchelonBasis::row(size_t k) const {
    const RowMeta &meta = rows_[k];
    return {meta.pivot, meta.first_word, std::span<const uint64_t>(pool_.data() + meta.offset, meta.num_words)};
}

BitVector EchelonBasis::row_bits(size_t k) const {
    BitVector result(num_cols_);
    RowView view = row(k);
    auto dst = result.words();
    for (size_t w = 0; w < view.words.size(); w++) {
        dst[view.first_word + w] = view.words[w];
    }
    return result;
}

}  // namespace cliffsim
