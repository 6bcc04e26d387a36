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

#include <gtest/gtest.h>

#include <bit>

#include "test_util.h"

namespace cliffsim {
namespace {

using testing::random_matrix;
using testing::span_by_enumeration;

Gf2Matrix rows(std::vector<std::string> r) {
    return Gf2Matrix::from_strings(r);
}

TEST(Gf2, rank_examples) {
    EXPECT_EQ(rank(Gf2Matrix::identity(3)), 3u);
    EXPECT_EQ(rank(Gf2Matrix(2, 4)), 0u);
    Gf2Matrix m = rows({"1100", "0110", "1010"});
    EXPECT_EQ(rank(m), 2u);
    // Span size 2^rank by brute force.
    EXPECT_EQ(span_by_enumeration(m).size(), 4u);
    EXPECT_EQ(m, rows({"1100", "0110", "1010"}));
}

TEST(Gf2, nullspace_examples) {
    Gf2Matrix zero(2, 4);
    Gf2Matrix full = nullspace_basis(zero);
    EXPECT_EQ(full.num_rows(), 4u);
    EXPECT_EQ(rank(full), 4u);
    EXPECT_EQ(nullspace_basis(Gf2Matrix::identity(3)).num_rows(), 0u);
    Gf2Matrix kernel = nullspace_basis(rows({"110", "011"}));
    ASSERT_EQ(kernel.num_rows(), 1u);
    EXPECT_EQ(kernel.row(0).str(), "111");
}

TEST(Gf2, nullspace_matches_brute_force_kernel) {
    Gf2Matrix m = rows({"110", "011"});
    size_t found = 0;
    for (uint32_t v = 0; v < 8; v++) {
        BitVector b(3);
        for (size_t k = 0; k < 3; k++) {
            b.set(k, (v >> k) & 1);
        }
        if (m.apply(b).none()) {
            found++;
            EXPECT_TRUE(row_space_membership(nullspace_basis(m), b));
        }
    }
    EXPECT_EQ(found, 2u);
}

TEST(Gf2, membership_examples) {
    EXPECT_TRUE(row_space_membership(rows({"10", "01"}), BitVector::from_string("11")));
    EXPECT_FALSE(row_space_membership(rows({"11"}), BitVector::from_string("10")));
    EXPECT_TRUE(row_space_membership(rows({"1100", "0110"}), BitVector::from_string("1010")));
    EXPECT_THROW(row_space_membership(rows({"11"}), BitVector::from_string("101")), std::invalid_argument);
}

TEST(Gf2, column_reduce_examples) {
    auto a = column_reduce_with_ops(rows({"11"}));
    EXPECT_EQ(a.reduced, rows({"10"}));
    ASSERT_EQ(a.ops.size(), 1u);
    EXPECT_EQ(a.ops[0], ColumnOp::add(1, 0));

    auto b = column_reduce_with_ops(Gf2Matrix::identity(2));
    EXPECT_EQ(b.reduced, Gf2Matrix::identity(2));
    EXPECT_TRUE(b.ops.empty());

    auto c = column_reduce_with_ops(rows({"01"}));
    EXPECT_EQ(c.reduced, rows({"10"}));
    ASSERT_EQ(c.ops.size(), 1u);
    EXPECT_EQ(c.ops[0], ColumnOp::swap(0, 1));
}

TEST(Gf2, independent_rows_examples) {
    EXPECT_EQ(independent_rows(rows({"11", "11"})), rows({"11"}));
    Gf2Matrix two = independent_rows(rows({"10", "01", "11"}));
    EXPECT_EQ(two.num_rows(), 2u);
    EXPECT_EQ(span_by_enumeration(two).size(), 4u);
    Gf2Matrix three = rows({"1100", "0110", "1010"});
    Gf2Matrix picked = independent_rows(three);
    EXPECT_EQ(picked.num_rows(), 2u);
    EXPECT_EQ(span_by_enumeration(picked), span_by_enumeration(three));
}

TEST(Gf2, zero_sized_inputs_flow_through) {
    Gf2Matrix empty(5);
    EXPECT_EQ(rank(empty), 0u);
    EXPECT_EQ(nullspace_basis(empty).num_rows(), 5u);
    EXPECT_FALSE(row_space_membership(empty, BitVector::unit(5, 2)));
    EXPECT_TRUE(row_space_membership(empty, BitVector(5)));
    Gf2Matrix no_cols(3, 0);
    EXPECT_EQ(rank(no_cols), 0u);
    EXPECT_EQ(nullspace_basis(no_cols).num_rows(), 0u);
}

TEST(Gf2, random_rank_nullity_and_kernel) {
    CounterRng rng(101);
    for (size_t trial = 0; trial < 300; trial++) {
        size_t r = rng.below(12);
        size_t c = 1 + rng.below(130);
        Gf2Matrix m = random_matrix(rng, r, c);
        Gf2Matrix kernel = nullspace_basis(m);
        EXPECT_EQ(rank(m) + kernel.num_rows(), c);
        EXPECT_EQ(rank(kernel), kernel.num_rows());
        for (const BitVector &b : kernel.rows()) {
            EXPECT_TRUE(m.apply(b).none());
        }
    }
}

TEST(Gf2, rank_matches_span_enumeration) {
    CounterRng rng(102);
    for (size_t trial = 0; trial < 200; trial++) {
        Gf2Matrix m = random_matrix(rng, rng.below(9), 1 + rng.below(8));
        size_t span = span_by_enumeration(m).size();
        EXPECT_EQ(size_t{1} << rank(m), span);
    }
}

TEST(Gf2, membership_matches_span_enumeration) {
    CounterRng rng(103);
    for (size_t trial = 0; trial < 100; trial++) {
        size_t cols = 1 + rng.below(7);
        Gf2Matrix m = random_matrix(rng, rng.below(13), cols);
        auto span = span_by_enumeration(m);
        for (uint32_t v = 0; v < (1u << cols); v++) {
            BitVector b(cols);
            for (size_t k = 0; k < cols; k++) {
                b.set(k, (v >> k) & 1);
            }
            EXPECT_EQ(row_space_membership(m, b), span.count(b.str()) == 1);
        }
    }
}

TEST(Gf2, column_reduce_replay_reproduces_result) {
    CounterRng rng(104);
    for (size_t trial = 0; trial < 200; trial++) {
        size_t cols = 1 + rng.below(70);
        size_t r = rng.below(std::min<size_t>(cols, 10) + 1);
        Gf2Matrix m = random_matrix(rng, r, cols);
        auto red = column_reduce_with_ops(m);
        Gf2Matrix replay = m;
        for (const ColumnOp &op : red.ops) {
            apply_column_op(replay, op);
        }
        EXPECT_EQ(replay, red.reduced);
        EXPECT_EQ(red.rank, rank(m));
        if (red.rank == r) {
            for (size_t i = 0; i < r; i++) {
                EXPECT_EQ(red.reduced.row(i), BitVector::unit(cols, i));
            }
        }
    }
}

TEST(Gf2, echelon_basis_agrees_with_matrix_membership) {
    CounterRng rng(105);
    for (size_t trial = 0; trial < 100; trial++) {
        size_t cols = 1 + rng.below(200);
        Gf2Matrix m = random_matrix(rng, rng.below(20), cols);
        EchelonBasis basis(cols);
        for (const BitVector &r : m.rows()) {
            basis.insert(r);
        }
        EXPECT_EQ(basis.rank(), rank(m));
        for (size_t k = 0; k < 10; k++) {
            size_t col = rng.below(cols);
            EXPECT_EQ(basis.contains_unit(col), row_space_membership(m, BitVector::unit(cols, col)));
        }
        BitVector combo(cols);
        for (const BitVector &r : m.rows()) {
            if (rng.bit()) {
                combo ^= r;
            }
        }
        EXPECT_TRUE(basis.contains(combo.words(), 0));
    }
}

TEST(Gf2, bits_beyond_length_stay_zero) {
    BitVector a(70);
    a.set(69, true);
    BitVector b = BitVector::unit(70, 3);
    BitVector c = a ^ b;
    EXPECT_EQ(c.popcount(), 2u);
    EXPECT_EQ(c.words()[1] >> 6, 0u);
    EXPECT_EQ(a ^ b, b ^ a);
}

}  // namespace
}  // namespace cliffsim
