// Copyright 2026 The vhss-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vhss/gf2.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "vhss/linear_code.hpp"

using namespace vhss;

namespace {

BitMatrix random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; i++) {
        for (std::size_t j = 0; j < c; j++) {
            m.set(i, j, bit(rng));
        }
    }
    return m;
}

// Every combination of rows, as an explicit set. Only for small row counts.
std::set<BitVector> span_of(const BitMatrix &m) {
    std::set<BitVector> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.rows()); mask++) {
        BitVector v(m.cols());
        for (std::size_t i = 0; i < m.rows(); i++) {
            if ((mask >> i) & 1) {
                v ^= m.row(i);
            }
        }
        out.insert(v);
    }
    return out;
}

std::size_t brute_rank(const BitMatrix &m) {
    std::size_t size = span_of(m).size();
    std::size_t r = 0;
    while ((std::size_t{1} << r) < size) {
        r++;
    }
    return r;
}

}  // namespace

TEST(bit_vector, basics) {
    auto v = BitVector::from_string("1011000000000000000000000000000000000000000000000000000000000000001");
    ASSERT_EQ(v.size(), 67u);
    ASSERT_EQ(v.weight(), 4u);
    ASSERT_EQ(v.support(), (std::vector<std::size_t>{0, 2, 3, 66}));
    ASSERT_EQ(v.str(), "1011000000000000000000000000000000000000000000000000000000000000001");
    v.flip(66);
    ASSERT_EQ(v.weight(), 3u);
    ASSERT_TRUE(BitVector(5).is_zero());
    ASSERT_TRUE(BitVector::from_string("110").dot(BitVector::from_string("011")));
    ASSERT_FALSE(BitVector::from_string("110").dot(BitVector::from_string("111")));
    ASSERT_THROW(BitVector::from_string("102"), std::invalid_argument);
    ASSERT_THROW(BitVector(3) ^= BitVector(4), std::invalid_argument);
}

TEST(bit_matrix, text_round_trip) {
    auto m = BitMatrix::parse("2 3\n101\n011\n");
    ASSERT_EQ(m.rows(), 2u);
    ASSERT_EQ(m.cols(), 3u);
    ASSERT_TRUE(m.get(0, 0));
    ASSERT_FALSE(m.get(0, 1));
    ASSERT_EQ(m.str(), "2 3\n101\n011\n");
    ASSERT_EQ(BitMatrix::parse(m.str()), m);
    ASSERT_EQ(BitMatrix::parse("# comment\n\n1 2\n  11\n").row(0).str(), "11");
    ASSERT_THROW(BitMatrix::parse("2 3\n101\n"), std::invalid_argument);
    ASSERT_THROW(BitMatrix::parse("1 3\n10\n"), std::invalid_argument);
    ASSERT_THROW(BitMatrix::parse("x y\n"), std::invalid_argument);
}

TEST(rref, identity) {
    auto r = rref(BitMatrix::identity(3));
    ASSERT_EQ(r.reduced, BitMatrix::identity(3));
    ASSERT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
    ASSERT_EQ(r.rank, 3u);
}

TEST(rref, zero) {
    auto r = rref(BitMatrix(2, 4));
    ASSERT_EQ(r.reduced, BitMatrix(2, 4));
    ASSERT_TRUE(r.pivots.empty());
    ASSERT_EQ(r.rank, 0u);
}

TEST(rref, repeated_row) {
    auto m = BitMatrix::from_strings({"11", "11"});
    auto r = rref(m);
    ASSERT_EQ(r.reduced, BitMatrix::from_strings({"11", "00"}));
    ASSERT_EQ(r.rank, 1u);
    ASSERT_EQ(brute_rank(m), 1u);
}

TEST(rref, random_matrices_preserve_row_space) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 16;
        auto m = random_matrix(rng, rows, cols);
        auto r = rref(m);
        ASSERT_EQ(r.rank, brute_rank(m));
        ASSERT_EQ(span_of(r.reduced), span_of(m));
        for (std::size_t i = 0; i < r.rank; i++) {
            for (std::size_t j = 0; j < r.rank; j++) {
                ASSERT_EQ(r.reduced.get(j, r.pivots[i]), i == j);
            }
        }
    }
}

TEST(null_space, trivial_cases) {
    ASSERT_EQ(null_space(BitMatrix::identity(3)).rows(), 0u);
    auto z = null_space(BitMatrix(2, 3));
    ASSERT_EQ(z.rows(), 3u);
    ASSERT_EQ(rank(z), 3u);
}

TEST(null_space, hamming_parity_check) {
    auto h = hamming_7_4().parity_check();
    auto ns = null_space(h);
    ASSERT_EQ(ns.rows(), 4u);
    ASSERT_EQ(rank(ns), 4u);
    // Enumerate the 16 vectors in the null space's span; every one satisfies all checks.
    for (const auto &v : span_of(ns)) {
        ASSERT_TRUE(mat_vec(h, v).is_zero());
    }
    // And the span is exactly the set of solutions among all 128 words.
    std::size_t solutions = 0;
    for (std::uint64_t w = 0; w < 128; w++) {
        solutions += mat_vec(h, BitVector::from_u64(7, w)).is_zero();
    }
    ASSERT_EQ(solutions, 16u);
}

TEST(null_space, dimension_theorem) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t rows = 1 + rng() % 16, cols = 1 + rng() % 16;
        auto m = random_matrix(rng, rows, cols);
        auto ns = null_space(m);
        ASSERT_EQ(rank(m) + ns.rows(), cols);
        ASSERT_EQ(rank(ns), ns.rows());
        ASSERT_TRUE((m * ns.transposed()).is_zero());
    }
}

TEST(in_row_space, examples) {
    auto m = BitMatrix::from_strings({"1010", "0110"});
    ASSERT_TRUE(in_row_space(m, BitVector(4)));
    ASSERT_TRUE(in_row_space(BitMatrix::identity(2), BitVector::from_string("10")));
    auto g = hamming_7_4().generator();
    for (std::size_t j = 0; j < 7; j++) {
        ASSERT_FALSE(in_row_space(g, BitVector::unit(7, j)));
    }
    ASSERT_THROW(in_row_space(m, BitVector(3)), std::invalid_argument);
}

TEST(in_row_space, closed_under_xor) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 16;
        auto m = random_matrix(rng, rows, cols);
        auto members = span_of(m);
        for (std::uint64_t w = 0; w < 64; w++) {
            BitVector v(cols);
            for (std::size_t j = 0; j < cols; j++) {
                v.set(j, rng() & 1);
            }
            ASSERT_EQ(in_row_space(m, v), members.count(v) == 1);
        }
        std::vector<BitVector> list(members.begin(), members.end());
        for (int k = 0; k < 20; k++) {
            const auto &a = list[rng() % list.size()];
            const auto &b = list[rng() % list.size()];
            ASSERT_TRUE(in_row_space(m, a ^ b));
        }
    }
}

TEST(row_combination, reproduces_target) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; trial++) {
        auto m = random_matrix(rng, 1 + rng() % 10, 1 + rng() % 14);
        BitVector coeffs(m.rows());
        for (std::size_t i = 0; i < m.rows(); i++) {
            coeffs.set(i, rng() & 1);
        }
        BitVector target(m.cols());
        for (auto i : coeffs.support()) {
            target ^= m.row(i);
        }
        auto found = row_combination(m, target);
        ASSERT_TRUE(found.has_value());
        BitVector check(m.cols());
        for (auto i : found->support()) {
            check ^= m.row(i);
        }
        ASSERT_EQ(check, target);
    }
}

TEST(mat_vec, examples) {
    auto v = BitVector::from_string("1101");
    ASSERT_TRUE(mat_vec(BitMatrix(3, 4), v).is_zero());
    ASSERT_EQ(mat_vec(BitMatrix::identity(4), v), v);
    auto h = hamming_7_4().parity_check();
    for (std::size_t j = 0; j < 7; j++) {
        auto s = mat_vec(h, BitVector::unit(7, j));
        for (std::size_t b = 0; b < 3; b++) {
            ASSERT_EQ(s.get(b), h.get(b, j));
            ASSERT_EQ(s.get(b), static_cast<bool>(((j + 1) >> b) & 1));
        }
    }
    ASSERT_THROW(mat_vec(h, BitVector(6)), std::invalid_argument);
}
