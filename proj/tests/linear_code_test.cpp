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

#include "vhss/linear_code.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace vhss;

namespace {

// All words generated by the rows, by direct enumeration (no Gray code, no rref).
std::vector<BitVector> enumerate(const BitMatrix &g) {
    std::vector<BitVector> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.rows()); mask++) {
        BitVector v(g.cols());
        for (std::size_t i = 0; i < g.rows(); i++) {
            if ((mask >> i) & 1) {
                v ^= g.row(i);
            }
        }
        out.push_back(v);
    }
    return out;
}

std::size_t brute_distance(const BitMatrix &g) {
    std::size_t best = g.cols() + 1;
    for (const auto &v : enumerate(g)) {
        if (!v.is_zero()) {
            best = std::min(best, v.weight());
        }
    }
    return best;
}

std::size_t hamming_distance(const BitVector &a, const BitVector &b) {
    return (a ^ b).weight();
}

const BitMatrix HAMMING_G = BitMatrix::from_strings({"1110000", "1001100", "0101010", "1101001"});

}  // namespace

TEST(linear_code, repetition) {
    auto c = LinearCode::from_generator(BitMatrix::from_strings({"111"}));
    ASSERT_EQ(c.n(), 3u);
    ASSERT_EQ(c.k(), 1u);
    ASSERT_EQ(c.distance(), 3u);
    ASSERT_FALSE(c.rank_deficient());
}

TEST(linear_code, hamming_from_generator) {
    auto c = LinearCode::from_generator(HAMMING_G);
    ASSERT_EQ(c.k(), 4u);
    ASSERT_EQ(c.distance(), 3u);
    ASSERT_EQ(brute_distance(HAMMING_G), 3u);
    ASSERT_TRUE((c.parity_check() * c.generator().transposed()).is_zero());
    ASSERT_TRUE(same_code(c, hamming_7_4()));
}

TEST(linear_code, identity_code) {
    auto c = LinearCode::from_generator(BitMatrix::identity(4));
    ASSERT_EQ(c.distance(), 1u);
    ASSERT_EQ(c.parity_check().rows(), 0u);
}

TEST(linear_code, rank_deficient_generator) {
    auto c = LinearCode::from_generator(BitMatrix::from_strings({"110", "110", "011"}));
    ASSERT_TRUE(c.rank_deficient());
    ASSERT_EQ(c.k(), 2u);
    ASSERT_EQ(c.distance(), 2u);
}

TEST(linear_code, errors) {
    ASSERT_THROW(LinearCode::from_generator(BitMatrix(2, 4)), std::invalid_argument);
    ASSERT_THROW(LinearCode::from_generator(BitMatrix::identity(21)), DistanceUnavailable);
    auto big = LinearCode::from_generator(BitMatrix::identity(21), 1);
    ASSERT_EQ(big.distance(), 1u);
}

TEST(linear_code, hamming_7_4_standard_form) {
    auto h = hamming_7_4();
    ASSERT_EQ(h.n(), 7u);
    ASSERT_EQ(h.k(), 4u);
    ASSERT_EQ(h.distance(), 3u);
    for (std::size_t j = 0; j < 7; j++) {
        std::size_t column = 0;
        for (std::size_t b = 0; b < 3; b++) {
            column |= static_cast<std::size_t>(h.parity_check().get(b, j)) << b;
        }
        ASSERT_EQ(column, j + 1);
    }
    ASSERT_EQ(brute_distance(h.generator()), 3u);
}

TEST(dual, hamming_is_simplex) {
    auto s = dual(hamming_7_4());
    ASSERT_EQ(s.k(), 3u);
    ASSERT_EQ(s.distance(), 4u);
    auto words = enumerate(s.generator());
    ASSERT_EQ(words.size(), 8u);
    for (const auto &w : words) {
        ASSERT_TRUE(w.is_zero() || w.weight() == 4);
    }
}

TEST(dual, repetition_is_parity) {
    auto p = dual(repetition_code(3));
    ASSERT_EQ(p.k(), 2u);
    ASSERT_EQ(p.distance(), 2u);
    for (const auto &w : enumerate(p.generator())) {
        ASSERT_EQ(w.weight() % 2, 0u);
    }
}

TEST(dual, involution) {
    for (const auto &c : {hamming_7_4(), repetition_code(5), parity_code(6),
                          LinearCode::from_generator(BitMatrix::from_strings({"110100", "011010", "101001"}))}) {
        ASSERT_TRUE(same_code(dual(dual(c)), c));
    }
}

TEST(is_subcode, examples) {
    auto h = hamming_7_4();
    ASSERT_TRUE(is_subcode(dual(h), h));
    ASSERT_FALSE(is_subcode(h, dual(h)));
    ASSERT_TRUE(is_subcode(h, h));
    ASSERT_THROW(is_subcode(h, repetition_code(3)), std::invalid_argument);
    // Simplex words are Hamming words, checked word by word.
    for (const auto &w : enumerate(dual(h).generator())) {
        ASSERT_TRUE(mat_vec(h.parity_check(), w).is_zero());
    }
}

TEST(bounded_distance_decode, single_errors_exhaustive) {
    auto h = hamming_7_4();
    for (const auto &c : h.codewords()) {
        auto clean = h.bounded_distance_decode(c);
        ASSERT_TRUE(clean.ok());
        ASSERT_EQ(clean.codeword, c);
        ASSERT_TRUE(clean.error_positions.empty());
        ASSERT_EQ(h.encode(clean.message), c);
        for (std::size_t j = 0; j < 7; j++) {
            auto out = h.bounded_distance_decode(c ^ BitVector::unit(7, j));
            ASSERT_TRUE(out.ok());
            ASSERT_EQ(out.codeword, c);
            ASSERT_EQ(out.error_positions, std::vector<std::size_t>{j});
        }
    }
}

TEST(bounded_distance_decode, matches_nearest_codeword_search) {
    auto h = hamming_7_4();
    auto words = enumerate(HAMMING_G);
    for (std::uint64_t x = 0; x < 128; x++) {
        auto r = BitVector::from_u64(7, x);
        std::vector<BitVector> within;
        for (const auto &c : words) {
            if (hamming_distance(c, r) <= 1) {
                within.push_back(c);
            }
        }
        auto out = h.bounded_distance_decode(r);
        if (within.empty()) {
            ASSERT_FALSE(out.ok());
        } else {
            ASSERT_EQ(within.size(), 1u);
            ASSERT_TRUE(out.ok());
            ASSERT_EQ(out.codeword, within[0]);
            ASSERT_EQ(out.codeword ^ r, [&] {
                BitVector e(7);
                for (auto p : out.error_positions) {
                    e.set(p, true);
                }
                return e;
            }());
        }
    }
}

TEST(bounded_distance_decode, weight_two_error_on_perfect_code) {
    // Hamming is perfect: a double error lands within distance 1 of a different codeword,
    // so decoding "succeeds" with the wrong word.
    auto h = hamming_7_4();
    auto c = h.codewords()[5];
    auto r = c ^ BitVector::unit(7, 1) ^ BitVector::unit(7, 5);
    auto out = h.bounded_distance_decode(r);
    ASSERT_TRUE(out.ok());
    ASSERT_NE(out.codeword, c);
    // columns 2 (binary 010) and 6 (110) sum to 4 (100), the column of position 3
    ASSERT_EQ(out.error_positions, std::vector<std::size_t>{3});
}

TEST(bounded_distance_decode, failure_on_non_perfect_code) {
    auto rep4 = repetition_code(4);
    ASSERT_EQ(rep4.distance(), 4u);
    auto out = rep4.bounded_distance_decode(BitVector::from_string("1100"));
    ASSERT_FALSE(out.ok());
    auto fixed = rep4.bounded_distance_decode(BitVector::from_string("1101"));
    ASSERT_TRUE(fixed.ok());
    ASSERT_EQ(fixed.codeword.str(), "1111");
    ASSERT_EQ(fixed.error_positions, std::vector<std::size_t>{2});
}

TEST(erasure_decode, exhaustive_hamming) {
    auto h = hamming_7_4();
    auto words = h.codewords();
    for (const auto &c : words) {
        for (std::uint64_t mask = 0; mask < 128; mask++) {
            if (std::popcount(mask) > 2) {
                continue;
            }
            std::vector<std::size_t> erased;
            BitVector r = c;
            for (std::size_t j = 0; j < 7; j++) {
                if ((mask >> j) & 1) {
                    erased.push_back(j);
                    r.set(j, false);
                }
            }
            auto out = h.erasure_decode(r, erased);
            ASSERT_TRUE(out.ok());
            ASSERT_EQ(out.codeword, c);
            // Oracle: exactly one codeword agrees with the known bits.
            std::size_t agree = 0;
            for (const auto &w : words) {
                bool ok = true;
                for (std::size_t j = 0; j < 7; j++) {
                    if (!((mask >> j) & 1) && w.get(j) != r.get(j)) {
                        ok = false;
                    }
                }
                agree += ok;
            }
            ASSERT_EQ(agree, 1u);
        }
    }
}

TEST(erasure_decode, examples) {
    auto h = hamming_7_4();
    auto c = h.codewords()[9];
    auto same = h.erasure_decode(c, std::vector<std::size_t>{});
    ASSERT_EQ(same.codeword, c);
    auto r = c;
    r.flip(0);
    r.flip(1);
    auto fixed = h.erasure_decode(r, std::vector<std::size_t>{0, 1});
    ASSERT_EQ(fixed.codeword, c);
    ASSERT_EQ(fixed.error_positions, (std::vector<std::size_t>{0, 1}));

    auto rep = repetition_code(3);
    ASSERT_THROW(rep.erasure_decode(BitVector::from_string("000"), std::vector<std::size_t>{0, 1, 2}),
                 std::invalid_argument);
    auto bad = rep.erasure_decode(BitVector::from_string("100"), std::vector<std::size_t>{});
    ASSERT_FALSE(bad.ok());
}
