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

#ifndef VHSS_GF2_HPP
#define VHSS_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vhss {

/// Packed vector over GF(2). Bits past size() are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t len);

    static BitVector from_string(std::string_view bits);
    static BitVector unit(std::size_t len, std::size_t pos);
    static BitVector from_u64(std::size_t len, std::uint64_t bits);

    std::size_t size() const {
        return len_;
    }
    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= m;
        } else {
            words_[i >> 6] &= ~m;
        }
    }
    void flip(std::size_t i) {
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    std::size_t weight() const;
    bool is_zero() const;
    bool dot(const BitVector &other) const;
    std::vector<std::size_t> support() const;
    /// Low 64 bits as an integer (bit i -> 2^i).
    std::uint64_t to_u64() const;

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    bool operator==(const BitVector &other) const = default;
    bool operator<(const BitVector &other) const;

    std::span<const std::uint64_t> words() const {
        return words_;
    }
    std::span<std::uint64_t> words() {
        return words_;
    }

    std::string str() const;

   private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

BitVector operator^(BitVector a, const BitVector &b);
BitVector operator&(BitVector a, const BitVector &b);
std::ostream &operator<<(std::ostream &out, const BitVector &v);

class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVector> &rows, std::size_t cols);
    static BitMatrix from_strings(const std::vector<std::string> &rows);
    /// Reads the text format: a "rows cols" line, then one line of 0/1 per row.
    static BitMatrix read(std::istream &in);
    static BitMatrix parse(std::string_view text);

    std::size_t rows() const {
        return rows_.size();
    }
    std::size_t cols() const {
        return cols_;
    }
    bool get(std::size_t r, std::size_t c) const {
        return rows_[r].get(c);
    }
    void set(std::size_t r, std::size_t c, bool v) {
        rows_[r].set(c, v);
    }
    const BitVector &row(std::size_t r) const {
        return rows_[r];
    }
    BitVector &row(std::size_t r) {
        return rows_[r];
    }
    const std::vector<BitVector> &row_list() const {
        return rows_;
    }

    void append_row(BitVector v);
    BitMatrix transposed() const;
    BitMatrix operator*(const BitMatrix &rhs) const;
    bool is_zero() const;
    bool operator==(const BitMatrix &other) const = default;

    /// Same text format as read().
    std::string str() const;

   private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

std::ostream &operator<<(std::ostream &out, const BitMatrix &m);

struct RrefResult {
    BitMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

RrefResult rref(const BitMatrix &m);
std::size_t rank(const BitMatrix &m);
BitMatrix null_space(const BitMatrix &m);
bool in_row_space(const BitMatrix &m, const BitVector &v);
BitVector mat_vec(const BitMatrix &m, const BitVector &v);

/// Coefficients c with sum_i c_i * row_i(m) = v, if any.
std::optional<BitVector> row_combination(const BitMatrix &m, const BitVector &v);

/// Nonzero rows of rref(m).
BitMatrix row_basis(const BitMatrix &m);

}  // namespace vhss

#endif
