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

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vhss {

namespace {

std::size_t num_words(std::size_t bits) {
    return (bits + 63) >> 6;
}

void require_same_length(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw std::invalid_argument(
            std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_(num_words(len), 0) {
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t pos) {
    BitVector v(len);
    v.set(pos, true);
    return v;
}

BitVector BitVector::from_u64(std::size_t len, std::uint64_t bits) {
    if (len > 64) {
        throw std::invalid_argument("from_u64 needs len <= 64");
    }
    BitVector v(len);
    if (len > 0) {
        v.words_[0] = len == 64 ? bits : bits & ((std::uint64_t{1} << len) - 1);
    }
    return v;
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (auto x : words_) {
        w += std::popcount(x);
    }
    return w;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t x) { return x == 0; });
}

bool BitVector::dot(const BitVector &other) const {
    require_same_length(len_, other.len_, "dot");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); k++) {
        std::uint64_t w = words_[k];
        while (w) {
            out.push_back((k << 6) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::uint64_t BitVector::to_u64() const {
    return words_.empty() ? 0 : words_[0];
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_length(len_, other.len_, "xor");
    for (std::size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require_same_length(len_, other.len_, "and");
    for (std::size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

bool BitVector::operator<(const BitVector &other) const {
    if (len_ != other.len_) {
        return len_ < other.len_;
    }
    return words_ < other.words_;
}

std::string BitVector::str() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitVector operator^(BitVector a, const BitVector &b) {
    a ^= b;
    return a;
}

BitVector operator&(BitVector a, const BitVector &b) {
    a &= b;
    return a;
}

std::ostream &operator<<(std::ostream &out, const BitVector &v) {
    return out << v.str();
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector> &rows, std::size_t cols) {
    BitMatrix m(0, cols);
    for (const auto &r : rows) {
        m.append_row(r);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows) {
    if (rows.empty()) {
        return BitMatrix();
    }
    BitMatrix m(0, rows[0].size());
    for (const auto &r : rows) {
        m.append_row(BitVector::from_string(r));
    }
    return m;
}

BitMatrix BitMatrix::read(std::istream &in) {
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') {
                continue;
            }
            line = line.substr(first);
            while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t')) {
                line.pop_back();
            }
            return true;
        }
        return false;
    };
    if (!next_line()) {
        throw std::invalid_argument("matrix text: missing 'rows cols' header");
    }
    std::istringstream header(line);
    long long r = -1, c = -1;
    if (!(header >> r >> c) || r < 0 || c < 0) {
        throw std::invalid_argument("matrix text: bad header '" + line + "'");
    }
    BitMatrix m(0, static_cast<std::size_t>(c));
    for (long long i = 0; i < r; i++) {
        if (!next_line()) {
            throw std::invalid_argument("matrix text: expected " + std::to_string(r) + " rows");
        }
        if (line.size() != static_cast<std::size_t>(c)) {
            throw std::invalid_argument("matrix text: row " + std::to_string(i) + " has wrong length");
        }
        m.append_row(BitVector::from_string(line));
    }
    return m;
}

BitMatrix BitMatrix::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read(in);
}

void BitMatrix::append_row(BitVector v) {
    require_same_length(v.size(), cols_, "append_row");
    rows_.push_back(std::move(v));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); r++) {
        for (auto c : rows_[r].support()) {
            t.set(c, r, true);
        }
    }
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix &rhs) const {
    require_same_length(cols_, rhs.rows(), "matrix product");
    BitMatrix out(rows(), rhs.cols());
    for (std::size_t r = 0; r < rows(); r++) {
        for (auto k : rows_[r].support()) {
            out.rows_[r] ^= rhs.rows_[k];
        }
    }
    return out;
}

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVector &v) { return v.is_zero(); });
}

std::string BitMatrix::str() const {
    std::string s = std::to_string(rows()) + " " + std::to_string(cols_) + "\n";
    for (const auto &r : rows_) {
        s += r.str();
        s += '\n';
    }
    return s;
}

std::ostream &operator<<(std::ostream &out, const BitMatrix &m) {
    return out << m.str();
}

RrefResult rref(const BitMatrix &m) {
    RrefResult res{m, {}, 0};
    BitMatrix &a = res.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); c++) {
        std::size_t p = r;
        while (p < a.rows() && !a.get(p, c)) {
            p++;
        }
        if (p == a.rows()) {
            continue;
        }
        std::swap(a.row(p), a.row(r));
        for (std::size_t i = 0; i < a.rows(); i++) {
            if (i != r && a.get(i, c)) {
                a.row(i) ^= a.row(r);
            }
        }
        res.pivots.push_back(c);
        r++;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const BitMatrix &m) {
    return rref(m).rank;
}

BitMatrix null_space(const BitMatrix &m) {
    auto red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) {
        is_pivot[p] = true;
    }
    BitMatrix basis(0, m.cols());
    for (std::size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(m.cols());
        v.set(f, true);
        for (std::size_t i = 0; i < red.rank; i++) {
            if (red.reduced.get(i, f)) {
                v.set(red.pivots[i], true);
            }
        }
        basis.append_row(std::move(v));
    }
    return basis;
}

bool in_row_space(const BitMatrix &m, const BitVector &v) {
    require_same_length(v.size(), m.cols(), "in_row_space");
    return row_combination(m, v).has_value();
}

BitVector mat_vec(const BitMatrix &m, const BitVector &v) {
    require_same_length(v.size(), m.cols(), "mat_vec");
    BitVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        out.set(r, m.row(r).dot(v));
    }
    return out;
}

std::optional<BitVector> row_combination(const BitMatrix &m, const BitVector &v) {
    require_same_length(v.size(), m.cols(), "row_combination");
    // Eliminate on [row | unit] so every reduced row remembers its source rows.
    std::vector<BitVector> rows, tags;
    for (std::size_t i = 0; i < m.rows(); i++) {
        rows.push_back(m.row(i));
        tags.push_back(BitVector::unit(m.rows(), i));
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows.size(); c++) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[r]);
        std::swap(tags[p], tags[r]);
        for (std::size_t i = r + 1; i < rows.size(); i++) {
            if (rows[i].get(c)) {
                rows[i] ^= rows[r];
                tags[i] ^= tags[r];
            }
        }
        pivots.push_back(c);
        r++;
    }
    BitVector rest = v;
    BitVector coeffs(m.rows());
    for (std::size_t i = 0; i < pivots.size(); i++) {
        if (rest.get(pivots[i])) {
            rest ^= rows[i];
            coeffs ^= tags[i];
        }
    }
    if (!rest.is_zero()) {
        return std::nullopt;
    }
    return coeffs;
}

BitMatrix row_basis(const BitMatrix &m) {
    auto red = rref(m);
    BitMatrix out(0, m.cols());
    for (std::size_t i = 0; i < red.rank; i++) {
        out.append_row(red.reduced.row(i));
    }
    return out;
}

}  // namespace vhss
