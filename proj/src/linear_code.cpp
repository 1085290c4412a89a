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

#include <algorithm>
#include <limits>
#include <string>

namespace vhss {

namespace {

std::vector<std::uint64_t> key_of(const BitVector &v) {
    auto w = v.words();
    return {w.begin(), w.end()};
}

// Walks all weight-w subsets of [0, n) in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t w, F &&f) {
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; i++) {
        idx[i] = i;
    }
    if (w > n) {
        return;
    }
    while (true) {
        f(idx);
        std::size_t i = w;
        while (i > 0 && idx[i - 1] == n - w + i - 1) {
            i--;
        }
        if (i == 0) {
            return;
        }
        idx[i - 1]++;
        for (std::size_t j = i; j < w; j++) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

// Gray-code walk over the row space; f sees each nonzero combination once.
template <typename F>
void for_each_combination(const BitMatrix &basis, F &&f) {
    std::size_t k = basis.rows();
    if (k > MAX_ENUMERATED_DIMENSION) {
        throw DistanceUnavailable("cannot enumerate a code of dimension " + std::to_string(k) + " (limit " +
                                  std::to_string(MAX_ENUMERATED_DIMENSION) + "); declare its distance");
    }
    BitVector cur(basis.cols());
    for (std::uint64_t g = 1; g < (std::uint64_t{1} << k); g++) {
        cur ^= basis.row(static_cast<std::size_t>(__builtin_ctzll(g)));
        f(cur);
    }
}

}  // namespace

LinearCode LinearCode::from_generator(const BitMatrix &g, std::optional<std::size_t> declared_distance) {
    if (g.cols() == 0 || g.is_zero()) {
        throw std::invalid_argument("generator matrix must be nonzero");
    }
    LinearCode c;
    c.n_ = g.cols();
    auto red = rref(g);
    c.rank_deficient_ = red.rank < g.rows();
    c.generator_ = BitMatrix(0, c.n_);
    for (std::size_t i = 0; i < red.rank; i++) {
        c.generator_.append_row(red.reduced.row(i));
    }
    c.pivots_ = red.pivots;
    c.parity_check_ = null_space(c.generator_);
    c.finish(declared_distance);
    return c;
}

LinearCode LinearCode::from_parity_check(const BitMatrix &h, std::optional<std::size_t> declared_distance) {
    BitMatrix g = null_space(h);
    if (g.rows() == 0) {
        throw std::invalid_argument("parity check admits only the zero codeword");
    }
    LinearCode c = from_generator(g, declared_distance);
    // Keep the caller's check matrix (row order matters for syndromes).
    c.parity_check_ = row_basis(h);
    if (c.parity_check_.rows() == h.rows()) {
        c.parity_check_ = h;
    }
    c.syndrome_table_.reset();
    c.finish(c.d_);
    return c;
}

void LinearCode::finish(std::optional<std::size_t> declared_distance) {
    if (declared_distance) {
        d_ = *declared_distance;
    } else {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for_each_combination(generator_, [&](const BitVector &w) { best = std::min(best, w.weight()); });
        d_ = best;
    }
    auto table = std::make_shared<std::map<std::vector<std::uint64_t>, BitVector>>();
    std::size_t radius = correctable();
    for (std::size_t w = 0; w <= radius; w++) {
        for_each_subset(n_, w, [&](const std::vector<std::size_t> &pos) {
            BitVector e(n_);
            for (auto p : pos) {
                e.set(p, true);
            }
            table->emplace(key_of(mat_vec(parity_check_, e)), e);
        });
    }
    syndrome_table_ = std::move(table);
}

bool LinearCode::contains(const BitVector &word) const {
    return syndrome(word).is_zero();
}

BitVector LinearCode::syndrome(const BitVector &word) const {
    if (word.size() != n_) {
        throw std::invalid_argument("word length " + std::to_string(word.size()) + " != code length " +
                                    std::to_string(n_));
    }
    return mat_vec(parity_check_, word);
}

BitVector LinearCode::encode(const BitVector &message) const {
    if (message.size() != k()) {
        throw std::invalid_argument("message length must equal k");
    }
    BitVector out(n_);
    for (auto i : message.support()) {
        out ^= generator_.row(i);
    }
    return out;
}

BitVector LinearCode::message_of(const BitVector &codeword) const {
    BitVector m(k());
    for (std::size_t i = 0; i < k(); i++) {
        m.set(i, codeword.get(pivots_[i]));
    }
    return m;
}

std::vector<BitVector> LinearCode::codewords() const {
    std::vector<BitVector> out{BitVector(n_)};
    for_each_combination(generator_, [&](const BitVector &w) { out.push_back(w); });
    return out;
}

std::optional<std::vector<std::size_t>> LinearCode::decode_syndrome(const BitVector &syn) const {
    auto it = syndrome_table_->find(key_of(syn));
    if (it == syndrome_table_->end()) {
        return std::nullopt;
    }
    return it->second.support();
}

DecodeOutcome LinearCode::bounded_distance_decode(const BitVector &received) const {
    DecodeOutcome out;
    auto errs = decode_syndrome(syndrome(received));
    if (!errs) {
        return out;
    }
    out.status = DecodeStatus::decoded;
    out.codeword = received;
    for (auto p : *errs) {
        out.codeword.flip(p);
    }
    out.error_positions = std::move(*errs);
    out.message = message_of(out.codeword);
    return out;
}

DecodeOutcome LinearCode::erasure_decode(const BitVector &received, std::span<const std::size_t> erased) const {
    if (received.size() != n_) {
        throw std::invalid_argument("received word has the wrong length");
    }
    std::vector<bool> is_erased(n_, false);
    for (auto e : erased) {
        if (e >= n_) {
            throw std::out_of_range("erasure position out of range");
        }
        is_erased[e] = true;
    }
    std::size_t count = std::count(is_erased.begin(), is_erased.end(), true);
    if (count >= d_) {
        throw std::invalid_argument("erasure of " + std::to_string(count) +
                                    " positions is ambiguous for distance " + std::to_string(d_));
    }
    // Solve for the message using only known positions: columns of G restricted there.
    std::vector<std::size_t> known;
    for (std::size_t i = 0; i < n_; i++) {
        if (!is_erased[i]) {
            known.push_back(i);
        }
    }
    BitMatrix restricted(k(), known.size());
    BitVector target(known.size());
    for (std::size_t c = 0; c < known.size(); c++) {
        for (std::size_t r = 0; r < k(); r++) {
            restricted.set(r, c, generator_.get(r, known[c]));
        }
        target.set(c, received.get(known[c]));
    }
    DecodeOutcome out;
    auto msg = row_combination(restricted, target);
    if (!msg) {
        return out;
    }
    out.status = DecodeStatus::decoded;
    out.message = *msg;
    out.codeword = encode(*msg);
    for (auto e : erased) {
        if (out.codeword.get(e) != received.get(e)) {
            out.error_positions.push_back(e);
        }
    }
    std::sort(out.error_positions.begin(), out.error_positions.end());
    out.error_positions.erase(std::unique(out.error_positions.begin(), out.error_positions.end()),
                              out.error_positions.end());
    return out;
}

LinearCode dual(const LinearCode &c) {
    std::optional<std::size_t> d;
    if (c.parity_check().rows() > MAX_ENUMERATED_DIMENSION) {
        // Enumerating the dual is out of reach; the caller only needs its span.
        d = 0;
    }
    return LinearCode::from_generator(c.parity_check(), d);
}

bool is_subcode(const LinearCode &a, const LinearCode &b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("is_subcode: length mismatch");
    }
    for (std::size_t i = 0; i < a.k(); i++) {
        if (!b.contains(a.generator().row(i))) {
            return false;
        }
    }
    return true;
}

bool same_code(const LinearCode &a, const LinearCode &b) {
    return a.k() == b.k() && is_subcode(a, b);
}

LinearCode hamming_7_4() {
    // Column j is the binary expansion of j+1, least significant bit in row 0.
    BitMatrix h(3, 7);
    for (std::size_t j = 0; j < 7; j++) {
        for (std::size_t b = 0; b < 3; b++) {
            h.set(b, j, ((j + 1) >> b) & 1);
        }
    }
    return LinearCode::from_parity_check(h);
}

LinearCode repetition_code(std::size_t n) {
    BitMatrix g(1, n);
    for (std::size_t i = 0; i < n; i++) {
        g.set(0, i, true);
    }
    return LinearCode::from_generator(g);
}

LinearCode parity_code(std::size_t n) {
    return dual(repetition_code(n));
}

std::size_t min_weight_outside(const BitMatrix &a, const BitMatrix &b) {
    BitMatrix basis = row_basis(a);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    BitMatrix b_basis = row_basis(b);
    for_each_combination(basis, [&](const BitVector &w) {
        std::size_t wt = w.weight();
        if (wt < best && !in_row_space(b_basis, w)) {
            best = wt;
        }
    });
    return best;
}

}  // namespace vhss
