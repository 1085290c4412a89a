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

#ifndef VHSS_LINEAR_CODE_HPP
#define VHSS_LINEAR_CODE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "vhss/gf2.hpp"

namespace vhss {

/// Codes whose dimension exceeds this cannot have their distance enumerated.
constexpr std::size_t MAX_ENUMERATED_DIMENSION = 20;

struct DistanceUnavailable : std::domain_error {
    using std::domain_error::domain_error;
};

enum class DecodeStatus { decoded, failure };

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::failure;
    BitVector codeword;
    std::vector<std::size_t> error_positions;
    BitVector message;

    bool ok() const {
        return status == DecodeStatus::decoded;
    }
};

class LinearCode {
   public:
    /// Row-reduces g. Rank-deficient input shrinks k and sets rank_deficient().
    static LinearCode from_generator(const BitMatrix &g, std::optional<std::size_t> declared_distance = {});
    static LinearCode from_parity_check(const BitMatrix &h, std::optional<std::size_t> declared_distance = {});

    std::size_t n() const {
        return n_;
    }
    std::size_t k() const {
        return generator_.rows();
    }
    std::size_t distance() const {
        return d_;
    }
    std::size_t correctable() const {
        return d_ == 0 ? 0 : (d_ - 1) / 2;
    }
    bool rank_deficient() const {
        return rank_deficient_;
    }
    /// Systematic (reduced row echelon) generator.
    const BitMatrix &generator() const {
        return generator_;
    }
    const BitMatrix &parity_check() const {
        return parity_check_;
    }
    const std::vector<std::size_t> &information_set() const {
        return pivots_;
    }

    bool contains(const BitVector &word) const;
    BitVector syndrome(const BitVector &word) const;
    BitVector encode(const BitVector &message) const;
    /// Inverse of encode() on codewords (reads the information set).
    BitVector message_of(const BitVector &codeword) const;
    std::vector<BitVector> codewords() const;

    DecodeOutcome bounded_distance_decode(const BitVector &received) const;
    /// Error positions from a syndrome alone, if within the correctable radius.
    std::optional<std::vector<std::size_t>> decode_syndrome(const BitVector &syndrome) const;
    DecodeOutcome erasure_decode(const BitVector &received, std::span<const std::size_t> erased) const;

   private:
    LinearCode() = default;
    void finish(std::optional<std::size_t> declared_distance);

    std::size_t n_ = 0;
    std::size_t d_ = 0;
    bool rank_deficient_ = false;
    BitMatrix generator_;
    BitMatrix parity_check_;
    std::vector<std::size_t> pivots_;
    // syndrome words -> minimum-weight error pattern; shared so copies stay cheap
    std::shared_ptr<const std::map<std::vector<std::uint64_t>, BitVector>> syndrome_table_;
};

LinearCode dual(const LinearCode &c);
bool is_subcode(const LinearCode &a, const LinearCode &b);
bool same_code(const LinearCode &a, const LinearCode &b);

LinearCode hamming_7_4();
LinearCode repetition_code(std::size_t n);
LinearCode parity_code(std::size_t n);

/// Minimum weight of a nonzero word in rowspace(a) that is not in rowspace(b), by enumeration.
std::size_t min_weight_outside(const BitMatrix &a, const BitMatrix &b);

}  // namespace vhss

#endif
