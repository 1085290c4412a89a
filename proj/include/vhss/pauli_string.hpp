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

#ifndef VHSS_PAULI_STRING_HPP
#define VHSS_PAULI_STRING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "vhss/gf2.hpp"

namespace vhss {

/// Returns the exponent e (mod 4) in P1*P2 = i^e * P3, summed over all qubits,
/// where the operands are given as packed x/z words. Signs are not included.
std::uint8_t pauli_product_log_i(std::span<const std::uint64_t> x1, std::span<const std::uint64_t> z1,
                                 std::span<const std::uint64_t> x2, std::span<const std::uint64_t> z2);

/// Hermitian Pauli product with a +-1 sign. Qubit q is X if x[q], Z if z[q], Y if both.
struct PauliString {
    BitVector x;
    BitVector z;
    bool negative = false;

    PauliString() = default;
    explicit PauliString(std::size_t n) : x(n), z(n) {
    }

    /// Parses "+XYZ_" style text; the sign is optional and '_' or 'I' mean identity.
    static PauliString from_str(std::string_view text);
    static PauliString x_type(const BitVector &support);
    static PauliString z_type(const BitVector &support);

    std::size_t size() const {
        return x.size();
    }
    std::size_t weight() const;
    char at(std::size_t q) const;
    void set(std::size_t q, char p);

    bool commutes(const PauliString &other) const;
    /// this = this * rhs. Returns false (an i factor was dropped) if the operands anticommute.
    bool inplace_right_mul(const PauliString &rhs);
    /// this * rhs = i^e * pattern with e returned; the new sign holds bit 1 of e and bit 0 is a leftover i.
    std::uint8_t inplace_right_mul_with_phase(const PauliString &rhs);

    bool operator==(const PauliString &other) const = default;
    std::string str() const;
};

}  // namespace vhss

#endif
