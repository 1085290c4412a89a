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

#include "vhss/pauli_string.hpp"

#include <bit>
#include <stdexcept>

namespace vhss {

std::uint8_t pauli_product_log_i(std::span<const std::uint64_t> x1, std::span<const std::uint64_t> z1,
                                 std::span<const std::uint64_t> x2, std::span<const std::uint64_t> z2) {
    // Two-bit counters, one per bit lane, accumulating +1 or -1 per anticommuting qubit.
    std::uint64_t cnt1 = 0;
    std::uint64_t cnt2 = 0;
    std::size_t pc1 = 0, pc2 = 0;
    for (std::size_t k = 0; k < x1.size(); k++) {
        std::uint64_t nx = x1[k] ^ x2[k];
        std::uint64_t nz = z1[k] ^ z2[k];
        std::uint64_t x1z2 = x1[k] & z2[k];
        std::uint64_t anti = (x2[k] & z1[k]) ^ x1z2;
        cnt2 ^= (cnt1 ^ nx ^ nz ^ x1z2) & anti;
        cnt1 ^= anti;
    }
    pc1 = std::popcount(cnt1);
    pc2 = std::popcount(cnt2);
    return static_cast<std::uint8_t>((pc1 + 2 * pc2) & 3);
}

PauliString PauliString::from_str(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        negative = text[0] == '-';
        text.remove_prefix(1);
    }
    PauliString p(text.size());
    p.negative = negative;
    for (std::size_t q = 0; q < text.size(); q++) {
        p.set(q, text[q]);
    }
    return p;
}

PauliString PauliString::x_type(const BitVector &support) {
    PauliString p(support.size());
    p.x = support;
    return p;
}

PauliString PauliString::z_type(const BitVector &support) {
    PauliString p(support.size());
    p.z = support;
    return p;
}

std::size_t PauliString::weight() const {
    BitVector u = x;
    for (std::size_t k = 0; k < u.words().size(); k++) {
        u.words()[k] |= z.words()[k];
    }
    return u.weight();
}

char PauliString::at(std::size_t q) const {
    static constexpr char table[4] = {'_', 'X', 'Z', 'Y'};
    return table[x.get(q) | (z.get(q) << 1)];
}

void PauliString::set(std::size_t q, char p) {
    switch (p) {
        case '_':
        case 'I':
            x.set(q, false);
            z.set(q, false);
            break;
        case 'X':
            x.set(q, true);
            z.set(q, false);
            break;
        case 'Y':
            x.set(q, true);
            z.set(q, true);
            break;
        case 'Z':
            x.set(q, false);
            z.set(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli: '") + p + "'");
    }
}

bool PauliString::commutes(const PauliString &other) const {
    if (size() != other.size()) {
        throw std::invalid_argument("commutes: length mismatch");
    }
    return x.dot(other.z) == z.dot(other.x);
}

std::uint8_t PauliString::inplace_right_mul_with_phase(const PauliString &rhs) {
    if (size() != rhs.size()) {
        throw std::invalid_argument("pauli product: length mismatch");
    }
    std::uint8_t e = pauli_product_log_i(x.words(), z.words(), rhs.x.words(), rhs.z.words());
    e = static_cast<std::uint8_t>((e + 2 * negative + 2 * rhs.negative) & 3);
    x ^= rhs.x;
    z ^= rhs.z;
    negative = (e & 2) != 0;
    return e;
}

bool PauliString::inplace_right_mul(const PauliString &rhs) {
    return (inplace_right_mul_with_phase(rhs) & 1) == 0;
}

std::string PauliString::str() const {
    std::string s(1, negative ? '-' : '+');
    for (std::size_t q = 0; q < size(); q++) {
        s += at(q);
    }
    return s;
}

}  // namespace vhss
