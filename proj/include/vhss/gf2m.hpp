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

#ifndef VHSS_GF2M_HPP
#define VHSS_GF2M_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vhss/rng.hpp"

namespace vhss {

/// GF(2^Bits) in the polynomial basis, reduced by Modulus (which includes the x^Bits term).
template <unsigned Bits, unsigned Modulus>
class GF2m {
    static_assert(Bits >= 1 && Bits <= 8);
    static_assert((Modulus >> Bits) == 1);

   public:
    static constexpr unsigned ORDER = 1u << Bits;

    constexpr GF2m() = default;
    constexpr explicit GF2m(unsigned v) : v_(static_cast<std::uint8_t>(v)) {
        if (v >= ORDER) {
            throw std::invalid_argument("field element out of range");
        }
    }

    constexpr std::uint8_t value() const {
        return v_;
    }
    constexpr bool is_zero() const {
        return v_ == 0;
    }

    static GF2m random(Rng &rng) {
        return GF2m(static_cast<unsigned>(uniform_below(rng, ORDER)));
    }
    static GF2m random_nonzero(Rng &rng) {
        return GF2m(1 + static_cast<unsigned>(uniform_below(rng, ORDER - 1)));
    }

    friend constexpr GF2m operator+(GF2m a, GF2m b) {
        return GF2m(static_cast<unsigned>(a.v_ ^ b.v_));
    }
    friend constexpr GF2m operator-(GF2m a, GF2m b) {
        return a + b;
    }
    friend constexpr GF2m operator*(GF2m a, GF2m b) {
        unsigned x = a.v_, y = b.v_, acc = 0;
        while (y) {
            if (y & 1) {
                acc ^= x;
            }
            y >>= 1;
            x <<= 1;
            if (x & ORDER) {
                x ^= Modulus;
            }
        }
        return GF2m(acc);
    }
    GF2m &operator+=(GF2m o) {
        return *this = *this + o;
    }
    GF2m &operator*=(GF2m o) {
        return *this = *this * o;
    }

    GF2m pow(unsigned e) const {
        GF2m base = *this, acc(1);
        while (e) {
            if (e & 1) {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        return acc;
    }
    GF2m inverse() const {
        if (v_ == 0) {
            throw std::domain_error("zero has no inverse");
        }
        return pow(ORDER - 2);
    }
    friend GF2m operator/(GF2m a, GF2m b) {
        return a * b.inverse();
    }

    friend constexpr bool operator==(GF2m, GF2m) = default;
    friend constexpr auto operator<=>(GF2m, GF2m) = default;

   private:
    std::uint8_t v_ = 0;
};

using GF256 = GF2m<8, 0x11B>;
using GF16 = GF2m<4, 0x13>;

/// Dense polynomial, coefficient i multiplies x^i.
template <typename F>
struct Polynomial {
    std::vector<F> coeffs;

    static Polynomial random(std::size_t degree, F constant, Rng &rng) {
        Polynomial p;
        p.coeffs.push_back(constant);
        for (std::size_t i = 0; i < degree; i++) {
            p.coeffs.push_back(F::random(rng));
        }
        return p;
    }

    F operator()(F x) const {
        F acc;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    /// -1 for the zero polynomial.
    int degree() const {
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            if (!coeffs[i].is_zero()) {
                return static_cast<int>(i);
            }
        }
        return -1;
    }

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b) {
        Polynomial out;
        out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
        for (std::size_t i = 0; i < out.coeffs.size(); i++) {
            if (i < a.coeffs.size()) {
                out.coeffs[i] += a.coeffs[i];
            }
            if (i < b.coeffs.size()) {
                out.coeffs[i] += b.coeffs[i];
            }
        }
        return out;
    }

    friend Polynomial operator*(F s, const Polynomial &p) {
        Polynomial out = p;
        for (auto &c : out.coeffs) {
            c *= s;
        }
        return out;
    }
};

/// The unique polynomial of degree < points.size() through the points (Lagrange).
template <typename F>
Polynomial<F> interpolate(const std::vector<std::pair<F, F>> &points) {
    std::size_t k = points.size();
    Polynomial<F> out;
    out.coeffs.assign(k, F());
    for (std::size_t i = 0; i < k; i++) {
        // basis_i = prod_{j != i} (x - x_j) / (x_i - x_j)
        std::vector<F> basis{F(1)};
        F denom(1);
        for (std::size_t j = 0; j < k; j++) {
            if (j == i) {
                continue;
            }
            if (points[i].first == points[j].first) {
                throw std::invalid_argument("interpolation points repeat");
            }
            std::vector<F> next(basis.size() + 1, F());
            for (std::size_t m = 0; m < basis.size(); m++) {
                next[m + 1] += basis[m];
                next[m] += basis[m] * points[j].first;
            }
            basis.swap(next);
            denom *= points[i].first - points[j].first;
        }
        F scale = points[i].second / denom;
        for (std::size_t m = 0; m < k; m++) {
            out.coeffs[m] += basis[m] * scale;
        }
    }
    return out;
}

/// Shamir shares of `secret` at the given points under a fresh random polynomial of the given degree.
template <typename F>
std::vector<F> shamir_share(F secret, std::size_t degree, const std::vector<F> &points, Rng &rng) {
    auto poly = Polynomial<F>::random(degree, secret, rng);
    std::vector<F> out;
    out.reserve(points.size());
    for (auto x : points) {
        out.push_back(poly(x));
    }
    return out;
}

/// Interpolates through the points and returns the polynomial only if its degree is at most max_degree.
template <typename F>
std::optional<Polynomial<F>> consistent_polynomial(const std::vector<std::pair<F, F>> &points, std::size_t max_degree) {
    if (points.empty()) {
        return std::nullopt;
    }
    std::vector<std::pair<F, F>> head(points.begin(), points.begin() + std::min(points.size(), max_degree + 1));
    auto poly = interpolate(head);
    for (const auto &[x, y] : points) {
        if (poly(x) != y) {
            return std::nullopt;
        }
    }
    return poly;
}

}  // namespace vhss

#endif
