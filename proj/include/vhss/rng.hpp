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

#ifndef VHSS_RNG_HPP
#define VHSS_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace vhss {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(std::string_view s) {
    return fnv1a64(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t *>(s.data()), s.size()));
}

/// Seed of trial `index` under a master seed.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index));
}

/// Independent generator for a named stream of one run.
inline Rng stream_rng(std::uint64_t seed, std::string_view stream) {
    return Rng(splitmix64(seed ^ fnv1a64(stream)));
}

inline bool random_bit(Rng &rng) {
    return (rng() >> 63) != 0;
}

/// Uniform double in [0, 1) with 53 random bits; platform independent.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound); rejection sampled so it does not depend on library distributions.
inline std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    while (true) {
        std::uint64_t v = rng();
        if (v < limit) {
            return v % bound;
        }
    }
}

}  // namespace vhss

#endif
