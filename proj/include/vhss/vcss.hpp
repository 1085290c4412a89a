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

#ifndef VHSS_VCSS_HPP
#define VHSS_VCSS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "vhss/gf2m.hpp"
#include "vhss/rng.hpp"

namespace vhss {

/// Two-bit one-time-pad key: the secret is padded as X^a Z^b.
struct OtpKey {
    bool a = false;
    bool b = false;
    friend bool operator==(const OtpKey &, const OtpKey &) = default;
};

/// One node's view of the classical sharing.
struct KeyShare {
    std::size_t node = 0;
    GF256 eval_point;
    GF256 share_a;
    GF256 share_b;
    /// tags[j] = share * b_j + c_j for peer j's key (b_j, c_j); one entry per node.
    std::vector<std::array<GF256, 2>> tags;
    /// keys[i] = (b, c_a, c_b) used to check peer i's share.
    std::vector<std::array<GF256, 3>> keys;
    /// masks[l] = this node's shares of the round-l mask polynomials.
    std::vector<std::array<GF256, 2>> masks;

    friend bool operator==(const KeyShare &, const KeyShare &) = default;
};

using PolyPair = std::array<Polynomial<GF256>, 2>;

struct VcssDeal {
    std::vector<KeyShare> shares;
    /// responses[l][coin]: what the dealer broadcasts in round l once the coin is public.
    std::vector<std::array<PolyPair, 2>> responses;
};

struct VcssMessage {
    std::size_t sender = 0;
    std::size_t round = 0;
    bool complaint = false;  // otherwise the dealer's response
};

struct VcssVerdict {
    bool accept = false;
    std::vector<std::size_t> accused;
    std::vector<VcssMessage> broadcasts;
};

struct VcssReconstruction {
    bool ok = false;
    OtpKey key;
    std::vector<std::size_t> rejected;
    std::string error;
};

inline GF256 eval_point_of(std::size_t node) {
    return GF256(static_cast<unsigned>(node + 1));
}

/// Shamir shares of a and b (degree t) with pairwise tags and `rounds` mask pairs.
VcssDeal vcss_share(OtpKey key, std::size_t n_c, std::size_t t, std::size_t rounds, Rng &rng);

/// A cheating dealer: nodes below `split` get shares of one polynomial pair, the rest of another.
/// Masks are fitted to a guessed coin each round, so a round passes only if the guess is right.
VcssDeal vcss_share_split(OtpKey key, std::size_t n_c, std::size_t t, std::size_t rounds, std::size_t split,
                          Rng &rng);

/// Runs the mask rounds against public coins. Nodes whose shares disagree with the dealer's
/// broadcast complain; `false_complainers` complain regardless. Rejects when complaints exceed t.
VcssVerdict vcss_verify(const VcssDeal &deal, std::size_t t, const std::vector<bool> &coins,
                        std::span<const std::size_t> false_complainers = {}, std::size_t dealer = 0);

/// Tag-checks every collected share (a share needs t approving peers), drops `excluded`,
/// and interpolates. Fails if more than t shares are dropped or the rest are inconsistent.
VcssReconstruction vcss_reconstruct(const std::vector<KeyShare> &collected, std::size_t t,
                                    std::span<const std::size_t> excluded = {});

/// Length-prefixed little-endian encoding.
std::vector<std::uint8_t> serialize_share(const KeyShare &share);
KeyShare deserialize_share(std::span<const std::uint8_t> bytes);

/// Interface the protocol uses; the tag-based scheme above is the shipped instantiation.
class Vcss {
   public:
    virtual ~Vcss() = default;
    virtual std::string name() const = 0;
    virtual std::size_t threshold() const = 0;
    virtual VcssDeal share(OtpKey key, Rng &rng) const = 0;
    virtual VcssVerdict verify(const VcssDeal &deal, const std::vector<bool> &coins,
                               std::span<const std::size_t> false_complainers) const = 0;
    virtual VcssReconstruction reconstruct(const std::vector<KeyShare> &collected,
                                           std::span<const std::size_t> excluded) const = 0;
};

class TagVcss final : public Vcss {
   public:
    TagVcss(std::size_t n_c, std::size_t t, std::size_t rounds, std::size_t dealer = 0);

    std::string name() const override {
        return "shamir_ic";
    }
    std::size_t threshold() const override {
        return t_;
    }
    VcssDeal share(OtpKey key, Rng &rng) const override {
        return vcss_share(key, n_c_, t_, rounds_, rng);
    }
    VcssVerdict verify(const VcssDeal &deal, const std::vector<bool> &coins,
                       std::span<const std::size_t> false_complainers) const override {
        return vcss_verify(deal, t_, coins, false_complainers, dealer_);
    }
    VcssReconstruction reconstruct(const std::vector<KeyShare> &collected,
                                   std::span<const std::size_t> excluded) const override {
        return vcss_reconstruct(collected, t_, excluded);
    }

   private:
    std::size_t n_c_, t_, rounds_, dealer_;
};

}  // namespace vhss

#endif
