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

#include "vhss/vcss.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vhss {

namespace {

void check_params(std::size_t n_c, std::size_t t) {
    if (n_c == 0 || n_c > 255) {
        throw std::invalid_argument("n_c must be in 1..255");
    }
    if (2 * t >= n_c) {
        throw std::invalid_argument("vcss needs t < n_c/2");
    }
}

// Every node j gets a random key for every peer i; i's tag is computed from its own share.
void fill_tags(std::vector<KeyShare> &shares, Rng &rng) {
    std::size_t n = shares.size();
    for (auto &s : shares) {
        s.tags.assign(n, {});
        s.keys.assign(n, {});
    }
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            if (i == j) {
                continue;
            }
            GF256 b = GF256::random_nonzero(rng), ca = GF256::random(rng), cb = GF256::random(rng);
            shares[j].keys[i] = {b, ca, cb};
            shares[i].tags[j] = {shares[i].share_a * b + ca, shares[i].share_b * b + cb};
        }
    }
}

GF256 bit(bool v) {
    return GF256(v ? 1u : 0u);
}

}  // namespace

VcssDeal vcss_share(OtpKey key, std::size_t n_c, std::size_t t, std::size_t rounds, Rng &rng) {
    check_params(n_c, t);
    auto fa = Polynomial<GF256>::random(t, bit(key.a), rng);
    auto fb = Polynomial<GF256>::random(t, bit(key.b), rng);
    VcssDeal deal;
    deal.shares.resize(n_c);
    for (std::size_t i = 0; i < n_c; i++) {
        auto &s = deal.shares[i];
        s.node = i;
        s.eval_point = eval_point_of(i);
        s.share_a = fa(s.eval_point);
        s.share_b = fb(s.eval_point);
    }
    fill_tags(deal.shares, rng);
    for (std::size_t l = 0; l < rounds; l++) {
        auto ga = Polynomial<GF256>::random(t, GF256::random(rng), rng);
        auto gb = Polynomial<GF256>::random(t, GF256::random(rng), rng);
        for (auto &s : deal.shares) {
            s.masks.push_back({ga(s.eval_point), gb(s.eval_point)});
        }
        deal.responses.push_back({PolyPair{ga, gb}, PolyPair{ga + fa, gb + fb}});
    }
    return deal;
}

VcssDeal vcss_share_split(OtpKey key, std::size_t n_c, std::size_t t, std::size_t rounds, std::size_t split,
                          Rng &rng) {
    check_params(n_c, t);
    if (split == 0 || split >= n_c) {
        throw std::invalid_argument("split must leave both groups nonempty");
    }
    auto fa1 = Polynomial<GF256>::random(t, bit(key.a), rng);
    auto fb1 = Polynomial<GF256>::random(t, bit(key.b), rng);
    // The second group sees the other value of a, so the two polynomials always differ.
    auto fa2 = Polynomial<GF256>::random(t, bit(!key.a), rng);
    auto fb2 = Polynomial<GF256>::random(t, bit(key.b), rng);
    VcssDeal deal;
    deal.shares.resize(n_c);
    for (std::size_t i = 0; i < n_c; i++) {
        auto &s = deal.shares[i];
        s.node = i;
        s.eval_point = eval_point_of(i);
        bool first = i < split;
        s.share_a = (first ? fa1 : fa2)(s.eval_point);
        s.share_b = (first ? fb1 : fb2)(s.eval_point);
    }
    fill_tags(deal.shares, rng);
    for (std::size_t l = 0; l < rounds; l++) {
        bool guess = random_bit(rng);
        auto ga1 = Polynomial<GF256>::random(t, GF256::random(rng), rng);
        auto gb1 = Polynomial<GF256>::random(t, GF256::random(rng), rng);
        // guess = 1: make g1 + f1 = g2 + f2; guess = 0: one mask for everyone.
        auto ga2 = guess ? ga1 + fa1 + fa2 : ga1;
        auto gb2 = guess ? gb1 + fb1 + fb2 : gb1;
        for (auto &s : deal.shares) {
            bool first = s.node < split;
            s.masks.push_back({(first ? ga1 : ga2)(s.eval_point), (first ? gb1 : gb2)(s.eval_point)});
        }
        // Answer with the larger group's polynomials.
        bool answer_first = split > n_c - split;
        const auto &ga = answer_first ? ga1 : ga2;
        const auto &gb = answer_first ? gb1 : gb2;
        const auto &fa = answer_first ? fa1 : fa2;
        const auto &fb = answer_first ? fb1 : fb2;
        deal.responses.push_back({PolyPair{ga, gb}, PolyPair{ga + fa, gb + fb}});
    }
    return deal;
}

VcssVerdict vcss_verify(const VcssDeal &deal, std::size_t t, const std::vector<bool> &coins,
                        std::span<const std::size_t> false_complainers, std::size_t dealer) {
    if (coins.size() != deal.responses.size()) {
        throw std::invalid_argument("one coin per verification round");
    }
    VcssVerdict out;
    std::set<std::size_t> accused;
    std::set<std::size_t> liars(false_complainers.begin(), false_complainers.end());
    for (std::size_t l = 0; l < coins.size(); l++) {
        bool coin = coins[l];
        const PolyPair &resp = deal.responses[l][coin];
        out.broadcasts.push_back({dealer, l, false});
        for (const auto &s : deal.shares) {
            if (s.node == dealer) {
                continue;
            }
            if (l >= s.masks.size()) {
                throw std::invalid_argument("share is missing mask values");
            }
            GF256 ea = s.masks[l][0] + (coin ? s.share_a : GF256());
            GF256 eb = s.masks[l][1] + (coin ? s.share_b : GF256());
            bool mismatch = resp[0](s.eval_point) != ea || resp[1](s.eval_point) != eb;
            if (mismatch || liars.count(s.node)) {
                out.broadcasts.push_back({s.node, l, true});
                accused.insert(s.node);
            }
        }
    }
    out.accused.assign(accused.begin(), accused.end());
    out.accept = out.accused.size() <= t;
    return out;
}

VcssReconstruction vcss_reconstruct(const std::vector<KeyShare> &collected, std::size_t t,
                                    std::span<const std::size_t> excluded) {
    VcssReconstruction out;
    std::set<std::size_t> dropped(excluded.begin(), excluded.end());
    std::set<std::size_t> present;
    for (const auto &s : collected) {
        if (!present.insert(s.node).second) {
            throw std::invalid_argument("node " + std::to_string(s.node) + " contributed two shares");
        }
    }
    std::vector<std::pair<GF256, GF256>> pa, pb;
    for (const auto &si : collected) {
        if (dropped.count(si.node)) {
            continue;
        }
        std::size_t votes = 0;
        for (const auto &sj : collected) {
            if (sj.node == si.node || sj.keys.size() <= si.node || si.tags.size() <= sj.node) {
                continue;
            }
            const auto &k = sj.keys[si.node];
            const auto &tag = si.tags[sj.node];
            votes += tag[0] == si.share_a * k[0] + k[1] && tag[1] == si.share_b * k[0] + k[2];
        }
        if (votes >= t) {
            pa.push_back({si.eval_point, si.share_a});
            pb.push_back({si.eval_point, si.share_b});
        } else {
            out.rejected.push_back(si.node);
            dropped.insert(si.node);
        }
    }
    std::size_t bad = 0;
    for (auto node : dropped) {
        bad += present.count(node);
    }
    if (bad > t) {
        out.error = "more than t inconsistent shares";
        return out;
    }
    if (pa.size() < t + 1) {
        out.error = "not enough shares";
        return out;
    }
    auto fa = consistent_polynomial(pa, t);
    auto fb = consistent_polynomial(pb, t);
    if (!fa || !fb) {
        out.error = "accepted shares do not lie on one polynomial";
        return out;
    }
    GF256 a = (*fa)(GF256()), b = (*fb)(GF256());
    if (a.value() > 1 || b.value() > 1) {
        out.error = "reconstructed key is not a bit pair";
        return out;
    }
    out.ok = true;
    out.key = {a.value() == 1, b.value() == 1};
    return out;
}

namespace {

void put_u32(std::vector<std::uint8_t> &out, std::uint32_t v) {
    for (int i = 0; i < 4; i++) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

struct Reader {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;

    std::uint8_t u8() {
        if (pos >= bytes.size()) {
            throw std::invalid_argument("truncated share encoding");
        }
        return bytes[pos++];
    }
    std::uint32_t u32() {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; i++) {
            v |= static_cast<std::uint32_t>(u8()) << (8 * i);
        }
        return v;
    }
    GF256 elem() {
        return GF256(u8());
    }
};

}  // namespace

std::vector<std::uint8_t> serialize_share(const KeyShare &share) {
    std::vector<std::uint8_t> body;
    put_u32(body, static_cast<std::uint32_t>(share.node));
    body.push_back(share.eval_point.value());
    body.push_back(share.share_a.value());
    body.push_back(share.share_b.value());
    put_u32(body, static_cast<std::uint32_t>(share.tags.size()));
    for (const auto &t : share.tags) {
        body.push_back(t[0].value());
        body.push_back(t[1].value());
    }
    put_u32(body, static_cast<std::uint32_t>(share.keys.size()));
    for (const auto &k : share.keys) {
        for (auto e : k) {
            body.push_back(e.value());
        }
    }
    put_u32(body, static_cast<std::uint32_t>(share.masks.size()));
    for (const auto &m : share.masks) {
        body.push_back(m[0].value());
        body.push_back(m[1].value());
    }
    std::vector<std::uint8_t> out;
    put_u32(out, static_cast<std::uint32_t>(body.size()));
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

KeyShare deserialize_share(std::span<const std::uint8_t> bytes) {
    Reader r{bytes};
    std::uint32_t len = r.u32();
    if (bytes.size() != 4 + static_cast<std::size_t>(len)) {
        throw std::invalid_argument("share length prefix does not match");
    }
    KeyShare s;
    s.node = r.u32();
    s.eval_point = r.elem();
    s.share_a = r.elem();
    s.share_b = r.elem();
    auto count = [&](std::size_t width) {
        std::uint32_t n = r.u32();
        if (static_cast<std::size_t>(n) * width > bytes.size() - r.pos) {
            throw std::invalid_argument("truncated share encoding");
        }
        return n;
    };
    for (std::uint32_t i = 0, n = count(2); i < n; i++) {
        s.tags.push_back({r.elem(), r.elem()});
    }
    for (std::uint32_t i = 0, n = count(3); i < n; i++) {
        s.keys.push_back({r.elem(), r.elem(), r.elem()});
    }
    for (std::uint32_t i = 0, n = count(2); i < n; i++) {
        s.masks.push_back({r.elem(), r.elem()});
    }
    if (r.pos != bytes.size()) {
        throw std::invalid_argument("trailing bytes after share");
    }
    return s;
}

TagVcss::TagVcss(std::size_t n_c, std::size_t t, std::size_t rounds, std::size_t dealer)
    : n_c_(n_c), t_(t), rounds_(rounds), dealer_(dealer) {
    check_params(n_c, t);
    if (dealer >= n_c) {
        throw std::invalid_argument("dealer must be one of the classical nodes");
    }
}

}  // namespace vhss
