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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

using namespace vhss;

namespace {

template <typename F>
void check_field_axioms(std::uint64_t seed) {
    Rng rng(seed);
    for (int i = 0; i < 2000; i++) {
        F a = F::random(rng), b = F::random(rng), c = F::random(rng);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a + a, F());
        ASSERT_EQ(a * F(1), a);
    }
    for (unsigned v = 1; v < F::ORDER; v++) {
        F x(v);
        ASSERT_EQ(x * x.inverse(), F(1));
        // No zero divisors: x * y != 0 for every nonzero y, checked directly.
        for (unsigned w = 1; w < F::ORDER; w++) {
            ASSERT_FALSE((x * F(w)).is_zero());
        }
    }
    ASSERT_THROW(F().inverse(), std::domain_error);
    ASSERT_THROW(F(F::ORDER), std::invalid_argument);
}

// Majority over interpolations of every (n-1)-subset; independent of tags.
std::map<std::pair<unsigned, unsigned>, int> subset_votes(const std::vector<KeyShare> &shares, std::size_t t) {
    std::map<std::pair<unsigned, unsigned>, int> votes;
    for (std::size_t skip = 0; skip < shares.size(); skip++) {
        std::vector<std::pair<GF256, GF256>> pa, pb;
        for (const auto &s : shares) {
            if (s.node != skip) {
                pa.push_back({s.eval_point, s.share_a});
                pb.push_back({s.eval_point, s.share_b});
            }
        }
        auto fa = consistent_polynomial(pa, t);
        auto fb = consistent_polynomial(pb, t);
        if (fa && fb) {
            votes[{(*fa)(GF256()).value(), (*fb)(GF256()).value()}]++;
        }
    }
    return votes;
}

std::vector<bool> random_coins(Rng &rng, std::size_t r) {
    std::vector<bool> out;
    for (std::size_t i = 0; i < r; i++) {
        out.push_back(random_bit(rng));
    }
    return out;
}

const OtpKey KEYS[4] = {{false, false}, {false, true}, {true, false}, {true, true}};

}  // namespace

TEST(field, gf256_axioms) {
    check_field_axioms<GF256>(1);
}

TEST(field, gf16_axioms) {
    check_field_axioms<GF16>(2);
}

TEST(field, gf256_known_products) {
    // Worked examples for the x^8+x^4+x^3+x+1 field.
    ASSERT_EQ((GF256(0x57) * GF256(0x83)).value(), 0xC1);
    ASSERT_EQ((GF256(0x57) * GF256(0x13)).value(), 0xFE);
    ASSERT_EQ(GF256(0x53).inverse().value(), 0xCA);
}

TEST(polynomial, interpolation_round_trip) {
    Rng rng(4);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t deg = uniform_below(rng, 6);
        auto p = Polynomial<GF256>::random(deg, GF256::random(rng), rng);
        std::vector<std::pair<GF256, GF256>> pts;
        for (std::size_t i = 0; i <= deg; i++) {
            pts.push_back({eval_point_of(i * 3), p(eval_point_of(i * 3))});
        }
        auto q = interpolate(pts);
        for (unsigned x = 0; x < 256; x++) {
            ASSERT_EQ(p(GF256(x)), q(GF256(x)));
        }
        pts.push_back({GF256(200), p(GF256(200)) + GF256(1)});
        ASSERT_FALSE(consistent_polynomial(pts, deg).has_value());
    }
}

TEST(vcss_share, degree_zero_is_constant) {
    Rng rng(5);
    for (auto key : KEYS) {
        auto deal = vcss_share(key, 5, 0, 2, rng);
        for (const auto &s : deal.shares) {
            ASSERT_EQ(s.share_a.value(), key.a);
            ASSERT_EQ(s.share_b.value(), key.b);
        }
    }
}

TEST(vcss_share, parameter_checks) {
    Rng rng(6);
    ASSERT_THROW(vcss_share({}, 6, 3, 1, rng), std::invalid_argument);
    ASSERT_THROW(vcss_share({}, 256, 1, 1, rng), std::invalid_argument);
    ASSERT_THROW(vcss_share({}, 0, 0, 1, rng), std::invalid_argument);
    ASSERT_NO_THROW(vcss_share({}, 7, 3, 1, rng));
    ASSERT_THROW(TagVcss(7, 1, 8, 7), std::invalid_argument);
}

TEST(vcss_share, any_t_plus_one_shares_determine_key) {
    Rng rng(7);
    for (auto key : KEYS) {
        auto deal = vcss_share(key, 7, 3, 1, rng);
        for (std::uint32_t mask = 0; mask < 128; mask++) {
            if (std::popcount(mask) != 4) {
                continue;
            }
            std::vector<std::pair<GF256, GF256>> pa, pb;
            for (std::size_t i = 0; i < 7; i++) {
                if ((mask >> i) & 1) {
                    pa.push_back({deal.shares[i].eval_point, deal.shares[i].share_a});
                    pb.push_back({deal.shares[i].eval_point, deal.shares[i].share_b});
                }
            }
            ASSERT_EQ(interpolate(pa)(GF256()).value(), key.a);
            ASSERT_EQ(interpolate(pb)(GF256()).value(), key.b);
        }
    }
}

TEST(vcss_share, t_shares_are_key_independent_exhaustive_gf16) {
    // Enumerate every dealer polynomial pair over GF(16) and tabulate what a t-subset sees.
    for (std::size_t t : {1, 2}) {
        for (std::uint32_t subset = 0; subset < 128; subset++) {
            if (static_cast<std::size_t>(std::popcount(subset)) != t) {
                continue;
            }
            std::vector<GF16> xs;
            for (unsigned i = 0; i < 7; i++) {
                if ((subset >> i) & 1) {
                    xs.push_back(GF16(i + 1));
                }
            }
            std::map<std::vector<unsigned>, unsigned> reference;
            for (std::size_t k = 0; k < 4; k++) {
                std::map<std::vector<unsigned>, unsigned> counts;
                std::uint32_t total = 1u << (8 * t);  // 16^t choices for each of two polynomials
                for (std::uint32_t r = 0; r < total; r++) {
                    Polynomial<GF16> fa{{GF16(KEYS[k].a ? 1u : 0u)}}, fb{{GF16(KEYS[k].b ? 1u : 0u)}};
                    for (std::size_t c = 0; c < t; c++) {
                        fa.coeffs.push_back(GF16((r >> (4 * c)) & 15));
                        fb.coeffs.push_back(GF16((r >> (4 * (t + c))) & 15));
                    }
                    std::vector<unsigned> view;
                    for (auto x : xs) {
                        view.push_back(fa(x).value());
                        view.push_back(fb(x).value());
                    }
                    counts[view]++;
                }
                if (k == 0) {
                    reference = counts;
                    // t points of a degree-t polynomial with fixed constant are uniform.
                    ASSERT_EQ(reference.size(), total);
                } else {
                    ASSERT_EQ(counts, reference);
                }
            }
        }
    }
}

TEST(vcss_share, gf16_shamir_helper) {
    Rng rng(8);
    std::vector<GF16> xs{GF16(1), GF16(2), GF16(3)};
    auto ys = shamir_share(GF16(9), 2, xs, rng);
    std::vector<std::pair<GF16, GF16>> pts;
    for (std::size_t i = 0; i < 3; i++) {
        pts.push_back({xs[i], ys[i]});
    }
    ASSERT_EQ(interpolate(pts)(GF16()), GF16(9));
}

TEST(vcss_verify, honest_dealer_always_accepted) {
    Rng rng(9);
    for (std::size_t n_c : {1, 3, 5, 7, 11}) {
        for (std::size_t t = 0; 2 * t < n_c; t++) {
            for (int trial = 0; trial < 300; trial++) {
                auto deal = vcss_share(KEYS[trial & 3], n_c, t, 8, rng);
                auto v = vcss_verify(deal, t, random_coins(rng, 8));
                ASSERT_TRUE(v.accept);
                ASSERT_TRUE(v.accused.empty());
                ASSERT_EQ(v.broadcasts.size(), 8u);
            }
        }
    }
}

TEST(vcss_verify, liars_are_the_only_accused) {
    Rng rng(10);
    for (std::size_t t = 1; t <= 3; t++) {
        auto deal = vcss_share(KEYS[1], 7, t, 8, rng);
        std::vector<std::size_t> liars;
        for (std::size_t i = 0; i < t; i++) {
            liars.push_back(6 - i);
        }
        auto v = vcss_verify(deal, t, random_coins(rng, 8), liars);
        ASSERT_TRUE(v.accept);
        std::sort(liars.begin(), liars.end());
        ASSERT_EQ(v.accused, liars);
    }
}

TEST(vcss_verify, split_dealer_rejected) {
    Rng rng(11);
    const int trials = 10000;
    const std::size_t r = 8;
    int rejected = 0;
    for (int i = 0; i < trials; i++) {
        auto deal = vcss_share_split(KEYS[i & 3], 7, 1, r, 3, rng);
        rejected += !vcss_verify(deal, 1, random_coins(rng, r)).accept;
    }
    double p = 1 - std::ldexp(1.0, -static_cast<int>(r));
    double sigma = std::sqrt(p * (1 - p) / trials);
    ASSERT_GE(rejected / double(trials), p - 3 * sigma);

    // One round: the dealer survives exactly when it guesses the coin.
    int passed = 0;
    for (int i = 0; i < 4000; i++) {
        auto deal = vcss_share_split(KEYS[0], 7, 1, 1, 3, rng);
        passed += vcss_verify(deal, 1, random_coins(rng, 1)).accept;
    }
    ASSERT_NEAR(passed / 4000.0, 0.5, 5 * std::sqrt(0.25 / 4000));
}

TEST(vcss_reconstruct, clean_shares) {
    Rng rng(12);
    for (auto key : KEYS) {
        auto deal = vcss_share(key, 7, 3, 0, rng);
        auto rec = vcss_reconstruct(deal.shares, 3);
        ASSERT_TRUE(rec.ok) << rec.error;
        ASSERT_EQ(rec.key, key);
        ASSERT_TRUE(rec.rejected.empty());
    }
    auto deal = vcss_share({true, false}, 7, 1, 0, rng);
    std::vector<KeyShare> two{deal.shares[1], deal.shares[2]};
    auto rec = vcss_reconstruct(two, 1);
    ASSERT_TRUE(rec.ok);
    ASSERT_EQ(rec.key, (OtpKey{true, false}));
}

TEST(vcss_reconstruct, one_corrupted_share_matches_subset_majority) {
    Rng rng(13);
    for (int trial = 0; trial < 100; trial++) {
        auto key = KEYS[trial & 3];
        auto deal = vcss_share(key, 7, 1, 0, rng);
        std::size_t bad = uniform_below(rng, 7);
        deal.shares[bad].share_a += GF256::random_nonzero(rng);
        auto rec = vcss_reconstruct(deal.shares, 1);
        ASSERT_TRUE(rec.ok);
        ASSERT_EQ(rec.rejected, std::vector<std::size_t>{bad});
        auto votes = subset_votes(deal.shares, 1);
        auto best = std::max_element(votes.begin(), votes.end(),
                                     [](const auto &x, const auto &y) { return x.second < y.second; });
        ASSERT_EQ(best->first, (std::pair<unsigned, unsigned>{key.a, key.b}));
        ASSERT_EQ(rec.key, key);
    }
}

TEST(vcss_reconstruct, every_corruption_pattern_up_to_t) {
    Rng rng(14);
    for (std::size_t t = 1; t <= 2; t++) {
        for (std::uint32_t mask = 0; mask < 128; mask++) {
            std::size_t w = std::popcount(mask);
            if (w > t) {
                continue;
            }
            auto key = KEYS[mask & 3];
            auto deal = vcss_share(key, 7, t, 0, rng);
            std::vector<std::size_t> expected;
            for (std::size_t i = 0; i < 7; i++) {
                if ((mask >> i) & 1) {
                    deal.shares[i].share_b += GF256::random_nonzero(rng);
                    expected.push_back(i);
                }
            }
            auto rec = vcss_reconstruct(deal.shares, t);
            ASSERT_TRUE(rec.ok) << rec.error;
            ASSERT_EQ(rec.key, key);
            ASSERT_EQ(rec.rejected, expected);
        }
    }
}

TEST(vcss_reconstruct, too_many_corruptions_fail) {
    Rng rng(15);
    auto deal = vcss_share({true, true}, 7, 1, 0, rng);
    deal.shares[2].share_a += GF256(3);
    deal.shares[5].share_b += GF256(7);
    auto rec = vcss_reconstruct(deal.shares, 1);
    ASSERT_FALSE(rec.ok);
    ASSERT_EQ(rec.error, "more than t inconsistent shares");
    // The tag-free oracle also finds no consistent majority.
    ASSERT_TRUE(subset_votes(deal.shares, 1).empty());
    // Excluded nodes count toward the bound too.
    auto deal2 = vcss_share({true, true}, 7, 1, 0, rng);
    deal2.shares[2].share_a += GF256(3);
    std::vector<std::size_t> excluded{4};
    ASSERT_FALSE(vcss_reconstruct(deal2.shares, 1, excluded).ok);
}

TEST(serialization, round_trip_and_layout) {
    Rng rng(16);
    auto deal = vcss_share({false, true}, 5, 2, 3, rng);
    for (const auto &s : deal.shares) {
        auto bytes = serialize_share(s);
        ASSERT_EQ(deserialize_share(bytes), s);
        // 4 length + 4 node + 3 elements + 3 counts of 4 + 5*2 + 5*3 + 3*2
        ASSERT_EQ(bytes.size(), 4u + 4 + 3 + 12 + 10 + 15 + 6);
        ASSERT_EQ(bytes[0], bytes.size() - 4);
        ASSERT_EQ(bytes[4], s.node);
        ASSERT_EQ(bytes[8], s.eval_point.value());
        auto cut = bytes;
        cut.pop_back();
        ASSERT_THROW(deserialize_share(cut), std::invalid_argument);
        auto extra = bytes;
        extra.push_back(0);
        ASSERT_THROW(deserialize_share(extra), std::invalid_argument);
    }
}

TEST(tag_vcss, interface) {
    TagVcss scheme(7, 3, 4);
    ASSERT_EQ(scheme.threshold(), 3u);
    Rng rng(17);
    const Vcss &v = scheme;
    auto deal = v.share({true, false}, rng);
    ASSERT_TRUE(v.verify(deal, {true, false, true, true}, {}).accept);
    auto rec = v.reconstruct(deal.shares, {});
    ASSERT_TRUE(rec.ok);
    ASSERT_EQ(rec.key, (OtpKey{true, false}));
}
