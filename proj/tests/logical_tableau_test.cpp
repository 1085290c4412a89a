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

#include "vhss/logical_tableau.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "vhss/oracle/statevector.hpp"

using namespace vhss;
using oracle::StateVector;

namespace {

constexpr double TOL = 1e-9;

PauliString dense(const SparsePauli &p, std::size_t n) {
    PauliString out(n);
    out.negative = p.negative;
    for (const auto &t : p.terms) {
        out.set(t.qubit, t.op);
    }
    return out;
}

// Column-ordered tableau row to a dense string over the oracle's qubit indices (= ids).
PauliString by_id(const PauliString &row, const LogicalTableau &tab, std::size_t n) {
    PauliString out(n);
    out.negative = row.negative;
    for (std::size_t c = 0; c < row.size(); c++) {
        out.set(tab.live_qubits()[c], row.at(c));
    }
    return out;
}

SparsePauli random_sparse(Rng &rng, const std::vector<QubitId> &live) {
    SparsePauli p;
    p.negative = random_bit(rng);
    const char ops[3] = {'X', 'Y', 'Z'};
    for (auto q : live) {
        if (uniform_below(rng, 2) == 0) {
            p.terms.push_back({q, ops[uniform_below(rng, 3)]});
        }
    }
    if (p.terms.empty()) {
        p.terms.push_back({live[uniform_below(rng, live.size())], ops[uniform_below(rng, 3)]});
    }
    return p;
}

void expect_agreement(const LogicalTableau &tab, const StateVector &sv, Rng &rng) {
    std::size_t n = sv.num_qubits();
    for (const auto &s : tab.stabilizers()) {
        ASSERT_NEAR(sv.expectation(by_id(s, tab, n)).real(), 1.0, TOL) << s.str();
    }
    if (tab.has_logical()) {
        auto b = tab.amplitudes().bloch();
        ASSERT_NEAR(sv.expectation(by_id(*tab.logical_x(), tab, n)).real(), b[0], TOL);
        ASSERT_NEAR(sv.expectation(by_id(*tab.logical_z(), tab, n)).real(), b[2], TOL);
    }
    for (int k = 0; k < 8; k++) {
        auto p = random_sparse(rng, tab.live_qubits());
        ASSERT_NEAR(tab.expectation(p), sv.expectation(dense(p, n)).real(), TOL);
    }
}

StateVector encoded_oracle(const CssCode &css, const AmplitudePair &amps) {
    StateVector sv(css.n());
    sv.prepare_qubit(css.encoder_slot(), amps.alpha, amps.beta);
    for (const auto &g : css.encoding_circuit()) {
        if (g.kind == CircuitGate::H) {
            sv.h(g.a);
        } else {
            sv.cnot(g.a, g.b);
        }
    }
    return sv;
}

std::vector<QubitId> iota_ids(std::size_t n) {
    std::vector<QubitId> out(n);
    for (std::size_t i = 0; i < n; i++) {
        out[i] = static_cast<QubitId>(i);
    }
    return out;
}

}  // namespace

TEST(amplitude_pair, bloch_and_fidelity) {
    auto p = AmplitudePair::plus();
    auto b = p.bloch();
    ASSERT_NEAR(b[0], 1, TOL);
    ASSERT_NEAR(b[2], 0, TOL);
    auto yp = AmplitudePair::from_angles(M_PI / 2, M_PI / 2);
    ASSERT_NEAR(yp.bloch()[1], 1, TOL);
    ASSERT_NEAR(fidelity(AmplitudePair::zero(), AmplitudePair::one()), 0, TOL);
    ASSERT_NEAR(fidelity(AmplitudePair::zero(), p), 0.5, TOL);
    Rng rng(3);
    for (int i = 0; i < 50; i++) {
        auto a = AmplitudePair::random(rng);
        ASSERT_TRUE(a.is_normalized());
        ASSERT_NEAR(fidelity(a, a), 1, TOL);
        auto y = a.apply_y();
        auto xz = a.apply_z().apply_x();  // Y = i X Z, equal up to phase
        ASSERT_NEAR(fidelity(y, xz), 1, TOL);
    }
}

TEST(logical_tableau, fresh_qubits) {
    LogicalTableau tab;
    auto ids = tab.add_qubits(3);
    ASSERT_EQ(ids, iota_ids(3));
    ASSERT_EQ(tab.stabilizers()[1].str(), "+_Z_");
    ASSERT_EQ(tab.destabilizers()[2].str(), "+__X");
    ASSERT_FALSE(tab.has_logical());
    ASSERT_EQ(tab.read(SparsePauli::z(0)).coefficient, 1);
    ASSERT_EQ(tab.read(SparsePauli::x(0)).coefficient, 0);
    tab.check_invariants();
    ASSERT_THROW(tab.h(7), std::out_of_range);
    ASSERT_THROW(tab.cnot(1, 1), std::invalid_argument);
    ASSERT_THROW(tab.add_logical_qubit({{1, 0}, {1, 0}}), std::invalid_argument);
}

TEST(logical_tableau, bell_pair_correlations) {
    LogicalTableau tab;
    auto q = tab.add_qubits(2);
    tab.h(q[0]);
    tab.cnot(q[0], q[1]);
    ASSERT_DOUBLE_EQ(tab.expectation({false, {{0, 'X'}, {1, 'X'}}}), 1);
    ASSERT_DOUBLE_EQ(tab.expectation({false, {{0, 'Y'}, {1, 'Y'}}}), -1);
    ASSERT_DOUBLE_EQ(tab.expectation(SparsePauli::z(0)), 0);
    ASSERT_DOUBLE_EQ(tab.postselect_z(0, true), 0.5);
    ASSERT_DOUBLE_EQ(tab.expectation(SparsePauli::z(1)), -1);
    ASSERT_DOUBLE_EQ(tab.postselect_z(1, false), 0.0);
    ASSERT_DOUBLE_EQ(tab.expectation(SparsePauli::z(1)), -1);
}

TEST(logical_tableau, symbolic_qubit_rotations) {
    Rng rng(9);
    auto a = AmplitudePair::random(rng);
    LogicalTableau tab;
    auto q = tab.add_logical_qubit(a);
    auto b = a.bloch();
    ASSERT_NEAR(tab.expectation(SparsePauli::x(q)), b[0], TOL);
    ASSERT_NEAR(tab.expectation({false, {{q, 'Y'}}}), b[1], TOL);
    tab.h(q);
    ASSERT_NEAR(tab.expectation(SparsePauli::z(q)), b[0], TOL);
    ASSERT_NEAR(tab.expectation({false, {{q, 'Y'}}}), -b[1], TOL);
    tab.h(q);
    tab.s(q);
    // S: X -> Y, Y -> -X
    ASSERT_NEAR(tab.expectation({false, {{q, 'Y'}}}), b[0], TOL);
    ASSERT_NEAR(tab.expectation(SparsePauli::x(q)), -b[1], TOL);
}

TEST(logical_tableau, random_circuits_match_statevector) {
    Rng rng(2026);
    for (int trial = 0; trial < 120; trial++) {
        std::size_t n = 1 + uniform_below(rng, 6);
        LogicalTableau tab;
        StateVector sv(n);
        bool with_logical = trial % 3 != 0;
        std::size_t logical_at = uniform_below(rng, n);
        for (std::size_t i = 0; i < n; i++) {
            if (with_logical && i == logical_at) {
                auto a = AmplitudePair::random(rng);
                tab.add_logical_qubit(a);
                sv.prepare_qubit(i, a.alpha, a.beta);
            } else {
                tab.add_qubit();
            }
        }
        for (int step = 0; step < 40; step++) {
            const auto &live = tab.live_qubits();
            QubitId a = live[uniform_below(rng, live.size())];
            QubitId b = live[uniform_below(rng, live.size())];
            switch (uniform_below(rng, 11)) {
                case 0:
                    tab.h(a), sv.h(a);
                    break;
                case 1:
                    tab.s(a), sv.s(a);
                    break;
                case 2:
                    tab.s_dag(a), sv.s_dag(a);
                    break;
                case 3:
                    tab.x(a), sv.x(a);
                    break;
                case 4:
                    tab.y(a), sv.y(a);
                    break;
                case 5:
                    tab.z(a), sv.z(a);
                    break;
                case 6:
                case 7:
                    if (a != b) {
                        tab.cnot(a, b), sv.cnot(a, b);
                    }
                    break;
                case 8:
                    if (a != b) {
                        tab.cz(a, b), sv.cz(a, b);
                    }
                    break;
                case 9: {
                    auto p = random_sparse(rng, live);
                    bool outcome = random_bit(rng);
                    double pt = tab.postselect(p, outcome);
                    if (pt == 0) {
                        ASSERT_NEAR(sv.postselect_pauli(dense(p, n), outcome), 0, TOL);
                        outcome = !outcome;
                        pt = tab.postselect(p, outcome);
                    }
                    ASSERT_NEAR(sv.postselect_pauli(dense(p, n), outcome), pt, TOL) << trial << " " << step;
                    break;
                }
                case 10: {
                    if (live.size() < 2) {
                        break;
                    }
                    bool outcome = random_bit(rng);
                    double pt = tab.postselect_z(a, outcome);
                    if (pt == 0) {
                        outcome = !outcome;
                        pt = tab.postselect_z(a, outcome);
                    }
                    ASSERT_NEAR(sv.postselect_z(a, outcome), pt, TOL);
                    tab.retire(a);
                    ASSERT_FALSE(tab.is_live(a));
                    break;
                }
            }
            tab.check_invariants();
            ASSERT_NO_FATAL_FAILURE(expect_agreement(tab, sv, rng));
        }
    }
}

TEST(logical_tableau, sampled_measurements_follow_probabilities) {
    Rng rng(17);
    auto a = AmplitudePair::from_angles(1.1, 0.4);
    double p0 = (1 + a.bloch()[2]) / 2;
    int zeros = 0;
    const int runs = 4000;
    for (int i = 0; i < runs; i++) {
        LogicalTableau tab;
        auto q = tab.add_logical_qubit(a);
        auto rec = tab.measure_z(q, rng);
        ASSERT_EQ(rec.determinism, Determinism::logical_collapse);
        zeros += !rec.outcome;
        ASSERT_FALSE(tab.has_logical());
        ASSERT_EQ(tab.expectation(SparsePauli::z(q)), rec.outcome ? -1 : 1);
    }
    // 5 sigma
    ASSERT_NEAR(zeros / double(runs), p0, 5 * std::sqrt(p0 * (1 - p0) / runs));
}

TEST(logical_tableau, retire_rules) {
    LogicalTableau tab;
    auto q = tab.add_qubits(3);
    tab.h(q[0]);
    ASSERT_THROW(tab.retire(q[0]), std::logic_error);
    tab.cnot(q[0], q[1]);
    tab.cnot(q[1], q[2]);
    Rng rng(1);
    auto m = tab.measure_z(q[1], rng);
    ASSERT_EQ(m.determinism, Determinism::random);
    tab.retire(q[1]);
    ASSERT_EQ(tab.num_qubits(), 2u);
    ASSERT_EQ(tab.live_qubits(), (std::vector<QubitId>{0, 2}));
    ASSERT_EQ(tab.expectation(SparsePauli::z(q[2])), m.outcome ? -1 : 1);
    ASSERT_THROW(tab.x(q[1]), std::out_of_range);
    auto fresh = tab.add_qubit();
    ASSERT_EQ(fresh, 3u);
    tab.check_invariants();
}

TEST(logical_tableau, retire_through_product_of_stabilizers) {
    // After CNOT 0->1 the rows are Z0 and Z0Z1; Z1 is only their product.
    LogicalTableau tab;
    auto q = tab.add_qubits(3);
    tab.cnot(q[0], q[1]);
    ASSERT_EQ(tab.stabilizers()[1].str(), "+ZZ_");
    ASSERT_EQ(tab.read(SparsePauli::z(1)).coefficient, 1);
    tab.retire(q[1]);
    tab.check_invariants();
    ASSERT_EQ(tab.num_qubits(), 2u);
}

TEST(encoding, matches_statevector_oracle) {
    auto css = steane_code();
    Rng rng(33);
    for (int trial = 0; trial < 10; trial++) {
        auto a = AmplitudePair::random(rng);
        auto tab = prepare_encoded_secret(css, a);
        auto sv = encoded_oracle(css, a);
        tab.check_invariants();
        ASSERT_NO_FATAL_FAILURE(expect_agreement(tab, sv, rng));
        for (const auto &g : css.stabilizer_generators()) {
            ASSERT_NEAR(sv.expectation(g).real(), 1, TOL);
        }
        auto b = a.bloch();
        ASSERT_NEAR(sv.expectation(css.logical_x()).real(), b[0], TOL);
        ASSERT_NEAR(sv.expectation(css.logical_z()).real(), b[2], TOL);
        auto ids = iota_ids(7);
        ASSERT_NEAR(tab.expectation(block_operator(css.x_rep(), 'X', ids)), b[0], TOL);
        ASSERT_NEAR(tab.expectation(block_operator(css.z_rep(), 'Z', ids)), b[2], TOL);
    }
}

TEST(encoding, computational_basis_distributions) {
    auto css = steane_code();
    auto ids = iota_ids(7);
    // Oracle supports: |0L> is uniform on dual(W), |+L> is uniform on V.
    auto in_dual_w = [&](const BitVector &v) { return in_row_space(css.w_dual_basis(), v); };
    auto in_v = [&](const BitVector &v) { return css.v().contains(v); };
    struct Case {
        LogicalTableau tab;
        std::function<bool(const BitVector &)> member;
        double mass;
    };
    std::vector<Case> cases;
    cases.push_back({prepare_logical_zero(css), in_dual_w, 1.0 / 8});
    cases.push_back({prepare_logical_plus(css), in_v, 1.0 / 16});
    for (auto &c : cases) {
        double total = 0;
        for (std::uint64_t x = 0; x < 128; x++) {
            auto word = BitVector::from_u64(7, x);
            LogicalTableau t = c.tab;
            double p = 1;
            for (std::size_t j = 0; j < 7 && p > 0; j++) {
                p *= t.postselect_z(ids[j], word.get(j));
            }
            ASSERT_NEAR(p, c.member(word) ? c.mass : 0.0, TOL) << word.str();
            total += p;
        }
        ASSERT_NEAR(total, 1, TOL);
    }
}

TEST(encoding, secret_distribution_over_cosets) {
    auto css = steane_code();
    auto ids = iota_ids(7);
    auto a = AmplitudePair::from_angles(0.9, 2.0);
    auto tab = prepare_encoded_secret(css, a);
    auto sv = encoded_oracle(css, a);
    for (std::uint64_t x = 0; x < 128; x++) {
        auto word = BitVector::from_u64(7, x);
        LogicalTableau t = tab;
        double p = 1;
        for (std::size_t j = 0; j < 7 && p > 0; j++) {
            p *= t.postselect_z(ids[j], word.get(j));
        }
        double expected = 0;
        if (in_row_space(css.w_dual_basis(), word)) {
            expected = std::norm(a.alpha) / 8;
        } else if (in_row_space(css.w_dual_basis(), word ^ css.x_rep())) {
            expected = std::norm(a.beta) / 8;
        }
        ASSERT_NEAR(p, expected, TOL);
        ASSERT_NEAR(std::norm(sv.amplitudes()[x]), expected, TOL);
    }
}

TEST(encoding, logical_collapse_probability) {
    auto css = steane_code();
    auto ids = iota_ids(7);
    Rng rng(8);
    for (int trial = 0; trial < 20; trial++) {
        auto a = AmplitudePair::random(rng);
        auto tab = prepare_encoded_secret(css, a);
        double px = tab.postselect(block_operator(css.x_rep(), 'X', ids), false);
        ASSERT_NEAR(px, (1 + a.bloch()[0]) / 2, TOL);
        ASSERT_FALSE(tab.has_logical());
        ASSERT_EQ(tab.expectation(block_operator(css.x_rep(), 'X', ids)), 1);
        tab.check_invariants();
    }
}

TEST(extract_logical, corrects_single_errors) {
    auto css = steane_code();
    auto ids = iota_ids(7);
    Rng rng(41);
    for (std::size_t q = 0; q < 7; q++) {
        for (char op : {'X', 'Y', 'Z'}) {
            auto a = AmplitudePair::random(rng);
            auto tab = prepare_encoded_secret(css, a);
            tab.apply_pauli({false, {{ids[q], op}}});
            auto res = extract_logical(tab, css, ids, rng);
            ASSERT_TRUE(res.ok);
            ASSERT_NEAR(fidelity(a, res.amps), 1, TOL);
            ASSERT_EQ(res.x_errors.size(), op == 'Z' ? 0u : 1u);
            ASSERT_EQ(res.z_errors.size(), op == 'X' ? 0u : 1u);
        }
    }
}

TEST(extract_logical, known_bad_positions_count_against_tolerance) {
    auto css = steane_code();
    auto ids = iota_ids(7);
    Rng rng(42);
    auto a = AmplitudePair::random(rng);
    {
        auto tab = prepare_encoded_secret(css, a);
        std::vector<std::size_t> bad{4};
        auto res = extract_logical(tab, css, ids, rng, bad);
        ASSERT_TRUE(res.ok);
        ASSERT_NEAR(fidelity(a, res.amps), 1, TOL);
    }
    {
        auto tab = prepare_encoded_secret(css, a);
        tab.x(ids[2]);
        std::vector<std::size_t> bad{4};
        ASSERT_FALSE(extract_logical(tab, css, ids, rng, bad).ok);
    }
    {
        // A logical operator slips past the decoder and rotates the state.
        auto tab = prepare_encoded_secret(css, a);
        tab.apply_pauli(block_operator(css.x_rep(), 'X', ids));
        auto res = extract_logical(tab, css, ids, rng);
        ASSERT_TRUE(res.ok);
        ASSERT_NEAR(fidelity(a.apply_x(), res.amps), 1, TOL);
    }
}

TEST(recover_qubit, frames) {
    Rng rng(5);
    auto a = AmplitudePair::random(rng);
    using A = LogicalAxis;
    auto r = [](int c, A ax) { return PauliReading{c, ax}; };
    ASSERT_NEAR(fidelity(a, recover_qubit(r(1, A::X), r(1, A::Y), r(1, A::Z), a)), 1, TOL);
    ASSERT_NEAR(fidelity(a.apply_x(), recover_qubit(r(1, A::X), r(-1, A::Y), r(-1, A::Z), a)), 1, TOL);
    ASSERT_NEAR(fidelity(a.apply_y(), recover_qubit(r(-1, A::X), r(1, A::Y), r(-1, A::Z), a)), 1, TOL);
    ASSERT_NEAR(fidelity(a.apply_z(), recover_qubit(r(-1, A::X), r(-1, A::Y), r(1, A::Z), a)), 1, TOL);
    auto mixed = recover_qubit(r(0, A::I), r(0, A::I), r(1, A::Z), a);
    ASSERT_FALSE(mixed.pure);
    auto b = a.bloch();
    ASSERT_NEAR(fidelity(a, mixed), (1 + b[2] * b[2]) / 2, TOL);
}
