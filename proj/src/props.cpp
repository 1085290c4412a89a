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

#include "vhss/props.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "vhss/css_code.hpp"
#include "vhss/experiment.hpp"
#include "vhss/gf2m.hpp"
#include "vhss/logical_tableau.hpp"
#include "vhss/oracle/statevector.hpp"
#include "vhss/protocol.hpp"
#include "vhss/scheme_params.hpp"
#include "vhss/vcss.hpp"

namespace vhss {

namespace {

using oracle::StateVector;
constexpr double TOL = 1e-9;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string &why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

std::string num(double v, int digits = 4) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

ProtocolConfig steane_cfg(std::size_t r, const std::string &strategy) {
    ProtocolConfig cfg{steane_code()};
    cfg.r = r;
    cfg.strategy = AdversaryStrategy::parse(strategy);
    return cfg;
}

// ---- 1, 12: scheme calculators

Outcome table1() {
    static const std::vector<std::string> published = {
        "{8,2,18}",  "{24,4,50}",  "{8,1,1,18}",  "{24,2,2,50}", "{9,2,19}",  "{30,4,61}",
        "{9,1,1,19}", "{30,2,2,61}", "{12,2,25}", "{48,4,97}",  "{12,1,1,25}", "{48,2,2,97}",
        "{20,2,41}", "{72,4,145}", "{20,1,1,41}", "{72,2,2,145}"};
    Outcome o;
    auto cells = table1_cells();
    if (cells.size() != published.size()) {
        o.fail("expected 16 cells, got " + std::to_string(cells.size()));
        return o;
    }
    auto text = format_table1();
    for (std::size_t i = 0; i < cells.size(); i++) {
        if (cells[i].params.str() != published[i]) {
            o.fail("cell " + std::to_string(i) + " is " + cells[i].params.str() + ", expected " + published[i]);
        }
        if (text.find(published[i]) == std::string::npos) {
            o.fail("printed table lacks " + published[i]);
        }
    }
    if (o.pass) {
        o.detail = "16 cells match";
    }
    return o;
}

Outcome scheme_lemmas() {
    Outcome o;
    std::size_t cases = 0;
    for (std::size_t t = 1; t <= 10; t++) {
        for (std::size_t n = 1; n <= 80; n++) {
            for (std::size_t tp = 0; tp < n; tp++) {
                for (std::size_t p = 0; p < n; p++) {
                    cases++;
                    if (strong_threshold_feasible(p, t, tp, n)) {
                        o.fail("strong threshold feasible at t=" + std::to_string(t));
                    }
                }
            }
        }
    }
    for (std::size_t d : {3, 5, 7, 9, 11}) {
        for (std::size_t n = d; n < 100; n++) {
            CodeParameters code{n, d, ""};
            for (std::size_t t = 0; t <= code.correctable(); t++) {
                for (std::size_t n_c = n; n_c < n + 6; n_c++) {
                    cases++;
                    bool ok = std::max(n, n_c) >= 3 * t + 1;
                    try {
                        auto s = vhss_params(code, n_c, VcssKind::stinson_like, t);
                        if (!ok || s.n < s.p + 3 * s.t + 1) {
                            o.fail("stinson_like " + s.str() + " breaks n >= p + 3t + 1");
                        }
                    } catch (const std::invalid_argument &) {
                        if (ok) {
                            o.fail("stinson_like rejected a feasible request");
                        }
                    }
                }
            }
            for (std::size_t t = 0; t <= 12; t++) {
                for (std::size_t tp = 0; tp <= 12; tp++) {
                    cases++;
                    bool within = t + tp <= (d - 1) / 2;
                    bool threw = false;
                    try {
                        ramp_params(code, t, tp);
                    } catch (const std::invalid_argument &) {
                        threw = true;
                    }
                    if (threw == within) {
                        o.fail("ramp budget not enforced at d=" + std::to_string(d));
                    }
                }
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(cases) + " cases";
    }
    return o;
}

// ---- 2: Steane code

std::size_t coset_weight(const LinearCode &code, const BitMatrix &sub) {
    std::size_t best = code.n() + 1;
    for (std::uint64_t x = 1; x < (std::uint64_t{1} << code.n()); x++) {
        auto v = BitVector::from_u64(code.n(), x);
        bool in_code = true;
        const auto &h = code.parity_check();
        for (std::size_t r = 0; r < h.rows() && in_code; r++) {
            in_code = !h.row(r).dot(v);
        }
        if (!in_code) {
            continue;
        }
        // v in span(sub)?  enumerate the span directly
        bool in_sub = false;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << sub.rows()) && !in_sub; m++) {
            BitVector s(code.n());
            for (std::size_t i = 0; i < sub.rows(); i++) {
                if ((m >> i) & 1) {
                    s ^= sub.row(i);
                }
            }
            in_sub = s == v;
        }
        if (!in_sub) {
            best = std::min(best, v.weight());
        }
    }
    return best;
}

Outcome steane() {
    Outcome o;
    auto c = steane_code();
    std::size_t k = c.v().k() - c.w_dual_basis().rows();
    std::size_t dx = coset_weight(c.v(), c.w_dual_basis());
    std::size_t dz = coset_weight(c.w(), c.v_dual_basis());
    if (c.n() != 7 || k != 1 || c.distance() != 3 || std::min(dx, dz) != 3) {
        o.fail("got [[" + std::to_string(c.n()) + "," + std::to_string(k) + "," + std::to_string(c.distance()) +
               "]], enumerated distance " + std::to_string(std::min(dx, dz)));
    } else {
        o.detail = "[[7,1,3]], coset weights " + std::to_string(dx) + "/" + std::to_string(dz);
    }
    return o;
}

// ---- 3-6, 8, 13: protocol

Outcome completeness(const CheckSizes &s) {
    Outcome o;
    std::size_t total = 0;
    for (std::size_t r : {2, 4, 8}) {
        auto runs = run_trials(steane_cfg(r, "honest"), "random", s.completeness_runs, 3000 + r);
        for (const auto &tr : runs) {
            total++;
            if (tr.aborted) {
                o.fail("honest run aborted at r=" + std::to_string(r) + ": " + tr.abort_reason);
            } else if (!tr.fidelity || *tr.fidelity != 1.0) {
                o.fail("fidelity " + (tr.fidelity ? num(*tr.fidelity, 17) : std::string("missing")) +
                       " at r=" + std::to_string(r) + " seed " + std::to_string(tr.seed));
            } else if (!tr.B.empty()) {
                o.fail("honest run accused nodes");
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(total) + " runs, 0 aborts, fidelity 1 exactly";
    }
    return o;
}

Outcome soundness(const CheckSizes &s) {
    Outcome o;
    std::string detail;
    for (std::size_t r : {2, 4, 8}) {
        auto runs = run_trials(steane_cfg(r, "dealer_inconsistent_tree"), "random", s.soundness_runs, 4000 + r);
        std::size_t passed = 0;
        for (const auto &tr : runs) {
            passed += !tr.aborted;
        }
        double p = std::ldexp(1.0, -static_cast<int>(r));
        double rate = static_cast<double>(passed) / static_cast<double>(runs.size());
        double bound = p + 3 * std::sqrt(p / static_cast<double>(runs.size()));
        detail += (detail.empty() ? "" : ", ") + std::string("r=") + std::to_string(r) + " pass " + num(rate) +
                  " <= " + num(bound);
        if (rate > bound) {
            o.fail("r=" + std::to_string(r) + " pass rate " + num(rate) + " above " + num(bound));
        }
    }
    if (o.pass) {
        o.detail = detail;
    }
    return o;
}

Outcome cheater_bound(const CheckSizes &s) {
    Outcome o;
    std::size_t runs_total = 0, completed = 0, max_b = 0;
    auto library = strategy_library();
    for (std::size_t k = 0; k < library.size(); k++) {
        auto cfg = steane_cfg(2, library[k].str());
        auto runs = run_trials(cfg, "random", s.library_runs, 5000 + k);
        for (const auto &tr : runs) {
            runs_total++;
            if (tr.aborted) {
                continue;
            }
            completed++;
            max_b = std::max(max_b, tr.B.size());
            if (tr.B.size() > 2 * tr.t) {
                o.fail(library[k].str() + ": |B| = " + std::to_string(tr.B.size()));
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(library.size()) + " strategies, " + std::to_string(runs_total) + " runs, " +
                   std::to_string(completed) + " completed, max |B| = " + std::to_string(max_b);
    }
    return o;
}

Outcome post_verification(const CheckSizes &s) {
    Outcome o;
    std::size_t total = 0;
    for (const char *p : {"X", "Y", "Z", "random"}) {
        std::string name = std::string("cheater_pauli:") + p + ":post_verification";
        auto runs = run_trials(steane_cfg(2, name), "random", s.post_verification_runs, 6000 + p[0]);
        for (const auto &tr : runs) {
            total++;
            if (tr.aborted || !tr.fidelity || *tr.fidelity != 1.0) {
                o.fail(name + " seed " + std::to_string(tr.seed) + ": aborted=" + std::to_string(tr.aborted) +
                       " fidelity " + (tr.fidelity ? num(*tr.fidelity, 17) : std::string("missing")));
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(total) + " runs, fidelity 1 exactly";
    }
    return o;
}

Outcome workspace() {
    Outcome o;
    std::size_t runs = 0;
    std::vector<std::string> strategies = {"honest", "cheater_pauli:Y:pre_verification", "cheater_broadcast_lie",
                                           "dealer_overweight_errors"};
    std::size_t z_max = 0, x_max = 0;
    for (std::size_t r : {1, 2, 4}) {
        for (const auto &name : strategies) {
            for (const auto &tr : run_trials(steane_cfg(r, name), "random", 10, 7000 + r)) {
                runs++;
                const auto &sh = tr.phase_peaks.at("sharing");
                const auto &z = tr.phase_peaks.at("z_verification");
                const auto &x = tr.phase_peaks.at("x_verification");
                for (std::size_t k = 0; k < 7; k++) {
                    z_max = std::max(z_max, z[k]);
                    x_max = std::max(x_max, x[k]);
                    if (sh[k] != 7 || z[k] > 14 || x[k] > 21) {
                        o.fail(name + " node " + std::to_string(k) + " peaks " + std::to_string(sh[k]) + "/" +
                               std::to_string(z[k]) + "/" + std::to_string(x[k]));
                    }
                }
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(runs) + " runs, sharing 7, z max " + std::to_string(z_max) + ", x max " +
                   std::to_string(x_max);
    }
    return o;
}

Outcome bounds() {
    Outcome o;
    auto b8 = theoretical_bounds(8, 0.5, 0.5, 0.5);
    if (b8.eps_c != 10.0 / 256.0 || b8.fidelity_lower != 1 - 10.0 / 256.0) {
        o.fail("r=8 gives eps_c " + num(b8.eps_c, 17));
    }
    std::size_t cases = 0;
    const double deltas[] = {0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0};
    for (std::size_t r = 1; r <= 16; r++) {
        double q = std::pow(2.0, -static_cast<double>(r));
        for (double d1 : deltas) {
            for (double d2 : deltas) {
                for (double d3 : deltas) {
                    cases++;
                    auto b = theoretical_bounds(r, d1, d2, d3);
                    double smallest = std::min(d1, std::min(d2, d3));
                    if (b.abort_lower != 1 - q / smallest || b.eps_c != (2.0 + r) * q ||
                        b.fidelity_lower != 1 - (2.0 + r) * q) {
                        o.fail("mismatch at r=" + std::to_string(r));
                    }
                }
            }
        }
    }
    if (o.pass) {
        o.detail = "eps_c(8) = 10/256, " + std::to_string(cases) + " grid points";
    }
    return o;
}

// ---- 7: secrecy

Outcome secrecy(const CheckSizes &s) {
    Outcome o;
    Rng rng(7007);
    double worst = 0;
    for (int k = 0; k < 1000; k++) {
        auto a = AmplitudePair::random(rng);
        auto rho = key_averaged_density(a);
        // same average built from the state-vector oracle
        std::complex<double> ref[2][2] = {};
        for (int ka = 0; ka < 2; ka++) {
            for (int kb = 0; kb < 2; kb++) {
                StateVector sv(1);
                sv.prepare_qubit(0, a.alpha, a.beta);
                if (kb) {
                    sv.z(0);
                }
                if (ka) {
                    sv.x(0);
                }
                const auto &v = sv.amplitudes();
                for (int i = 0; i < 2; i++) {
                    for (int j = 0; j < 2; j++) {
                        ref[i][j] += 0.25 * v[i] * std::conj(v[j]);
                    }
                }
            }
        }
        for (int i = 0; i < 2; i++) {
            for (int j = 0; j < 2; j++) {
                double id = i == j ? 0.5 : 0.0;
                worst = std::max({worst, std::abs(rho[i][j] - id), std::abs(ref[i][j] - id)});
            }
        }
    }
    if (worst > 1e-12) {
        o.fail("key-averaged state differs from I/2 by " + num(worst));
    }
    double tv = secrecy_tv(steane_cfg(1, "honest"), s.secrecy_runs, 7008);
    if (tv >= 0.03) {
        o.fail("view TV distance " + num(tv));
    }
    if (o.pass) {
        o.detail = "max |rho - I/2| " + num(worst, 2) + ", view TV " + num(tv) + " over " +
                   std::to_string(s.secrecy_runs) + " runs";
    }
    return o;
}

// ---- 9, 10: tableau against the state-vector oracle

PauliString dense(const SparsePauli &p, std::size_t n) {
    PauliString out(n);
    out.negative = p.negative;
    for (const auto &t : p.terms) {
        out.set(t.qubit, t.op);
    }
    return out;
}

// Column-ordered tableau string re-indexed by qubit id.
PauliString by_id(const PauliString &row, const LogicalTableau &tab, std::size_t n) {
    PauliString out(n);
    out.negative = row.negative;
    const auto &ids = tab.live_qubits();
    for (std::size_t c = 0; c < ids.size(); c++) {
        out.set(ids[c], row.at(c));
    }
    return out;
}

SparsePauli random_pauli(Rng &rng, std::size_t n) {
    SparsePauli p;
    p.negative = random_bit(rng);
    const char ops[3] = {'X', 'Y', 'Z'};
    for (std::size_t q = 0; q < n; q++) {
        if (random_bit(rng)) {
            p.terms.push_back({static_cast<QubitId>(q), ops[uniform_below(rng, 3)]});
        }
    }
    if (p.terms.empty()) {
        p.terms.push_back({static_cast<QubitId>(uniform_below(rng, n)), ops[uniform_below(rng, 3)]});
    }
    return p;
}

struct Step {
    int kind = 0;  // 0..7 gates, 8 Z measurement, 9 Pauli measurement
    QubitId a = 0, b = 0;
    SparsePauli p;
};

void apply_gate(const Step &s, LogicalTableau &tab, StateVector &sv) {
    switch (s.kind) {
        case 0:
            tab.h(s.a), sv.h(s.a);
            break;
        case 1:
            tab.s(s.a), sv.s(s.a);
            break;
        case 2:
            tab.s_dag(s.a), sv.s_dag(s.a);
            break;
        case 3:
            tab.x(s.a), sv.x(s.a);
            break;
        case 4:
            tab.y(s.a), sv.y(s.a);
            break;
        case 5:
            tab.z(s.a), sv.z(s.a);
            break;
        case 6:
            tab.cnot(s.a, s.b), sv.cnot(s.a, s.b);
            break;
        default:
            tab.cz(s.a, s.b), sv.cz(s.a, s.b);
            break;
    }
}

std::string compare_states(const LogicalTableau &tab, const StateVector &sv, Rng &rng) {
    std::size_t n = sv.num_qubits();
    for (const auto &s : tab.stabilizers()) {
        auto e = sv.expectation(by_id(s, tab, n));
        if (std::abs(e - 1.0) > TOL) {
            return "stabilizer " + s.str() + " has oracle expectation " + num(e.real());
        }
    }
    for (int k = 0; k < 12; k++) {
        auto p = random_pauli(rng, n);
        double a = tab.expectation(p);
        auto b = sv.expectation(dense(p, n));
        if (std::abs(a - b) > TOL) {
            return "expectation of " + dense(p, n).str() + ": tableau " + num(a) + ", oracle " + num(b.real());
        }
    }
    return "";
}

// Walks every measurement branch; returns an error message or "".
std::string explore(const std::vector<Step> &steps, std::size_t k, LogicalTableau tab, StateVector sv, double weight,
                    double &leaf_mass, Rng &rng) {
    std::size_t n = sv.num_qubits();
    for (; k < steps.size(); k++) {
        const auto &s = steps[k];
        if (s.kind < 8) {
            apply_gate(s, tab, sv);
            continue;
        }
        SparsePauli p = s.kind == 8 ? SparsePauli::z(s.a) : s.p;
        for (bool outcome : {false, true}) {
            LogicalTableau t2 = tab;
            StateVector s2 = sv;
            double pt = t2.postselect(p, outcome);
            double ps = s2.postselect_pauli(dense(p, n), outcome);
            if (std::abs(pt - ps) > TOL) {
                return "outcome probability " + num(pt) + " vs oracle " + num(ps) + " at step " + std::to_string(k);
            }
            if (pt > 0) {
                auto err = explore(steps, k + 1, std::move(t2), std::move(s2), weight * pt, leaf_mass, rng);
                if (!err.empty()) {
                    return err;
                }
            }
        }
        return "";
    }
    leaf_mass += weight;
    return compare_states(tab, sv, rng);
}

void random_start(Rng &rng, std::size_t n, bool with_logical, LogicalTableau &tab, StateVector &sv) {
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
}

Step random_gate(Rng &rng, std::size_t n) {
    Step s;
    s.kind = static_cast<int>(uniform_below(rng, n > 1 ? 8 : 6));
    s.a = static_cast<QubitId>(uniform_below(rng, n));
    if (s.kind >= 6) {
        s.b = static_cast<QubitId>(uniform_below(rng, n - 1));
        if (s.b >= s.a) {
            s.b++;
        }
    }
    return s;
}

Outcome tableau_oracle(const CheckSizes &s) {
    Outcome o;
    Rng rng(1010);
    std::size_t branches = 0;
    for (std::size_t c = 0; c < s.tableau_circuits; c++) {
        std::size_t n = 1 + uniform_below(rng, 6);
        LogicalTableau tab;
        StateVector sv(n);
        random_start(rng, n, c % 2 == 0, tab, sv);
        std::vector<Step> steps;
        std::size_t measurements = 0;
        std::size_t len = 10 + uniform_below(rng, 25);
        for (std::size_t k = 0; k < len; k++) {
            if (measurements < 5 && uniform_below(rng, 5) == 0) {
                Step m;
                m.kind = random_bit(rng) ? 8 : 9;
                m.a = static_cast<QubitId>(uniform_below(rng, n));
                m.p = random_pauli(rng, n);
                steps.push_back(m);
                measurements++;
            } else {
                steps.push_back(random_gate(rng, n));
            }
        }
        double mass = 0;
        auto err = explore(steps, 0, tab, sv, 1.0, mass, rng);
        if (err.empty() && std::abs(mass - 1.0) > TOL) {
            err = "branch probabilities sum to " + num(mass);
        }
        if (!err.empty()) {
            o.fail("circuit " + std::to_string(c) + ": " + err);
            return o;
        }
        branches += measurements;
    }
    o.detail = std::to_string(s.tableau_circuits) + " circuits, " + std::to_string(branches) +
               " measurements, all branches match";
    return o;
}

// Probability of every Z-basis outcome string of the tableau, by postselection.
void tableau_distribution(const LogicalTableau &tab, std::size_t q, std::size_t n, std::uint64_t bits, double w,
                          std::vector<double> &out) {
    if (q == n) {
        out[bits] += w;
        return;
    }
    for (bool b : {false, true}) {
        LogicalTableau t2 = tab;
        double p = t2.postselect_z(static_cast<QubitId>(q), b);
        if (p > 0) {
            tableau_distribution(t2, q + 1, n, bits | (std::uint64_t{b} << q), w * p, out);
        }
    }
}

Outcome reduction(const CheckSizes &s) {
    Outcome o;
    Rng rng(909);
    for (std::size_t inst = 0; inst < s.reduction_instances; inst++) {
        std::size_t n = 2 + uniform_below(rng, 5);
        LogicalTableau tab;
        StateVector sv(n);
        random_start(rng, n, inst % 2 == 0, tab, sv);
        for (int k = 0; k < 20; k++) {
            apply_gate(random_gate(rng, n), tab, sv);
        }
        QubitId c = static_cast<QubitId>(uniform_below(rng, n));
        QubitId t = static_cast<QubitId>((c + 1 + uniform_below(rng, n - 1)) % n);
        std::size_t dim = std::size_t{1} << n;
        // measure after the gate
        std::vector<double> oracle_after(dim), oracle_before(dim), tab_after(dim), tab_before(dim), raw(dim);
        StateVector gated = sv;
        gated.cnot(c, t);
        for (std::size_t x = 0; x < dim; x++) {
            oracle_after[x] = std::norm(gated.amplitudes()[x]);
            auto y = x ^ (((x >> c) & 1) << t);
            oracle_before[y] += std::norm(sv.amplitudes()[x]);
        }
        LogicalTableau tg = tab;
        tg.cnot(c, t);
        tableau_distribution(tg, 0, n, 0, 1.0, tab_after);
        tableau_distribution(tab, 0, n, 0, 1.0, raw);
        for (std::size_t x = 0; x < dim; x++) {
            tab_before[x ^ (((x >> c) & 1) << t)] += raw[x];
        }
        for (std::size_t x = 0; x < dim; x++) {
            double vals[4] = {oracle_after[x], oracle_before[x], tab_after[x], tab_before[x]};
            for (double v : vals) {
                if (std::abs(v - vals[0]) > TOL) {
                    o.fail("instance " + std::to_string(inst) + " outcome " + std::to_string(x) + " differs");
                    return o;
                }
            }
        }
    }
    auto css = steane_code();
    auto secret = AmplitudePair::from_angles(1.1, 0.4);
    double counts[2][4] = {};
    for (std::size_t k = 0; k < s.reduction_samples; k++) {
        for (int mode = 0; mode < 2; mode++) {
            auto [c, t] = reduction_sample(css, secret, mode == 1, trial_seed(9000 + mode, k));
            counts[mode][c * 2 + t] += 1;
        }
    }
    double tv = 0;
    for (int c = 0; c < 4; c++) {
        tv += std::abs(counts[0][c] - counts[1][c]);
    }
    tv /= 2.0 * static_cast<double>(s.reduction_samples);
    if (tv >= 0.02) {
        o.fail("protocol-scale TV " + num(tv));
    }
    if (o.pass) {
        o.detail = std::to_string(s.reduction_instances) + " exhaustive instances, protocol-scale TV " + num(tv);
    }
    return o;
}

// ---- 11: VCSS

Outcome vcss_suite(const CheckSizes &s) {
    Outcome o;
    // secrecy: every t-subset of 7 evaluation points sees each share tuple exactly once per secret
    for (std::size_t t : {1, 2}) {
        std::size_t polys = std::size_t{1} << (4 * t);
        for (std::uint32_t mask = 0; mask < 128; mask++) {
            if (static_cast<std::size_t>(std::popcount(mask)) != t) {
                continue;
            }
            std::vector<GF16> pts;
            for (unsigned i = 0; i < 7; i++) {
                if ((mask >> i) & 1) {
                    pts.emplace_back(i + 1);
                }
            }
            for (unsigned secret = 0; secret < 16; secret++) {
                std::vector<int> seen(polys, 0);
                for (std::size_t m = 0; m < polys; m++) {
                    Polynomial<GF16> f;
                    f.coeffs.emplace_back(secret);
                    for (std::size_t d = 0; d < t; d++) {
                        f.coeffs.emplace_back((m >> (4 * d)) & 15);
                    }
                    std::size_t key = 0;
                    for (std::size_t i = 0; i < t; i++) {
                        key |= static_cast<std::size_t>(f(pts[i]).value()) << (4 * i);
                    }
                    seen[key]++;
                }
                if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
                    o.fail("share tuple not uniform for t=" + std::to_string(t));
                    return o;
                }
            }
        }
    }
    // robustness: every pattern of at most t corrupted or missing shares
    Rng rng(1111);
    std::size_t patterns = 0;
    for (std::size_t n_c : {3, 5, 7}) {
        std::size_t t = (n_c - 1) / 2;
        for (int trial = 0; trial < 4; trial++) {
            OtpKey key{random_bit(rng), random_bit(rng)};
            auto deal = vcss_share(key, n_c, t, 2, rng);
            for (std::uint32_t mask = 0; mask < (1u << n_c); mask++) {
                if (static_cast<std::size_t>(std::popcount(mask)) > t) {
                    continue;
                }
                for (int mode = 0; mode < 2; mode++) {
                    std::vector<KeyShare> collected;
                    for (std::size_t i = 0; i < n_c; i++) {
                        auto sh = deal.shares[i];
                        if ((mask >> i) & 1) {
                            if (mode == 1) {
                                continue;  // withheld
                            }
                            sh.share_a = sh.share_a + GF256::random_nonzero(rng);
                            sh.share_b = sh.share_b + GF256::random_nonzero(rng);
                        }
                        collected.push_back(sh);
                    }
                    patterns++;
                    auto rec = vcss_reconstruct(collected, t);
                    if (!rec.ok || !(rec.key == key)) {
                        o.fail("n_c=" + std::to_string(n_c) + " pattern " + std::to_string(mask) + ": " + rec.error);
                        return o;
                    }
                }
            }
        }
    }
    // cheating dealer with two inconsistent share polynomials; each group has three non-dealer nodes, above t = 2
    std::size_t rejected = 0;
    for (std::size_t k = 0; k < s.vcss_split_runs; k++) {
        Rng r2 = stream_rng(trial_seed(1212, k), "vcss");
        auto deal = vcss_share_split({random_bit(r2), random_bit(r2)}, 7, 2, 8, 4, r2);
        std::vector<bool> coins;
        for (int l = 0; l < 8; l++) {
            coins.push_back(random_bit(r2));
        }
        rejected += !vcss_verify(deal, 2, coins).accept;
    }
    double p = std::ldexp(1.0, -8);
    double rate = static_cast<double>(rejected) / static_cast<double>(s.vcss_split_runs);
    double sigma = std::sqrt(p * (1 - p) / static_cast<double>(s.vcss_split_runs));
    if (rate < 1 - p - 3 * sigma) {
        o.fail("split dealer rejected at rate " + num(rate));
    }
    if (o.pass) {
        o.detail = "exhaustive GF(16) secrecy, " + std::to_string(patterns) + " corruption patterns, split dealer " +
                   "rejected " + num(rate, 5);
    }
    return o;
}

struct CheckDef {
    const char *name;
    std::function<Outcome(const CheckSizes &)> run;
};

const std::map<int, CheckDef> &checks() {
    static const std::map<int, CheckDef> table = {
        {1, {"table1", [](const CheckSizes &) { return table1(); }}},
        {2, {"steane", [](const CheckSizes &) { return steane(); }}},
        {3, {"completeness", completeness}},
        {4, {"soundness", soundness}},
        {5, {"cheater_set_bound", cheater_bound}},
        {6, {"post_verification", post_verification}},
        {7, {"secrecy", secrecy}},
        {8, {"workspace", [](const CheckSizes &) { return workspace(); }}},
        {9, {"reduction", reduction}},
        {10, {"tableau_oracle", tableau_oracle}},
        {11, {"vcss", vcss_suite}},
        {12, {"scheme_lemmas", [](const CheckSizes &) { return scheme_lemmas(); }}},
        {13, {"theoretical_bounds", [](const CheckSizes &) { return bounds(); }}},
    };
    return table;
}

}  // namespace

int check_count() {
    return static_cast<int>(checks().size());
}

CheckResult run_check(int id, const CheckSizes &sizes) {
    auto it = checks().find(id);
    if (it == checks().end()) {
        throw std::invalid_argument("no check " + std::to_string(id));
    }
    CheckResult r;
    r.id = id;
    r.name = it->second.name;
    auto start = std::chrono::steady_clock::now();
    try {
        auto o = it->second.run(sizes);
        r.pass = o.pass;
        r.detail = o.detail;
    } catch (const std::exception &e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

const std::vector<std::string> &props_suites() {
    static const std::vector<std::string> names = {"codes", "tableau", "vcss", "protocol", "secrecy"};
    return names;
}

std::vector<int> suite_checks(const std::string &suite) {
    if (suite == "codes") {
        return {1, 2, 12};
    }
    if (suite == "tableau") {
        return {10, 9};
    }
    if (suite == "vcss") {
        return {11};
    }
    if (suite == "protocol") {
        return {3, 4, 5, 6, 8, 13};
    }
    if (suite == "secrecy") {
        return {7};
    }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::string format_check(const CheckResult &r) {
    char head[96];
    std::snprintf(head, sizeof head, "%s %2d %s (%.2f s): ", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                  r.seconds);
    return head + r.detail;
}

}  // namespace vhss
