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

#include "vhss/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vhss/gf2m.hpp"

namespace vhss {

namespace {

const char *pattern_name(PauliPattern p) {
    switch (p) {
        case PauliPattern::X:
            return "X";
        case PauliPattern::Y:
            return "Y";
        case PauliPattern::Z:
            return "Z";
        default:
            return "random";
    }
}

const char *phase_name(AttackPhase p) {
    switch (p) {
        case AttackPhase::encoding:
            return "encoding";
        case AttackPhase::pre_verification:
            return "pre_verification";
        default:
            return "post_verification";
    }
}

const char *rule_name(LieRule r) {
    switch (r) {
        case LieRule::flip_all:
            return "flip_all";
        case LieRule::flip_first:
            return "flip_first";
        default:
            return "random";
    }
}

std::optional<AttackPhase> parse_phase(const std::string &s) {
    for (auto p : {AttackPhase::encoding, AttackPhase::pre_verification, AttackPhase::post_verification}) {
        if (s == phase_name(p)) {
            return p;
        }
    }
    return std::nullopt;
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::size_t parse_index(const std::string &s, const std::string &context) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("bad gate index in '" + context + "'");
    }
    return std::stoul(s);
}

std::vector<CliffordGate> parse_circuit(const std::string &text) {
    static const std::vector<std::string> two = {"CNOT", "CZ"};
    static const std::vector<std::string> one = {"S_DAG", "H", "S", "X", "Y", "Z"};
    std::vector<CliffordGate> out;
    for (const auto &tok : split(text, ';')) {
        if (tok.empty()) {
            continue;
        }
        CliffordGate g;
        bool found = false;
        for (const auto &name : two) {
            if (tok.rfind(name, 0) == 0) {
                auto args = split(tok.substr(name.size()), ',');
                if (args.size() != 2) {
                    throw std::invalid_argument("gate needs two indices: '" + tok + "'");
                }
                g = {name, parse_index(args[0], tok), parse_index(args[1], tok)};
                if (g.a == g.b) {
                    throw std::invalid_argument("two-qubit gate on one qubit: '" + tok + "'");
                }
                found = true;
                break;
            }
        }
        if (!found) {
            for (const auto &name : one) {
                if (tok.rfind(name, 0) == 0) {
                    g = {name, parse_index(tok.substr(name.size()), tok), 0};
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            throw std::invalid_argument("unknown gate '" + tok + "'");
        }
        out.push_back(g);
    }
    if (out.empty()) {
        throw std::invalid_argument("empty cheater circuit");
    }
    return out;
}

std::string circuit_str(const std::vector<CliffordGate> &c) {
    std::string out;
    for (const auto &g : c) {
        if (!out.empty()) {
            out += ';';
        }
        out += g.name + std::to_string(g.a);
        if (g.name == "CNOT" || g.name == "CZ") {
            out += ',' + std::to_string(g.b);
        }
    }
    return out;
}

std::string hex_bytes(const std::vector<std::uint8_t> &bytes) {
    static const char *digits = "0123456789abcdef";
    std::string out;
    for (auto b : bytes) {
        out += digits[b >> 4];
        out += digits[b & 15];
    }
    return out;
}

// Two-level tree outside any network, for the reduction harness.
Tree build_tree(LogicalTableau &tab, const CssCode &css, const AmplitudePair *secret) {
    std::size_t n = css.n(), slot = css.encoder_slot();
    std::vector<QubitId> root(n);
    for (std::size_t j = 0; j < n; j++) {
        root[j] = (j == slot && secret) ? tab.add_logical_qubit(*secret) : tab.add_qubit();
    }
    if (!secret) {
        tab.h(root[slot]);
    }
    encode_block(tab, css, root);
    Tree tree(n, std::vector<QubitId>(n));
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            tree[i][j] = j == slot ? root[i] : tab.add_qubit();
        }
        encode_block(tab, css, tree[i]);
    }
    return tree;
}

bool root_z_value(const CssCode &css, const std::vector<BitVector> &words) {
    BitVector root(css.n());
    for (std::size_t i = 0; i < words.size(); i++) {
        auto out = css.v().bounded_distance_decode(words[i]);
        if (!out.ok()) {
            throw std::logic_error("leaf word outside the code");
        }
        root.set(i, css.z_logical_value(out.codeword));
    }
    return css.z_logical_value(root);
}

}  // namespace

AdversaryStrategy AdversaryStrategy::parse(const std::string &text) {
    auto parts = split(text, ':');
    if (parts.empty()) {
        throw std::invalid_argument("empty strategy");
    }
    AdversaryStrategy s;
    const auto &kind = parts[0];
    auto arity = [&](std::size_t max) {
        if (parts.size() > max + 1) {
            throw std::invalid_argument("too many fields in strategy '" + text + "'");
        }
    };
    if (kind == "honest") {
        arity(0);
    } else if (kind == "dealer_inconsistent_tree") {
        arity(0);
        s.kind = StrategyKind::dealer_inconsistent_tree;
    } else if (kind == "dealer_overweight_errors") {
        arity(0);
        s.kind = StrategyKind::dealer_overweight_errors;
    } else if (kind == "dealer_wrong_ancilla") {
        arity(0);
        s.kind = StrategyKind::dealer_wrong_ancilla;
    } else if (kind == "cheater_pauli") {
        arity(2);
        s.kind = StrategyKind::cheater_pauli;
        for (std::size_t k = 1; k < parts.size(); k++) {
            const auto &f = parts[k];
            if (auto ph = parse_phase(f)) {
                s.phase = *ph;
            } else if (f == "X") {
                s.pattern = PauliPattern::X;
            } else if (f == "Y") {
                s.pattern = PauliPattern::Y;
            } else if (f == "Z") {
                s.pattern = PauliPattern::Z;
            } else if (f == "random") {
                s.pattern = PauliPattern::random;
            } else {
                throw std::invalid_argument("bad cheater_pauli field '" + f + "'");
            }
        }
    } else if (kind == "cheater_broadcast_lie") {
        arity(1);
        s.kind = StrategyKind::cheater_broadcast_lie;
        if (parts.size() == 2) {
            if (parts[1] == "flip_all") {
                s.rule = LieRule::flip_all;
            } else if (parts[1] == "flip_first") {
                s.rule = LieRule::flip_first;
            } else if (parts[1] == "random") {
                s.rule = LieRule::random;
            } else {
                throw std::invalid_argument("bad lie rule '" + parts[1] + "'");
            }
        }
    } else if (kind == "cheater_clifford") {
        arity(2);
        s.kind = StrategyKind::cheater_clifford;
        std::string circuit;
        for (std::size_t k = 1; k < parts.size(); k++) {
            if (auto ph = parse_phase(parts[k])) {
                s.phase = *ph;
            } else {
                circuit = parts[k];
            }
        }
        if (s.phase == AttackPhase::encoding) {
            throw std::invalid_argument("cheater_clifford acts on whole branches; encoding phase not allowed");
        }
        s.circuit = parse_circuit(circuit.empty() ? "H0;CNOT0,1" : circuit);
    } else {
        throw std::invalid_argument("unknown strategy '" + kind + "'");
    }
    return s;
}

std::string AdversaryStrategy::str() const {
    switch (kind) {
        case StrategyKind::honest:
            return "honest";
        case StrategyKind::dealer_inconsistent_tree:
            return "dealer_inconsistent_tree";
        case StrategyKind::dealer_overweight_errors:
            return "dealer_overweight_errors";
        case StrategyKind::dealer_wrong_ancilla:
            return "dealer_wrong_ancilla";
        case StrategyKind::cheater_pauli:
            return std::string("cheater_pauli:") + pattern_name(pattern) + ":" + phase_name(phase);
        case StrategyKind::cheater_broadcast_lie:
            return std::string("cheater_broadcast_lie:") + rule_name(rule);
        case StrategyKind::cheater_clifford:
            return std::string("cheater_clifford:") + phase_name(phase) + ":" + circuit_str(circuit);
    }
    return "?";
}

bool AdversaryStrategy::dealer_strategy() const {
    return kind == StrategyKind::dealer_inconsistent_tree || kind == StrategyKind::dealer_overweight_errors ||
           kind == StrategyKind::dealer_wrong_ancilla;
}

bool AdversaryStrategy::cheater_strategy() const {
    return kind == StrategyKind::cheater_pauli || kind == StrategyKind::cheater_broadcast_lie ||
           kind == StrategyKind::cheater_clifford;
}

std::vector<AdversaryStrategy> strategy_library() {
    std::vector<std::string> names = {"honest", "dealer_inconsistent_tree", "dealer_overweight_errors",
                                      "dealer_wrong_ancilla"};
    for (const char *p : {"X", "Y", "Z", "random"}) {
        for (const char *ph : {"encoding", "pre_verification", "post_verification"}) {
            names.push_back(std::string("cheater_pauli:") + p + ":" + ph);
        }
    }
    for (const char *r : {"flip_all", "flip_first", "random"}) {
        names.push_back(std::string("cheater_broadcast_lie:") + r);
    }
    names.push_back("cheater_clifford:pre_verification:H0;CNOT0,1;S1");
    names.push_back("cheater_clifford:post_verification:H0;CNOT0,1;S1");
    names.push_back("cheater_clifford:post_verification:CZ0,2;H2;Y1");
    std::vector<AdversaryStrategy> out;
    for (const auto &n : names) {
        out.push_back(AdversaryStrategy::parse(n));
    }
    return out;
}

ResolvedParams resolve(const ProtocolConfig &cfg) {
    ResolvedParams p;
    p.n_q = cfg.css.n();
    p.n_c = cfg.n_c == 0 ? p.n_q : cfg.n_c;
    p.n = std::max(p.n_q, p.n_c);
    p.t = cfg.t.value_or(cfg.css.correctable());
    if (p.t > cfg.css.correctable()) {
        throw std::invalid_argument("t exceeds what the code corrects");
    }
    p.t_c = (p.n_c - 1) / 2;
    p.r = cfg.r;
    if (p.r == 0) {
        throw std::invalid_argument("r must be at least 1");
    }
    p.dealer = cfg.dealer;
    if (p.dealer >= p.n_q || p.dealer >= p.n_c) {
        throw std::invalid_argument("dealer must hold both a quantum and a classical share");
    }
    if (cfg.cheaters) {
        p.cheaters = *cfg.cheaters;
    } else if (cfg.strategy.dealer_strategy()) {
        p.cheaters = {p.dealer};
    } else if (cfg.strategy.cheater_strategy()) {
        for (std::size_t k = p.n; k-- > 0 && p.cheaters.size() < p.t;) {
            if (k != p.dealer) {
                p.cheaters.push_back(k);
            }
        }
        std::sort(p.cheaters.begin(), p.cheaters.end());
    }
    if (cfg.strategy.dealer_strategy() &&
        std::find(p.cheaters.begin(), p.cheaters.end(), p.dealer) == p.cheaters.end()) {
        throw std::invalid_argument("dealer strategies need the dealer among the cheaters");
    }
    for (const auto &g : cfg.strategy.circuit) {
        if (g.a >= p.n_q || g.b >= p.n_q) {
            throw std::invalid_argument("cheater circuit index out of range");
        }
    }
    return p;
}

ProtocolState::ProtocolState(const ProtocolConfig &cfg, const AmplitudePair &secret, std::uint64_t seed)
    : cfg_(cfg),
      p_(resolve(cfg)),
      secret_amps_(secret),
      seed_(seed),
      dealer_rng_(stream_rng(seed, "dealer")),
      measure_rng_(stream_rng(seed, "measure")),
      adversary_rng_(stream_rng(seed, "adversary")),
      reconstructor_rng_(stream_rng(seed, "reconstructor")) {
    if (!secret.is_normalized(1e-9)) {
        throw std::invalid_argument("secret amplitudes are not normalized");
    }
    NetworkConfig nc;
    nc.n_q = p_.n_q;
    nc.n_c = p_.n_c;
    nc.t = p_.t;
    nc.cheaters = p_.cheaters;
    nc.dealer = p_.dealer;
    nc.seed = seed;
    nc.keep_log = cfg.keep_log;
    net_ = std::make_unique<Network>(nc);
    B_i_.resize(p_.n_q);
}

std::size_t ProtocolState::flip_branch() const {
    return p_.dealer == p_.n_q - 1 ? p_.n_q - 2 : p_.n_q - 1;
}

std::vector<std::size_t> ProtocolState::scapegoats() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < p_.n_q && out.size() < p_.t; k++) {
        if (k != p_.dealer && k != flip_branch()) {
            out.push_back(k);
        }
    }
    return out;
}

void ProtocolState::require_owner(std::size_t node, QubitId q) const {
    if (!net_->owns(node, q)) {
        throw std::logic_error("node " + std::to_string(node) + " touched a qubit it does not hold");
    }
}

Tree ProtocolState::deal_tree(RootState kind, bool main_ancilla) {
    auto &tab = net_->tableau();
    const auto &css = cfg_.css;
    const auto kindof = cfg_.strategy.kind;
    std::size_t n = p_.n_q, slot = css.encoder_slot(), D = p_.dealer;

    std::vector<QubitId> root(n);
    for (std::size_t j = 0; j < n; j++) {
        root[j] = (j == slot && kind == RootState::secret) ? net_->create_logical_qubit(D, secret_amps_)
                                                          : net_->create_qubits(D, 1)[0];
    }
    if (kind == RootState::secret) {
        // X^a Z^b
        if (key_.b) {
            tab.z(root[slot]);
        }
        if (key_.a) {
            tab.x(root[slot]);
        }
    } else if (kind == RootState::plus) {
        tab.h(root[slot]);
    } else if (main_ancilla && kindof == StrategyKind::dealer_wrong_ancilla) {
        tab.x(root[slot]);
    }
    encode_block(tab, css, root);
    if (kindof == StrategyKind::dealer_inconsistent_tree) {
        if (kind == RootState::secret) {
            tab.x(root[flip_branch()]);
        } else if (kind == RootState::zero && main_ancilla) {
            for (auto k : scapegoats()) {
                tab.z(root[k]);
            }
        }
    }
    for (std::size_t i = 0; i < n; i++) {
        if (i != D) {
            net_->send_qubit(D, i, root[i]);
        }
    }
    net_->next_round();

    Tree blocks(n, std::vector<QubitId>(n));
    for (std::size_t i = 0; i < n; i++) {
        if (kind == RootState::secret && kindof == StrategyKind::cheater_pauli &&
            cfg_.strategy.phase == AttackPhase::encoding && net_->is_cheater(i)) {
            apply_pattern(root[i], i);
        }
        auto fresh = net_->create_qubits(i, n - 1);
        for (std::size_t j = 0, f = 0; j < n; j++) {
            blocks[i][j] = j == slot ? root[i] : fresh[f++];
        }
        encode_block(tab, css, blocks[i]);
        if (kind == RootState::secret && kindof == StrategyKind::dealer_overweight_errors && i == D) {
            for (std::size_t j = 0; j <= p_.t && j < n; j++) {
                require_owner(D, blocks[i][j]);
                tab.x(blocks[i][j]);
            }
        }
    }
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            if (j != i) {
                net_->send_qubit(i, j, blocks[i][j]);
            }
        }
    }
    net_->next_round();
    return blocks;
}

std::string ProtocolState::lie(std::size_t node, std::string bits) {
    (void)node;
    auto flip = [](char &c) { c = c == '0' ? '1' : '0'; };
    switch (cfg_.strategy.rule) {
        case LieRule::flip_all:
            for (auto &c : bits) {
                flip(c);
            }
            break;
        case LieRule::flip_first:
            flip(bits[0]);
            break;
        case LieRule::random:
            for (auto &c : bits) {
                if (random_bit(adversary_rng_)) {
                    flip(c);
                }
            }
            break;
    }
    return bits;
}

MeasuredTree ProtocolState::measure_tree(const Tree &tree, const std::string &label, bool fourier,
                                         bool ancilla_check) {
    auto &tab = net_->tableau();
    std::size_t n = p_.n_q;
    bool lying = cfg_.strategy.kind == StrategyKind::cheater_broadcast_lie;
    for (std::size_t j = 0; j < n; j++) {
        std::string bits(n, '0');
        for (std::size_t i = 0; i < n; i++) {
            require_owner(j, tree[i][j]);
            bits[i] = tab.measure_z(tree[i][j], measure_rng_).outcome ? '1' : '0';
            net_->retire(j, tree[i][j]);
        }
        if (lying && net_->is_cheater(j)) {
            bits = lie(j, bits);
        }
        net_->broadcast(j, label, bits);
    }
    net_->next_round();

    MeasuredTree m;
    m.label = label;
    m.fourier = fourier;
    m.ancilla_check = ancilla_check;
    m.words.assign(n, BitVector(n));
    std::size_t round = net_->round() - 1;
    for (const auto &rec : net_->broadcasts()) {
        if (rec.round != round || rec.kind != label || rec.sender >= n || rec.payload.size() != n) {
            continue;
        }
        for (std::size_t i = 0; i < n; i++) {
            m.words[i].set(rec.sender, rec.payload[i] == '1');
        }
    }
    return m;
}

void ProtocolState::transversal_cnot(const Tree &control, const Tree &target) {
    auto &tab = net_->tableau();
    for (std::size_t i = 0; i < p_.n_q; i++) {
        for (std::size_t j = 0; j < p_.n_q; j++) {
            require_owner(j, control[i][j]);
            require_owner(j, target[i][j]);
            tab.cnot(control[i][j], target[i][j]);
        }
    }
}

void ProtocolState::transversal_h(const Tree &tree) {
    auto &tab = net_->tableau();
    for (std::size_t i = 0; i < p_.n_q; i++) {
        for (std::size_t j = 0; j < p_.n_q; j++) {
            require_owner(j, tree[i][j]);
            tab.h(tree[i][j]);
        }
    }
}

void ProtocolState::apply_pattern(QubitId q, std::size_t node) {
    require_owner(node, q);
    auto &tab = net_->tableau();
    auto p = cfg_.strategy.pattern;
    if (p == PauliPattern::random) {
        p = static_cast<PauliPattern>(uniform_below(adversary_rng_, 3));
    }
    switch (p) {
        case PauliPattern::X:
            tab.x(q);
            break;
        case PauliPattern::Y:
            tab.y(q);
            break;
        default:
            tab.z(q);
            break;
    }
}

void ProtocolState::cheater_attack(AttackPhase phase) {
    const auto &s = cfg_.strategy;
    if (s.phase != phase || (s.kind != StrategyKind::cheater_pauli && s.kind != StrategyKind::cheater_clifford)) {
        return;
    }
    auto &tab = net_->tableau();
    for (auto c : p_.cheaters) {
        if (c >= p_.n_q) {
            continue;
        }
        if (s.kind == StrategyKind::cheater_pauli) {
            for (std::size_t i = 0; i < p_.n_q; i++) {
                apply_pattern(secret_[i][c], c);
            }
            continue;
        }
        for (const auto &g : s.circuit) {
            QubitId a = secret_[g.a][c], b = secret_[g.b][c];
            require_owner(c, a);
            if (g.name == "CNOT" || g.name == "CZ") {
                require_owner(c, b);
                g.name == "CNOT" ? tab.cnot(a, b) : tab.cz(a, b);
            } else if (g.name == "H") {
                tab.h(a);
            } else if (g.name == "S") {
                tab.s(a);
            } else if (g.name == "S_DAG") {
                tab.s_dag(a);
            } else if (g.name == "X") {
                tab.x(a);
            } else if (g.name == "Y") {
                tab.y(a);
            } else {
                tab.z(a);
            }
        }
    }
}

void ProtocolState::share() {
    if (shared_) {
        throw std::logic_error("sharing already ran");
    }
    net_->set_phase("sharing");
    key_ = {random_bit(dealer_rng_), random_bit(dealer_rng_)};
    TagVcss vcss(p_.n_c, p_.t_c, p_.r, p_.dealer);
    deal_ = vcss.share(key_, dealer_rng_);
    for (std::size_t k = 0; k < p_.n_c; k++) {
        if (k != p_.dealer) {
            net_->send_private(p_.dealer, k, "key_share", serialize_share(deal_.shares[k]));
        }
    }
    secret_ = deal_tree(RootState::secret, false);
    shared_ = true;
}

bool ProtocolState::verify() {
    if (!shared_ || verified_) {
        throw std::logic_error("verification needs a fresh shared state");
    }
    verified_ = true;
    cheater_attack(AttackPhase::pre_verification);
    std::size_t n = p_.n_q, r = p_.r;

    // Classical key shares first.
    net_->set_phase("vcss_verification");
    std::vector<bool> coins;
    for (std::size_t l = 1; l <= r; l++) {
        coins.push_back(net_->public_coin("vcss/" + std::to_string(l)));
    }
    std::vector<std::size_t> false_complainers;
    if (cfg_.strategy.kind == StrategyKind::cheater_broadcast_lie) {
        for (auto c : p_.cheaters) {
            if (c < p_.n_c) {
                false_complainers.push_back(c);
            }
        }
    }
    TagVcss vcss(p_.n_c, p_.t_c, p_.r, p_.dealer);
    vcss_verdict_ = vcss.verify(deal_, coins, false_complainers);
    for (std::size_t l = 0; l < r; l++) {
        const auto &resp = deal_.responses[l][coins[l]];
        std::vector<std::uint8_t> bytes;
        for (const auto &poly : resp) {
            for (auto c : poly.coeffs) {
                bytes.push_back(c.value());
            }
        }
        net_->broadcast(p_.dealer, "vcss_response/" + std::to_string(l + 1), hex_bytes(bytes));
    }
    net_->next_round();
    for (const auto &msg : vcss_verdict_.broadcasts) {
        net_->broadcast(msg.sender, "vcss_complaint/" + std::to_string(msg.round + 1),
                        msg.complaint ? "complaint" : "ok");
    }
    net_->next_round();

    net_->set_phase("z_verification");
    for (std::size_t m = 1; m <= r; m++) {
        std::string label = "z/0/" + std::to_string(m);
        Tree plus = deal_tree(RootState::plus, false);
        if (net_->public_coin(label)) {
            transversal_cnot(secret_, plus);
        }
        measured_.push_back(measure_tree(plus, label, false, false));
    }

    net_->set_phase("x_verification");
    for (std::size_t l = 1; l <= r; l++) {
        std::string prefix = "x/" + std::to_string(l) + "/";
        Tree main = deal_tree(RootState::zero, true);
        for (std::size_t m = 1; m <= r; m++) {
            Tree sub = deal_tree(RootState::zero, false);
            if (net_->public_coin(prefix + std::to_string(m))) {
                transversal_cnot(main, sub);
            }
            measured_.push_back(measure_tree(sub, prefix + std::to_string(m), false, true));
        }
        if (l == 1) {
            transversal_h(secret_);
        }
        transversal_h(main);
        if (net_->public_coin(prefix + "0")) {
            transversal_cnot(secret_, main);
        }
        measured_.push_back(measure_tree(main, prefix + "0", true, false));
    }
    transversal_h(secret_);
    (void)n;

    decode_all();
    if (!vcss_verdict_.accept) {
        aborted_ = true;
        abort_reason_ = "key shares rejected";
    } else if (dealer_rejected_) {
        aborted_ = true;
    } else if (B_.size() > p_.t) {
        aborted_ = true;
        abort_reason_ = "more than t accused nodes";
    }
    return !aborted_;
}

void ProtocolState::decode_all() {
    const auto &css = cfg_.css;
    std::size_t n = p_.n_q;
    for (const auto &m : measured_) {
        const LinearCode &code = m.fourier ? css.w() : css.v();
        BitVector root(n);
        for (std::size_t i = 0; i < n; i++) {
            auto out = code.bounded_distance_decode(m.words[i]);
            if (!out.ok()) {
                B_.insert(i);
                continue;
            }
            B_i_[i].insert(out.error_positions.begin(), out.error_positions.end());
            root.set(i, m.fourier ? css.x_logical_value(out.codeword) : css.z_logical_value(out.codeword));
            if (B_i_[i].size() > p_.t) {
                B_.insert(i);
            }
        }
        auto ro = code.bounded_distance_decode(root);
        if (!ro.ok()) {
            if (!dealer_rejected_) {
                abort_reason_ = "root word of " + m.label + " does not decode";
            }
            dealer_rejected_ = true;
            continue;
        }
        B_.insert(ro.error_positions.begin(), ro.error_positions.end());
        if (m.ancilla_check && css.z_logical_value(ro.codeword)) {
            if (!dealer_rejected_) {
                abort_reason_ = "ancilla of " + m.label + " is not logical zero";
            }
            dealer_rejected_ = true;
        }
    }
}

Transcript ProtocolState::transcript() const {
    Transcript tr;
    tr.seed = seed_;
    tr.code = cfg_.css.name();
    tr.n = p_.n;
    tr.n_q = p_.n_q;
    tr.n_c = p_.n_c;
    tr.t = p_.t;
    tr.r = p_.r;
    tr.strategy = cfg_.strategy.str();
    tr.aborted = aborted_;
    tr.abort_reason = abort_reason_;
    tr.B.assign(B_.begin(), B_.end());
    for (const auto &b : B_i_) {
        tr.B_i.emplace_back(b.begin(), b.end());
    }
    tr.vcss_accused = vcss_verdict_.accused;
    for (std::size_t k = 0; k < p_.n; k++) {
        tr.peak_workspace.push_back(net_->peak(k));
    }
    for (const auto &ph : net_->phases()) {
        auto peaks = net_->phase_peaks(ph);
        peaks.resize(p_.n);
        tr.phase_peaks[ph] = peaks;
    }
    tr.eps_c_bound = theoretical_bounds(p_.r, 0.5, 0.5, 0.5).eps_c;
    tr.key = key_;
    tr.round_log = net_->round_log();
    return tr;
}

Transcript ProtocolState::reconstruct() {
    if (!verified_) {
        throw std::logic_error("reconstruction before verification");
    }
    if (aborted_) {
        return transcript();
    }
    cheater_attack(AttackPhase::post_verification);
    net_->set_phase("reconstruction");
    auto &tab = net_->tableau();
    const auto &css = cfg_.css;
    std::size_t n = p_.n_q, R = net_->config().reconstructor();

    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t i = 0; i < n; i++) {
            net_->send_qubit(j, R, secret_[i][j]);
        }
    }
    for (std::size_t k = 0; k < p_.n_c; k++) {
        KeyShare share = deal_.shares[k];
        if (k != p_.dealer) {
            for (const auto &msg : net_->inbox(k)) {
                if (msg.sender == p_.dealer && msg.kind == "key_share") {
                    share = deserialize_share(msg.payload);
                }
            }
        }
        if (cfg_.strategy.kind == StrategyKind::cheater_broadcast_lie && net_->is_cheater(k)) {
            share.share_a = share.share_a + GF256(1);
        }
        net_->send_private(k, R, "key_share", serialize_share(share));
    }
    net_->next_round();

    std::vector<KeyShare> collected;
    for (const auto &msg : net_->inbox(R)) {
        if (msg.kind == "key_share") {
            collected.push_back(deserialize_share(msg.payload));
        }
    }
    TagVcss vcss(p_.n_c, p_.t_c, p_.r, p_.dealer);
    auto key = vcss.reconstruct(collected, vcss_verdict_.accused);

    for (std::size_t i = 0; i < n; i++) {
        if (B_.count(i)) {
            continue;
        }
        std::vector<std::size_t> known(B_i_[i].begin(), B_i_[i].end());
        if (!correct_block(tab, css, secret_[i], reconstructor_rng_, known).ok) {
            B_.insert(i);
        }
    }

    Transcript tr = transcript();
    if (!key.ok) {
        tr.failure = "key: " + key.error;
        return tr;
    }
    std::size_t need = n - 2 * p_.t;
    std::vector<std::size_t> avail;
    for (std::size_t i = 0; i < n; i++) {
        if (!B_.count(i)) {
            avail.push_back(i);
        }
    }
    if (B_.size() > 2 * p_.t || avail.size() < need) {
        tr.unrecoverable = true;
        tr.failure = "more than 2t bad branches";
        return tr;
    }
    for (std::size_t k = 0; k < need; k++) {
        std::swap(avail[k], avail[k + uniform_below(reconstructor_rng_, avail.size() - k)]);
    }
    std::vector<bool> allowed(n, false);
    for (std::size_t k = 0; k < need; k++) {
        allowed[avail[k]] = true;
    }
    auto xr = css.x_rep_within(allowed);
    auto zr = css.z_rep_within(allowed);
    if (!xr || !zr) {
        tr.unrecoverable = true;
        tr.failure = "chosen branches carry no logical operator";
        return tr;
    }
    std::vector<QubitId> flat(n * n);
    BitVector xs(n * n), zs(n * n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            flat[i * n + j] = secret_[i][j];
        }
    }
    for (auto i : xr->support()) {
        for (auto j : css.x_rep().support()) {
            xs.set(i * n + j, true);
        }
    }
    for (auto i : zr->support()) {
        for (auto j : css.z_rep().support()) {
            zs.set(i * n + j, true);
        }
    }
    auto rx = tab.read(block_operator(xs, 'X', flat));
    auto rz = tab.read(block_operator(zs, 'Z', flat));
    auto ry = tab.read(y_operator(xs, zs, flat));
    auto state = recover_qubit(rx, ry, rz, tab.amplitudes());
    if (state.pure) {
        tr.fidelity = fidelity(secret_amps_, remove_pad(state.amps, key.key));
    } else {
        auto b = state.bloch;
        if (key.key.a) {
            b[1] = -b[1];
            b[2] = -b[2];
        }
        if (key.key.b) {
            b[0] = -b[0];
            b[1] = -b[1];
        }
        tr.fidelity = fidelity(secret_amps_, RecoveredQubit{false, {}, b});
    }
    return tr;
}

std::unique_ptr<ProtocolState> run_sharing(const ProtocolConfig &cfg, const AmplitudePair &secret,
                                           std::uint64_t seed) {
    auto st = std::make_unique<ProtocolState>(cfg, secret, seed);
    st->share();
    return st;
}

bool run_verification(ProtocolState &state) {
    return state.verify();
}

Transcript run_reconstruction(ProtocolState &state) {
    return state.reconstruct();
}

Transcript run_full(const ProtocolConfig &cfg, const AmplitudePair &secret, std::uint64_t seed) {
    ProtocolState st(cfg, secret, seed);
    st.share();
    st.verify();
    return st.reconstruct();
}

TheoreticalBounds theoretical_bounds(std::size_t r, double delta, double delta_p, double delta_pp) {
    if (r == 0) {
        throw std::invalid_argument("r must be at least 1");
    }
    for (double d : {delta, delta_p, delta_pp}) {
        if (!(d > 0 && d <= 1)) {
            throw std::invalid_argument("delta must lie in (0, 1]");
        }
    }
    double q = std::ldexp(1.0, -static_cast<int>(r));
    TheoreticalBounds b;
    b.abort_lower = 1 - std::max({q / delta, q / delta_p, q / delta_pp});
    b.eps_c = (2.0 + static_cast<double>(r)) * q;
    b.fidelity_lower = 1 - b.eps_c;
    return b;
}

AmplitudePair one_time_pad(const AmplitudePair &amps, OtpKey key) {
    auto out = amps;
    if (key.b) {
        out = out.apply_z();
    }
    if (key.a) {
        out = out.apply_x();
    }
    return out;
}

AmplitudePair remove_pad(const AmplitudePair &amps, OtpKey key) {
    auto out = amps;
    if (key.a) {
        out = out.apply_x();
    }
    if (key.b) {
        out = out.apply_z();
    }
    return out;
}

Matrix2 key_averaged_density(const AmplitudePair &amps) {
    Matrix2 rho{};
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            auto p = one_time_pad(amps, {a == 1, b == 1});
            std::array<std::complex<double>, 2> v{p.alpha, p.beta};
            for (int i = 0; i < 2; i++) {
                for (int j = 0; j < 2; j++) {
                    rho[i][j] += 0.25 * v[i] * std::conj(v[j]);
                }
            }
        }
    }
    return rho;
}

std::vector<std::size_t> secrecy_group(const CssCode &css) {
    return css.z_rep().support();
}

SecrecyView secrecy_view(const ProtocolConfig &cfg, const AmplitudePair &secret, std::uint64_t seed,
                         const std::vector<std::size_t> &group) {
    ProtocolState st(cfg, secret, seed);
    st.share();
    const auto &p = st.params();
    auto &tab = st.network().tableau();
    Rng rng = stream_rng(seed, "view");
    SecrecyView view;
    BitVector root(p.n_q);
    for (std::size_t i = 0; i < p.n_q; i++) {
        bool parity = false;
        for (auto j : group) {
            if (j < p.n_q) {
                parity ^= tab.measure_z(st.secret_tree()[i][j], rng).outcome;
            }
        }
        root.set(i, parity);
    }
    view.parity = cfg.css.z_logical_value(root);
    std::vector<std::pair<GF256, GF256>> pa, pb;
    for (auto j : group) {
        if (j < p.n_c) {
            const auto &s = st.vcss_deal().shares[j];
            pa.emplace_back(s.eval_point, s.share_a);
            pb.emplace_back(s.eval_point, s.share_b);
        }
    }
    if (!pa.empty()) {
        view.guess_a = interpolate(pa)(GF256(0)).value() & 1;
        view.guess_b = interpolate(pb)(GF256(0)).value() & 1;
    }
    return view;
}

double secrecy_tv(const ProtocolConfig &cfg, std::size_t trials, std::uint64_t seed) {
    auto group = secrecy_group(cfg.css);
    std::array<std::array<double, 8>, 2> counts{};
    const AmplitudePair states[2] = {AmplitudePair::zero(), AmplitudePair::plus()};
    for (std::size_t k = 0; k < trials; k++) {
        for (int s = 0; s < 2; s++) {
            auto v = secrecy_view(cfg, states[s], trial_seed(seed, 2 * k + s), group);
            counts[s][v.parity * 4 + v.guess_a * 2 + v.guess_b] += 1;
        }
    }
    double tv = 0;
    for (int c = 0; c < 8; c++) {
        tv += std::abs(counts[0][c] - counts[1][c]);
    }
    return tv / (2.0 * static_cast<double>(trials));
}

std::pair<bool, bool> reduction_sample(const CssCode &css, const AmplitudePair &secret, bool measure_first,
                                       std::uint64_t seed) {
    LogicalTableau tab;
    Rng rng = stream_rng(seed, "reduction");
    Tree control = build_tree(tab, css, &secret);
    Tree target = build_tree(tab, css, nullptr);
    std::size_t n = css.n();
    if (!measure_first) {
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < n; j++) {
                tab.cnot(control[i][j], target[i][j]);
            }
        }
    }
    auto read = [&](const Tree &tree) {
        std::vector<BitVector> words(n, BitVector(n));
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < n; j++) {
                words[i].set(j, tab.measure_z(tree[i][j], rng).outcome);
            }
        }
        return root_z_value(css, words);
    };
    bool c = read(control);
    bool t = read(target);
    if (measure_first) {
        t ^= c;
    }
    return {c, t};
}

}  // namespace vhss
