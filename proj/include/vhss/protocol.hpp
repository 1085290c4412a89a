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

#ifndef VHSS_PROTOCOL_HPP
#define VHSS_PROTOCOL_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vhss/css_code.hpp"
#include "vhss/logical_tableau.hpp"
#include "vhss/netsim.hpp"
#include "vhss/vcss.hpp"

namespace vhss {

enum class StrategyKind {
    honest,
    dealer_inconsistent_tree,
    dealer_overweight_errors,
    dealer_wrong_ancilla,
    cheater_pauli,
    cheater_broadcast_lie,
    cheater_clifford,
};

enum class PauliPattern { X, Y, Z, random };
enum class AttackPhase { encoding, pre_verification, post_verification };
enum class LieRule { flip_all, flip_first, random };

/// Gate of a cheater circuit; a and b index branches of the qubits the cheater holds.
struct CliffordGate {
    std::string name;  // H S S_DAG X Y Z CNOT CZ
    std::size_t a = 0;
    std::size_t b = 0;
};

struct AdversaryStrategy {
    StrategyKind kind = StrategyKind::honest;
    PauliPattern pattern = PauliPattern::X;
    AttackPhase phase = AttackPhase::pre_verification;
    LieRule rule = LieRule::flip_all;
    std::vector<CliffordGate> circuit;

    /// "honest", "dealer_inconsistent_tree", "cheater_pauli:Y:post_verification",
    /// "cheater_broadcast_lie:random", "cheater_clifford:pre_verification:H0;CNOT0,1", ...
    static AdversaryStrategy parse(const std::string &text);
    std::string str() const;
    bool dealer_strategy() const;
    bool cheater_strategy() const;
};

/// One configured instance of every strategy kind and parameter choice.
std::vector<AdversaryStrategy> strategy_library();

struct ProtocolConfig {
    explicit ProtocolConfig(CssCode code) : css(std::move(code)) {
    }

    CssCode css;
    std::size_t n_c = 0;             // 0 means n_q
    std::optional<std::size_t> t;    // default: the code tolerance
    std::size_t r = 4;
    AdversaryStrategy strategy;
    std::optional<std::vector<std::size_t>> cheaters;  // default depends on the strategy
    std::size_t dealer = 0;
    bool keep_log = false;
};

/// Values derived from a ProtocolConfig.
struct ResolvedParams {
    std::size_t n_q = 0;
    std::size_t n_c = 0;
    std::size_t n = 0;
    std::size_t t = 0;
    std::size_t t_c = 0;
    std::size_t r = 0;
    std::size_t dealer = 0;
    std::vector<std::size_t> cheaters;
};

ResolvedParams resolve(const ProtocolConfig &cfg);

struct Transcript {
    std::uint64_t seed = 0;
    std::string code;
    std::size_t n = 0, n_q = 0, n_c = 0, t = 0, r = 0;
    std::string strategy;
    bool aborted = false;
    std::string abort_reason;
    std::vector<std::size_t> B;
    std::vector<std::vector<std::size_t>> B_i;
    std::vector<std::size_t> vcss_accused;
    std::optional<double> fidelity;
    bool unrecoverable = false;
    std::string failure;  // reconstruction problem, if any
    std::vector<std::size_t> peak_workspace;  // per node, whole run
    std::map<std::string, std::vector<std::size_t>> phase_peaks;
    double eps_c_bound = 0;
    OtpKey key;
    std::vector<std::string> round_log;
};

/// Tree of one encoded system: ids[i][j] is position j of the block encoded by node i (held by node j).
using Tree = std::vector<std::vector<QubitId>>;

/// Words broadcast for one measured tree, already arranged per encoder.
struct MeasuredTree {
    std::string label;
    bool fourier = false;  // words come from W (otherwise V)
    bool ancilla_check = false;
    std::vector<BitVector> words;  // words[i]: the block encoded by node i
};

class ProtocolState {
   public:
    ProtocolState(const ProtocolConfig &cfg, const AmplitudePair &secret, std::uint64_t seed);

    void share();
    /// Runs both verification stages and the decoding; returns false on abort.
    bool verify();
    Transcript reconstruct();
    /// Transcript of the run so far (used directly after an abort).
    Transcript transcript() const;

    Network &network() {
        return *net_;
    }
    const ResolvedParams &params() const {
        return p_;
    }
    const Tree &secret_tree() const {
        return secret_;
    }
    const OtpKey &key() const {
        return key_;
    }
    const VcssDeal &vcss_deal() const {
        return deal_;
    }
    const std::set<std::size_t> &B() const {
        return B_;
    }
    const std::vector<std::set<std::size_t>> &B_i() const {
        return B_i_;
    }
    const std::vector<MeasuredTree> &measured() const {
        return measured_;
    }

   private:
    enum class RootState { secret, plus, zero };

    Tree deal_tree(RootState kind, bool main_ancilla);
    std::size_t flip_branch() const;
    std::vector<std::size_t> scapegoats() const;
    void require_owner(std::size_t node, QubitId q) const;
    MeasuredTree measure_tree(const Tree &tree, const std::string &label, bool fourier, bool ancilla_check);
    void transversal_cnot(const Tree &control, const Tree &target);
    void transversal_h(const Tree &tree);
    void cheater_attack(AttackPhase phase);
    void apply_pattern(QubitId q, std::size_t node);
    void decode_all();
    std::string lie(std::size_t node, std::string bits);

    const ProtocolConfig &cfg_;
    ResolvedParams p_;
    AmplitudePair secret_amps_;
    std::uint64_t seed_;
    std::unique_ptr<Network> net_;
    Rng dealer_rng_, measure_rng_, adversary_rng_, reconstructor_rng_;
    OtpKey key_;
    VcssDeal deal_;
    VcssVerdict vcss_verdict_;
    Tree secret_;
    std::vector<MeasuredTree> measured_;
    std::set<std::size_t> B_;
    std::vector<std::set<std::size_t>> B_i_;
    bool shared_ = false, verified_ = false, aborted_ = false, dealer_rejected_ = false;
    std::string abort_reason_;
};

std::unique_ptr<ProtocolState> run_sharing(const ProtocolConfig &cfg, const AmplitudePair &secret,
                                           std::uint64_t seed);
bool run_verification(ProtocolState &state);
Transcript run_reconstruction(ProtocolState &state);
Transcript run_full(const ProtocolConfig &cfg, const AmplitudePair &secret, std::uint64_t seed);

struct TheoreticalBounds {
    double abort_lower = 0;
    double eps_c = 0;
    double fidelity_lower = 0;
};

/// 1 - max(2^-r/delta, 2^-r/delta', 2^-r/delta''), (2+r) 2^-r, and 1 - eps_c.
TheoreticalBounds theoretical_bounds(std::size_t r, double delta, double delta_p, double delta_pp);

/// Pad X^a Z^b applied to the amplitudes.
AmplitudePair one_time_pad(const AmplitudePair &amps, OtpKey key);
/// Inverse pad, Z^b X^a.
AmplitudePair remove_pad(const AmplitudePair &amps, OtpKey key);

using Matrix2 = std::array<std::array<std::complex<double>, 2>, 2>;
/// (1/4) sum over the four keys of the padded state's density operator.
Matrix2 key_averaged_density(const AmplitudePair &amps);

/// What a group sees after sharing: the logical Z parity of the tree read through the group's
/// positions, and the key bits it would guess from its own classical shares.
struct SecrecyView {
    bool parity = false;
    bool guess_a = false;
    bool guess_b = false;
};

SecrecyView secrecy_view(const ProtocolConfig &cfg, const AmplitudePair &secret, std::uint64_t seed,
                         const std::vector<std::size_t> &group);
/// Group used by the secrecy check: the support of the code's Z logical.
std::vector<std::size_t> secrecy_group(const CssCode &css);
/// Empirical total variation distance between views under |0> and |+>.
double secrecy_tv(const ProtocolConfig &cfg, std::size_t trials, std::uint64_t seed);

/// Root logical Z values (control tree, target tree) after a transversal CNOT between a secret
/// tree and a |+> tree. With measure_first, both trees are measured before the gate and the
/// target value is XORed classically.
std::pair<bool, bool> reduction_sample(const CssCode &css, const AmplitudePair &secret, bool measure_first,
                                       std::uint64_t seed);

}  // namespace vhss

#endif
