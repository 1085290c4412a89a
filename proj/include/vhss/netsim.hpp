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

#ifndef VHSS_NETSIM_HPP
#define VHSS_NETSIM_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vhss/logical_tableau.hpp"
#include "vhss/rng.hpp"

namespace vhss {

struct NetworkConfig {
    std::size_t n_q = 0;
    std::size_t n_c = 0;
    std::size_t t = 0;
    std::vector<std::size_t> cheaters;
    std::size_t dealer = 0;
    std::uint64_t seed = 0;
    bool keep_log = false;

    /// n = max(n_q, n_c); nodes are 0..n-1.
    std::size_t n() const {
        return std::max(n_q, n_c);
    }
    /// The reconstructor is an outside party with index n.
    std::size_t reconstructor() const {
        return n();
    }
};

enum class Channel { broadcast, private_msg, quantum, beacon };

struct BroadcastRecord {
    std::size_t round = 0;
    std::size_t sender = 0;
    std::string kind;
    std::string payload;
};

struct PrivateMessage {
    std::size_t round = 0;  // round it was sent in
    std::size_t sender = 0;
    std::size_t receiver = 0;
    std::string kind;
    std::vector<std::uint8_t> payload;
};

/// Synchronous network over one stabilizer tableau. Qubit ownership lives here, so every
/// transfer and retirement updates the per-node workspace meters.
class Network {
   public:
    explicit Network(NetworkConfig cfg);

    const NetworkConfig &config() const {
        return cfg_;
    }
    std::size_t parties() const {
        return cfg_.n() + 1;
    }
    bool is_cheater(std::size_t node) const {
        return cheaters_.count(node) != 0;
    }

    std::size_t round() const {
        return round_;
    }
    /// Ends the round: queued private messages and qubits are delivered.
    void next_round();

    /// Meter bucket for subsequent ownership changes.
    void set_phase(const std::string &phase);
    const std::string &phase() const {
        return phase_;
    }

    /// Everyone sees the same (round, sender, payload); there is no way to send different copies.
    void broadcast(std::size_t sender, const std::string &kind, const std::string &payload);
    /// All broadcasts so far, ordered by round and then sender.
    const std::vector<BroadcastRecord> &broadcasts() const {
        return broadcasts_;
    }
    /// Broadcasts the given node has received; identical for every node.
    const std::vector<BroadcastRecord> &received_broadcasts(std::size_t node) const;

    void send_private(std::size_t sender, std::size_t receiver, const std::string &kind,
                      std::vector<std::uint8_t> payload);
    /// Messages delivered to `receiver` so far.
    const std::vector<PrivateMessage> &inbox(std::size_t receiver) const;

    /// Fair public bit for a fresh label, derived from the seed and the label.
    bool public_coin(const std::string &label);

    LogicalTableau &tableau() {
        return tab_;
    }
    const LogicalTableau &tableau() const {
        return tab_;
    }
    std::vector<QubitId> create_qubits(std::size_t owner, std::size_t count);
    QubitId create_logical_qubit(std::size_t owner, const AmplitudePair &amps);
    /// Ownership leaves the sender now and reaches the receiver at the end of the round.
    void send_qubit(std::size_t sender, std::size_t receiver, QubitId q);
    /// Drops a measured qubit from the tableau.
    void retire(std::size_t node, QubitId q);
    bool owns(std::size_t node, QubitId q) const;
    /// Owner of a live qubit that is not in flight.
    std::size_t owner(QubitId q) const;

    std::size_t held(std::size_t node) const {
        return held_.at(node);
    }
    std::size_t peak(std::size_t node) const {
        return peak_.at(node);
    }
    /// Peak per node while the named phase was active (0 for phases never entered).
    std::vector<std::size_t> phase_peaks(const std::string &phase) const;
    std::vector<std::string> phases() const;

    /// "round | channel | sender | receiver | kind | payload-digest" lines (only with keep_log).
    const std::vector<std::string> &round_log() const {
        return log_;
    }

   private:
    void check_party(std::size_t p) const;
    void gain(std::size_t node, std::size_t count);
    void lose(std::size_t node, std::size_t count);
    void record(Channel ch, std::size_t sender, std::size_t receiver, const std::string &kind, std::uint64_t digest);

    NetworkConfig cfg_;
    std::set<std::size_t> cheaters_;
    std::size_t round_ = 0;
    std::string phase_ = "setup";
    std::vector<BroadcastRecord> broadcasts_;
    std::vector<BroadcastRecord> pending_broadcasts_;
    std::vector<std::vector<PrivateMessage>> inbox_;
    std::vector<PrivateMessage> pending_messages_;
    std::vector<std::pair<std::size_t, QubitId>> pending_qubits_;
    std::set<std::string> coin_labels_;
    LogicalTableau tab_;
    std::vector<std::int64_t> owner_;  // by qubit id; -1 retired or in flight
    std::vector<std::size_t> held_;
    std::vector<std::size_t> peak_;
    std::map<std::string, std::vector<std::size_t>> phase_peak_;
    std::vector<std::string> log_;
};

}  // namespace vhss

#endif
