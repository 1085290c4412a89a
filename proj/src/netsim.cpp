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

#include "vhss/netsim.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace vhss {

namespace {

const char *channel_name(Channel ch) {
    switch (ch) {
        case Channel::broadcast:
            return "broadcast";
        case Channel::private_msg:
            return "private";
        case Channel::quantum:
            return "quantum";
        case Channel::beacon:
            return "beacon";
    }
    return "?";
}

}  // namespace

Network::Network(NetworkConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.n_q == 0) {
        throw std::invalid_argument("network needs at least one quantum node");
    }
    if (cfg_.dealer >= cfg_.n_q) {
        throw std::invalid_argument("dealer must be a quantum node");
    }
    cheaters_.insert(cfg_.cheaters.begin(), cfg_.cheaters.end());
    if (cheaters_.size() != cfg_.cheaters.size()) {
        throw std::invalid_argument("cheater list repeats a node");
    }
    if (cheaters_.size() > cfg_.t) {
        throw std::invalid_argument("more than t cheaters");
    }
    for (auto c : cheaters_) {
        if (c >= cfg_.n()) {
            throw std::invalid_argument("cheater index out of range");
        }
    }
    inbox_.resize(parties());
    held_.assign(parties(), 0);
    peak_.assign(parties(), 0);
    phase_peak_[phase_].assign(parties(), 0);
}

void Network::check_party(std::size_t p) const {
    if (p >= parties()) {
        throw std::out_of_range("no party " + std::to_string(p));
    }
}

void Network::record(Channel ch, std::size_t sender, std::size_t receiver, const std::string &kind,
                     std::uint64_t digest) {
    if (!cfg_.keep_log) {
        return;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
    std::string recv = receiver == SIZE_MAX ? "*" : std::to_string(receiver);
    log_.push_back(std::to_string(round_) + " | " + channel_name(ch) + " | " + std::to_string(sender) + " | " + recv +
                   " | " + kind + " | " + buf);
}

void Network::next_round() {
    std::stable_sort(pending_broadcasts_.begin(), pending_broadcasts_.end(),
                     [](const auto &a, const auto &b) { return a.sender < b.sender; });
    broadcasts_.insert(broadcasts_.end(), pending_broadcasts_.begin(), pending_broadcasts_.end());
    pending_broadcasts_.clear();
    for (auto &m : pending_messages_) {
        inbox_[m.receiver].push_back(std::move(m));
    }
    pending_messages_.clear();
    for (auto [receiver, q] : pending_qubits_) {
        owner_[q] = static_cast<std::int64_t>(receiver);
        gain(receiver, 1);
    }
    pending_qubits_.clear();
    round_++;
}

void Network::set_phase(const std::string &phase) {
    phase_ = phase;
    auto &bucket = phase_peak_[phase_];
    if (bucket.empty()) {
        bucket.assign(parties(), 0);
    }
    for (std::size_t p = 0; p < parties(); p++) {
        bucket[p] = std::max(bucket[p], held_[p]);
    }
}

void Network::gain(std::size_t node, std::size_t count) {
    held_[node] += count;
    peak_[node] = std::max(peak_[node], held_[node]);
    auto &bucket = phase_peak_[phase_];
    bucket[node] = std::max(bucket[node], held_[node]);
}

void Network::lose(std::size_t node, std::size_t count) {
    if (held_[node] < count) {
        throw std::logic_error("workspace meter underflow");
    }
    held_[node] -= count;
}

void Network::broadcast(std::size_t sender, const std::string &kind, const std::string &payload) {
    check_party(sender);
    pending_broadcasts_.push_back({round_, sender, kind, payload});
    record(Channel::broadcast, sender, SIZE_MAX, kind, fnv1a64(payload));
}

const std::vector<BroadcastRecord> &Network::received_broadcasts(std::size_t node) const {
    check_party(node);
    return broadcasts_;
}

void Network::send_private(std::size_t sender, std::size_t receiver, const std::string &kind,
                           std::vector<std::uint8_t> payload) {
    check_party(sender);
    check_party(receiver);
    record(Channel::private_msg, sender, receiver, kind, fnv1a64(payload));
    pending_messages_.push_back({round_, sender, receiver, kind, std::move(payload)});
}

const std::vector<PrivateMessage> &Network::inbox(std::size_t receiver) const {
    check_party(receiver);
    return inbox_[receiver];
}

bool Network::public_coin(const std::string &label) {
    if (!coin_labels_.insert(label).second) {
        throw std::invalid_argument("coin label '" + label + "' already used");
    }
    Rng r = stream_rng(cfg_.seed, "coin/" + label);
    bool bit = random_bit(r);
    record(Channel::beacon, parties(), SIZE_MAX, label, bit);
    return bit;
}

std::vector<QubitId> Network::create_qubits(std::size_t owner, std::size_t count) {
    check_party(owner);
    auto ids = tab_.add_qubits(count);
    for (auto q : ids) {
        if (q >= owner_.size()) {
            owner_.resize(q + 1, -1);
        }
        owner_[q] = static_cast<std::int64_t>(owner);
    }
    gain(owner, count);
    return ids;
}

QubitId Network::create_logical_qubit(std::size_t owner, const AmplitudePair &amps) {
    check_party(owner);
    QubitId q = tab_.add_logical_qubit(amps);
    if (q >= owner_.size()) {
        owner_.resize(q + 1, -1);
    }
    owner_[q] = static_cast<std::int64_t>(owner);
    gain(owner, 1);
    return q;
}

bool Network::owns(std::size_t node, QubitId q) const {
    return q < owner_.size() && owner_[q] == static_cast<std::int64_t>(node);
}

std::size_t Network::owner(QubitId q) const {
    if (q >= owner_.size() || owner_[q] < 0) {
        throw std::out_of_range("qubit " + std::to_string(q) + " has no owner");
    }
    return static_cast<std::size_t>(owner_[q]);
}

void Network::send_qubit(std::size_t sender, std::size_t receiver, QubitId q) {
    check_party(receiver);
    if (!owns(sender, q)) {
        throw std::logic_error("node " + std::to_string(sender) + " does not hold qubit " + std::to_string(q));
    }
    owner_[q] = -1;
    lose(sender, 1);
    pending_qubits_.push_back({receiver, q});
    record(Channel::quantum, sender, receiver, "qubit", q);
}

void Network::retire(std::size_t node, QubitId q) {
    if (!owns(node, q)) {
        throw std::logic_error("node " + std::to_string(node) + " does not hold qubit " + std::to_string(q));
    }
    tab_.retire(q);
    owner_[q] = -1;
    lose(node, 1);
}

std::vector<std::size_t> Network::phase_peaks(const std::string &phase) const {
    auto it = phase_peak_.find(phase);
    if (it == phase_peak_.end()) {
        return std::vector<std::size_t>(parties(), 0);
    }
    return it->second;
}

std::vector<std::string> Network::phases() const {
    std::vector<std::string> out;
    for (const auto &[k, v] : phase_peak_) {
        out.push_back(k);
    }
    return out;
}

}  // namespace vhss
