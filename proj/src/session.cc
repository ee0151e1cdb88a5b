// Copyright 2026 The CSDC Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csdc/session.h"

#include <algorithm>
#include <map>

#include "csdc/basis_algebra.h"
#include "csdc/errors.h"
#include "csdc/gate.h"

namespace csdc {

bool coincidence_holds(MeasurementBasis basis, std::span<const int> outcomes) {
    int ones = 0;
    for (int b : outcomes) {
        ones += b;
    }
    if (basis == MeasurementBasis::Computational) {
        return ones == 0 || ones == static_cast<int>(outcomes.size());
    }
    return ones % 2 == 0;
}

std::vector<QubitId> triplet_qubits(int party_count, int triplet) {
    std::vector<QubitId> qubits;
    for (int p = 0; p < party_count; p++) {
        qubits.push_back(party_qubit(p, triplet));
    }
    return qubits;
}

StateVector prepare_group_register(int party_count, int first_triplet) {
    return tensor(ghz_register_state(triplet_qubits(party_count, first_triplet)),
                  ghz_register_state(triplet_qubits(party_count, first_triplet + 1)));
}

Projection controller_collapse(const StateVector &reg, const QubitId &qubit, int outcome) {
    return project_qubit(apply_gate(reg, Gate::Hadamard, qubit), qubit, MeasurementBasis::Computational, outcome);
}

SenderResult sender_encode(const StateVector &reg, int sender, const std::array<int, 2> &triplets, EncodingOp op,
                           RandomStream &rng) {
    QubitId first = party_qubit(sender, triplets[0]);
    QubitId second = party_qubit(sender, triplets[1]);
    StateVector encoded = apply_gate(reg, encoding_gate(op), first);
    BellMeasurement m = measure_bell(encoded, first, second, rng);
    return {m.outcome, std::move(m.post_state)};
}

ReceiverResult receiver_decode_group(const StateVector &reg, int receiver, const std::array<int, 2> &triplets,
                                     const std::array<uint8_t, 2> &parity, BellOutcome sender_bell,
                                     const DecodeTable &table, RandomStream &rng) {
    BellMeasurement m = measure_bell(reg, party_qubit(receiver, triplets[0]), party_qubit(receiver, triplets[1]), rng);
    DecodeKey key{parity[0], parity[1], sender_bell, m.outcome};
    return {m.outcome, key, decode(table, key), std::move(m.post_state)};
}

Session::Session(ProtocolConfig config)
    : config_(std::move(config)), plan_(plan_groups(config_)), eve_rng_(config_.seed, "EVE") {
    for (int p = 0; p < config_.party_count; p++) {
        party_rng_.emplace_back(config_.seed, party_name(p));
        if (p != config_.sender && p != config_.receiver) {
            controllers_.push_back(p);
        }
    }
    phases_.push_back(Phase::S1);
}

void Session::advance(Phase next) {
    Phase current = phases_.back();
    bool ok = next == Phase::Aborted ? current == Phase::S4
                                     : current != Phase::Aborted && static_cast<int>(next) == static_cast<int>(current) + 1;
    if (!ok) {
        throw InternalError(
            "illegal phase transition " + std::string(to_string(current)) + " -> " + std::string(to_string(next)));
    }
    phases_.push_back(next);
}

void Session::require_phase(Phase expected, const char *operation) const {
    if (phases_.back() != expected) {
        throw InternalError(
            std::string(operation) + " called in phase " + std::string(to_string(phases_.back())) + ", expected " +
            std::string(to_string(expected)));
    }
}

void Session::record(int party, std::string action, std::string detail) {
    transcript_.append(phases_.back(), party_name(party), std::move(action), std::move(detail));
}

void Session::record_eve(const EveRecord &event) {
    std::string detail = "triplet=" + std::to_string(event.triplet);
    switch (event.kind) {
        case EveRecord::Kind::Intercept:
            transcript_.append(phases_.back(), "EVE", "INTERCEPT",
                               detail + " basis=" + std::string(to_string(event.basis)) +
                                   " outcome=" + std::to_string(event.outcome));
            break;
        case EveRecord::Kind::Probe:
            transcript_.append(phases_.back(), "EVE", "PROBE", detail + " ancilla=a" + std::to_string(event.triplet));
            break;
        case EveRecord::Kind::AncillaReadout:
            transcript_.append(phases_.back(), "EVE", "ANCILLA_READOUT", detail + " outcome=" + std::to_string(event.outcome));
            break;
    }
}

const ClassicalMessage &Session::broadcast(int from, MessageBody body) {
    auto phase = std::holds_alternative<Abort>(body) ? Phase::Aborted : phases_.back();
    const auto &message = channel_.publish(from, std::move(body));
    transcript_.append(phase, party_name(from), message_action(message.body), message_detail(message.body));
    return message;
}

void Session::consume(const QubitId &qubit) {
    if (!prepared_.contains(qubit)) {
        throw InternalError("measured qubit " + qubit.label() + " was never prepared");
    }
    if (!measured_.insert(qubit).second) {
        throw InternalError("qubit " + qubit.label() + " measured twice");
    }
}

GroupState &Session::group_of_triplet(int triplet) {
    return groups_.at(static_cast<size_t>((triplet - 1) / 2));
}

int Session::measure_photon(GroupState &group, int party, int triplet, MeasurementBasis basis) {
    QubitId q = party_qubit(party, triplet);
    consume(q);
    QubitMeasurement m = measure_qubit(group.reg, q, basis, party_rng_[static_cast<size_t>(party)]);
    group.reg = std::move(m.post_state);
    return m.outcome;
}

void Session::prepare_and_distribute() {
    require_phase(Phase::S1, "prepare_and_distribute");
    const int n = config_.triplet_count;
    record(0, "PREPARE", "triplets=" + std::to_string(n) + " parties=" + std::to_string(config_.party_count) + " state=GHZ");
    for (int g = 1; g <= plan_.groups; g++) {
        GroupState group;
        group.index = g;
        group.triplets = {2 * g - 1, 2 * g};
        group.reg = prepare_group_register(config_.party_count, 2 * g - 1);
        for (const auto &q : group.reg.qubits()) {
            prepared_.insert(q);
        }
        groups_.push_back(std::move(group));
    }
    record(0, "STORE", "sequence=H count=" + std::to_string(n));
    record(0, "SEND", "to=BOB sequence=T count=" + std::to_string(n));
    for (int p = 2; p < config_.party_count; p++) {
        record(0, "SEND", "to=" + party_name(p) + " sequence=C" + std::to_string(p - 1) + " count=" + std::to_string(n));
    }

    // The travel sequence passes Eve in order t1, t2, ...
    for (int t = 1; t <= n; t++) {
        GroupState &group = group_of_triplet(t);
        size_t before = eve_log_.size();
        group.reg = tap(config_.attack, QubitId::travel(t), group.reg, eve_rng_, eve_log_);
        for (size_t i = before; i < eve_log_.size(); i++) {
            record_eve(eve_log_[i]);
        }
    }
    for (const auto &group : groups_) {
        for (const auto &q : group.reg.qubits()) {
            prepared_.insert(q);
        }
    }

    advance(Phase::S2);
    for (int p = 1; p < config_.party_count; p++) {
        broadcast(p, Receipt{p, n});
    }
}

const GroupSelection &Session::select_groups() {
    require_phase(Phase::S2, "select_groups");
    advance(Phase::S3);
    std::vector<int> order(static_cast<size_t>(plan_.groups));
    for (int g = 0; g < plan_.groups; g++) {
        order[static_cast<size_t>(g)] = g + 1;
    }
    RandomStream &rng = party_rng_[static_cast<size_t>(config_.sender)];
    for (size_t i = order.size(); i > 1; i--) {
        size_t j = static_cast<size_t>(rng.below(i));
        std::swap(order[i - 1], order[j]);
    }
    selection_ = {};
    selection_.checking.assign(order.begin(), order.begin() + plan_.checking);
    selection_.encoding.assign(order.begin() + plan_.checking, order.end());
    std::sort(selection_.checking.begin(), selection_.checking.end());
    std::sort(selection_.encoding.begin(), selection_.encoding.end());
    for (int g : selection_.checking) {
        groups_[static_cast<size_t>(g - 1)].kind = GroupKind::Checking;
    }
    for (int g : selection_.encoding) {
        groups_[static_cast<size_t>(g - 1)].kind = GroupKind::Encoding;
    }
    broadcast(config_.sender, selection_);
    return selection_;
}

void Session::eve_readout() {
    for (auto &group : groups_) {
        for (int t : group.triplets) {
            QubitId a = QubitId::ancilla(t);
            if (!group.reg.contains(a)) {
                continue;
            }
            consume(a);
            QubitMeasurement m = measure_qubit(group.reg, a, MeasurementBasis::Computational, eve_rng_);
            group.reg = std::move(m.post_state);
            eve_log_.push_back({EveRecord::Kind::AncillaReadout, t, MeasurementBasis::Computational, m.outcome});
            record_eve(eve_log_.back());
        }
    }
}

CheckVerdict Session::run_check() {
    require_phase(Phase::S3, "run_check");
    advance(Phase::S4);
    const int sender = config_.sender;
    RandomStream &sender_rng = party_rng_[static_cast<size_t>(sender)];

    for (int g : selection_.checking) {
        GroupState &group = groups_[static_cast<size_t>(g - 1)];
        for (int t : group.triplets) {
            MeasurementBasis basis = sender_rng.coin() ? MeasurementBasis::Diagonal : MeasurementBasis::Computational;
            int announced = measure_photon(group, sender, t, basis);
            broadcast(sender, CheckAnnounce{t, basis, announced});
            std::vector<int> outcomes{announced};
            for (int p = 0; p < config_.party_count; p++) {
                if (p == sender) {
                    continue;
                }
                int outcome = measure_photon(group, p, t, basis);
                broadcast(p, CheckReply{p, t, outcome});
                outcomes.push_back(outcome);
            }
            bool coincide = coincidence_holds(basis, outcomes);
            checked_triplets_++;
            if (!coincide) {
                violations_++;
                failed_triplets_.push_back(t);
            }
        }
    }

    eve_readout();

    CheckVerdict verdict{failed_triplets_.empty(), failed_triplets_};
    broadcast(sender, verdict);
    if (!verdict.pass) {
        advance(Phase::Aborted);
        broadcast(sender, Abort{"check_failed(triplet=" + std::to_string(failed_triplets_.front()) + ")"});
    }
    return verdict;
}

std::vector<ControllerOutcomes> Session::controller_round() {
    require_phase(Phase::S4, "controller_round");
    advance(Phase::S5);
    std::vector<ControllerOutcomes> outcomes;
    for (int c : controllers_) {
        ControllerOutcomes report{c, {}};
        for (int g : selection_.encoding) {
            GroupState &group = groups_[static_cast<size_t>(g - 1)];
            for (int t : group.triplets) {
                QubitId q = party_qubit(c, t);
                group.reg = apply_gate(group.reg, Gate::Hadamard, q);
                int bit = measure_photon(group, c, t, MeasurementBasis::Computational);
                record(c, "HADAMARD_MEASURE", "triplet=" + std::to_string(t) + " outcome=" + std::to_string(bit));
                report.outcomes.emplace_back(t, bit);
            }
        }
        outcomes.push_back(std::move(report));
    }

    advance(Phase::S6);
    for (const auto &report : outcomes) {
        broadcast(report.party, report);
        for (const auto &[t, bit] : report.outcomes) {
            GroupState &group = group_of_triplet(t);
            auto parity = group.controller_parity.value_or(std::array<uint8_t, 2>{0, 0});
            parity[t == group.triplets[0] ? 0 : 1] ^= static_cast<uint8_t>(bit);
            group.controller_parity = parity;
        }
    }
    return outcomes;
}

std::vector<BellAnnounce> Session::encode_and_announce() {
    require_phase(Phase::S6, "encode_and_announce");
    advance(Phase::S7);
    const int sender = config_.sender;
    const size_t chunks = config_.message_bits.size() / 2;
    announcements_.clear();
    for (size_t i = 0; i < chunks; i++) {
        GroupState &group = groups_[static_cast<size_t>(selection_.encoding[i] - 1)];
        uint8_t value = static_cast<uint8_t>((config_.message_bits[2 * i] << 1) | config_.message_bits[2 * i + 1]);
        EncodingOp op = encoding_from_bits(value);
        group.chunk = value;
        record(sender, "ENCODE",
               "group=" + std::to_string(group.index) + " op=" + std::string(to_string(op)) + " bits=" +
                   format_bits({config_.message_bits[2 * i], config_.message_bits[2 * i + 1]}));
        consume(party_qubit(sender, group.triplets[0]));
        consume(party_qubit(sender, group.triplets[1]));
        SenderResult result =
            sender_encode(group.reg, sender, group.triplets, op, party_rng_[static_cast<size_t>(sender)]);
        group.reg = std::move(result.remainder);
        group.sender_bell = result.sender_bell;
        record(sender, "BELL_MEASURE",
               "group=" + std::to_string(group.index) + " outcome=" + std::string(to_string(result.sender_bell)));
        announcements_.push_back({group.index, result.sender_bell});
    }

    advance(Phase::S8);
    for (const auto &a : announcements_) {
        broadcast(sender, a);
    }
    return announcements_;
}

BitString Session::receiver_decode() {
    require_phase(Phase::S8, "receiver_decode");
    advance(Phase::S9);
    const int receiver = config_.receiver;

    // Everything the receiver uses comes off the public channel.
    std::map<int, std::array<uint8_t, 2>> parity_by_group;
    for (const auto &[from, report] : channel_.collect<ControllerOutcomes>()) {
        for (const auto &[t, bit] : report.outcomes) {
            int g = (t + 1) / 2;
            auto &parity = parity_by_group[g];
            parity[t % 2 == 1 ? 0 : 1] ^= static_cast<uint8_t>(bit);
        }
    }

    decoded_.clear();
    const DecodeTable &table = shared_decode_table();
    for (const auto &[from, announce] : channel_.collect<BellAnnounce>()) {
        GroupState &group = groups_[static_cast<size_t>(announce.group - 1)];
        consume(party_qubit(receiver, group.triplets[0]));
        consume(party_qubit(receiver, group.triplets[1]));
        ReceiverResult result = receiver_decode_group(group.reg, receiver, group.triplets, parity_by_group[group.index],
                                                      announce.sender_bell, table,
                                                      party_rng_[static_cast<size_t>(receiver)]);
        group.reg = std::move(result.remainder);
        group.receiver_bell = result.receiver_bell;
        group.decoded = result.bits;
        decoded_.push_back(static_cast<uint8_t>(result.bits >> 1));
        decoded_.push_back(static_cast<uint8_t>(result.bits & 1));
        record(receiver, "BELL_MEASURE",
               "group=" + std::to_string(group.index) + " outcome=" + std::string(to_string(result.receiver_bell)));
        record(receiver, "DECODE",
               "group=" + std::to_string(group.index) + " parity=" + std::to_string(result.key.parity1) +
                   std::to_string(result.key.parity2) + " sender=" + std::string(to_string(result.key.sender_bell)) +
                   " receiver=" + std::string(to_string(result.key.receiver_bell)) + " bits=" +
                   format_bits({static_cast<uint8_t>(result.bits >> 1), static_cast<uint8_t>(result.bits & 1)}));
    }

    advance(Phase::S10);
    std::string controllers;
    for (int c : controllers_) {
        controllers += (controllers.empty() ? "" : ",") + party_name(c);
    }
    record(receiver, "ROLES",
           "sender=" + party_name(config_.sender) + " receiver=" + party_name(receiver) + " controllers=" + controllers);

    advance(Phase::S11);
    record(receiver, "COMPLETE", "decoded=" + (decoded_.empty() ? std::string("-") : format_bits(decoded_)));
    return decoded_;
}

void Session::verify_conservation() const {
    std::set<QubitId> held;
    for (const auto &group : groups_) {
        for (const auto &q : group.reg.qubits()) {
            if (!held.insert(q).second) {
                throw InternalError("qubit " + q.label() + " held in two registers");
            }
        }
    }
    for (const auto &q : prepared_) {
        bool m = measured_.contains(q);
        bool h = held.contains(q);
        if (m == h) {
            throw InternalError("qubit " + q.label() + (m ? " is both measured and held" : " vanished"));
        }
    }
}

SessionOutcome Session::run() {
    prepare_and_distribute();
    select_groups();
    CheckVerdict verdict = run_check();
    SessionOutcome outcome;
    if (verdict.pass) {
        controller_round();
        encode_and_announce();
        outcome.decoded = receiver_decode();
        outcome.completed = true;
        outcome.match = outcome.decoded == config_.message_bits;
    }
    verify_conservation();
    outcome.checked_triplets = checked_triplets_;
    outcome.violations = violations_;
    outcome.failed_triplets = failed_triplets_;
    return outcome;
}

}  // namespace csdc
