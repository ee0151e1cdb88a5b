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

#ifndef CSDC_SESSION_H
#define CSDC_SESSION_H

#include <array>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "csdc/attack.h"
#include "csdc/config.h"
#include "csdc/decode_table.h"
#include "csdc/messages.h"
#include "csdc/random.h"
#include "csdc/state_vector.h"
#include "csdc/transcript.h"

namespace csdc {

enum class GroupKind { Unassigned, Checking, Encoding };

/// One group: two consecutive triplets (2k-1, 2k) sharing a register, plus whatever Eve adjoined.
struct GroupState {
    int index = 0;
    std::array<int, 2> triplets{};
    GroupKind kind = GroupKind::Unassigned;
    StateVector reg = StateVector::basis({}, 0);
    std::optional<std::array<uint8_t, 2>> controller_parity;
    std::optional<uint8_t> chunk;
    std::optional<BellOutcome> sender_bell;
    std::optional<BellOutcome> receiver_bell;
    std::optional<uint8_t> decoded;
};

/// The checking rule for one triplet: every party's bit equal in the computational basis, even
/// overall parity in the diagonal basis.
bool coincidence_holds(MeasurementBasis basis, std::span<const int> outcomes);

/// Qubits of one triplet in register order: home, travel, then controls 1..party_count-2.
std::vector<QubitId> triplet_qubits(int party_count, int triplet);

/// Register for the group whose first triplet is `first_triplet`: both triplets in
/// (|0...0> + |1...1>)/sqrt2.
StateVector prepare_group_register(int party_count, int first_triplet);

/// A controller's Hadamard on `qubit` followed by a computational projection onto `outcome`.
Projection controller_collapse(const StateVector &reg, const QubitId &qubit, int outcome);

struct SenderResult {
    BellOutcome sender_bell;
    StateVector remainder;
};

/// Applies the encoding to the sender's photon of the first triplet, then Bell-measures the
/// sender's two photons (first triplet, second triplet).
SenderResult sender_encode(const StateVector &reg, int sender, const std::array<int, 2> &triplets, EncodingOp op,
                           RandomStream &rng);

struct ReceiverResult {
    BellOutcome receiver_bell;
    DecodeKey key;
    uint8_t bits;
    StateVector remainder;
};

/// Bell-measures the receiver's two photons and looks the result up in `table`.
ReceiverResult receiver_decode_group(const StateVector &reg, int receiver, const std::array<int, 2> &triplets,
                                     const std::array<uint8_t, 2> &parity, BellOutcome sender_bell,
                                     const DecodeTable &table, RandomStream &rng);

struct SessionOutcome {
    bool completed = false;
    BitString decoded;
    bool match = false;
    int checked_triplets = 0;
    int violations = 0;
    std::vector<int> failed_triplets;
};

/// One run of the protocol.
///
/// Parties act in a fixed round-robin order (ascending party index) and broadcast on a shared
/// PublicChannel. Each party draws from its own stream derived from the seed and its name; Eve
/// draws from "EVE". The phase methods must be called in order; run() calls all of them and
/// stops after an aborted check.
class Session {
   public:
    explicit Session(ProtocolConfig config);

    /// S1-S2: prepares the triplets, routes the travel sequence past Eve, collects receipts.
    void prepare_and_distribute();
    /// S3: the sender picks the checking groups uniformly at random.
    const GroupSelection &select_groups();
    /// S4: measures every photon of every checking group and applies the coincidence rule
    /// (equal bits in Z, even parity in X). Any violation aborts the session.
    CheckVerdict run_check();
    /// S5-S6: each controller applies a Hadamard to its photons in the encoding groups, measures
    /// them, and broadcasts the outcomes.
    std::vector<ControllerOutcomes> controller_round();
    /// S7-S8: the sender encodes one two-bit chunk per encoding group and announces the Bell outcome.
    std::vector<BellAnnounce> encode_and_announce();
    /// S9-S11: the receiver Bell-measures her photons and decodes every announced group.
    BitString receiver_decode();

    SessionOutcome run();

    const ProtocolConfig &config() const {
        return config_;
    }
    const GroupPlan &plan() const {
        return plan_;
    }
    Phase phase() const {
        return phases_.back();
    }
    const std::vector<Phase> &phase_history() const {
        return phases_;
    }
    const std::vector<TranscriptRecord> &transcript() const {
        return transcript_.records();
    }
    const PublicChannel &channel() const {
        return channel_;
    }
    const std::vector<GroupState> &groups() const {
        return groups_;
    }
    const std::vector<EveRecord> &eve_log() const {
        return eve_log_;
    }
    /// Parties other than the sender and receiver, ascending.
    const std::vector<int> &controllers() const {
        return controllers_;
    }
    int checked_triplets() const {
        return checked_triplets_;
    }
    int violations() const {
        return violations_;
    }

    /// Throws InternalError unless every prepared qubit was measured exactly once or is still held.
    void verify_conservation() const;

   private:
    void advance(Phase next);
    void require_phase(Phase expected, const char *operation) const;
    void record(int party, std::string action, std::string detail);
    void record_eve(const EveRecord &event);
    const ClassicalMessage &broadcast(int from, MessageBody body);
    void consume(const QubitId &qubit);
    GroupState &group_of_triplet(int triplet);
    int measure_photon(GroupState &group, int party, int triplet, MeasurementBasis basis);
    void eve_readout();

    ProtocolConfig config_;
    GroupPlan plan_;
    std::vector<RandomStream> party_rng_;
    RandomStream eve_rng_;
    std::vector<int> controllers_;

    std::vector<Phase> phases_;
    Transcript transcript_;
    PublicChannel channel_;
    std::vector<GroupState> groups_;
    std::vector<EveRecord> eve_log_;
    GroupSelection selection_;
    std::set<QubitId> prepared_;
    std::set<QubitId> measured_;
    int checked_triplets_ = 0;
    int violations_ = 0;
    std::vector<int> failed_triplets_;
    std::vector<BellAnnounce> announcements_;
    BitString decoded_;
};

}  // namespace csdc

#endif
