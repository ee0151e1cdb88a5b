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

#ifndef CSDC_MESSAGES_H
#define CSDC_MESSAGES_H

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "csdc/measurement.h"

namespace csdc {

struct Receipt {
    int party;
    int count;
};

struct GroupSelection {
    std::vector<int> encoding;
    std::vector<int> checking;
};

struct CheckAnnounce {
    int triplet;
    MeasurementBasis basis;
    int outcome;
};

struct CheckReply {
    int party;
    int triplet;
    int outcome;
};

struct CheckVerdict {
    bool pass = true;
    std::vector<int> failed_triplets;
};

struct ControllerOutcomes {
    int party;
    /// (triplet index, bit) in triplet order.
    std::vector<std::pair<int, int>> outcomes;
};

struct BellAnnounce {
    int group;
    BellOutcome sender_bell;
};

struct Abort {
    std::string reason;
};

using MessageBody =
    std::variant<Receipt, GroupSelection, CheckAnnounce, CheckReply, CheckVerdict, ControllerOutcomes, BellAnnounce, Abort>;

struct ClassicalMessage {
    uint64_t seq;
    int from;
    MessageBody body;
};

/// Transcript action name for a message kind, e.g. "CHECK_ANNOUNCE".
std::string message_action(const MessageBody &body);
/// Canonical key=value payload, e.g. "triplet=3 basis=X outcome=1".
std::string message_detail(const MessageBody &body);

/// Authenticated broadcast channel. Everyone (Eve included) reads every message; nobody can alter
/// one. Sequence numbers start at 1 and increase by one per message.
class PublicChannel {
   public:
    const ClassicalMessage &publish(int from, MessageBody body);

    const std::vector<ClassicalMessage> &messages() const {
        return messages_;
    }

    template <typename T>
    std::vector<std::pair<int, T>> collect() const {
        std::vector<std::pair<int, T>> out;
        for (const auto &m : messages_) {
            if (const T *body = std::get_if<T>(&m.body)) {
                out.emplace_back(m.from, *body);
            }
        }
        return out;
    }

   private:
    std::vector<ClassicalMessage> messages_;
};

}  // namespace csdc

#endif
