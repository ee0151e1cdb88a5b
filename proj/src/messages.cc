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

#include "csdc/messages.h"

#include <sstream>

#include "csdc/config.h"

namespace csdc {

namespace {

std::string join(const std::vector<int> &values) {
    if (values.empty()) {
        return "-";
    }
    std::string out;
    for (size_t i = 0; i < values.size(); i++) {
        if (i) {
            out += ',';
        }
        out += std::to_string(values[i]);
    }
    return out;
}

struct ActionVisitor {
    std::string operator()(const Receipt &) const {
        return "RECEIPT";
    }
    std::string operator()(const GroupSelection &) const {
        return "GROUP_SELECTION";
    }
    std::string operator()(const CheckAnnounce &) const {
        return "CHECK_ANNOUNCE";
    }
    std::string operator()(const CheckReply &) const {
        return "CHECK_REPLY";
    }
    std::string operator()(const CheckVerdict &) const {
        return "CHECK_VERDICT";
    }
    std::string operator()(const ControllerOutcomes &) const {
        return "CONTROLLER_OUTCOMES";
    }
    std::string operator()(const BellAnnounce &) const {
        return "BELL_ANNOUNCE";
    }
    std::string operator()(const Abort &) const {
        return "ABORT";
    }
};

struct DetailVisitor {
    std::string operator()(const Receipt &m) const {
        return "count=" + std::to_string(m.count);
    }
    std::string operator()(const GroupSelection &m) const {
        return "encoding=" + join(m.encoding) + " checking=" + join(m.checking);
    }
    std::string operator()(const CheckAnnounce &m) const {
        return "triplet=" + std::to_string(m.triplet) + " basis=" + std::string(to_string(m.basis)) +
               " outcome=" + std::to_string(m.outcome);
    }
    std::string operator()(const CheckReply &m) const {
        return "triplet=" + std::to_string(m.triplet) + " outcome=" + std::to_string(m.outcome);
    }
    std::string operator()(const CheckVerdict &m) const {
        return std::string(m.pass ? "result=pass" : "result=abort") + " failed=" + join(m.failed_triplets);
    }
    std::string operator()(const ControllerOutcomes &m) const {
        std::string out = "outcomes=";
        if (m.outcomes.empty()) {
            out += '-';
        }
        for (size_t i = 0; i < m.outcomes.size(); i++) {
            if (i) {
                out += ',';
            }
            out += std::to_string(m.outcomes[i].first) + ":" + std::to_string(m.outcomes[i].second);
        }
        return out;
    }
    std::string operator()(const BellAnnounce &m) const {
        return "group=" + std::to_string(m.group) + " outcome=" + std::string(to_string(m.sender_bell));
    }
    std::string operator()(const Abort &m) const {
        return "reason=" + m.reason;
    }
};

}  // namespace

std::string message_action(const MessageBody &body) {
    return std::visit(ActionVisitor{}, body);
}

std::string message_detail(const MessageBody &body) {
    return std::visit(DetailVisitor{}, body);
}

const ClassicalMessage &PublicChannel::publish(int from, MessageBody body) {
    messages_.push_back({messages_.size() + 1, from, std::move(body)});
    return messages_.back();
}

}  // namespace csdc
