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

#include "csdc/config.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "csdc/errors.h"

namespace csdc {

BitString parse_bits(std::string_view text) {
    BitString bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw ConfigError("message must contain only 0 and 1, got '" + std::string(text) + "'");
        }
        bits.push_back(static_cast<uint8_t>(c - '0'));
    }
    return bits;
}

std::string format_bits(const BitString &bits) {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

std::string party_name(int party) {
    if (party == 0) {
        return "ALICE";
    }
    if (party == 1) {
        return "BOB";
    }
    return "CTRL" + std::to_string(party - 1);
}

std::optional<int> parse_party_name(std::string_view name) {
    if (name == "ALICE") {
        return 0;
    }
    if (name == "BOB") {
        return 1;
    }
    if (name.starts_with("CTRL") && name.size() > 4) {
        int k = 0;
        auto digits = name.substr(4);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && k >= 1 && digits.front() != '0') {
            return k + 1;
        }
    }
    return std::nullopt;
}

QubitId party_qubit(int party, int triplet) {
    if (party == 0) {
        return QubitId::home(triplet);
    }
    if (party == 1) {
        return QubitId::travel(triplet);
    }
    return QubitId::control(triplet, party - 1);
}

GroupPlan plan_groups(const ProtocolConfig &config) {
    if (config.triplet_count <= 0 || config.triplet_count % 2 != 0) {
        throw ConfigError("triplet count must be a positive even number, got " + std::to_string(config.triplet_count));
    }
    if (config.party_count < 3 || config.party_count > kMaxParties) {
        throw ConfigError(
            "party count must be in 3.." + std::to_string(kMaxParties) + ", got " + std::to_string(config.party_count));
    }
    if (!(config.check_fraction > 0 && config.check_fraction < 1)) {
        throw ConfigError("check fraction must lie strictly between 0 and 1");
    }
    auto valid_party = [&](int p) { return p >= 0 && p < config.party_count; };
    if (!valid_party(config.sender) || !valid_party(config.receiver) || config.sender == config.receiver) {
        throw ConfigError("sender and receiver must be two distinct parties");
    }
    if (config.message_bits.size() % 2 != 0) {
        throw ConfigError("message length must be even (two bits per encoding group)");
    }
    for (auto b : config.message_bits) {
        if (b > 1) {
            throw ConfigError("message bits must be 0 or 1");
        }
    }

    GroupPlan plan;
    plan.groups = config.triplet_count / 2;
    // The small slack keeps products like 0.3 * 10 from rounding up to an extra group.
    plan.checking = static_cast<int>(std::ceil(config.check_fraction * plan.groups - 1e-9));
    plan.checking = std::max(plan.checking, 1);
    plan.encoding = plan.groups - plan.checking;
    size_t chunks = config.message_bits.size() / 2;
    if (static_cast<size_t>(plan.encoding) < chunks || plan.encoding < 1) {
        throw ConfigError(
            std::to_string(plan.groups) + " groups with " + std::to_string(plan.checking) +
            " checking groups leave " + std::to_string(plan.encoding) + " encoding groups, which cannot carry " +
            std::to_string(config.message_bits.size()) + " message bits");
    }
    return plan;
}

}  // namespace csdc
