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

#ifndef CSDC_CONFIG_H
#define CSDC_CONFIG_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csdc/attack.h"
#include "csdc/qubit.h"

namespace csdc {

/// One entry per bit, each 0 or 1.
using BitString = std::vector<uint8_t>;

/// Throws ConfigError on characters other than '0' and '1'.
BitString parse_bits(std::string_view text);
std::string format_bits(const BitString &bits);

/// Parties are numbered 0 = ALICE (preparer, keeps the home sequence), 1 = BOB (receives the
/// travel sequence), k >= 2 = CTRL(k-1) (receives control sequence k-1).
std::string party_name(int party);
std::optional<int> parse_party_name(std::string_view name);
/// The photon of `triplet` held by `party`.
QubitId party_qubit(int party, int triplet);

/// Largest supported party count; a group register then holds 2 * 8 + 2 qubits.
inline constexpr int kMaxParties = 8;

struct ProtocolConfig {
    int triplet_count = 16;
    int party_count = 3;
    double check_fraction = 0.5;
    BitString message_bits;
    AttackModel attack = NoAttack{};
    uint64_t seed = 0;
    int sender = 1;
    int receiver = 0;
};

struct GroupPlan {
    int groups = 0;
    int checking = 0;
    int encoding = 0;
};

/// Validates the configuration and returns the group split. Throws ConfigError when the triplet
/// count is odd or non-positive, the party count is outside 3..kMaxParties, the check fraction is
/// outside (0, 1), sender or receiver is invalid, the message has odd length, or the encoding
/// groups cannot carry the message.
GroupPlan plan_groups(const ProtocolConfig &config);

}  // namespace csdc

#endif
