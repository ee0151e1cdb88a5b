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

#ifndef CSDC_DECODE_TABLE_H
#define CSDC_DECODE_TABLE_H

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "csdc/gate.h"
#include "csdc/measurement.h"

namespace csdc {

/// The four two-bit encodings: U1 = I (00), U2 = X (01), U3 = -iY (10), U4 = Z (11).
enum class EncodingOp : uint8_t { U1, U2, U3, U4 };

inline constexpr std::array<EncodingOp, 4> kAllEncodingOps{EncodingOp::U1, EncodingOp::U2, EncodingOp::U3, EncodingOp::U4};

/// Two-bit value in 0..3 with the first transmitted bit as the high bit.
uint8_t encoding_bits(EncodingOp op);
EncodingOp encoding_from_bits(uint8_t bits);
Gate encoding_gate(EncodingOp op);
std::string_view to_string(EncodingOp op);

/// What the receiver knows after the sender's announcement: the controller parity of each
/// triplet in the group, the sender's announced Bell outcome and her own Bell outcome.
struct DecodeKey {
    uint8_t parity1 = 0;
    uint8_t parity2 = 0;
    BellOutcome sender_bell = BellOutcome::PsiPlus;
    BellOutcome receiver_bell = BellOutcome::PsiPlus;

    size_t index() const;
    static DecodeKey from_index(size_t index);
    bool operator==(const DecodeKey &) const = default;
};

class DecodeTable {
   public:
    static constexpr size_t kKeyCount = 64;

    /// Records key -> op. Throws InternalError if the key already maps to a different op.
    void insert(const DecodeKey &key, EncodingOp op);
    std::optional<EncodingOp> find(const DecodeKey &key) const;
    /// Throws InternalError if the key is missing.
    EncodingOp at(const DecodeKey &key) const;
    size_t size() const;
    /// Every key present, and for each (parity1, parity2, sender_bell) the four receiver outcomes
    /// map to four distinct ops.
    bool is_total_and_bijective() const;

   private:
    std::array<std::optional<EncodingOp>, kKeyCount> entries_{};
};

/// Builds the table by brute-force simulation: for every parity pair and every op, prepare
/// (|00> + (-1)^p1 |11>)/sqrt2 on (h1, t1) and (|00> + (-1)^p2 |11>)/sqrt2 on (h2, t2), encode on
/// t1, and record every (sender Bell on (t1, t2), receiver Bell on (h1, h2)) outcome with nonzero
/// probability.
DecodeTable build_decode_table();

/// Built once on first use.
const DecodeTable &shared_decode_table();

uint8_t decode(const DecodeTable &table, const DecodeKey &key);

}  // namespace csdc

#endif
