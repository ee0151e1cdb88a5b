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

#include "csdc/decode_table.h"

#include <cmath>
#include <set>
#include <stdexcept>

#include "csdc/basis_algebra.h"
#include "csdc/errors.h"

namespace csdc {

uint8_t encoding_bits(EncodingOp op) {
    return static_cast<uint8_t>(op);
}

EncodingOp encoding_from_bits(uint8_t bits) {
    if (bits > 3) {
        throw std::invalid_argument("encoding value must be two bits");
    }
    return static_cast<EncodingOp>(bits);
}

Gate encoding_gate(EncodingOp op) {
    switch (op) {
        case EncodingOp::U1:
            return Gate::Identity;
        case EncodingOp::U2:
            return Gate::PauliX;
        case EncodingOp::U3:
            return Gate::MinusIPauliY;
        case EncodingOp::U4:
            return Gate::PauliZ;
    }
    throw std::invalid_argument("unknown encoding op");
}

std::string_view to_string(EncodingOp op) {
    static constexpr std::array<std::string_view, 4> names{"U1", "U2", "U3", "U4"};
    return names[encoding_bits(op)];
}

size_t DecodeKey::index() const {
    return (size_t{parity1} << 5) | (size_t{parity2} << 4) | (static_cast<size_t>(sender_bell) << 2) |
           static_cast<size_t>(receiver_bell);
}

DecodeKey DecodeKey::from_index(size_t index) {
    if (index >= DecodeTable::kKeyCount) {
        throw std::invalid_argument("decode key index out of range");
    }
    return {
        static_cast<uint8_t>((index >> 5) & 1),
        static_cast<uint8_t>((index >> 4) & 1),
        kAllBellOutcomes[(index >> 2) & 3],
        kAllBellOutcomes[index & 3],
    };
}

void DecodeTable::insert(const DecodeKey &key, EncodingOp op) {
    auto &slot = entries_[key.index()];
    if (slot.has_value() && *slot != op) {
        throw InternalError(
            "decode table collision: key " + std::to_string(key.index()) + " maps to both " +
            std::string(to_string(*slot)) + " and " + std::string(to_string(op)));
    }
    slot = op;
}

std::optional<EncodingOp> DecodeTable::find(const DecodeKey &key) const {
    return entries_[key.index()];
}

EncodingOp DecodeTable::at(const DecodeKey &key) const {
    auto op = find(key);
    if (!op) {
        throw InternalError("decode table has no entry for key " + std::to_string(key.index()));
    }
    return *op;
}

size_t DecodeTable::size() const {
    size_t n = 0;
    for (const auto &e : entries_) {
        n += e.has_value();
    }
    return n;
}

bool DecodeTable::is_total_and_bijective() const {
    if (size() != kKeyCount) {
        return false;
    }
    for (size_t prefix = 0; prefix < kKeyCount / 4; prefix++) {
        std::set<EncodingOp> ops;
        for (size_t r = 0; r < 4; r++) {
            ops.insert(*entries_[prefix * 4 + r]);
        }
        if (ops.size() != 4) {
            return false;
        }
    }
    return true;
}

DecodeTable build_decode_table() {
    const QubitId h1 = QubitId::home(1);
    const QubitId t1 = QubitId::travel(1);
    const QubitId h2 = QubitId::home(2);
    const QubitId t2 = QubitId::travel(2);
    const double r = 1 / std::sqrt(2.0);

    DecodeTable table;
    for (uint8_t p1 = 0; p1 < 2; p1++) {
        for (uint8_t p2 = 0; p2 < 2; p2++) {
            StateVector pair1({h1, t1}, {r, 0, 0, p1 ? -r : r});
            StateVector pair2({h2, t2}, {r, 0, 0, p2 ? -r : r});
            StateVector group = tensor(pair1, pair2);
            for (auto op : kAllEncodingOps) {
                StateVector encoded = apply_gate(group, encoding_gate(op), t1);
                for (auto sender : kAllBellOutcomes) {
                    Projection after_sender = project_bell(encoded, t1, t2, sender);
                    if (!after_sender.post_state) {
                        continue;
                    }
                    for (auto receiver : kAllBellOutcomes) {
                        Projection after_receiver = project_bell(*after_sender.post_state, h1, h2, receiver);
                        if (after_receiver.probability > kZeroProbability) {
                            table.insert({p1, p2, sender, receiver}, op);
                        }
                    }
                }
            }
        }
    }
    if (!table.is_total_and_bijective()) {
        throw InternalError("decode table is not total and bijective (" + std::to_string(table.size()) + " keys)");
    }
    return table;
}

const DecodeTable &shared_decode_table() {
    static const DecodeTable table = build_decode_table();
    return table;
}

uint8_t decode(const DecodeTable &table, const DecodeKey &key) {
    return encoding_bits(table.at(key));
}

}  // namespace csdc
