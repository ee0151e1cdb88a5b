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

#include "../common/printed_table.h"
#include "csdc/errors.h"
#include "csdc/session.h"
#include "gtest/gtest.h"

using namespace csdc;

namespace {

const double r2 = 1 / std::sqrt(2.0);

// Op whose gate equals gate(op) * Z up to a global phase.
EncodingOp compose_with_z(EncodingOp op) {
    Matrix2 g = gate_matrix(encoding_gate(op));
    Matrix2 z = gate_matrix(Gate::PauliZ);
    Matrix2 product{g[0] * z[0] + g[1] * z[2], g[0] * z[1] + g[1] * z[3], g[2] * z[0] + g[3] * z[2],
                    g[2] * z[1] + g[3] * z[3]};
    for (auto candidate : kAllEncodingOps) {
        Matrix2 c = gate_matrix(encoding_gate(candidate));
        Amplitude overlap = 0;
        for (size_t i = 0; i < 4; i++) {
            overlap += std::conj(c[i]) * product[i];
        }
        if (std::abs(std::abs(overlap) - 2) < kTolerance) {
            return candidate;
        }
    }
    ADD_FAILURE() << "no encoding op matches";
    return op;
}

StateVector residual_group(uint8_t p1, uint8_t p2) {
    return tensor(make_state({QubitId::home(1), QubitId::travel(1)}, {r2, 0, 0, p1 ? -r2 : r2}),
                  make_state({QubitId::home(2), QubitId::travel(2)}, {r2, 0, 0, p2 ? -r2 : r2}));
}

}  // namespace

TEST(encoding, bit_assignment) {
    EXPECT_EQ(encoding_bits(EncodingOp::U1), 0b00);
    EXPECT_EQ(encoding_bits(EncodingOp::U2), 0b01);
    EXPECT_EQ(encoding_bits(EncodingOp::U3), 0b10);
    EXPECT_EQ(encoding_bits(EncodingOp::U4), 0b11);
    EXPECT_EQ(encoding_gate(EncodingOp::U1), Gate::Identity);
    EXPECT_EQ(encoding_gate(EncodingOp::U2), Gate::PauliX);
    EXPECT_EQ(encoding_gate(EncodingOp::U3), Gate::MinusIPauliY);
    EXPECT_EQ(encoding_gate(EncodingOp::U4), Gate::PauliZ);
    for (auto op : kAllEncodingOps) {
        EXPECT_EQ(encoding_from_bits(encoding_bits(op)), op);
    }
    EXPECT_THROW(encoding_from_bits(4), std::invalid_argument);
}

TEST(decode_key, index_round_trip) {
    for (size_t i = 0; i < DecodeTable::kKeyCount; i++) {
        EXPECT_EQ(DecodeKey::from_index(i).index(), i);
    }
    EXPECT_THROW(DecodeKey::from_index(64), std::invalid_argument);
}

TEST(decode_table, total_and_bijective) {
    DecodeTable table = build_decode_table();
    EXPECT_EQ(table.size(), 64u);
    EXPECT_TRUE(table.is_total_and_bijective());
}

TEST(decode_table, printed_examples) {
    const DecodeTable &table = shared_decode_table();
    EXPECT_EQ(table.at({0, 0, BellOutcome::PhiPlus, BellOutcome::PhiPlus}), EncodingOp::U1);
    EXPECT_EQ(table.at({0, 0, BellOutcome::PhiPlus, BellOutcome::PsiMinus}), EncodingOp::U3);
    EXPECT_EQ(decode(table, {0, 0, BellOutcome::PhiPlus, BellOutcome::PhiPlus}), 0b00);
    EXPECT_EQ(decode(table, {0, 0, BellOutcome::PhiPlus, BellOutcome::PsiPlus}), 0b01);
}

TEST(decode_table, reproduces_every_printed_row) {
    const DecodeTable &table = shared_decode_table();
    for (const auto &row : csdc::testing_util::kPrintedTable) {
        EXPECT_EQ(table.at({0, 0, row.sender, row.receiver}), row.op)
            << to_string(row.sender) << " " << to_string(row.receiver);
    }
}

TEST(decode_table, controller_sign_acts_as_a_z_correction) {
    const DecodeTable &table = shared_decode_table();
    for (auto s : kAllBellOutcomes) {
        for (auto r : kAllBellOutcomes) {
            EncodingOp flipped = table.at({1, 0, s, r});
            EXPECT_EQ(table.at({0, 0, s, r}), compose_with_z(flipped));
            // A Z on the second pair commutes through the Bell measurements the same way.
            EncodingOp both = table.at({1, 1, s, r});
            EXPECT_EQ(table.at({0, 1, s, r}), compose_with_z(both));
        }
    }
}

TEST(decode_table, insert_rejects_collisions) {
    DecodeTable table;
    DecodeKey key{0, 0, BellOutcome::PsiPlus, BellOutcome::PsiPlus};
    table.insert(key, EncodingOp::U1);
    table.insert(key, EncodingOp::U1);
    EXPECT_THROW(table.insert(key, EncodingOp::U2), InternalError);
    EXPECT_THROW(table.at({1, 1, BellOutcome::PsiPlus, BellOutcome::PsiPlus}), InternalError);
    EXPECT_FALSE(table.is_total_and_bijective());
}

TEST(decode_table, simulated_round_trip) {
    const DecodeTable &table = shared_decode_table();
    RandomStream sender_rng(1, "BOB");
    RandomStream receiver_rng(1, "ALICE");
    std::set<std::pair<int, int>> seen;
    for (uint8_t p1 = 0; p1 < 2; p1++) {
        for (uint8_t p2 = 0; p2 < 2; p2++) {
            for (auto op : kAllEncodingOps) {
                for (int trial = 0; trial < 64; trial++) {
                    SenderResult s = sender_encode(residual_group(p1, p2), 1, {1, 2}, op, sender_rng);
                    ReceiverResult r = receiver_decode_group(s.remainder, 0, {1, 2}, {p1, p2}, s.sender_bell, table,
                                                             receiver_rng);
                    EXPECT_EQ(r.bits, encoding_bits(op));
                    seen.insert({static_cast<int>(s.sender_bell), static_cast<int>(r.receiver_bell)});
                }
            }
        }
    }
    EXPECT_EQ(seen.size(), 16u);
}
