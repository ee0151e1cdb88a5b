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

#include <cmath>

#include "csdc/basis_algebra.h"
#include "csdc/errors.h"
#include "gtest/gtest.h"

using namespace csdc;

namespace {

const double r2 = 1 / std::sqrt(2.0);

ProtocolConfig config_with(int triplets, std::string message, uint64_t seed, int parties = 3) {
    ProtocolConfig c;
    c.triplet_count = triplets;
    c.party_count = parties;
    c.message_bits = parse_bits(message);
    c.seed = seed;
    return c;
}

StateVector pair_state(const QubitId &a, const QubitId &b, uint8_t parity) {
    return make_state({a, b}, {r2, 0, 0, parity ? -r2 : r2});
}

// Residual on (home, travel) of triplet 1 once every controller photon has been collapsed.
StateVector collapse_controllers(int parties, const std::vector<int> &outcomes) {
    StateVector reg = ghz_register_state(triplet_qubits(parties, 1));
    for (size_t i = 0; i < outcomes.size(); i++) {
        Projection p = controller_collapse(reg, party_qubit(static_cast<int>(i) + 2, 1), outcomes[i]);
        EXPECT_TRUE(p.post_state.has_value());
        EXPECT_NEAR(p.probability, 0.5, 1e-12);
        reg = *p.post_state;
    }
    return reg;
}

}  // namespace

TEST(config, rejects_bad_plans) {
    EXPECT_THROW(plan_groups(config_with(7, "", 0)), ConfigError);
    EXPECT_THROW(plan_groups(config_with(0, "", 0)), ConfigError);
    EXPECT_THROW(plan_groups(config_with(8, "0", 0)), ConfigError);
    EXPECT_THROW(plan_groups(config_with(8, "000000", 0)), ConfigError);
    EXPECT_THROW(plan_groups(config_with(8, "", 0, 2)), ConfigError);
    EXPECT_THROW(plan_groups(config_with(8, "", 0, kMaxParties + 1)), ConfigError);
    ProtocolConfig c = config_with(8, "", 0);
    c.check_fraction = 0;
    EXPECT_THROW(plan_groups(c), ConfigError);
    c.check_fraction = 1;
    EXPECT_THROW(plan_groups(c), ConfigError);
    c = config_with(8, "", 0);
    c.sender = c.receiver;
    EXPECT_THROW(plan_groups(c), ConfigError);
    EXPECT_THROW(parse_bits("01a"), ConfigError);
}

TEST(config, group_split) {
    GroupPlan plan = plan_groups(config_with(8, "0001", 0));
    EXPECT_EQ(plan.groups, 4);
    EXPECT_EQ(plan.checking, 2);
    EXPECT_EQ(plan.encoding, 2);
    plan = plan_groups(config_with(16, "", 0));
    EXPECT_EQ(plan.checking, 4);
    EXPECT_EQ(plan.encoding, 4);
}

TEST(config, party_names) {
    EXPECT_EQ(party_name(0), "ALICE");
    EXPECT_EQ(party_name(1), "BOB");
    EXPECT_EQ(party_name(3), "CTRL2");
    for (int p = 0; p < kMaxParties; p++) {
        EXPECT_EQ(parse_party_name(party_name(p)), p);
    }
    EXPECT_FALSE(parse_party_name("CTRL0").has_value());
    EXPECT_FALSE(parse_party_name("EVE").has_value());
}

TEST(prepare, two_triplets_are_a_product_of_ghz_states) {
    StateVector reg = prepare_group_register(3, 1);
    std::array<QubitId, 3> first{QubitId::home(1), QubitId::travel(1), QubitId::control(1, 1)};
    std::array<QubitId, 3> second{QubitId::home(2), QubitId::travel(2), QubitId::control(2, 1)};
    StateVector expected = tensor(ghz_state_vector(1, first), ghz_state_vector(1, second));
    EXPECT_LT(max_residual(reg, expected), 1e-12);
}

TEST(prepare, four_parties) {
    StateVector reg = ghz_register_state(triplet_qubits(4, 1));
    EXPECT_EQ(reg.qubit_count(), 4u);
    EXPECT_NEAR(std::abs(reg.amplitude(0) - r2), 0, 1e-12);
    EXPECT_NEAR(std::abs(reg.amplitude(15) - r2), 0, 1e-12);
    EXPECT_NEAR(reg.norm(), 1, 1e-12);
}

TEST(selection, split_is_seed_stable) {
    for (uint64_t seed = 0; seed < 20; seed++) {
        Session a(config_with(8, "0001", seed));
        Session b(config_with(8, "0001", seed));
        a.prepare_and_distribute();
        b.prepare_and_distribute();
        const GroupSelection &sa = a.select_groups();
        const GroupSelection &sb = b.select_groups();
        EXPECT_EQ(sa.checking.size(), 2u);
        EXPECT_EQ(sa.encoding.size(), 2u);
        EXPECT_EQ(sa.checking, sb.checking);
        EXPECT_EQ(sa.encoding, sb.encoding);
    }
}

TEST(check, coincidence_rule_examples) {
    using MB = MeasurementBasis;
    std::vector<int> plus3{0, 0, 0}, one_minus{0, 1, 1}, odd{0, 0, 1}, ones{1, 1, 1};
    EXPECT_TRUE(coincidence_holds(MB::Diagonal, plus3));
    EXPECT_TRUE(coincidence_holds(MB::Diagonal, one_minus));
    EXPECT_FALSE(coincidence_holds(MB::Diagonal, odd));
    EXPECT_TRUE(coincidence_holds(MB::Computational, ones));
    EXPECT_FALSE(coincidence_holds(MB::Computational, one_minus));
}

TEST(check, clean_channel_never_aborts) {
    int checked = 0;
    for (uint64_t seed = 0; checked < 10000; seed++) {
        ProtocolConfig c = config_with(32, "", seed, 3 + static_cast<int>(seed % 3));
        Session s(c);
        SessionOutcome out = s.run();
        ASSERT_TRUE(out.completed) << "seed " << seed;
        EXPECT_EQ(out.violations, 0);
        checked += out.checked_triplets;
    }
}

TEST(controllers, residual_pairs_follow_the_parity) {
    for (int o = 0; o < 2; o++) {
        StateVector residual = collapse_controllers(3, {o});
        EXPECT_LT(max_residual(residual, pair_state(QubitId::home(1), QubitId::travel(1), static_cast<uint8_t>(o))),
                  1e-12);
    }
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            StateVector residual = collapse_controllers(4, {a, b});
            auto parity = static_cast<uint8_t>(a ^ b);
            EXPECT_LT(max_residual(residual, pair_state(QubitId::home(1), QubitId::travel(1), parity)), 1e-12);
        }
    }
}

TEST(controllers, flipping_two_bits_keeps_the_decode) {
    StateVector same = collapse_controllers(4, {0, 0});
    StateVector flipped = collapse_controllers(4, {1, 1});
    EXPECT_LT(max_residual_up_to_phase(same, flipped), 1e-12);
}

TEST(encode, first_chunk_moves_the_pair) {
    // Bits 01 apply X to the sender photon of (|00> + |11>)/sqrt2, giving (|01> + |10>)/sqrt2 on
    // (h1, t1) and leaving the second pair alone.
    StateVector reg = tensor(pair_state(QubitId::home(1), QubitId::travel(1), 0),
                             pair_state(QubitId::home(2), QubitId::travel(2), 0));
    StateVector encoded = apply_gate(reg, encoding_gate(encoding_from_bits(0b01)), QubitId::travel(1));
    StateVector expected = tensor(bell_state_vector(BellOutcome::PsiPlus, QubitId::home(1), QubitId::travel(1)),
                                  pair_state(QubitId::home(2), QubitId::travel(2), 0));
    EXPECT_LT(max_residual(encoded, expected), 1e-12);
}

TEST(session, decodes_every_message) {
    for (uint64_t seed = 0; seed < 50; seed++) {
        for (int parties = 3; parties <= 5; parties++) {
            ProtocolConfig c = config_with(8, "", seed, parties);
            RandomStream rng(seed, "MESSAGE");
            c.message_bits = {static_cast<uint8_t>(rng.coin()), static_cast<uint8_t>(rng.coin()),
                              static_cast<uint8_t>(rng.coin()), static_cast<uint8_t>(rng.coin())};
            Session s(c);
            SessionOutcome out = s.run();
            ASSERT_TRUE(out.completed);
            EXPECT_TRUE(out.match) << format_bits(c.message_bits) << " got " << format_bits(out.decoded);
        }
    }
}

TEST(session, swapped_roles) {
    for (uint64_t seed = 0; seed < 30; seed++) {
        ProtocolConfig c = config_with(8, "1101", seed, 4);
        c.sender = 2;
        c.receiver = 1;
        Session s(c);
        SessionOutcome out = s.run();
        ASSERT_TRUE(out.completed);
        EXPECT_TRUE(out.match);
        EXPECT_EQ(s.controllers(), (std::vector<int>{0, 3}));
        const auto &records = s.transcript();
        auto roles = std::find_if(records.begin(), records.end(), [](const auto &r) { return r.action == "ROLES"; });
        ASSERT_NE(roles, records.end());
        EXPECT_EQ(roles->detail, "sender=CTRL1 receiver=BOB controllers=ALICE,CTRL2");
    }
}

TEST(session, phases_are_monotone) {
    Session s(config_with(8, "0001", 42));
    s.run();
    const auto &h = s.phase_history();
    ASSERT_EQ(h.size(), 11u);
    for (size_t i = 0; i < h.size(); i++) {
        EXPECT_EQ(static_cast<int>(h[i]), static_cast<int>(i));
    }
    for (size_t i = 1; i < s.transcript().size(); i++) {
        EXPECT_LE(static_cast<int>(s.transcript()[i - 1].phase), static_cast<int>(s.transcript()[i].phase));
        EXPECT_EQ(s.transcript()[i].seq, s.transcript()[i - 1].seq + 1);
    }
}

TEST(session, out_of_order_calls_throw) {
    Session s(config_with(8, "0001", 1));
    EXPECT_THROW(s.select_groups(), InternalError);
    s.prepare_and_distribute();
    EXPECT_THROW(s.run_check(), InternalError);
    EXPECT_THROW(s.prepare_and_distribute(), InternalError);
}

TEST(session, attack_aborts_from_the_check) {
    int aborted = 0;
    for (uint64_t seed = 0; seed < 40; seed++) {
        ProtocolConfig c = config_with(16, "", seed);
        c.attack = InterceptResend{};
        Session s(c);
        SessionOutcome out = s.run();
        if (!out.completed) {
            aborted++;
            ASSERT_GE(s.phase_history().size(), 2u);
            EXPECT_EQ(s.phase(), Phase::Aborted);
            EXPECT_EQ(s.phase_history()[s.phase_history().size() - 2], Phase::S4);
            EXPECT_GT(out.violations, 0);
            EXPECT_THROW(s.controller_round(), InternalError);
        }
    }
    EXPECT_GT(aborted, 20);
}

TEST(session, conserves_qubits) {
    for (uint64_t seed = 0; seed < 20; seed++) {
        ProtocolConfig c = config_with(12, "01", seed, 4);
        c.attack = seed % 2 ? AttackModel{EntangleMeasure{}} : AttackModel{InterceptResend{}};
        Session s(c);
        s.run();
        EXPECT_NO_THROW(s.verify_conservation());
    }
}

TEST(session, same_seed_same_transcript) {
    ProtocolConfig c = config_with(12, "0110", 7, 5);
    c.attack = EntangleMeasure{};
    Session a(c), b(c);
    a.run();
    b.run();
    EXPECT_EQ(a.transcript(), b.transcript());
}
