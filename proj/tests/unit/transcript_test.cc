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

#include "csdc/transcript.h"

#include <fstream>
#include <sstream>

#include "csdc/cli.h"
#include "gtest/gtest.h"

using namespace csdc;

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

ProtocolConfig golden_config() {
    ProtocolConfig c;
    c.triplet_count = 8;
    c.message_bits = parse_bits("0001");
    c.seed = 42;
    return c;
}

}  // namespace

TEST(transcript, record_format) {
    TranscriptRecord r{3, Phase::S4, "BOB", "CHECK_ANNOUNCE", "triplet=3 basis=X outcome=1"};
    EXPECT_EQ(format_record(r), "3\tS4\tBOB\tCHECK_ANNOUNCE\ttriplet=3 basis=X outcome=1");
    EXPECT_EQ(format_transcript({r, r}), format_record(r) + "\n" + format_record(r) + "\n");
    TranscriptRecord abort{9, Phase::Aborted, "BOB", "ABORT", "reason=check_failed(triplet=3)"};
    EXPECT_EQ(format_record(abort).substr(0, 8), "9\tABORT\t");
}

TEST(transcript, phases_round_trip) {
    for (int p = 0; p <= static_cast<int>(Phase::Aborted); p++) {
        auto phase = static_cast<Phase>(p);
        EXPECT_EQ(parse_phase(to_string(phase)), phase);
    }
    EXPECT_FALSE(parse_phase("S12").has_value());
    EXPECT_FALSE(parse_phase("s1").has_value());
}

TEST(transcript, actors) {
    EXPECT_TRUE(is_valid_actor("ALICE"));
    EXPECT_TRUE(is_valid_actor("CTRL3"));
    EXPECT_TRUE(is_valid_actor("EVE"));
    EXPECT_FALSE(is_valid_actor("CTRL"));
    EXPECT_FALSE(is_valid_actor("CHARLIE"));
}

TEST(transcript, rejects_malformed_lines) {
    EXPECT_FALSE(parse_record("1\tS1\tALICE\tPREPARE").has_value());
    EXPECT_FALSE(parse_record("x\tS1\tALICE\tPREPARE\t-").has_value());
    EXPECT_FALSE(parse_record("1\tS0\tALICE\tPREPARE\t-").has_value());
    EXPECT_FALSE(parse_record("1\tS1\tMALLORY\tPREPARE\t-").has_value());
    EXPECT_FALSE(parse_record("1\tS1\tALICE\tPREPARE\ta\tb").has_value());
    EXPECT_TRUE(parse_record("1\tS1\tALICE\tPREPARE\ttriplets=8").has_value());
    EXPECT_THROW(parse_transcript("2\tS1\tALICE\tA\t-\n1\tS1\tALICE\tB\t-\n"), std::invalid_argument);
    EXPECT_THROW(parse_transcript("1\tS1\tALICE\n"), std::invalid_argument);
}

TEST(transcript, sessions_round_trip_losslessly) {
    for (uint64_t seed = 0; seed < 40; seed++) {
        ProtocolConfig c;
        c.triplet_count = 12;
        c.party_count = 3 + static_cast<int>(seed % 4);
        c.seed = seed;
        c.message_bits = random_message(c, seed);
        c.attack = seed % 3 == 0 ? AttackModel{NoAttack{}}
                   : seed % 3 == 1 ? AttackModel{InterceptResend{}}
                                   : AttackModel{EntangleMeasure{}};
        SessionRun run = run_session(c);
        std::string text = format_transcript(run.transcript);
        EXPECT_EQ(parse_transcript(text), run.transcript);
        EXPECT_EQ(format_transcript(parse_transcript(text)), text);
    }
}

TEST(transcript, matches_golden_file) {
    SessionRun run = run_session(golden_config());
    ASSERT_EQ(run.exit_code, exit_code::kOk);
    std::string expected = read_file(std::string(CSDC_GOLDEN_DIR) + "/run_t8_m0001_s42.tsv");
    ASSERT_FALSE(expected.empty());
    EXPECT_EQ(format_transcript(run.transcript), expected);
}
