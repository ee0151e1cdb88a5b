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

#ifndef CSDC_TRANSCRIPT_H
#define CSDC_TRANSCRIPT_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace csdc {

/// Protocol steps in execution order. Aborted is reachable only from S4.
enum class Phase { S1, S2, S3, S4, S5, S6, S7, S8, S9, S10, S11, Aborted };

/// "S1".."S11" or "ABORT".
std::string_view to_string(Phase phase);
std::optional<Phase> parse_phase(std::string_view text);

/// One observable protocol event.
///
/// Serialized as `seq \t phase \t actor \t action \t detail`, LF terminated. Actors are ALICE, BOB,
/// CTRL1..CTRLk or EVE. The detail field is a space-separated list of key=value tokens and never
/// contains tabs or newlines.
struct TranscriptRecord {
    uint64_t seq = 0;
    Phase phase = Phase::S1;
    std::string actor;
    std::string action;
    std::string detail;

    bool operator==(const TranscriptRecord &) const = default;
};

std::string format_record(const TranscriptRecord &record);
std::string format_transcript(const std::vector<TranscriptRecord> &records);

/// Returns nullopt for a malformed line (wrong field count, bad phase, bad actor, bad seq).
std::optional<TranscriptRecord> parse_record(std::string_view line);
/// Throws std::invalid_argument on the first malformed line or a non-increasing seq.
std::vector<TranscriptRecord> parse_transcript(std::string_view text);

bool is_valid_actor(std::string_view actor);

/// Append-only log with automatic sequence numbering from 1.
class Transcript {
   public:
    void append(Phase phase, std::string actor, std::string action, std::string detail);
    const std::vector<TranscriptRecord> &records() const {
        return records_;
    }

   private:
    std::vector<TranscriptRecord> records_;
};

}  // namespace csdc

#endif
