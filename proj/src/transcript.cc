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

#include <array>
#include <charconv>
#include <stdexcept>

#include "csdc/config.h"

namespace csdc {

namespace {

constexpr std::array<std::string_view, 12> kPhaseNames{
    "S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9", "S10", "S11", "ABORT"};

bool clean_field(std::string_view text) {
    return text.find('\t') == std::string_view::npos && text.find('\n') == std::string_view::npos &&
           text.find('\r') == std::string_view::npos;
}

}  // namespace

std::string_view to_string(Phase phase) {
    return kPhaseNames[static_cast<size_t>(phase)];
}

std::optional<Phase> parse_phase(std::string_view text) {
    for (size_t i = 0; i < kPhaseNames.size(); i++) {
        if (kPhaseNames[i] == text) {
            return static_cast<Phase>(i);
        }
    }
    return std::nullopt;
}

bool is_valid_actor(std::string_view actor) {
    return actor == "EVE" || parse_party_name(actor).has_value();
}

std::string format_record(const TranscriptRecord &r) {
    std::string out = std::to_string(r.seq);
    out += '\t';
    out += to_string(r.phase);
    out += '\t';
    out += r.actor;
    out += '\t';
    out += r.action;
    out += '\t';
    out += r.detail;
    return out;
}

std::string format_transcript(const std::vector<TranscriptRecord> &records) {
    std::string out;
    for (const auto &r : records) {
        out += format_record(r);
        out += '\n';
    }
    return out;
}

std::optional<TranscriptRecord> parse_record(std::string_view line) {
    std::array<std::string_view, 5> fields;
    size_t start = 0;
    for (size_t i = 0; i < 4; i++) {
        size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            return std::nullopt;
        }
        fields[i] = line.substr(start, tab - start);
        start = tab + 1;
    }
    fields[4] = line.substr(start);
    if (!clean_field(fields[4])) {
        return std::nullopt;
    }

    TranscriptRecord r;
    auto [ptr, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), r.seq);
    if (ec != std::errc{} || ptr != fields[0].data() + fields[0].size() || fields[0].empty()) {
        return std::nullopt;
    }
    auto phase = parse_phase(fields[1]);
    if (!phase || !is_valid_actor(fields[2]) || fields[3].empty()) {
        return std::nullopt;
    }
    r.phase = *phase;
    r.actor = fields[2];
    r.action = fields[3];
    r.detail = fields[4];
    return r;
}

std::vector<TranscriptRecord> parse_transcript(std::string_view text) {
    std::vector<TranscriptRecord> out;
    size_t start = 0;
    size_t line_number = 0;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            throw std::invalid_argument("transcript does not end with a newline");
        }
        line_number++;
        auto record = parse_record(text.substr(start, end - start));
        if (!record) {
            throw std::invalid_argument("malformed transcript line " + std::to_string(line_number));
        }
        if (!out.empty() && record->seq <= out.back().seq) {
            throw std::invalid_argument("transcript seq does not increase at line " + std::to_string(line_number));
        }
        out.push_back(std::move(*record));
        start = end + 1;
    }
    return out;
}

void Transcript::append(Phase phase, std::string actor, std::string action, std::string detail) {
    if (!clean_field(actor) || !clean_field(action) || !clean_field(detail)) {
        throw std::invalid_argument("transcript fields may not contain tabs or newlines");
    }
    records_.push_back({records_.size() + 1, phase, std::move(actor), std::move(action), std::move(detail)});
}

}  // namespace csdc
