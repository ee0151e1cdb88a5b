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

#ifndef CSDC_CLI_H
#define CSDC_CLI_H

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "csdc/detection.h"
#include "csdc/session.h"
#include "csdc/transcript.h"

namespace csdc {

enum class RunMode { Verify, Run, Sweep };

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kEavesdropperAbort = 2;
inline constexpr int kVerifyFailure = 3;
inline constexpr int kInternal = 4;
}  // namespace exit_code

class UsageError : public std::runtime_error {
   public:
    explicit UsageError(const std::string &what) : std::runtime_error(what) {
    }
};

/// Thrown by parse_config for --help; carries the help text.
class HelpRequested : public std::runtime_error {
   public:
    explicit HelpRequested(const std::string &text) : std::runtime_error(text) {
    }
};

struct CliOptions {
    RunMode mode = RunMode::Run;
    ProtocolConfig config;
    bool message_given = false;
    int trials = 1000;
    std::string transcript_path;
    std::string stats_path;
};

/// Maps command-line flags onto a run. Throws UsageError on unknown flags, bad values, or a
/// configuration plan_groups would reject. Verify mode skips configuration checks.
CliOptions parse_config(int argc, const char *const *argv);

struct VerifyLine {
    enum class Status { Pass, Fail, Finding };
    Status status;
    std::string check;
    std::string detail;
    /// Structural lines decide the exit code; findings only report how printed forms compare.
    bool structural;
};

struct VerifyReport {
    std::vector<VerifyLine> lines;
    bool structural_ok = true;

    std::string text() const;
};

/// Runs every identity check: the sixteen swap identities, the GHZ Gram matrix, the eight printed
/// GHZ expansions, and the decode table. Uses no random streams.
VerifyReport run_verify();

struct SessionRun {
    int exit_code = exit_code::kOk;
    SessionOutcome outcome;
    std::vector<TranscriptRecord> transcript;
    std::string stats_text;
};

/// Full S1-S11 execution. An eavesdropper abort gives exit code 2; a broken simulator invariant
/// gives 4.
SessionRun run_session(const ProtocolConfig &config);

struct SweepRow {
    std::string attack;
    DetectionStats stats;
};

/// One row per attack in {none, intercept-resend random/z/x, entangle-measure}, all sharing the
/// rest of `config`.
std::vector<SweepRow> run_sweep(const ProtocolConfig &config, int trials);
/// Tab-separated: attack, trials, checked_triplets, detection_rate, abort_rate, decode_accuracy,
/// with a header line.
std::string format_sweep(const std::vector<SweepRow> &rows);

/// Entire command-line program. Output goes to `out` unless a path flag redirects it.
int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace csdc

#endif
