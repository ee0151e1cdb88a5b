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

#ifndef CSDC_DETECTION_H
#define CSDC_DETECTION_H

#include <cstdint>
#include <optional>

#include "csdc/config.h"

namespace csdc {

struct DetectionStats {
    int trials = 0;
    int checked_triplets = 0;
    int violations = 0;
    /// violations / checked_triplets.
    double detection_rate = 0;
    int aborted_sessions = 0;
    double abort_rate = 0;
    int checked_triplets_per_session = 0;
    /// Fraction of correctly decoded message bits over sessions that were not aborted.
    std::optional<double> decode_accuracy;
    /// Entangle-measure only: plug-in estimate, in bits per encoding group, of the mutual
    /// information between Eve's view (her two ancilla readouts plus the announced sender Bell
    /// outcome) and the two-bit chunk. Needs at least one non-aborted session.
    std::optional<double> eve_information;
};

/// Seed of trial `trial` when `master_seed` drives a batch.
uint64_t trial_seed(uint64_t master_seed, int trial);

/// Runs `trials` sessions of `config` with seeds trial_seed(config.seed, i). If the configured
/// message is empty each trial draws a random full-capacity message from its "MESSAGE" stream.
DetectionStats estimate_detection(const ProtocolConfig &config, int trials);

/// The message a session uses when none was given: one random chunk per encoding group.
BitString random_message(const ProtocolConfig &config, uint64_t seed);

}  // namespace csdc

#endif
