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

#include "csdc/detection.h"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "csdc/random.h"
#include "csdc/session.h"

namespace csdc {

uint64_t trial_seed(uint64_t master_seed, int trial) {
    return derive_seed(master_seed, "trial:" + std::to_string(trial));
}

BitString random_message(const ProtocolConfig &config, uint64_t seed) {
    GroupPlan plan = plan_groups(config);
    RandomStream rng(seed, "MESSAGE");
    BitString bits;
    for (int i = 0; i < 2 * plan.encoding; i++) {
        bits.push_back(static_cast<uint8_t>(rng.coin()));
    }
    return bits;
}

namespace {

using EveView = std::tuple<int, int, int>;

double mutual_information(const std::map<std::pair<EveView, int>, int> &joint, int total) {
    std::map<EveView, int> view_counts;
    std::map<int, int> chunk_counts;
    for (const auto &[key, n] : joint) {
        view_counts[key.first] += n;
        chunk_counts[key.second] += n;
    }
    double mi = 0;
    for (const auto &[key, n] : joint) {
        double pxy = static_cast<double>(n) / total;
        double px = static_cast<double>(view_counts[key.first]) / total;
        double py = static_cast<double>(chunk_counts[key.second]) / total;
        mi += pxy * std::log2(pxy / (px * py));
    }
    return mi;
}

}  // namespace

DetectionStats estimate_detection(const ProtocolConfig &config, int trials) {
    if (trials < 1) {
        throw std::invalid_argument("estimate_detection needs at least one trial");
    }
    GroupPlan plan = plan_groups(config);
    const bool probing = std::holds_alternative<EntangleMeasure>(config.attack);

    DetectionStats stats;
    stats.trials = trials;
    stats.checked_triplets_per_session = 2 * plan.checking;
    long decoded_bits = 0;
    long correct_bits = 0;
    std::map<std::pair<EveView, int>, int> eve_joint;
    int eve_samples = 0;

    for (int i = 0; i < trials; i++) {
        ProtocolConfig trial = config;
        trial.seed = trial_seed(config.seed, i);
        if (trial.message_bits.empty()) {
            trial.message_bits = random_message(trial, trial.seed);
        }
        Session session(trial);
        SessionOutcome outcome = session.run();
        stats.checked_triplets += outcome.checked_triplets;
        stats.violations += outcome.violations;
        if (!outcome.completed) {
            stats.aborted_sessions++;
            continue;
        }
        for (size_t b = 0; b < trial.message_bits.size(); b++) {
            decoded_bits++;
            correct_bits += outcome.decoded[b] == trial.message_bits[b];
        }
        if (probing) {
            std::map<int, int> readout;
            for (const auto &e : session.eve_log()) {
                if (e.kind == EveRecord::Kind::AncillaReadout) {
                    readout[e.triplet] = e.outcome;
                }
            }
            for (const auto &group : session.groups()) {
                if (!group.chunk || !group.sender_bell) {
                    continue;
                }
                EveView view{readout[group.triplets[0]], readout[group.triplets[1]], static_cast<int>(*group.sender_bell)};
                eve_joint[{view, *group.chunk}]++;
                eve_samples++;
            }
        }
    }

    stats.detection_rate =
        stats.checked_triplets > 0 ? static_cast<double>(stats.violations) / stats.checked_triplets : 0.0;
    stats.abort_rate = static_cast<double>(stats.aborted_sessions) / trials;
    if (decoded_bits > 0) {
        stats.decode_accuracy = static_cast<double>(correct_bits) / static_cast<double>(decoded_bits);
    }
    if (probing && eve_samples > 0) {
        stats.eve_information = mutual_information(eve_joint, eve_samples);
    }
    return stats;
}

}  // namespace csdc
