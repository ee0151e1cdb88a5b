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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "csdc/attack.h"
#include "csdc/basis_algebra.h"
#include "csdc/cli.h"
#include "csdc/decode_table.h"
#include "csdc/detection.h"
#include "csdc/errors.h"
#include "csdc/session.h"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace csdc;

namespace {

AttackModel attack_from(const std::string &attack, const std::string &basis) {
    if (attack == "none") {
        return NoAttack{};
    }
    if (attack == "entangle-measure") {
        return EntangleMeasure{};
    }
    if (attack == "intercept-resend") {
        if (basis == "z") {
            return InterceptResend{InterceptBasis::AlwaysZ};
        }
        if (basis == "x") {
            return InterceptResend{InterceptBasis::AlwaysX};
        }
        if (basis == "random") {
            return InterceptResend{InterceptBasis::RandomZX};
        }
        throw py::value_error("attack_basis must be random, z or x");
    }
    throw py::value_error("attack must be none, intercept-resend or entangle-measure");
}

BellOutcome bell_from(const std::string &name) {
    auto b = parse_bell_outcome(name);
    if (!b) {
        throw py::value_error("Bell outcome must be PSI+, PSI-, PHI+ or PHI-");
    }
    return *b;
}

int party_from(const std::string &name) {
    auto p = parse_party_name(name);
    if (!p) {
        throw py::value_error("unknown party " + name);
    }
    return *p;
}

ProtocolConfig make_config(int triplets, const std::string &message, double check_fraction, int parties,
                           const std::string &attack, const std::string &attack_basis, uint64_t seed,
                           const std::string &sender, const std::string &receiver) {
    ProtocolConfig config;
    config.triplet_count = triplets;
    config.message_bits = parse_bits(message);
    config.check_fraction = check_fraction;
    config.party_count = parties;
    config.attack = attack_from(attack, attack_basis);
    config.seed = seed;
    config.sender = party_from(sender);
    config.receiver = party_from(receiver);
    return config;
}

py::dict session_dict(const ProtocolConfig &config) {
    SessionRun run = run_session(config);
    py::dict d;
    d["exit_code"] = run.exit_code;
    d["completed"] = run.outcome.completed;
    d["decoded"] = format_bits(run.outcome.decoded);
    d["match"] = run.outcome.match;
    d["checked_triplets"] = run.outcome.checked_triplets;
    d["violations"] = run.outcome.violations;
    d["transcript"] = format_transcript(run.transcript);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = R"pbdoc(
        Controlled secure direct communication over GHZ states
        -------------------------------------------------------

        Seeded protocol sessions, identity checks and eavesdropping statistics.
    )pbdoc";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def(
        "run_session",
        [](int triplets, const std::string &message, double check_fraction, int parties, const std::string &attack,
           const std::string &attack_basis, uint64_t seed, const std::string &sender, const std::string &receiver) {
            return session_dict(
                make_config(triplets, message, check_fraction, parties, attack, attack_basis, seed, sender, receiver));
        },
        py::arg("triplets") = 16, py::arg("message") = "", py::arg("check_fraction") = 0.5, py::arg("parties") = 3,
        py::arg("attack") = "none", py::arg("attack_basis") = "random", py::arg("seed") = 0,
        py::arg("sender") = "BOB", py::arg("receiver") = "ALICE",
        "Runs one full session and returns its outcome and tab-separated transcript.");

    m.def(
        "estimate_detection",
        [](int trials, int triplets, const std::string &message, double check_fraction, int parties,
           const std::string &attack, const std::string &attack_basis, uint64_t seed) {
            DetectionStats s = estimate_detection(
                make_config(triplets, message, check_fraction, parties, attack, attack_basis, seed, "BOB", "ALICE"),
                trials);
            py::dict d;
            d["trials"] = s.trials;
            d["checked_triplets"] = s.checked_triplets;
            d["violations"] = s.violations;
            d["detection_rate"] = s.detection_rate;
            d["aborted_sessions"] = s.aborted_sessions;
            d["abort_rate"] = s.abort_rate;
            d["decode_accuracy"] = s.decode_accuracy;
            d["eve_information"] = s.eve_information;
            return d;
        },
        py::arg("trials"), py::arg("triplets") = 16, py::arg("message") = "", py::arg("check_fraction") = 0.5,
        py::arg("parties") = 3, py::arg("attack") = "none", py::arg("attack_basis") = "random", py::arg("seed") = 0);

    m.def(
        "detection_oracle",
        [](const std::string &attack, const std::string &attack_basis, int parties) {
            return detection_oracle(attack_from(attack, attack_basis), parties);
        },
        py::arg("attack"), py::arg("attack_basis") = "random", py::arg("parties") = 3,
        "Exact per-checked-triplet detection probability.");

    m.def(
        "verify_swap_identity",
        [](const std::string &left, const std::string &right) {
            SwapReport r = verify_swap_identity(bell_from(left), bell_from(right));
            py::dict amplitudes;
            for (size_t i = 0; i < 4; i++) {
                for (size_t j = 0; j < 4; j++) {
                    amplitudes[py::make_tuple(std::string(to_string(kAllBellOutcomes[i])),
                                              std::string(to_string(kAllBellOutcomes[j])))] = r.amplitudes[i][j];
                }
            }
            py::dict d;
            d["holds"] = r.holds;
            d["max_residual"] = r.max_residual;
            d["amplitudes"] = amplitudes;
            return d;
        },
        py::arg("left"), py::arg("right"));

    m.def(
        "verify_ghz_expansion",
        [](int index) {
            GhzExpansionReport r = verify_ghz_expansion(index);
            py::dict d;
            d["index"] = r.index;
            d["holds"] = r.holds;
            d["max_residual"] = r.max_residual;
            d["printed_ket"] = r.printed_ket;
            d["canonical_ket"] = r.canonical_ket;
            d["printed_ket_residual"] = r.printed_ket_residual;
            return d;
        },
        py::arg("index"));

    m.def("ghz_gram_residual", &ghz_gram_residual);

    m.def("build_decode_table", [] {
        DecodeTable table = build_decode_table();
        py::dict d;
        for (size_t i = 0; i < DecodeTable::kKeyCount; i++) {
            DecodeKey k = DecodeKey::from_index(i);
            d[py::make_tuple(k.parity1, k.parity2, std::string(to_string(k.sender_bell)),
                             std::string(to_string(k.receiver_bell)))] = std::string(to_string(table.at(k)));
        }
        return d;
    });

    m.def(
        "decode",
        [](int parity1, int parity2, const std::string &sender_bell, const std::string &receiver_bell) {
            DecodeKey key{static_cast<uint8_t>(parity1 & 1), static_cast<uint8_t>(parity2 & 1), bell_from(sender_bell),
                          bell_from(receiver_bell)};
            uint8_t bits = decode(shared_decode_table(), key);
            return format_bits({static_cast<uint8_t>(bits >> 1), static_cast<uint8_t>(bits & 1)});
        },
        py::arg("parity1"), py::arg("parity2"), py::arg("sender_bell"), py::arg("receiver_bell"));

    m.def(
        "bell_probabilities_after_encoding",
        [](const std::string &op, int parity1, int parity2) {
            // Joint (sender, receiver) outcome distribution for one group after encoding.
            EncodingOp encoding = encoding_from_bits(static_cast<uint8_t>(std::stoi(op.substr(1)) - 1));
            StateVector reg = tensor(
                make_state({QubitId::home(1), QubitId::travel(1)}, {1, 0, 0, parity1 ? -1.0 : 1.0}),
                make_state({QubitId::home(2), QubitId::travel(2)}, {1, 0, 0, parity2 ? -1.0 : 1.0}));
            reg = apply_gate(reg, encoding_gate(encoding), QubitId::travel(1));
            py::dict d;
            for (auto s : kAllBellOutcomes) {
                Projection after = project_bell(reg, QubitId::travel(1), QubitId::travel(2), s);
                for (auto r : kAllBellOutcomes) {
                    double p = after.post_state
                                   ? after.probability *
                                         project_bell(*after.post_state, QubitId::home(1), QubitId::home(2), r).probability
                                   : 0.0;
                    d[py::make_tuple(std::string(to_string(s)), std::string(to_string(r)))] = p;
                }
            }
            return d;
        },
        py::arg("op"), py::arg("parity1") = 0, py::arg("parity2") = 0);

    m.def("run_verify", [] {
        VerifyReport r = run_verify();
        py::dict d;
        d["structural_ok"] = r.structural_ok;
        d["text"] = r.text();
        return d;
    });

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
