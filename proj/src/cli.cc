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

#include "csdc/cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "csdc/basis_algebra.h"
#include "csdc/decode_table.h"
#include "csdc/errors.h"

namespace csdc {

namespace {

std::string scientific(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3e", x);
    return buffer;
}

std::string fixed(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6f", x);
    return buffer;
}

void write_output(const std::string &path, const std::string &text, std::ostream &fallback) {
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open " + path + " for writing");
    }
    file << text;
}

}  // namespace

CliOptions parse_config(int argc, const char *const *argv) {
    CLI::App app{"Controlled secure direct communication simulator"};
    CliOptions options;

    static const std::map<std::string, RunMode> modes{
        {"verify", RunMode::Verify}, {"run", RunMode::Run}, {"sweep", RunMode::Sweep}};
    std::string attack = "none";
    std::string attack_basis = "random";
    std::string message;
    std::string sender = "BOB";
    std::string receiver = "ALICE";
    auto &config = options.config;

    std::string mode = "run";
    app.add_option("--mode", mode, "verify | run | sweep")->check(CLI::IsMember({"verify", "run", "sweep"}));
    app.add_option("--triplets", config.triplet_count, "number of GHZ triplets (even)");
    auto *message_opt = app.add_option("--message", message, "bit string to send, two bits per encoding group");
    app.add_option("--check-fraction", config.check_fraction, "share of groups spent on checking");
    app.add_option("--parties", config.party_count, "parties sharing each GHZ state (>= 3)");
    app.add_option("--attack", attack, "none | intercept-resend | entangle-measure")
        ->check(CLI::IsMember({"none", "intercept-resend", "entangle-measure"}));
    app.add_option("--attack-basis", attack_basis, "intercept basis: random | z | x")
        ->check(CLI::IsMember({"random", "z", "x"}));
    app.add_option("--seed", config.seed, "master seed (unsigned 64-bit)");
    app.add_option("--trials", options.trials, "sessions per sweep row")->check(CLI::PositiveNumber);
    app.add_option("--transcript", options.transcript_path, "write the transcript here");
    app.add_option("--stats", options.stats_path, "write statistics here instead of stdout");
    app.add_option("--sender", sender, "sending party: BOB or CTRLk (default BOB)");
    app.add_option("--receiver", receiver, "receiving party (default ALICE)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    options.mode = modes.at(mode);
    if (attack == "none") {
        config.attack = NoAttack{};
    } else if (attack == "entangle-measure") {
        config.attack = EntangleMeasure{};
    } else {
        InterceptBasis basis = attack_basis == "z"   ? InterceptBasis::AlwaysZ
                               : attack_basis == "x" ? InterceptBasis::AlwaysX
                                                     : InterceptBasis::RandomZX;
        config.attack = InterceptResend{basis};
    }

    if (options.mode == RunMode::Verify) {
        return options;
    }

    auto s = parse_party_name(sender);
    auto r = parse_party_name(receiver);
    if (!s || !r) {
        throw UsageError("unknown party name in --sender/--receiver");
    }
    config.sender = *s;
    config.receiver = *r;
    try {
        options.message_given = message_opt->count() > 0;
        config.message_bits = parse_bits(message);
        plan_groups(config);
        if (options.mode == RunMode::Run && !options.message_given) {
            config.message_bits = random_message(config, config.seed);
        }
    } catch (const ConfigError &e) {
        throw UsageError(e.what());
    }
    return options;
}

std::string VerifyReport::text() const {
    std::string out;
    for (const auto &line : lines) {
        switch (line.status) {
            case VerifyLine::Status::Pass:
                out += "PASS";
                break;
            case VerifyLine::Status::Fail:
                out += "FAIL";
                break;
            case VerifyLine::Status::Finding:
                out += "FINDING";
                break;
        }
        out += '\t' + line.check + '\t' + line.detail + '\n';
    }
    out += std::string("SUMMARY\tstructural\t") + (structural_ok ? "pass" : "fail") + '\n';
    return out;
}

VerifyReport run_verify() {
    VerifyReport report;
    auto add = [&](bool ok, bool structural, std::string check, std::string detail) {
        VerifyLine::Status status = ok ? VerifyLine::Status::Pass
                                       : (structural ? VerifyLine::Status::Fail : VerifyLine::Status::Finding);
        report.lines.push_back({status, std::move(check), std::move(detail), structural});
        if (structural && !ok) {
            report.structural_ok = false;
        }
    };

    for (auto left : kAllBellOutcomes) {
        for (auto right : kAllBellOutcomes) {
            SwapReport swap = verify_swap_identity(left, right);
            double total = 0;
            int nonzero = 0;
            for (const auto &row : swap.amplitudes) {
                for (const auto &a : row) {
                    total += std::norm(a);
                    nonzero += std::norm(a) > kTolerance;
                }
            }
            bool ok = swap.holds && nonzero == 4 && std::abs(total - 1) < kTolerance;
            add(ok, true, "swap_identity",
                std::string(to_string(left)) + "(x)" + std::string(to_string(right)) +
                    (left == BellOutcome::PsiPlus ? " against=printed" : " against=uniform-on-4") +
                    " residual=" + scientific(swap.max_residual) + " nonzero=" + std::to_string(nonzero));
        }
    }

    double gram = ghz_gram_residual();
    add(gram < kTolerance, true, "ghz_orthonormality", "residual=" + scientific(gram));

    for (int index = 1; index <= 8; index++) {
        GhzExpansionReport g = verify_ghz_expansion(index);
        // The first two printed expansions must hold; the rest are reported as they stand.
        add(g.holds, index <= 2, "ghz_expansion",
            "index=" + std::to_string(index) + " canonical=" + g.canonical_ket + " residual=" +
                scientific(g.max_residual) + " printed_ket=" + g.printed_ket +
                " printed_ket_residual=" + scientific(g.printed_ket_residual));
    }

    try {
        DecodeTable table = build_decode_table();
        add(table.is_total_and_bijective(), true, "decode_table",
            "keys=" + std::to_string(table.size()) + "/" + std::to_string(DecodeTable::kKeyCount) + " bijective=" +
                (table.is_total_and_bijective() ? "true" : "false"));
    } catch (const InternalError &e) {
        add(false, true, "decode_table", std::string("error=") + e.what());
    }

    add(false, false, "bell_normalization", "printed_prefactor=1/2 used=1/sqrt2");
    add(false, false, "joint_outcome_probability", "printed=1/16 normalized=1/4");
    return report;
}

SessionRun run_session(const ProtocolConfig &config) {
    SessionRun run;
    try {
        Session session(config);
        run.outcome = session.run();
        run.transcript = session.transcript();
        run.exit_code = run.outcome.completed ? exit_code::kOk : exit_code::kEavesdropperAbort;
    } catch (const InternalError &e) {
        run.exit_code = exit_code::kInternal;
        run.stats_text = std::string("error\t") + e.what() + '\n';
        return run;
    }
    const auto &o = run.outcome;
    std::string text;
    text += std::string("status\t") + (o.completed ? "completed" : "aborted") + '\n';
    text += "message\t" + format_bits(config.message_bits) + '\n';
    text += "decoded\t" + (o.completed ? format_bits(o.decoded) : std::string("-")) + '\n';
    text += std::string("match\t") + (o.match ? "true" : "false") + '\n';
    text += "checked_triplets\t" + std::to_string(o.checked_triplets) + '\n';
    text += "violations\t" + std::to_string(o.violations) + '\n';
    run.stats_text = std::move(text);
    return run;
}

std::vector<SweepRow> run_sweep(const ProtocolConfig &config, int trials) {
    const std::vector<AttackModel> attacks{
        NoAttack{},
        InterceptResend{InterceptBasis::RandomZX},
        InterceptResend{InterceptBasis::AlwaysZ},
        InterceptResend{InterceptBasis::AlwaysX},
        EntangleMeasure{},
    };
    std::vector<SweepRow> rows;
    for (const auto &attack : attacks) {
        ProtocolConfig cell = config;
        cell.attack = attack;
        rows.push_back({attack_label(attack), estimate_detection(cell, trials)});
    }
    return rows;
}

std::string format_sweep(const std::vector<SweepRow> &rows) {
    std::string out = "attack\ttrials\tchecked_triplets\tdetection_rate\tabort_rate\tdecode_accuracy\n";
    for (const auto &row : rows) {
        const auto &s = row.stats;
        out += row.attack + '\t' + std::to_string(s.trials) + '\t' + std::to_string(s.checked_triplets) + '\t' +
               fixed(s.detection_rate) + '\t' + fixed(s.abort_rate) + '\t' +
               (s.decode_accuracy ? fixed(*s.decode_accuracy) : std::string("NA")) + '\n';
    }
    return out;
}

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CliOptions options;
    try {
        options = parse_config(argc, argv);
    } catch (const HelpRequested &help) {
        out << help.what();
        return exit_code::kOk;
    } catch (const UsageError &e) {
        err << e.what() << '\n';
        return exit_code::kUsage;
    }

    try {
        switch (options.mode) {
            case RunMode::Verify: {
                VerifyReport report = run_verify();
                write_output(options.stats_path, report.text(), out);
                return report.structural_ok ? exit_code::kOk : exit_code::kVerifyFailure;
            }
            case RunMode::Run: {
                SessionRun run = run_session(options.config);
                if (!options.transcript_path.empty()) {
                    write_output(options.transcript_path, format_transcript(run.transcript), out);
                }
                write_output(options.stats_path, run.stats_text, out);
                return run.exit_code;
            }
            case RunMode::Sweep: {
                write_output(options.stats_path, format_sweep(run_sweep(options.config, options.trials)), out);
                return exit_code::kOk;
            }
        }
    } catch (const UsageError &e) {
        err << e.what() << '\n';
        return exit_code::kUsage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::kInternal;
    }
    return exit_code::kInternal;
}

}  // namespace csdc
