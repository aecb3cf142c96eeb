// Copyright 2026 The dfsgates Authors
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
#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "dfsgates/metrics.h"
#include "dfsgates/oracle.h"
#include "dfsgates/schedule_io.h"
#include "dfsgates/trotter.h"
#include "dfsgates/verify.h"

namespace dfsgates {

namespace {

std::string format(const char *fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

int cmd_verify(const std::string &suite, std::ostream &out) {
    bool ok = true;
    for (const auto &report : run_suites(suite)) {
        for (const auto &c : report.checks) {
            out << (c.passed() ? "PASS" : "FAIL") << "  " << report.suite << ": " << c.name
                << "  max_dev=" << format("%.3e", c.deviation) << " tol=" << format("%.0e", c.tolerance) << "\n";
        }
        out << report.suite << ": " << (report.ok() ? "ok" : "FAILED") << " (" << report.checks.size()
            << " checks, max deviation " << format("%.3e", report.max_deviation()) << ")\n";
        ok = ok && report.ok();
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_tables(int which, const std::string &fmt, bool cancel, const std::string &mode, std::ostream &out) {
    Table t = make_table(which, cancel, parse_cancel_mode(mode));
    out << render_table(t, parse_table_format(fmt));
    return kExitOk;
}

int cmd_synthesize(const std::string &gate, const std::string &mode, int n, int order, bool raw,
                   const std::string &path, std::ostream &out) {
    if (gate != "cnot") {
        throw CLI::ValidationError("gate", "only 'cnot' is supported");
    }
    PulseSchedule s = mode == "spin1" ? cnot_spin1(n, order) : cnot_spin_independent(n, order);
    PulseSchedule written = raw ? s : consolidate(s);
    nlohmann::json doc = schedule_to_json(written);
    doc["report"] = to_json(report(written, cnot_matrix()));
    std::string text = doc.dump(2) + "\n";
    if (path.empty() || path == "-") {
        out << text;
        return kExitOk;
    }
    std::ofstream f(path);
    if (!f || !(f << text)) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << "wrote " << written.size() << "-step schedule to " << path << "\n";
    return kExitOk;
}

int cmd_simulate(const std::string &path, const std::string &sector, const std::string &target_name, bool use_oracle,
                 bool as_json, std::ostream &out) {
    PulseSchedule s = load_schedule_file(path);
    Matrix target = target_matrix(parse_target_gate(target_name));
    std::vector<SpinSector> sectors;
    if (sector == "both") {
        sectors.assign(kSectors.begin(), kSectors.end());
    } else {
        sectors.push_back(parse_sector(sector));
    }
    SynthesisReport r = report(s, target);
    Matrix phys;
    if (use_oracle) {
        phys = oracle_simulate(s.consolidated ? s : consolidate(s));
    }
    nlohmann::json doc = to_json(r);
    doc["target"] = target_name;
    bool oracle_ok = true;
    for (SpinSector sec : kSectors) {
        if (std::find(sectors.begin(), sectors.end(), sec) == sectors.end()) {
            doc["sectors"].erase(to_string(sec));
            continue;
        }
        if (use_oracle) {
            SectorScore o = oracle_score(phys, sec, target);
            double df = std::abs(o.fidelity - r.score(sec).fidelity);
            double dl = std::abs(o.leakage - r.score(sec).leakage);
            doc["sectors"][to_string(sec)]["oracle"] = {{"fidelity", o.fidelity},
                                                        {"leakage", o.leakage},
                                                        {"delta_fidelity", df},
                                                        {"delta_leakage", dl}};
            oracle_ok = oracle_ok && df <= 1e-8 && dl <= 1e-8;
        }
    }
    if (as_json) {
        out << doc.dump(2) << "\n";
    } else {
        out << "schedule: " << r.name << " (n=" << r.n << ", order=" << r.order << ")\n";
        out << "cycles: " << r.cycles << "\n";
        out << "normalized time: " << format("%.6f", r.normalized_time) << "\n";
        for (SpinSector sec : sectors) {
            const auto &sc = r.score(sec);
            out << to_string(sec) << ": fidelity " << format("%.15g", sc.fidelity) << "  leakage "
                << format("%.15g", sc.leakage) << "\n";
            if (use_oracle) {
                const auto &o = doc["sectors"][to_string(sec)]["oracle"];
                out << to_string(sec) << " oracle: delta fidelity " << format("%.3e", o["delta_fidelity"].get<double>())
                    << "  delta leakage " << format("%.3e", o["delta_leakage"].get<double>()) << "\n";
            }
        }
        if (r.negative_hamiltonian_steps + r.negative_other_steps > 0) {
            out << "steps with negative coefficients: " << r.negative_hamiltonian_steps << " hamiltonian, "
                << r.negative_other_steps << " other\n";
        }
        out << "reference sequence: " << kBenchmarkCycles << " cycles, normalized time "
            << format("%.1f", kBenchmarkNormalizedTime) << "\n";
    }
    return oracle_ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exchange-only gate synthesis for two three-spin DFS qubits", "dfsgates"};
    app.require_subcommand(1);

    std::string suite = "all";
    auto *verify = app.add_subcommand("verify", "Run invariant suites");
    verify->add_option("--suite", suite, "Suite to run")
        ->check(CLI::IsMember({"all", "symrep", "encoding", "decouple", "oracle"}));

    int which = 1;
    std::string table_format = "md";
    bool cancel = false;
    std::string cancel_mode = "full-sum";
    auto *tables = app.add_subcommand("tables", "Regenerate the CNOT tables");
    tables->add_option("--which", which, "Table number")->check(CLI::IsMember({1, 2}));
    tables->add_option("--format", table_format, "Output format")->check(CLI::IsMember({"md", "csv", "json"}));
    tables->add_flag("--cancel-negatives", cancel, "Append rows with negative coefficients cancelled");
    tables->add_option("--cancel-mode", cancel_mode, "Transposition sum used for cancellation")
        ->check(CLI::IsMember({"full-sum", "local-sum", "cross-sum"}));

    std::string gate;
    std::string mode = "independent";
    int n = 3;
    int order = 1;
    bool raw = false;
    std::string out_path;
    auto *synth = app.add_subcommand("synthesize", "Build a gate schedule and write it as JSON");
    synth->add_option("gate", gate, "Gate to synthesize (cnot)")->required()->check(CLI::IsMember({"cnot"}));
    synth->add_option("--mode", mode, "Construction")->check(CLI::IsMember({"independent", "spin1"}));
    synth->add_option("--n", n, "Trotter iterations")->check(CLI::PositiveNumber);
    synth->add_option("--order", order, "Product formula order")->check(CLI::IsMember({0, 1}));
    synth->add_flag("--no-consolidate", raw, "Write the factors as built, without merging");
    synth->add_option("--out", out_path, "Output path (stdout if omitted)");

    std::string schedule_path;
    std::string sector = "both";
    std::string target = "cnot";
    bool use_oracle = false;
    bool as_json = false;
    auto *sim = app.add_subcommand("simulate", "Simulate a schedule file and score it");
    sim->add_option("schedule", schedule_path, "Schedule JSON file")->required();
    sim->add_option("--sector", sector, "Spin sector")->check(CLI::IsMember({"0", "1", "both"}));
    sim->add_option("--target", target, "Target gate")->check(CLI::IsMember({"cnot", "identity"}));
    sim->add_flag("--oracle", use_oracle, "Cross-check in the 64-dimensional spin space");
    sim->add_flag("--json", as_json, "Print the report as JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        const CLI::App *sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(suite, out);
        }
        if (tables->parsed()) {
            return cmd_tables(which, table_format, cancel, cancel_mode, out);
        }
        if (synth->parsed()) {
            return cmd_synthesize(gate, mode, n, order, raw, out_path, out);
        }
        return cmd_simulate(schedule_path, sector, target, use_oracle, as_json, out);
    } catch (const ScheduleFormatError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace dfsgates
