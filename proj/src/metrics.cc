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
#include "dfsgates/metrics.h"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dfsgates {

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

std::string to_string(TargetGate gate) {
    return gate == TargetGate::Cnot ? "cnot" : "identity";
}

TargetGate parse_target_gate(const std::string &text) {
    if (text == "cnot") {
        return TargetGate::Cnot;
    }
    if (text == "identity") {
        return TargetGate::Identity;
    }
    throw std::invalid_argument("unknown target gate '" + text + "'");
}

Matrix cnot_matrix() {
    Matrix c = Matrix::Zero(4, 4);
    c(0, 0) = 1.0;
    c(1, 1) = 1.0;
    c(2, 3) = 1.0;
    c(3, 2) = 1.0;
    return c;
}

Matrix target_matrix(TargetGate gate) {
    return gate == TargetGate::Cnot ? cnot_matrix() : Matrix(Matrix::Identity(4, 4));
}

Matrix simulate(const PulseSchedule &schedule, SpinSector sector) {
    Partition irrep = irrep_of(sector);
    Eigen::Index dim = young_rep(irrep).dim();
    Matrix g = Matrix::Identity(dim, dim);
    for (const auto &step : schedule.steps) {
        g = g * expm_hermitian(step_generator(step, irrep));
    }
    return g;
}

Matrix computational_block(const Matrix &g, SpinSector sector) {
    const RealMatrix &pi = projector(sector).rows;
    if (g.rows() != pi.cols() || g.cols() != pi.cols()) {
        throw std::invalid_argument("unitary dimension does not match the sector");
    }
    return pi.cast<Complex>() * g * pi.transpose().cast<Complex>();
}

double entanglement_fidelity(const Matrix &g, const Matrix &target, SpinSector sector) {
    Complex tr = (computational_block(g, sector).adjoint() * target).trace() / 4.0;
    return std::norm(tr);
}

double leakage(const Matrix &g, const Matrix &target, SpinSector sector) {
    (void)target;  // the identity extension commutes with Pi_perp
    Matrix out = leakage_projector(sector) * g * projector(sector).rows.transpose().cast<Complex>();
    return out.squaredNorm() / 4.0;
}

SynthesisReport report(const PulseSchedule &schedule, const Matrix &target) {
    PulseSchedule c = schedule.consolidated ? schedule : consolidate(schedule);
    SynthesisReport r;
    r.name = schedule.name;
    r.n = schedule.n;
    r.order = schedule.order;
    r.cycles = static_cast<int>(c.size());
    r.normalized_time = normalized_time(c);
    for (SpinSector s : kSectors) {
        Matrix g = simulate(c, s);
        r.scores[static_cast<size_t>(s)] = {entanglement_fidelity(g, target, s), leakage(g, target, s)};
    }
    r.negative_hamiltonian_steps = negative_step_count(schedule, true);
    r.negative_other_steps = negative_step_count(schedule, false) - r.negative_hamiltonian_steps;
    return r;
}

nlohmann::json to_json(const SynthesisReport &r) {
    nlohmann::json sectors;
    for (SpinSector s : kSectors) {
        sectors[to_string(s)] = {{"fidelity", r.score(s).fidelity}, {"leakage", r.score(s).leakage}};
    }
    return {{"name", r.name},
            {"n", r.n},
            {"order", r.order},
            {"cycles", r.cycles},
            {"normalized_time", r.normalized_time},
            {"sectors", sectors},
            {"negative_hamiltonian_steps", r.negative_hamiltonian_steps},
            {"negative_other_steps", r.negative_other_steps},
            {"benchmark", {{"cycles", kBenchmarkCycles}, {"normalized_time", kBenchmarkNormalizedTime}}}};
}

TableFormat parse_table_format(const std::string &text) {
    if (text == "md") {
        return TableFormat::Markdown;
    }
    if (text == "csv") {
        return TableFormat::Csv;
    }
    if (text == "json") {
        return TableFormat::Json;
    }
    throw std::invalid_argument("unknown table format '" + text + "'");
}

std::vector<int> table_iterations(int which) {
    if (which == 1) {
        return {3, 5, 9};
    }
    if (which == 2) {
        return {2, 3, 4};
    }
    throw std::invalid_argument("table must be 1 or 2, got " + std::to_string(which));
}

PulseSchedule table_schedule(int which, int n) {
    table_iterations(which);
    return which == 1 ? cnot_spin_independent(n) : cnot_spin1(n);
}

Table make_table(int which, bool cancel, CancelMode mode) {
    Table t;
    t.which = which;
    Matrix target = cnot_matrix();
    for (int n : table_iterations(which)) {
        PulseSchedule s = table_schedule(which, n);
        t.rows.push_back({"plain", report(s, target)});
        if (cancel) {
            t.rows.push_back({to_string(mode), report(cancel_negatives(s, mode), target)});
        }
    }
    return t;
}

std::string render_table(const Table &table, TableFormat format) {
    if (format == TableFormat::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto &row : table.rows) {
            auto j = to_json(row.report);
            j["variant"] = row.variant;
            rows.push_back(j);
        }
        return nlohmann::json{{"table", table.which}, {"rows", rows}}.dump(2) + "\n";
    }
    std::ostringstream out;
    const SpinSector s1 = SpinSector::Spin1;
    if (format == TableFormat::Csv) {
        out << "n,variant,cycles,time,fidelity,leakage\n";
        for (const auto &row : table.rows) {
            const auto &r = row.report;
            out << r.n << "," << row.variant << "," << r.cycles << "," << fixed(r.normalized_time, 1) << ","
                << fixed(r.score(s1).fidelity, 5) << "," << fixed(r.score(s1).leakage, 5) << "\n";
        }
        return out.str();
    }
    out << "| n | variant | cycles | time | fidelity | leakage |\n";
    out << "|---|---|---|---|---|---|\n";
    for (const auto &row : table.rows) {
        const auto &r = row.report;
        out << "| " << r.n << " | " << row.variant << " | " << r.cycles << " | " << fixed(r.normalized_time, 1)
            << " | " << fixed(r.score(s1).fidelity, 5) << " | " << fixed(r.score(s1).leakage, 5) << " |\n";
    }
    out << "\nReference sequence: " << kBenchmarkCycles << " cycles, normalized time "
        << fixed(kBenchmarkNormalizedTime, 1) << ".\n";
    return out.str();
}

}  // namespace dfsgates
