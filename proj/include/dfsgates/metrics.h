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
#ifndef DFSGATES_METRICS_H
#define DFSGATES_METRICS_H

// Simulation of schedules in each irrep and the scores used in the tables:
// entanglement fidelity, leakage, clock cycles and normalized time.

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "dfsgates/encoding.h"
#include "dfsgates/linalg.h"
#include "dfsgates/trotter.h"

namespace dfsgates {

/// Reference sequence figures quoted for comparison only (not recomputed).
inline constexpr int kBenchmarkCycles = 13;
inline constexpr double kBenchmarkNormalizedTime = 12.3;
/// Quoted time increase from negative-coefficient cancellation.
inline constexpr double kCancellationTimeIncrease = 1.3;

enum class TargetGate { Cnot, Identity };

std::string to_string(TargetGate gate);
TargetGate parse_target_gate(const std::string &text);

/// CNOT with qubit one (block {1,2,3}) as control.
Matrix cnot_matrix();
Matrix target_matrix(TargetGate gate);

/// Product of the step exponentials in the irrep of the sector.
Matrix simulate(const PulseSchedule &schedule, SpinSector sector);

/// Pi G Pi^T.
Matrix computational_block(const Matrix &g, SpinSector sector);

/// |1/4 tr(Pi G^dag Pi^T target)|^2.
double entanglement_fidelity(const Matrix &g, const Matrix &target, SpinSector sector);
/// 1/4 tr(Pi G^dag C Pi_perp C^dag G Pi^T) with C the target extended by the
/// identity; equals 1/4 ||Pi_perp G Pi^T||_F^2.
double leakage(const Matrix &g, const Matrix &target, SpinSector sector);

struct SectorScore {
    double fidelity = 0.0;
    double leakage = 0.0;
};

struct SynthesisReport {
    std::string name;
    int n = 0;
    int order = 1;
    int cycles = 0;
    double normalized_time = 0.0;
    std::array<SectorScore, 2> scores{};  // indexed by sector (Spin0, Spin1)
    int negative_hamiltonian_steps = 0;
    int negative_other_steps = 0;

    const SectorScore &score(SpinSector sector) const {
        return scores[static_cast<size_t>(sector)];
    }
};

/// Consolidates (if needed), simulates in both sectors and scores against
/// the target.
SynthesisReport report(const PulseSchedule &schedule, const Matrix &target);

nlohmann::json to_json(const SynthesisReport &r);

enum class TableFormat { Markdown, Csv, Json };
TableFormat parse_table_format(const std::string &text);

struct TableRow {
    std::string variant;  // "plain" or the cancellation mode
    SynthesisReport report;
};

struct Table {
    int which = 1;
    std::vector<TableRow> rows;
};

/// Iteration counts tabulated for table 1 (spin-independent CNOT) and 2
/// (spin-1 CNOT). Throws std::invalid_argument for other values.
std::vector<int> table_iterations(int which);
PulseSchedule table_schedule(int which, int n);

/// With cancel set, each plain row is followed by the cancelled variant.
Table make_table(int which, bool cancel = false, CancelMode mode = CancelMode::FullSum);

/// md/csv: time to 1 decimal, F and L to 5 decimals, spin-1 columns.
/// json: every report at full precision.
std::string render_table(const Table &table, TableFormat format);

}  // namespace dfsgates

#endif
