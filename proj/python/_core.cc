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


// Python bindings. Schedules cross the boundary as JSON text.

#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dfsgates/encoding.h"
#include "dfsgates/metrics.h"
#include "dfsgates/oracle.h"
#include "dfsgates/schedule_io.h"
#include "dfsgates/trotter.h"
#include "dfsgates/verify.h"

namespace py = pybind11;
using namespace dfsgates;

namespace {

std::string dump(const PulseSchedule &s) {
    return write_schedule(s, -1);
}

py::dict score_dict(const SectorScore &s) {
    py::dict d;
    d["fidelity"] = s.fidelity;
    d["leakage"] = s.leakage;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exchange-only gate synthesis for three-spin DFS qubits";

    py::register_exception<ScheduleFormatError>(m, "ScheduleFormatError", PyExc_ValueError);

    m.def(
        "cnot_spin_independent",
        [](int n, int order, bool prune) { return dump(cnot_spin_independent(n, order, prune)); },
        py::arg("n"), py::arg("order") = 1, py::arg("prune") = true);
    m.def(
        "cnot_spin1", [](int n, int order, bool prune) { return dump(cnot_spin1(n, order, prune)); },
        py::arg("n"), py::arg("order") = 1, py::arg("prune") = true);
    m.def(
        "single_qubit",
        [](int block, double a, double b, double g, double d) {
            return dump(single_qubit_schedule(block, a, b, g, d));
        },
        py::arg("block"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("delta") = 0.0);
    m.def("consolidate", [](const std::string &s) { return dump(consolidate(read_schedule(s))); });
    m.def(
        "cancel_negatives",
        [](const std::string &s, const std::string &mode) {
            return dump(cancel_negatives(read_schedule(s), parse_cancel_mode(mode)));
        },
        py::arg("schedule"), py::arg("mode") = "full-sum");
    m.def("normalized_time", [](const std::string &s) { return normalized_time(read_schedule(s)); });
    // Clock cycles are counted after consolidation.
    m.def("cycles", [](const std::string &s) {
        PulseSchedule sched = read_schedule(s);
        return sched.consolidated ? sched.size() : consolidate(sched).size();
    });

    m.def(
        "simulate",
        [](const std::string &s, const std::string &sector) {
            return simulate(read_schedule(s), parse_sector(sector));
        },
        py::arg("schedule"), py::arg("sector"));
    m.def(
        "score",
        [](const std::string &s, const std::string &sector, const std::string &target, bool oracle) {
            PulseSchedule sched = read_schedule(s);
            SpinSector sec = parse_sector(sector);
            Matrix t = target_matrix(parse_target_gate(target));
            if (oracle) {
                return score_dict(oracle_score(sched, sec, t));
            }
            Matrix g = simulate(sched, sec);
            return score_dict({entanglement_fidelity(g, t, sec), leakage(g, t, sec)});
        },
        py::arg("schedule"), py::arg("sector"), py::arg("target") = "cnot", py::arg("oracle") = false);
    m.def(
        "report_json",
        [](const std::string &s, const std::string &target) {
            return to_json(report(read_schedule(s), target_matrix(parse_target_gate(target)))).dump();
        },
        py::arg("schedule"), py::arg("target") = "cnot");
    m.def(
        "table",
        [](int which, const std::string &format, bool cancel, const std::string &mode) {
            return render_table(make_table(which, cancel, parse_cancel_mode(mode)), parse_table_format(format));
        },
        py::arg("which"), py::arg("format") = "md", py::arg("cancel") = false, py::arg("mode") = "full-sum");
    m.def(
        "verify",
        [](const std::string &suite) {
            std::vector<std::string> failed;
            for (const CheckReport &r : run_suites(suite)) {
                for (const std::string &f : r.failures()) {
                    failed.push_back(r.suite + ": " + f);
                }
            }
            return failed;
        },
        py::arg("suite") = "all");
}
