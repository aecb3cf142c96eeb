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
#include "dfsgates/schedule_io.h"

#include <cmath>
#include <fstream>
#include <sstream>

namespace dfsgates {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &where, const std::string &what) {
    throw ScheduleFormatError("schedule field '" + where + "': " + what);
}

const json &require(const json &obj, const char *key, const std::string &where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(where.empty() ? key : where + "." + key, "missing");
    }
    return *it;
}

double read_real(const json &v, const std::string &where) {
    if (!v.is_number()) {
        fail(where, "expected a number, got " + std::string(v.type_name()));
    }
    double x = v.get<double>();
    if (!std::isfinite(x)) {
        fail(where, "not finite");
    }
    return x;
}

int read_int(const json &v, const std::string &where) {
    if (!v.is_number_integer()) {
        fail(where, "expected an integer, got " + std::string(v.type_name()));
    }
    return v.get<int>();
}

PulseStep read_step(const json &s, const std::string &where) {
    if (!s.is_object()) {
        fail(where, "expected an object");
    }
    const json &pairs = require(s, "pairs", where);
    const json &coeffs = require(s, "coeffs", where);
    if (!pairs.is_array()) {
        fail(where + ".pairs", "expected an array");
    }
    if (!coeffs.is_array()) {
        fail(where + ".coeffs", "expected an array");
    }
    if (pairs.size() != coeffs.size()) {
        fail(where, "pairs and coeffs differ in length (" + std::to_string(pairs.size()) + " vs " +
                        std::to_string(coeffs.size()) + ")");
    }
    std::map<Transposition, double> c;
    for (size_t k = 0; k < pairs.size(); k++) {
        std::string pw = where + ".pairs[" + std::to_string(k) + "]";
        const json &p = pairs[k];
        if (!p.is_array() || p.size() != 2) {
            fail(pw, "expected [i, j]");
        }
        int i = read_int(p[0], pw + "[0]");
        int j = read_int(p[1], pw + "[1]");
        if (i < 1 || j > 6 || i >= j) {
            fail(pw, "need 1 <= i < j <= 6, got [" + std::to_string(i) + ", " + std::to_string(j) + "]");
        }
        Transposition t(i, j);
        if (c.count(t)) {
            fail(pw, "duplicate pair " + t.str());
        }
        c[t] = read_real(coeffs[k], where + ".coeffs[" + std::to_string(k) + "]");
    }
    double phase = 0.0;
    if (auto it = s.find("phase"); it != s.end()) {
        phase = read_real(*it, where + ".phase");
    }
    StepKind kind = StepKind::Hamiltonian;
    if (auto it = s.find("kind"); it != s.end()) {
        if (!it->is_string()) {
            fail(where + ".kind", "expected a string");
        }
        try {
            kind = parse_step_kind(it->get<std::string>());
        } catch (const std::invalid_argument &e) {
            fail(where + ".kind", e.what());
        }
    }
    PulseStep step = PulseStep::make(std::move(c), phase, kind);
    if (auto it = s.find("duration"); it != s.end()) {
        step.duration = read_real(*it, where + ".duration");
        if (step.duration < 0.0) {
            fail(where + ".duration", "negative");
        }
    }
    return step;
}

}  // namespace

nlohmann::json schedule_to_json(const PulseSchedule &schedule) {
    json steps = json::array();
    for (const auto &s : schedule.steps) {
        json pairs = json::array();
        json coeffs = json::array();
        for (const auto &[t, v] : s.coeffs) {
            pairs.push_back({t.i, t.j});
            coeffs.push_back(v);
        }
        steps.push_back({{"pairs", pairs},
                         {"coeffs", coeffs},
                         {"phase", s.phase},
                         {"kind", to_string(s.kind)},
                         {"duration", s.duration}});
    }
    return {{"version", 1},
            {"name", schedule.name},
            {"order", schedule.order},
            {"n", schedule.n},
            {"sector_independent", schedule.sector_independent},
            {"consolidated", schedule.consolidated},
            {"steps", steps}};
}

PulseSchedule schedule_from_json(const nlohmann::json &doc) {
    if (!doc.is_object()) {
        fail("<root>", "expected an object");
    }
    int version = read_int(require(doc, "version", ""), "version");
    if (version != 1) {
        fail("version", "unsupported version " + std::to_string(version));
    }
    PulseSchedule out;
    const json &name = require(doc, "name", "");
    if (!name.is_string()) {
        fail("name", "expected a string");
    }
    out.name = name.get<std::string>();
    out.order = read_int(require(doc, "order", ""), "order");
    if (out.order != 0 && out.order != 1) {
        fail("order", "must be 0 or 1");
    }
    out.n = read_int(require(doc, "n", ""), "n");
    if (out.n < 1) {
        fail("n", "must be >= 1");
    }
    for (const char *flag : {"sector_independent", "consolidated"}) {
        if (auto it = doc.find(flag); it != doc.end()) {
            if (!it->is_boolean()) {
                fail(flag, "expected a boolean");
            }
            (std::string(flag) == "consolidated" ? out.consolidated : out.sector_independent) = it->get<bool>();
        }
    }
    const json &steps = require(doc, "steps", "");
    if (!steps.is_array()) {
        fail("steps", "expected an array");
    }
    for (size_t k = 0; k < steps.size(); k++) {
        out.steps.push_back(read_step(steps[k], "steps[" + std::to_string(k) + "]"));
    }
    return out;
}

std::string write_schedule(const PulseSchedule &schedule, int indent) {
    return schedule_to_json(schedule).dump(indent);
}

PulseSchedule read_schedule(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ScheduleFormatError(std::string("schedule JSON: ") + e.what());
    }
    return schedule_from_json(doc);
}

void save_schedule_file(const std::string &path, const PulseSchedule &schedule) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << write_schedule(schedule) << "\n";
}

PulseSchedule load_schedule_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return read_schedule(buf.str());
    } catch (const ScheduleFormatError &e) {
        throw ScheduleFormatError(path + ": " + e.what());
    }
}

}  // namespace dfsgates
