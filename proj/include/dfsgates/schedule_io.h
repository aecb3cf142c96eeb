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
#ifndef DFSGATES_SCHEDULE_IO_H
#define DFSGATES_SCHEDULE_IO_H

// Schedule JSON:
//   { "version": 1, "name": str, "order": 0|1, "n": int,
//     "steps": [ { "pairs": [[i, j], ...], "coeffs": [float, ...], "phase": float } ] }
// Optional extras written by this library: top-level "sector_independent" and
// "consolidated", per-step "kind" and "duration". Readers ignore unknown keys.

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "dfsgates/trotter.h"

namespace dfsgates {

/// Malformed schedule document. what() names the offending field
/// (e.g. "steps[2].pairs[0]") or the parse location.
class ScheduleFormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

nlohmann::json schedule_to_json(const PulseSchedule &schedule);
PulseSchedule schedule_from_json(const nlohmann::json &doc);

std::string write_schedule(const PulseSchedule &schedule, int indent = 2);
PulseSchedule read_schedule(const std::string &text);

/// Throws std::runtime_error when the file cannot be opened or written.
void save_schedule_file(const std::string &path, const PulseSchedule &schedule);
PulseSchedule load_schedule_file(const std::string &path);

}  // namespace dfsgates

#endif
