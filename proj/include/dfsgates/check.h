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
#ifndef DFSGATES_CHECK_H
#define DFSGATES_CHECK_H

#include <string>
#include <vector>

namespace dfsgates {

/// One numerical identity checked against a tolerance.
struct CheckResult {
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;

    bool passed() const {
        return deviation <= tolerance;
    }
};

struct CheckReport {
    std::string suite;
    std::vector<CheckResult> checks;

    void add(std::string name, double deviation, double tolerance) {
        checks.push_back({std::move(name), deviation, tolerance});
    }
    void append(const CheckReport &other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool ok() const {
        for (const auto &c : checks) {
            if (!c.passed()) {
                return false;
            }
        }
        return true;
    }
    double max_deviation() const {
        double m = 0.0;
        for (const auto &c : checks) {
            m = c.deviation > m ? c.deviation : m;
        }
        return m;
    }
    /// Names of failed checks.
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto &c : checks) {
            if (!c.passed()) {
                out.push_back(c.name);
            }
        }
        return out;
    }
};

}  // namespace dfsgates

#endif
