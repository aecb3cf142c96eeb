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
#ifndef DFSGATES_VERIFY_H
#define DFSGATES_VERIFY_H

// Invariant suites run by the CLI "verify" subcommand.

#include <string>
#include <vector>

#include "dfsgates/check.h"

namespace dfsgates {

CheckReport verify_symrep();
CheckReport verify_encoding();
CheckReport verify_decouple();
CheckReport verify_oracle();

/// "all", "symrep", "encoding", "decouple" or "oracle". Throws
/// std::invalid_argument for other names.
std::vector<CheckReport> run_suites(const std::string &suite);

}  // namespace dfsgates

#endif
