# Copyright 2026 The dfsgates Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exchange-only gate synthesis for two three-spin DFS logical qubits."""

import json

from dfsgates import _core
from dfsgates._core import (
    ScheduleFormatError,
    cancel_negatives,
    cnot_spin1,
    cnot_spin_independent,
    consolidate,
    cycles,
    normalized_time,
    score,
    simulate,
    single_qubit,
    table,
    verify,
)


def report(schedule, target="cnot"):
    """Scores, cycle count and normalized time as a dict."""
    return json.loads(_core.report_json(schedule, target))


__all__ = [
    "ScheduleFormatError",
    "cancel_negatives",
    "cnot_spin1",
    "cnot_spin_independent",
    "consolidate",
    "cycles",
    "normalized_time",
    "report",
    "score",
    "simulate",
    "single_qubit",
    "table",
    "verify",
]
