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
#ifndef DFSGATES_ORACLE_H
#define DFSGATES_ORACLE_H

// Independent check in the full 2^6-dimensional spin space. Transpositions
// act as tensor-factor swaps and the logical basis is built directly from the
// three-spin encodings, without going through the irreps.
//
// Basis index: spin k (1..6) is bit 6-k, so spin 1 is the most significant
// bit; bit value 0 is up.

#include <array>

#include "dfsgates/encoding.h"
#include "dfsgates/linalg.h"
#include "dfsgates/metrics.h"
#include "dfsgates/symrep.h"
#include "dfsgates/trotter.h"

namespace dfsgates {

inline constexpr int kPhysicalDim = 64;

/// Permutation matrix exchanging spins i and j. Throws std::invalid_argument
/// unless 1 <= i < j <= 6.
RealMatrix physical_swap(int i, int j);

/// Linear extension of the permutation action to the group algebra.
Matrix physical_element(const GroupAlgebraElement &x);

/// Logical |00>, |01>, |10>, |11> in one sector.
/// Spin 1: |x up> (x) |y up>. Spin 0: (|x up>|y down> - |x down>|y up>)/sqrt2.
struct LogicalFrame {
    SpinSector sector;
    std::array<Vector, 4> vectors;

    /// 64 x 4 matrix with the frame vectors as columns.
    Matrix matrix() const;
};

LogicalFrame logical_frame(SpinSector sector);

/// F^dag rho_phys(x) F for the frame matrix F.
Matrix oracle_projected_rep(const GroupAlgebraElement &x, SpinSector sector);

/// Orthonormal basis (columns) of the smallest subspace containing the frame
/// and closed under all fifteen swaps: dimension 5 for spin 0, 9 for spin 1.
Matrix reachable_subspace(SpinSector sector);

/// Product of the step exponentials on all 64 states.
Matrix oracle_simulate(const PulseSchedule &schedule);

/// Fidelity and leakage computed from oracle_simulate, with leakage measured
/// into the part of the reachable subspace orthogonal to the frame.
SectorScore oracle_score(const PulseSchedule &schedule, SpinSector sector, const Matrix &target);

/// Same, reusing an already simulated 64 x 64 unitary.
SectorScore oracle_score(const Matrix &physical_unitary, SpinSector sector, const Matrix &target);

}  // namespace dfsgates

#endif
