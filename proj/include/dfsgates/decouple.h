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
#ifndef DFSGATES_DECOUPLE_H
#define DFSGATES_DECOUPLE_H

// Local sums Sigma_a = ((12)+(13)+(23))/3, Sigma_b = ((45)+(46)+(56))/3, the
// decoupler unitaries built from them, and the decoupling average
// D(H) = 1/4 sum_j U_j H U_j^dagger.

#include <array>
#include <utility>
#include <vector>

#include "dfsgates/encoding.h"
#include "dfsgates/linalg.h"
#include "dfsgates/symrep.h"

namespace dfsgates {

enum class DecouplerVariant {
    PairSet,   // {1, U_a, U_b, U_b U_a}
    PowerSet,  // {1, U, U^dagger, U^2}
};

struct LocalSums {
    GroupAlgebraElement sigma_a;
    GroupAlgebraElement sigma_b;
};

LocalSums local_sums();

/// U_a = exp(i pi rho(Sigma_a)), U_b = exp(i pi rho(Sigma_b)),
/// U = exp(i pi/2 rho(Sigma_a + Sigma_b)).
Matrix decoupler_a(SpinSector sector);
Matrix decoupler_b(SpinSector sector);
Matrix decoupler_u(SpinSector sector);

struct DecouplerSet {
    DecouplerVariant variant;
    SpinSector sector;
    std::array<Matrix, 4> unitaries;
};

DecouplerSet decoupler(SpinSector sector, DecouplerVariant variant);

/// 1/4 sum_j U_j H U_j^dagger. Throws std::invalid_argument if H is not
/// Hermitian or has the wrong dimension.
Matrix decouple_map(const Matrix &hermitian, SpinSector sector, DecouplerVariant variant);

/// Orthonormal basis of the irrep (rows) adapted to the decoupling: the four
/// computational vectors, then the joint (Sigma_a, Sigma_b) = (1, 0) block,
/// the (0, 1) block and the (1, 1) block. Blocks beyond the computational one
/// come from Gram-Schmidt on coordinate vectors projected into each block.
RealMatrix adapted_basis(SpinSector sector);

/// Block sizes of adapted_basis(): {4, 1} for spin 0, {4, 2, 2, 1} for spin 1.
std::vector<int> adapted_block_sizes(SpinSector sector);

/// Largest entry of B M B^T outside the diagonal blocks of the adapted basis.
double off_block_magnitude(const Matrix &m, SpinSector sector);

}  // namespace dfsgates

#endif
