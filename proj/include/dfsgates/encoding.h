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
#ifndef DFSGATES_ENCODING_H
#define DFSGATES_ENCODING_H

// Two logical qubits (spins {1,2,3} and {4,5,6}) embedded in the S_6 irreps
// (3,3) (total spin 0) and (4,2) (total spin 1), and the dictionaries between
// projected exchange operators and logical Pauli products.
//
// Logical basis order is |00>, |01>, |10>, |11>; qubit one is block {1,2,3}.
// Paulis: X = [[0,1],[1,0]], Y = [[0,-i],[i,0]], Z = [[1,0],[0,-1]].

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "dfsgates/check.h"
#include "dfsgates/linalg.h"
#include "dfsgates/symrep.h"

namespace dfsgates {

enum class SpinSector { Spin0, Spin1 };

inline constexpr std::array<SpinSector, 2> kSectors{SpinSector::Spin0, SpinSector::Spin1};

Partition irrep_of(SpinSector sector);
std::string to_string(SpinSector sector);
/// Accepts "0"/"1"/"spin0"/"spin1". Throws std::invalid_argument otherwise.
SpinSector parse_sector(const std::string &text);

struct ComputationalBasis {
    SpinSector sector;
    /// vectors[k] holds coefficients over young_rep(irrep_of(sector)).basis().
    std::array<RealVector, 4> vectors;
};

ComputationalBasis computational_basis(SpinSector sector);

/// 4 x dim matrix whose rows are the computational basis vectors.
struct Projector {
    SpinSector sector;
    RealMatrix rows;
};

const Projector &projector(SpinSector sector);

/// I - Pi^T Pi on the full irrep.
Matrix leakage_projector(SpinSector sector);

/// Pi rho(x) Pi^T in the logical basis.
Matrix projected_rep(const GroupAlgebraElement &x, SpinSector sector);

enum class Pauli { I, X, Y, Z };

struct PauliWord {
    Pauli first = Pauli::I;
    Pauli second = Pauli::I;

    auto operator<=>(const PauliWord &) const = default;
    std::string str() const;
    /// Two-letter form such as "ZX". Throws std::invalid_argument.
    static PauliWord parse(const std::string &text);
};

using PauliCombination = std::map<PauliWord, double>;

Matrix pauli_matrix(Pauli p);
/// 4 x 4 tensor product, first factor on qubit one.
Matrix pauli_matrix(PauliWord w);
Matrix to_matrix(const PauliCombination &combination);

/// The nine cross-block transpositions (14),(15),(16),(24),...,(36).
const std::array<Transposition, 9> &cross_transpositions();
/// Right-hand side order of the cross table: II, IX, IZ, XI, ZI, XX, XZ, ZX, ZZ.
const std::array<PauliWord, 9> &cross_table_targets();
/// Row r, column k: coefficient of cross_transpositions()[k] for target r.
const std::array<std::array<double, 9>, 9> &cross_table();

/// (a, b) with  table * projected transpositions = a * (b II, IX, ..., ZZ).
struct SectorScaling {
    double a;
    double b;
};
SectorScaling sector_scaling(SpinSector sector);

/// Local-block dictionary: each pair of within-block transpositions, with
/// the 2x2 coefficient block giving (X, Z) on that block's qubit.
CheckReport verify_local_pauli_table(SpinSector sector);
/// Row-by-row check of the 9x9 cross-block dictionary.
CheckReport verify_cross_pauli_table(SpinSector sector);

class UnsupportedPauliError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct PauliHamiltonian {
    GroupAlgebraElement element;
    SectorScaling scaling;
};

/// Real combination of the nine cross-block transpositions whose projection
/// in `sector` is exactly `target`. Targets with a Y factor throw
/// UnsupportedPauliError.
PauliHamiltonian hamiltonian_from_pauli(const PauliCombination &target, SpinSector sector);

}  // namespace dfsgates

#endif
