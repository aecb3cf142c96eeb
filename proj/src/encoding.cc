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
#include "dfsgates/encoding.h"

#include <cmath>
#include <utility>
#include <vector>

namespace dfsgates {

namespace {

struct TableauTerm {
    double coefficient;
    std::vector<std::vector<int>> rows;
};

using EmbeddedVector = std::vector<TableauTerm>;

// Images of [1 3/2]x[4 6/5], [1 3/2]x[4 5/6], [1 2/3]x[4 6/5], [1 2/3]x[4 5/6].
std::array<EmbeddedVector, 4> spin0_embedding() {
    const double h = 0.5;
    const double s = std::sqrt(3.0) / 2.0;
    return {{
        {{h, {{1, 3, 5}, {2, 4, 6}}}, {-s, {{1, 3, 4}, {2, 5, 6}}}},
        {{-s, {{1, 3, 5}, {2, 4, 6}}}, {-h, {{1, 3, 4}, {2, 5, 6}}}},
        {{h, {{1, 2, 5}, {3, 4, 6}}}, {-s, {{1, 2, 4}, {3, 5, 6}}}},
        {{-s, {{1, 2, 5}, {3, 4, 6}}}, {-h, {{1, 2, 4}, {3, 5, 6}}}},
    }};
}

std::array<EmbeddedVector, 4> spin1_embedding() {
    const double h = 0.5;
    const double s = std::sqrt(3.0) / 2.0;
    const double s6 = std::sqrt(3.0) / 6.0;
    const double sixth = 1.0 / 6.0;
    const double w = 2.0 * std::sqrt(2.0) / 3.0;
    return {{
        {{h, {{1, 3, 5, 6}, {2, 4}}}, {-s, {{1, 3, 4, 6}, {2, 5}}}},
        {{s6, {{1, 3, 5, 6}, {2, 4}}}, {sixth, {{1, 3, 4, 6}, {2, 5}}}, {-w, {{1, 3, 4, 5}, {2, 6}}}},
        {{h, {{1, 2, 5, 6}, {3, 4}}}, {-s, {{1, 2, 4, 6}, {3, 5}}}},
        {{s6, {{1, 2, 5, 6}, {3, 4}}}, {sixth, {{1, 2, 4, 6}, {3, 5}}}, {-w, {{1, 2, 4, 5}, {3, 6}}}},
    }};
}

Projector build_projector(SpinSector sector) {
    const auto basis = computational_basis(sector);
    RealMatrix rows(4, basis.vectors[0].size());
    for (int k = 0; k < 4; ++k) {
        rows.row(k) = basis.vectors[k].transpose();
    }
    return {sector, std::move(rows)};
}

// Within-block dictionary: coefficient rows give (X, Z) on the block's qubit.
struct LocalIdentity {
    std::pair<int, int> first;  // positions within the block, 1..3
    std::pair<int, int> second;
    double coeffs[2][2];
};

const std::array<LocalIdentity, 3> &local_identities() {
    static const double r = 1.0 / std::sqrt(3.0);
    static const std::array<LocalIdentity, 3> table{{
        {{1, 2}, {1, 3}, {{-r, -2.0 * r}, {-1.0, 0.0}}},
        {{1, 2}, {2, 3}, {{r, 2.0 * r}, {-1.0, 0.0}}},
        {{1, 3}, {2, 3}, {{-r, r}, {1.0, 1.0}}},
    }};
    return table;
}

}  // namespace

Partition irrep_of(SpinSector sector) {
    return sector == SpinSector::Spin0 ? Partition({3, 3}) : Partition({4, 2});
}

std::string to_string(SpinSector sector) {
    return sector == SpinSector::Spin0 ? "spin0" : "spin1";
}

SpinSector parse_sector(const std::string &text) {
    if (text == "0" || text == "spin0") {
        return SpinSector::Spin0;
    }
    if (text == "1" || text == "spin1") {
        return SpinSector::Spin1;
    }
    throw std::invalid_argument("unknown spin sector: " + text);
}

ComputationalBasis computational_basis(SpinSector sector) {
    const auto &rep = young_rep(irrep_of(sector));
    const auto embedding = sector == SpinSector::Spin0 ? spin0_embedding() : spin1_embedding();
    ComputationalBasis out{sector, {}};
    for (int k = 0; k < 4; ++k) {
        RealVector v = RealVector::Zero(rep.dim());
        for (const auto &term : embedding[k]) {
            v(rep.index_of(StandardTableau(term.rows))) += term.coefficient;
        }
        out.vectors[k] = std::move(v);
    }
    return out;
}

const Projector &projector(SpinSector sector) {
    static const Projector spin0 = build_projector(SpinSector::Spin0);
    static const Projector spin1 = build_projector(SpinSector::Spin1);
    return sector == SpinSector::Spin0 ? spin0 : spin1;
}

Matrix leakage_projector(SpinSector sector) {
    const auto &pi = projector(sector).rows;
    return (RealMatrix::Identity(pi.cols(), pi.cols()) - pi.transpose() * pi).cast<Complex>();
}

Matrix projected_rep(const GroupAlgebraElement &x, SpinSector sector) {
    const Matrix pi = projector(sector).rows.cast<Complex>();
    return pi * young_rep(irrep_of(sector)).element(x) * pi.transpose();
}

// ------------------------------------------------------------------- Paulis

std::string PauliWord::str() const {
    static const char letters[] = {'I', 'X', 'Y', 'Z'};
    return {letters[static_cast<int>(first)], letters[static_cast<int>(second)]};
}

PauliWord PauliWord::parse(const std::string &text) {
    auto letter = [&](char c) {
        switch (c) {
            case 'I':
                return Pauli::I;
            case 'X':
                return Pauli::X;
            case 'Y':
                return Pauli::Y;
            case 'Z':
                return Pauli::Z;
        }
        throw std::invalid_argument("bad Pauli word: " + text);
    };
    if (text.size() != 2) {
        throw std::invalid_argument("bad Pauli word: " + text);
    }
    return {letter(text[0]), letter(text[1])};
}

Matrix pauli_matrix(Pauli p) {
    Matrix m(2, 2);
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, -kI, kI, 0;
            break;
        case Pauli::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

Matrix pauli_matrix(PauliWord w) {
    return kron(pauli_matrix(w.first), pauli_matrix(w.second));
}

Matrix to_matrix(const PauliCombination &combination) {
    Matrix m = Matrix::Zero(4, 4);
    for (const auto &[word, c] : combination) {
        m += c * pauli_matrix(word);
    }
    return m;
}

const std::array<Transposition, 9> &cross_transpositions() {
    static const std::array<Transposition, 9> list{{{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}}};
    return list;
}

const std::array<PauliWord, 9> &cross_table_targets() {
    using P = Pauli;
    static const std::array<PauliWord, 9> list{{{P::I, P::I},
                                                {P::I, P::X},
                                                {P::I, P::Z},
                                                {P::X, P::I},
                                                {P::Z, P::I},
                                                {P::X, P::X},
                                                {P::X, P::Z},
                                                {P::Z, P::X},
                                                {P::Z, P::Z}}};
    return list;
}

const std::array<std::array<double, 9>, 9> &cross_table() {
    static const double r = std::sqrt(3.0);
    static const double f = 0.2;
    static const std::array<std::array<double, 9>, 9> table{{
        {f, f, f, f, f, f, f, f, f},
        {-r, r, 0, -r, r, 0, -r, r, 0},
        {-1, -1, 2, -1, -1, 2, -1, -1, 2},
        {-r, -r, -r, r, r, r, 0, 0, 0},
        {-1, -1, -1, -1, -1, -1, 2, 2, 2},
        {1.5, -1.5, 0, -1.5, 1.5, 0, 0, 0, 0},
        {r / 2, r / 2, -r, -r / 2, -r / 2, r, 0, 0, 0},
        {r / 2, -r / 2, 0, r / 2, -r / 2, 0, -r, r, 0},
        {0.5, 0.5, -1, 0.5, 0.5, -1, -1, -1, 2},
    }};
    return table;
}

SectorScaling sector_scaling(SpinSector sector) {
    return sector == SpinSector::Spin0 ? SectorScaling{-3.0, -0.2} : SectorScaling{1.0, 1.0};
}

CheckReport verify_local_pauli_table(SpinSector sector) {
    CheckReport report{"local Pauli table " + to_string(sector), {}};
    const int offsets[2] = {0, 3};
    for (int block = 0; block < 2; ++block) {
        const int o = offsets[block];
        const Matrix x = pauli_matrix(block == 0 ? PauliWord{Pauli::X, Pauli::I} : PauliWord{Pauli::I, Pauli::X});
        const Matrix z = pauli_matrix(block == 0 ? PauliWord{Pauli::Z, Pauli::I} : PauliWord{Pauli::I, Pauli::Z});
        for (const auto &id : local_identities()) {
            const Transposition t1(id.first.first + o, id.first.second + o);
            const Transposition t2(id.second.first + o, id.second.second + o);
            const Matrix p1 = projected_rep(GroupAlgebraElement::transposition(6, t1), sector);
            const Matrix p2 = projected_rep(GroupAlgebraElement::transposition(6, t2), sector);
            const Matrix targets[2] = {x, z};
            const char *names[2] = {block == 0 ? "XI" : "IX", block == 0 ? "ZI" : "IZ"};
            for (int r = 0; r < 2; ++r) {
                const Matrix lhs = id.coeffs[r][0] * p1 + id.coeffs[r][1] * p2;
                report.add(to_string(sector) + " " + t1.str() + t2.str() + " -> " + names[r], max_abs(lhs - targets[r]),
                           1e-12);
            }
        }
    }
    return report;
}

CheckReport verify_cross_pauli_table(SpinSector sector) {
    CheckReport report{"cross Pauli table " + to_string(sector), {}};
    const auto [a, b] = sector_scaling(sector);
    std::array<Matrix, 9> projected;
    for (int k = 0; k < 9; ++k) {
        projected[k] = projected_rep(GroupAlgebraElement::transposition(6, cross_transpositions()[k]), sector);
    }
    for (int r = 0; r < 9; ++r) {
        Matrix lhs = Matrix::Zero(4, 4);
        for (int k = 0; k < 9; ++k) {
            lhs += cross_table()[r][k] * projected[k];
        }
        const double scale = r == 0 ? a * b : a;
        const Matrix rhs = scale * pauli_matrix(cross_table_targets()[r]);
        report.add(to_string(sector) + " row " + std::to_string(r + 1) + " (" + cross_table_targets()[r].str() + ")",
                   max_abs(lhs - rhs), 1e-12);
    }
    return report;
}

PauliHamiltonian hamiltonian_from_pauli(const PauliCombination &target, SpinSector sector) {
    const auto scaling = sector_scaling(sector);
    const auto &targets = cross_table_targets();
    std::array<double, 9> weights{};
    for (const auto &[word, c] : target) {
        if (word.first == Pauli::Y || word.second == Pauli::Y) {
            throw UnsupportedPauliError("Pauli word " + word.str() +
                                        " contains Y; realize it by conjugating an X/Z Hamiltonian");
        }
        int row = -1;
        for (int r = 0; r < 9; ++r) {
            if (targets[r] == word) {
                row = r;
            }
        }
        const double inverse_scale = row == 0 ? 1.0 / (scaling.a * scaling.b) : 1.0 / scaling.a;
        for (int k = 0; k < 9; ++k) {
            weights[k] += c * inverse_scale * cross_table()[row][k];
        }
    }
    std::map<Transposition, double> coefficients;
    for (int k = 0; k < 9; ++k) {
        if (std::abs(weights[k]) > 1e-15) {
            coefficients[cross_transpositions()[k]] = weights[k];
        }
    }
    return {GroupAlgebraElement::from_transpositions(6, coefficients), scaling};
}

}  // namespace dfsgates
