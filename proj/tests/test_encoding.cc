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
#include <gtest/gtest.h>

#include "dfsgates/encoding.h"
#include "dfsgates/trotter.h"
#include "test_util.h"

using namespace dfsgates;
using testutil::pauli2;

namespace {

GroupAlgebraElement combo(std::map<Transposition, double> c) {
    return GroupAlgebraElement::from_transpositions(6, c);
}

class SectorTest : public ::testing::TestWithParam<SpinSector> {};

}  // namespace

TEST_P(SectorTest, ProjectorRowsAreOrthonormal) {
    const auto &p = projector(GetParam()).rows;
    EXPECT_EQ(p.rows(), 4);
    EXPECT_EQ(p.cols(), GetParam() == SpinSector::Spin0 ? 5 : 9);
    EXPECT_LT((p * p.transpose() - RealMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-14);
    Matrix perp = leakage_projector(GetParam());
    EXPECT_LT(max_abs(perp * perp - perp), 1e-14);
    EXPECT_NEAR(perp.trace().real(), p.cols() - 4.0, 1e-14);
}

TEST_P(SectorTest, LocalExchangesGiveSingleQubitPaulis) {
    SpinSector s = GetParam();
    double r3 = std::sqrt(3.0);
    EXPECT_LT(max_abs(projected_rep(combo({{{1, 2}, -1.0 / r3}, {{1, 3}, -2.0 / r3}}), s) - pauli2("XI")), 1e-12);
    EXPECT_LT(max_abs(projected_rep(combo({{{1, 2}, -1.0}}), s) - pauli2("ZI")), 1e-12);
    EXPECT_LT(max_abs(projected_rep(combo({{{4, 5}, -1.0 / r3}, {{4, 6}, -2.0 / r3}}), s) - pauli2("IX")), 1e-12);
    EXPECT_LT(max_abs(projected_rep(combo({{{4, 5}, -1.0}}), s) - pauli2("IZ")), 1e-12);
    EXPECT_TRUE(verify_local_pauli_table(s).ok());
}

TEST_P(SectorTest, CrossTableRowByRow) {
    SpinSector s = GetParam();
    SectorScaling sc = sector_scaling(s);
    const auto &table = cross_table();
    const auto &ts = cross_transpositions();
    const char *targets[9] = {"II", "IX", "IZ", "XI", "ZI", "XX", "XZ", "ZX", "ZZ"};
    for (int r = 0; r < 9; r++) {
        Matrix lhs = Matrix::Zero(4, 4);
        for (int k = 0; k < 9; k++) {
            lhs += table[r][k] * projected_rep(GroupAlgebraElement::transposition(6, ts[k]), s);
        }
        Matrix rhs = sc.a * pauli2(targets[r]) * (r == 0 ? sc.b : 1.0);
        EXPECT_LT(max_abs(lhs - rhs), 1e-12) << "row " << r + 1;
    }
    EXPECT_TRUE(verify_cross_pauli_table(s).ok());
}

TEST_P(SectorTest, HamiltonianFromPauliHitsTarget) {
    SpinSector s = GetParam();
    for (const char *w : {"II", "IX", "IZ", "XI", "ZI", "XX", "XZ", "ZX", "ZZ"}) {
        auto h = hamiltonian_from_pauli({{PauliWord::parse(w), 0.7}}, s);
        EXPECT_LT(max_abs(projected_rep(h.element, s) - 0.7 * pauli2(w)), 1e-12) << w;
    }
    PauliCombination mix{{PauliWord::parse("XX"), 1.0}, {PauliWord::parse("ZI"), -0.25}};
    Matrix target = pauli2("XX") - 0.25 * pauli2("ZI");
    EXPECT_LT(max_abs(projected_rep(hamiltonian_from_pauli(mix, s).element, s) - target), 1e-12);
    EXPECT_THROW(hamiltonian_from_pauli({{PauliWord::parse("XY"), 1.0}}, s), UnsupportedPauliError);
}

INSTANTIATE_TEST_SUITE_P(BothSectors, SectorTest, ::testing::Values(SpinSector::Spin0, SpinSector::Spin1),
                         [](const auto &info) { return to_string(info.param); });

TEST(Encoding, ScalingConstants) {
    EXPECT_DOUBLE_EQ(sector_scaling(SpinSector::Spin1).a, 1.0);
    EXPECT_DOUBLE_EQ(sector_scaling(SpinSector::Spin1).b, 1.0);
    EXPECT_DOUBLE_EQ(sector_scaling(SpinSector::Spin0).a, -3.0);
    EXPECT_DOUBLE_EQ(sector_scaling(SpinSector::Spin0).b, -0.2);
}

TEST(Encoding, CnotHamiltoniansProjectToCnotBlock) {
    Matrix half = (pauli2("IX") - pauli2("ZX")) / 2.0;
    EXPECT_LT(max_abs(projected_rep(cnot_hamiltonian(), SpinSector::Spin1) - half), 1e-12);
    EXPECT_LT(max_abs(projected_rep(cnot_hamiltonian(), SpinSector::Spin0) + 3.0 * half), 1e-12);
    EXPECT_LT(max_abs(projected_rep(spin1_cnot_hamiltonian(), SpinSector::Spin1) - half), 1e-12);
    Matrix expected = Matrix::Zero(4, 4);
    expected(2, 3) = expected(3, 2) = 1.0;
    EXPECT_LT(max_abs(half - expected), 1e-15);
}

TEST(Encoding, IrrepIndependentXXExample) {
    auto e = combo({{{1, 4}, 1.0}, {{1, 5}, -1.0}, {{2, 4}, -1.0}, {{2, 5}, 1.0}});
    double t = 3.0 * testutil::kPi / 4.0;
    Matrix g0 = testutil::pade_exp(projected_rep(e, SpinSector::Spin0), t);
    Matrix g1 = testutil::pade_exp(projected_rep(e, SpinSector::Spin1), t);
    Matrix ixx = Complex(0.0, 1.0) * pauli2("XX");
    EXPECT_LT(max_abs(g0 - ixx), 1e-12);
    EXPECT_LT(max_abs(g1 - ixx), 1e-12);
    EXPECT_LT(max_abs(g0 - testutil::pade_exp(pauli2("XX"), testutil::kPi / 2.0)), 1e-12);
}

TEST(Encoding, PauliWordParsing) {
    EXPECT_EQ(PauliWord::parse("ZX").str(), "ZX");
    EXPECT_THROW(PauliWord::parse("Q"), std::invalid_argument);
    EXPECT_THROW(PauliWord::parse("XXX"), std::invalid_argument);
    EXPECT_LT(max_abs(pauli_matrix(PauliWord::parse("XZ")) - pauli2("XZ")), 1e-15);
    EXPECT_LT(max_abs(pauli_matrix(PauliWord::parse("YI")) - pauli2("YI")), 1e-15);
    EXPECT_EQ(parse_sector("spin0"), SpinSector::Spin0);
    EXPECT_EQ(parse_sector("1"), SpinSector::Spin1);
    EXPECT_THROW(parse_sector("2"), std::invalid_argument);
}
