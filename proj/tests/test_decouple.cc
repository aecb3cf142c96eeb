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

#include "dfsgates/decouple.h"
#include "dfsgates/metrics.h"
#include "dfsgates/trotter.h"
#include "test_util.h"

using namespace dfsgates;

namespace {

class DecoupleTest : public ::testing::TestWithParam<SpinSector> {
   protected:
    Eigen::Index dim() const {
        return GetParam() == SpinSector::Spin0 ? 5 : 9;
    }
    Matrix rep(const GroupAlgebraElement &x) const {
        return young_rep(irrep_of(GetParam())).element(x);
    }
    Matrix in_adapted(const Matrix &m) const {
        Matrix b = adapted_basis(GetParam()).cast<Complex>();
        return b * m * b.adjoint();
    }
};

Matrix diag(std::initializer_list<Complex> d) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(d.size()));
    Eigen::Index k = 0;
    for (Complex c : d) {
        v(k++) = c;
    }
    return v.asDiagonal();
}

}  // namespace

TEST(LocalSums, ExactThirds) {
    LocalSums s = local_sums();
    auto a = s.sigma_a.as_exchange_combination();
    auto b = s.sigma_b.as_exchange_combination();
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->first.size(), 3u);
    EXPECT_EQ(b->first.size(), 3u);
    for (const auto &[t, v] : a->first) {
        EXPECT_LE(t.j, 3);
        EXPECT_DOUBLE_EQ(v, 1.0 / 3.0);
    }
    for (const auto &[t, v] : b->first) {
        EXPECT_GE(t.i, 4);
        EXPECT_DOUBLE_EQ(v, 1.0 / 3.0);
    }
}

TEST_P(DecoupleTest, LocalSumsInAdaptedBasis) {
    LocalSums s = local_sums();
    Matrix a = in_adapted(rep(s.sigma_a));
    Matrix b = in_adapted(rep(s.sigma_b));
    if (GetParam() == SpinSector::Spin0) {
        EXPECT_LT(max_abs(a - diag({0, 0, 0, 0, 1})), 1e-12);
        EXPECT_LT(max_abs(b - diag({0, 0, 0, 0, 1})), 1e-12);
    } else {
        EXPECT_LT(max_abs(a - diag({0, 0, 0, 0, 1, 1, 0, 0, 1})), 1e-12);
        EXPECT_LT(max_abs(b - diag({0, 0, 0, 0, 0, 0, 1, 1, 1})), 1e-12);
    }
    EXPECT_LT(max_abs(commutator(rep(s.sigma_a), rep(s.sigma_b))), 1e-12);
}

TEST_P(DecoupleTest, DecouplersFixTheComputationalSubspace) {
    SpinSector s = GetParam();
    for (auto variant : {DecouplerVariant::PairSet, DecouplerVariant::PowerSet}) {
        for (const Matrix &u : decoupler(s, variant).unitaries) {
            EXPECT_TRUE(is_unitary(u, 1e-12));
            EXPECT_LT(max_abs(computational_block(u, s) - Matrix::Identity(4, 4)), 1e-12);
        }
    }
    Matrix u = decoupler_u(s);
    EXPECT_LT(max_abs(u * u * u * u - Matrix::Identity(dim(), dim())), 1e-12);
    EXPECT_LT(max_abs(u * u - decoupler_a(s) * decoupler_b(s)), 1e-12);
}

TEST_P(DecoupleTest, UaSpectrum) {
    Eigen::ComplexEigenSolver<Matrix> es(decoupler_a(GetParam()));
    int minus = 0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); k++) {
        Complex e = es.eigenvalues()(k);
        EXPECT_LT(std::min(std::abs(e - 1.0), std::abs(e + 1.0)), 1e-12);
        minus += e.real() < 0 ? 1 : 0;
    }
    EXPECT_EQ(minus, GetParam() == SpinSector::Spin0 ? 1 : 3);
}

TEST_P(DecoupleTest, MapRejectsBadInput) {
    Matrix h = Matrix::Zero(dim(), dim());
    h(0, 1) = 1.0;
    EXPECT_THROW(decouple_map(h, GetParam(), DecouplerVariant::PairSet), std::invalid_argument);
    EXPECT_THROW(decouple_map(Matrix::Identity(3, 3), GetParam(), DecouplerVariant::PairSet), std::invalid_argument);
}

TEST_P(DecoupleTest, MapProperties) {
    SpinSector s = GetParam();
    std::mt19937_64 rng(99);
    Matrix pit = projector(s).rows.transpose().cast<Complex>();
    Matrix perp = leakage_projector(s);
    for (int trial = 0; trial < 100; trial++) {
        Matrix h1 = testutil::random_hermitian(dim(), rng);
        Matrix h2 = testutil::random_hermitian(dim(), rng);
        for (auto v : {DecouplerVariant::PairSet, DecouplerVariant::PowerSet}) {
            Matrix d1 = decouple_map(h1, s, v);
            ASSERT_LT(max_abs(pit.adjoint() * d1 * perp), 1e-12);
            ASSERT_LT(max_abs(computational_block(d1, s) - computational_block(h1, s)), 1e-12);
            ASSERT_LT(max_abs(decouple_map(d1, s, v) - d1), 1e-12);
            ASSERT_LT(max_abs(d1 - d1.adjoint()), 1e-12);
            ASSERT_LT(std::abs(d1.trace() - h1.trace()), 1e-12);
            Matrix lin = decouple_map(2.0 * h1 - 0.5 * h2, s, v);
            ASSERT_LT(max_abs(lin - (2.0 * d1 - 0.5 * decouple_map(h2, s, v))), 1e-12);
        }
        ASSERT_LT(off_block_magnitude(decouple_map(h1, s, DecouplerVariant::PairSet), s), 1e-12);
    }
}

TEST_P(DecoupleTest, ComputationalOperatorIsFixedPoint) {
    SpinSector s = GetParam();
    std::mt19937_64 rng(5);
    Matrix pit = projector(s).rows.transpose().cast<Complex>();
    Matrix h = pit * testutil::random_hermitian(4, rng) * pit.adjoint();
    EXPECT_LT(max_abs(decouple_map(h, s, DecouplerVariant::PowerSet) - h), 1e-12);
}

// PowerSet puts phase i on both the (1,0) and (0,1) blocks and keeps their
// coupling; PairSet removes it. Everything else agrees.
TEST_P(DecoupleTest, VariantsDifferOnlyInMixedBlockCoupling) {
    SpinSector s = GetParam();
    std::mt19937_64 rng(17);
    Matrix h = testutil::random_hermitian(dim(), rng);
    Matrix diff = in_adapted(decouple_map(h, s, DecouplerVariant::PairSet) -
                             decouple_map(h, s, DecouplerVariant::PowerSet));
    if (s == SpinSector::Spin0) {
        EXPECT_LT(max_abs(diff), 1e-12);
        return;
    }
    Matrix adapted_h = in_adapted(h);
    EXPECT_LT(max_abs(diff.block(4, 6, 2, 2) + adapted_h.block(4, 6, 2, 2)), 1e-12);
    diff.block(4, 6, 2, 2).setZero();
    diff.block(6, 4, 2, 2).setZero();
    EXPECT_LT(max_abs(diff), 1e-12);
}

TEST_P(DecoupleTest, AdaptedBasisBlocks) {
    RealMatrix b = adapted_basis(GetParam());
    EXPECT_LT((b * b.transpose() - RealMatrix::Identity(dim(), dim())).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((b.topRows(4) - projector(GetParam()).rows).cwiseAbs().maxCoeff(), 1e-12);
    auto sizes = adapted_block_sizes(GetParam());
    EXPECT_EQ(sizes, GetParam() == SpinSector::Spin0 ? std::vector<int>({4, 1}) : std::vector<int>({4, 2, 2, 1}));
}

INSTANTIATE_TEST_SUITE_P(BothSectors, DecoupleTest, ::testing::Values(SpinSector::Spin0, SpinSector::Spin1),
                         [](const auto &info) { return to_string(info.param); });

TEST(Decouple, CnotHamiltonianBlock) {
    Matrix n = young_rep(irrep_of(SpinSector::Spin1)).element(cnot_hamiltonian());
    Matrix d = decouple_map(n, SpinSector::Spin1, DecouplerVariant::PairSet);
    Matrix half = (testutil::pauli2("IX") - testutil::pauli2("ZX")) / 2.0;
    EXPECT_LT(max_abs(computational_block(d, SpinSector::Spin1) - half), 1e-12);
    EXPECT_LT(off_block_magnitude(d, SpinSector::Spin1), 1e-12);
}
