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

#include "dfsgates/metrics.h"
#include "test_util.h"

using namespace dfsgates;

namespace {

// Identity outside the computational subspace, target inside it.
Matrix extend(const Matrix &target, SpinSector s) {
    Matrix pit = projector(s).rows.transpose().cast<Complex>();
    return pit * target * pit.adjoint() + leakage_projector(s);
}

struct ReferenceRow {
    int n;
    int cycles;
    double time;
    double fidelity;
    double leakage;
};

}  // namespace

TEST(Simulate, EmptyScheduleIsIdentity) {
    PulseSchedule s;
    for (SpinSector sec : kSectors) {
        Matrix g = simulate(s, sec);
        EXPECT_LT(max_abs(g - Matrix::Identity(g.rows(), g.cols())), 1e-15);
        EXPECT_NEAR(entanglement_fidelity(g, target_matrix(TargetGate::Identity), sec), 1.0, 1e-15);
        EXPECT_NEAR(entanglement_fidelity(g, cnot_matrix(), sec), 0.25, 1e-15);
    }
}

TEST(Simulate, SingleSwapStep) {
    PulseSchedule s;
    s.steps = {PulseStep::make({{{1, 2}, testutil::kPi / 2.0}}, 0.0, StepKind::Hamiltonian)};
    Matrix r = young_rep(Partition({3, 3})).transposition({1, 2}).cast<Complex>();
    Matrix g = simulate(s, SpinSector::Spin0);
    // r is an involution, so exp(i pi/2 r) = i r.
    EXPECT_LT(max_abs(g - Complex(0.0, 1.0) * r), 1e-12);
    EXPECT_TRUE(is_unitary(g, 1e-12));
}

TEST(Fidelity, ExactTargetAndPhaseInvariance) {
    std::mt19937_64 rng(3);
    for (SpinSector s : kSectors) {
        Matrix c = extend(cnot_matrix(), s);
        EXPECT_NEAR(entanglement_fidelity(c, cnot_matrix(), s), 1.0, 1e-14);
        EXPECT_NEAR(leakage(c, cnot_matrix(), s), 0.0, 1e-14);
        Matrix g = simulate(cnot_spin_independent(3), s);
        double f = entanglement_fidelity(g, cnot_matrix(), s);
        double l = leakage(g, cnot_matrix(), s);
        for (double theta : {0.3, 1.7, -2.9}) {
            Matrix gp = std::exp(Complex(0.0, theta)) * g;
            EXPECT_NEAR(entanglement_fidelity(gp, cnot_matrix(), s), f, 1e-12);
            EXPECT_NEAR(leakage(gp, cnot_matrix(), s), l, 1e-12);
        }
        EXPECT_LE(l, 1.0 - f + 1e-9);
        // The printed trace form of the leakage.
        Matrix pit = projector(s).rows.transpose().cast<Complex>();
        Matrix ce = extend(cnot_matrix(), s);
        Complex tr = (pit.adjoint() * g.adjoint() * ce * leakage_projector(s) * ce.adjoint() * g * pit).trace() / 4.0;
        EXPECT_NEAR(tr.real(), l, 1e-14);
        EXPECT_NEAR(tr.imag(), 0.0, 1e-14);
    }
}

TEST(Fidelity, RandomUnitariesSatisfyLeakageBound) {
    std::mt19937_64 rng(12);
    for (SpinSector s : kSectors) {
        Eigen::Index d = young_rep(irrep_of(s)).dim();
        for (int k = 0; k < 50; k++) {
            Matrix g = testutil::pade_exp(testutil::random_hermitian(d, rng), 0.3);
            double f = entanglement_fidelity(g, cnot_matrix(), s);
            double l = leakage(g, cnot_matrix(), s);
            EXPECT_GE(f, 0.0);
            EXPECT_LE(f, 1.0 + 1e-12);
            EXPECT_GE(l, 0.0);
            EXPECT_LE(l, 1.0 - f + 1e-9);
        }
    }
}

TEST(Report, TableOne) {
    const ReferenceRow rows[] = {{3, 39, 8.5, 0.99136, 0.00552}, {5, 63, 12.5, 0.99888, 0.00070},
                             {9, 111, 20.5, 0.99989, 0.00007}};
    for (const auto &row : rows) {
        SynthesisReport r = report(cnot_spin_independent(row.n), cnot_matrix());
        EXPECT_EQ(r.cycles, row.cycles);
        EXPECT_NEAR(r.normalized_time, row.time, 0.05);
        EXPECT_NEAR(r.score(SpinSector::Spin1).fidelity, row.fidelity, 1e-5);
        EXPECT_NEAR(r.score(SpinSector::Spin1).leakage, row.leakage, 1e-5);
        EXPECT_GE(r.score(SpinSector::Spin0).fidelity, r.score(SpinSector::Spin1).fidelity);
    }
}

TEST(Report, TableTwo) {
    const ReferenceRow rows[] = {{2, 21, 9.8, 0.99849, 0.00067}, {3, 31, 13.8, 0.99970, 0.00014},
                             {4, 41, 17.8, 0.99990, 0.00004}};
    for (const auto &row : rows) {
        SynthesisReport r = report(cnot_spin1(row.n), cnot_matrix());
        EXPECT_EQ(r.cycles, row.cycles);
        EXPECT_NEAR(r.normalized_time, row.time, 0.05);
        EXPECT_NEAR(r.score(SpinSector::Spin1).fidelity, row.fidelity, 1e-5);
        EXPECT_NEAR(r.score(SpinSector::Spin1).leakage, row.leakage, 1e-5);
    }
}

TEST(Report, MonotoneAcrossTabulatedIterations) {
    for (int which : {1, 2}) {
        Table t = make_table(which);
        for (size_t k = 1; k < t.rows.size(); k++) {
            const auto &a = t.rows[k - 1].report.score(SpinSector::Spin1);
            const auto &b = t.rows[k].report.score(SpinSector::Spin1);
            EXPECT_LT(a.fidelity, b.fidelity);
            EXPECT_GT(a.leakage, b.leakage);
        }
    }
}

TEST(Report, CancellationAddsTimeOnly) {
    Table t = make_table(1, true, CancelMode::FullSum);
    ASSERT_EQ(t.rows.size(), 6u);
    for (size_t k = 0; k < t.rows.size(); k += 2) {
        const auto &plain = t.rows[k].report;
        const auto &cancelled = t.rows[k + 1].report;
        EXPECT_EQ(t.rows[k + 1].variant, "full-sum");
        EXPECT_NEAR(cancelled.normalized_time - plain.normalized_time, kCancellationTimeIncrease, 0.05);
        EXPECT_EQ(cancelled.cycles, plain.cycles);
        EXPECT_EQ(cancelled.negative_hamiltonian_steps, 0);
        for (SpinSector s : kSectors) {
            EXPECT_NEAR(cancelled.score(s).fidelity, plain.score(s).fidelity, 1e-10);
            EXPECT_NEAR(cancelled.score(s).leakage, plain.score(s).leakage, 1e-10);
        }
    }
}

TEST(Tables, RenderedFormats) {
    Table t = make_table(1);
    std::string md = render_table(t, TableFormat::Markdown);
    EXPECT_NE(md.find("| 3 | plain | 39 | 8.5 | 0.99136 | 0.00552 |"), std::string::npos) << md;
    EXPECT_NE(md.find("| 9 | plain | 111 | 20.5 | 0.99989 | 0.00007 |"), std::string::npos) << md;
    std::string csv = render_table(make_table(2), TableFormat::Csv);
    EXPECT_NE(csv.find("2,plain,21,9.8,0.99849,0.00067"), std::string::npos) << csv;
    EXPECT_NE(csv.find("3,plain,31,13.8,0.99970,0.00014"), std::string::npos) << csv;
    auto j = nlohmann::json::parse(render_table(t, TableFormat::Json));
    ASSERT_EQ(j["rows"].size(), 3u);
    for (size_t k = 0; k < 3; k++) {
        const auto &r = t.rows[k].report;
        EXPECT_EQ(j["rows"][k]["cycles"].get<int>(), r.cycles);
        EXPECT_EQ(j["rows"][k]["normalized_time"].get<double>(), r.normalized_time);
        EXPECT_EQ(j["rows"][k]["sectors"]["spin1"]["fidelity"].get<double>(), r.score(SpinSector::Spin1).fidelity);
    }
    EXPECT_EQ(j["rows"][0]["benchmark"]["cycles"].get<int>(), 13);
    EXPECT_THROW(make_table(3), std::invalid_argument);
    EXPECT_THROW(parse_table_format("xml"), std::invalid_argument);
}
