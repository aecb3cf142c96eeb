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
#include "dfsgates/verify.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "dfsgates/decouple.h"
#include "dfsgates/encoding.h"
#include "dfsgates/metrics.h"
#include "dfsgates/oracle.h"
#include "dfsgates/symrep.h"
#include "dfsgates/trotter.h"

namespace dfsgates {

namespace {

constexpr double kExact = 1e-12;

double dev(const Matrix &a, const Matrix &b) {
    return max_abs(a - b);
}

Matrix real_to_complex(const RealMatrix &m) {
    return m.cast<Complex>();
}

Matrix random_hermitian(Eigen::Index dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Matrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        for (Eigen::Index j = 0; j < dim; j++) {
            m(i, j) = Complex(g(rng), g(rng));
        }
    }
    return (m + m.adjoint()) / 2.0;
}

std::string sector_label(SpinSector s) {
    return to_string(s);
}

GroupAlgebraElement all_transpositions_sum() {
    std::map<Transposition, double> c;
    for (int i = 1; i <= 6; i++) {
        for (int j = i + 1; j <= 6; j++) {
            c[Transposition(i, j)] = 1.0;
        }
    }
    return GroupAlgebraElement::from_transpositions(6, c);
}

Matrix half_ix_minus_zx() {
    return (pauli_matrix(PauliWord{Pauli::I, Pauli::X}) - pauli_matrix(PauliWord{Pauli::Z, Pauli::X})) / 2.0;
}

}  // namespace

CheckReport verify_symrep() {
    CheckReport r{"symrep", {}};
    const std::vector<std::vector<int>> shapes = {{6},          {5, 1},       {4, 2},    {4, 1, 1},
                                                  {3, 3},       {3, 2, 1},    {3, 1, 1, 1}, {2, 2, 2},
                                                  {2, 2, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
    long total = 0;
    for (const auto &parts : shapes) {
        const auto &rep = young_rep(Partition(parts));
        total += static_cast<long>(rep.dim() * rep.dim());
    }
    r.add("sum of squared S6 irrep dimensions = 720", std::abs(static_cast<double>(total - 720)), 0.0);
    r.add("dim (3,3) = 5", std::abs(young_rep(Partition({3, 3})).dim() - 5.0), 0.0);
    r.add("dim (4,2) = 9", std::abs(young_rep(Partition({4, 2})).dim() - 9.0), 0.0);

    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<int> spin(1, 6);
    std::uniform_int_distribution<int> length(1, 8);
    auto random_word = [&]() {
        std::vector<Transposition> w;
        int len = length(rng);
        while (static_cast<int>(w.size()) < len) {
            int a = spin(rng);
            int b = spin(rng);
            if (a != b) {
                w.emplace_back(a, b);
            }
        }
        return w;
    };
    for (const auto &parts : {std::vector<int>{3, 3}, std::vector<int>{4, 2}}) {
        Partition p(parts);
        const auto &rep = young_rep(p);
        Eigen::Index d = rep.dim();
        RealMatrix id = RealMatrix::Identity(d, d);
        double coxeter = 0.0;
        for (int i = 1; i < 6; i++) {
            const auto &a = rep.adjacent(i);
            coxeter = std::max(coxeter, (a * a - id).cwiseAbs().maxCoeff());
            coxeter = std::max(coxeter, (a * a.transpose() - id).cwiseAbs().maxCoeff());
            if (i + 1 < 6) {
                RealMatrix b = a * rep.adjacent(i + 1);
                coxeter = std::max(coxeter, (b * b * b - id).cwiseAbs().maxCoeff());
            }
            for (int j = i + 2; j < 6; j++) {
                RealMatrix b = a * rep.adjacent(j);
                coxeter = std::max(coxeter, (b * b - id).cwiseAbs().maxCoeff());
            }
        }
        r.add("Coxeter relations and orthogonality " + p.str(), coxeter, kExact);

        double hom = 0.0;
        for (int trial = 0; trial < 200; trial++) {
            auto w1 = random_word();
            auto w2 = random_word();
            Permutation g1 = Permutation::identity(6);
            Permutation g2 = Permutation::identity(6);
            RealMatrix m1 = id;
            RealMatrix m2 = id;
            for (const auto &t : w1) {
                g1 = g1 * Permutation::transposition(6, t);
                m1 = m1 * rep.transposition(t);
            }
            for (const auto &t : w2) {
                g2 = g2 * Permutation::transposition(6, t);
                m2 = m2 * rep.transposition(t);
            }
            hom = std::max(hom, (rep.permutation(g1 * g2) - m1 * m2).cwiseAbs().maxCoeff());
        }
        r.add("homomorphism on 200 random word pairs " + p.str(), hom, kExact);
    }
    for (SpinSector s : kSectors) {
        Partition p = irrep_of(s);
        double c = s == SpinSector::Spin0 ? 3.0 : 5.0;
        Matrix m = young_rep(p).element(all_transpositions_sum());
        Matrix expect = Matrix::Identity(m.rows(), m.cols()) * c;
        r.add("sum of all transpositions = " + std::to_string(static_cast<int>(c)) + " I on " + p.str(),
              dev(m, expect), kExact);
    }
    return r;
}

CheckReport verify_encoding() {
    CheckReport r{"encoding", {}};
    for (SpinSector s : kSectors) {
        const RealMatrix &pi = projector(s).rows;
        r.add("projector rows orthonormal " + sector_label(s),
              (pi * pi.transpose() - RealMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), kExact);
        r.append(verify_local_pauli_table(s));
        r.append(verify_cross_pauli_table(s));
    }
    Matrix n1 = projected_rep(cnot_hamiltonian(), SpinSector::Spin1);
    Matrix n0 = projected_rep(cnot_hamiltonian(), SpinSector::Spin0);
    r.add("N projects to (IX - ZX)/2 in spin1", dev(n1, half_ix_minus_zx()), kExact);
    r.add("N projects to -3 (IX - ZX)/2 in spin0", dev(n0, -3.0 * half_ix_minus_zx()), kExact);
    r.add("N1 projects to (IX - ZX)/2 in spin1", dev(projected_rep(spin1_cnot_hamiltonian(), SpinSector::Spin1),
                                                      half_ix_minus_zx()),
          kExact);
    return r;
}

CheckReport verify_decouple() {
    CheckReport r{"decouple", {}};
    LocalSums sums = local_sums();
    std::mt19937_64 rng(7);
    for (SpinSector s : kSectors) {
        std::string tag = " " + sector_label(s);
        Partition p = irrep_of(s);
        const auto &rep = young_rep(p);
        Matrix sa = rep.element(sums.sigma_a);
        Matrix sb = rep.element(sums.sigma_b);
        r.add("Pi Sigma_a Pi = 0" + tag, max_abs(computational_block(sa, s)), kExact);
        r.add("Pi Sigma_b Pi = 0" + tag, max_abs(computational_block(sb, s)), kExact);
        r.add("Sigma_a is a projector" + tag, dev(sa * sa, sa), kExact);
        r.add("Sigma_b is a projector" + tag, dev(sb * sb, sb), kExact);
        r.add("[Sigma_a, Sigma_b] = 0" + tag, max_abs(commutator(sa, sb)), kExact);

        RealMatrix b = adapted_basis(s);
        Matrix bc = real_to_complex(b);
        Eigen::Index d = b.rows();
        Matrix ua = bc * decoupler_a(s) * bc.adjoint();
        Matrix ub = bc * decoupler_b(s) * bc.adjoint();
        Matrix u = bc * decoupler_u(s) * bc.adjoint();
        Eigen::VectorXcd da(d), db(d), du(d);
        if (s == SpinSector::Spin0) {
            da << 1, 1, 1, 1, -1;
            db = da;
            du = da;
        } else {
            da << 1, 1, 1, 1, -1, -1, 1, 1, -1;
            db << 1, 1, 1, 1, 1, 1, -1, -1, -1;
            du << 1, 1, 1, 1, kI, kI, kI, kI, -1;
        }
        r.add("U_a diagonal form" + tag, dev(ua, da.asDiagonal().toDenseMatrix()), kExact);
        r.add("U_b diagonal form" + tag, dev(ub, db.asDiagonal().toDenseMatrix()), kExact);
        r.add("U diagonal form" + tag, dev(u, du.asDiagonal().toDenseMatrix()), kExact);
        Matrix u4 = decoupler_u(s);
        u4 = u4 * u4 * u4 * u4;
        r.add("U^4 = I" + tag, dev(u4, Matrix::Identity(d, d)), kExact);

        double cross = 0.0;
        double comp = 0.0;
        double variants = 0.0;
        double idempotent = 0.0;
        Matrix perp = leakage_projector(s);
        Matrix pit = projector(s).rows.transpose().cast<Complex>();
        for (int trial = 0; trial < 100; trial++) {
            Matrix h = random_hermitian(d, rng);
            Matrix pair = decouple_map(h, s, DecouplerVariant::PairSet);
            Matrix power = decouple_map(h, s, DecouplerVariant::PowerSet);
            for (const Matrix *dh : {&pair, &power}) {
                cross = std::max(cross, max_abs(pit.adjoint() * *dh * perp));
                comp = std::max(comp, dev(computational_block(*dh, s), computational_block(h, s)));
            }
            // PowerSet gives the (1,0) and (0,1) blocks the same phase i, so it
            // keeps their mutual coupling; PairSet removes it.
            Matrix diff = bc * (pair - power) * bc.adjoint();
            if (s == SpinSector::Spin1) {
                diff.block(4, 6, 2, 2).setZero();
                diff.block(6, 4, 2, 2).setZero();
            }
            variants = std::max(variants, max_abs(diff));
            idempotent = std::max(idempotent, dev(decouple_map(pair, s, DecouplerVariant::PairSet), pair));
        }
        r.add("D(H) cross terms with computational subspace, 100 random H" + tag, cross, kExact);
        r.add("D(H) keeps the computational block" + tag, comp, kExact);
        r.add("D idempotent" + tag, idempotent, kExact);
        r.add(std::string("PairSet and PowerSet agree") +
                  (s == SpinSector::Spin1 ? " outside the (1,0)-(0,1) coupling" : " entrywise") + ", 100 random H" + tag,
              variants, kExact);
    }
    Matrix dn = decouple_map(young_rep(irrep_of(SpinSector::Spin1)).element(cnot_hamiltonian()), SpinSector::Spin1,
                             DecouplerVariant::PairSet);
    r.add("D(N) computational block = (IX - ZX)/2 in spin1",
          dev(computational_block(dn, SpinSector::Spin1), half_ix_minus_zx()), kExact);
    return r;
}

CheckReport verify_oracle() {
    CheckReport r{"oracle", {}};
    for (SpinSector s : kSectors) {
        std::string tag = " " + sector_label(s);
        Matrix f = logical_frame(s).matrix();
        r.add("frame Gram matrix = I" + tag, dev(f.adjoint() * f, Matrix::Identity(4, 4)), kExact);
        LocalSums sums = local_sums();
        r.add("frame annihilated by Sigma_a and Sigma_b" + tag,
              std::max(max_abs(physical_element(sums.sigma_a) * f), max_abs(physical_element(sums.sigma_b) * f)),
              kExact);
        double worst = 0.0;
        for (int i = 1; i <= 6; i++) {
            for (int j = i + 1; j <= 6; j++) {
                auto x = GroupAlgebraElement::transposition(6, Transposition(i, j));
                worst = std::max(worst, dev(oracle_projected_rep(x, s), projected_rep(x, s)));
            }
        }
        r.add("max |irrep - oracle| over all fifteen transpositions" + tag, worst, 1e-10);
        Matrix reach = reachable_subspace(s);
        double expected_dim = s == SpinSector::Spin0 ? 5.0 : 9.0;
        r.add("reachable subspace dimension" + tag, std::abs(static_cast<double>(reach.cols()) - expected_dim), 0.0);
        double c = s == SpinSector::Spin0 ? 3.0 : 5.0;
        Matrix central = reach.adjoint() * physical_element(all_transpositions_sum()) * reach;
        r.add("sum of all swaps acts as " + std::to_string(static_cast<int>(c)) + " on the reachable subspace" + tag,
              dev(central, Matrix::Identity(reach.cols(), reach.cols()) * c), 1e-10);
    }
    Matrix target = cnot_matrix();
    for (const auto &[which, n] : {std::pair{1, 3}, std::pair{2, 2}}) {
        PulseSchedule sched = consolidate(table_schedule(which, n));
        Matrix phys = oracle_simulate(sched);
        for (SpinSector s : kSectors) {
            Matrix g = simulate(sched, s);
            SectorScore o = oracle_score(phys, s, target);
            double d = std::max(std::abs(o.fidelity - entanglement_fidelity(g, target, s)),
                                std::abs(o.leakage - leakage(g, target, s)));
            r.add(sched.name + " n=" + std::to_string(n) + " oracle vs irrep F/L " + sector_label(s), d, 1e-8);
        }
    }
    return r;
}

std::vector<CheckReport> run_suites(const std::string &suite) {
    if (suite == "symrep") {
        return {verify_symrep()};
    }
    if (suite == "encoding") {
        return {verify_encoding()};
    }
    if (suite == "decouple") {
        return {verify_decouple()};
    }
    if (suite == "oracle") {
        return {verify_oracle()};
    }
    if (suite == "all") {
        return {verify_symrep(), verify_encoding(), verify_decouple(), verify_oracle()};
    }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace dfsgates
