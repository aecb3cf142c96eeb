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
#include "dfsgates/oracle.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dfsgates {

namespace {

int bit_of(int spin) {
    return 6 - spin;
}

// Three-spin block states as 8-vectors, index b1 b2 b3 with b1 most significant.
Vector block_state(int logical, bool up) {
    Vector v = Vector::Zero(8);
    if (logical == 0) {
        double s = 1.0 / std::sqrt(2.0);
        if (up) {
            v(0b010) = s;
            v(0b100) = -s;
        } else {
            v(0b101) = s;
            v(0b011) = -s;
        }
    } else {
        double s = 1.0 / std::sqrt(6.0);
        if (up) {
            v(0b001) = 2.0 * s;
            v(0b100) = -s;
            v(0b010) = -s;
        } else {
            v(0b110) = 2.0 * s;
            v(0b011) = -s;
            v(0b101) = -s;
        }
    }
    return v;
}

Vector tensor(const Vector &a, const Vector &b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); i++) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

}  // namespace

RealMatrix physical_swap(int i, int j) {
    if (i < 1 || j > 6 || i >= j) {
        throw std::invalid_argument("need 1 <= i < j <= 6, got (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    RealMatrix m = RealMatrix::Zero(kPhysicalDim, kPhysicalDim);
    int bi = bit_of(i);
    int bj = bit_of(j);
    for (int s = 0; s < kPhysicalDim; s++) {
        int vi = (s >> bi) & 1;
        int vj = (s >> bj) & 1;
        int t = s;
        if (vi != vj) {
            t ^= (1 << bi) | (1 << bj);
        }
        m(t, s) = 1.0;
    }
    return m;
}

Matrix physical_element(const GroupAlgebraElement &x) {
    if (x.degree() != 6) {
        throw std::invalid_argument("physical representation needs degree 6");
    }
    Matrix out = Matrix::Zero(kPhysicalDim, kPhysicalDim);
    for (const auto &[p, c] : x.terms()) {
        RealMatrix m = RealMatrix::Identity(kPhysicalDim, kPhysicalDim);
        for (const auto &t : p.transposition_factors()) {
            m = m * physical_swap(t.i, t.j);
        }
        out += c * m.cast<Complex>();
    }
    return out;
}

Matrix LogicalFrame::matrix() const {
    Matrix f(kPhysicalDim, 4);
    for (int k = 0; k < 4; k++) {
        f.col(k) = vectors[k];
    }
    return f;
}

LogicalFrame logical_frame(SpinSector sector) {
    LogicalFrame frame{sector, {}};
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            Vector v;
            if (sector == SpinSector::Spin1) {
                v = tensor(block_state(x, true), block_state(y, true));
            } else {
                v = (tensor(block_state(x, true), block_state(y, false)) -
                     tensor(block_state(x, false), block_state(y, true))) /
                    std::sqrt(2.0);
            }
            frame.vectors[2 * x + y] = v;
        }
    }
    return frame;
}

Matrix oracle_projected_rep(const GroupAlgebraElement &x, SpinSector sector) {
    Matrix f = logical_frame(sector).matrix();
    return f.adjoint() * physical_element(x) * f;
}

Matrix reachable_subspace(SpinSector sector) {
    std::vector<RealMatrix> swaps;
    for (int i = 1; i <= 6; i++) {
        for (int j = i + 1; j <= 6; j++) {
            swaps.push_back(physical_swap(i, j));
        }
    }
    Matrix basis = logical_frame(sector).matrix();
    while (true) {
        Matrix span(kPhysicalDim, basis.cols() * (1 + static_cast<Eigen::Index>(swaps.size())));
        span.leftCols(basis.cols()) = basis;
        for (size_t k = 0; k < swaps.size(); k++) {
            span.middleCols(basis.cols() * (k + 1), basis.cols()) = swaps[k].cast<Complex>() * basis;
        }
        Eigen::JacobiSVD<Matrix> svd(span, Eigen::ComputeThinU);
        Eigen::Index rank = 0;
        for (Eigen::Index k = 0; k < svd.singularValues().size(); k++) {
            rank += svd.singularValues()(k) > 1e-10 ? 1 : 0;
        }
        if (rank == basis.cols()) {
            return basis;
        }
        basis = svd.matrixU().leftCols(rank);
    }
}

Matrix oracle_simulate(const PulseSchedule &schedule) {
    Matrix g = Matrix::Identity(kPhysicalDim, kPhysicalDim);
    for (const auto &step : schedule.steps) {
        g = g * expm_hermitian(physical_element(step.generator()));
    }
    return g;
}

SectorScore oracle_score(const Matrix &physical_unitary, SpinSector sector, const Matrix &target) {
    Matrix f = logical_frame(sector).matrix();
    Matrix r = reachable_subspace(sector);
    Matrix gf = physical_unitary * f;
    Matrix block = f.adjoint() * gf;
    Complex tr = (block.adjoint() * target).trace() / 4.0;
    Matrix in_reach = r * (r.adjoint() * gf);
    Matrix outside = in_reach - f * block;
    return {std::norm(tr), outside.squaredNorm() / 4.0};
}

SectorScore oracle_score(const PulseSchedule &schedule, SpinSector sector, const Matrix &target) {
    return oracle_score(oracle_simulate(schedule), sector, target);
}

}  // namespace dfsgates
