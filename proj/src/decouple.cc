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
#include "dfsgates/decouple.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dfsgates {

namespace {

Matrix rep_matrix(const GroupAlgebraElement &x, SpinSector sector) {
    return young_rep(irrep_of(sector)).element(x);
}

// Orthonormal vectors spanning the range of the projector, by Gram-Schmidt on
// its columns in coordinate order, orthogonal to everything already in `taken`.
std::vector<RealVector> span_of(const RealMatrix &projector, std::vector<RealVector> &taken, int expected) {
    std::vector<RealVector> found;
    for (Eigen::Index c = 0; c < projector.cols() && static_cast<int>(found.size()) < expected; ++c) {
        RealVector v = projector.col(c);
        for (const auto &u : taken) {
            v -= u.dot(v) * u;
        }
        const double norm = v.norm();
        if (norm > 1e-8) {
            v /= norm;
            taken.push_back(v);
            found.push_back(v);
        }
    }
    if (static_cast<int>(found.size()) != expected) {
        throw std::logic_error("decoupling block has dimension " + std::to_string(found.size()) + ", expected " +
                               std::to_string(expected));
    }
    return found;
}

}  // namespace

LocalSums local_sums() {
    const double third = 1.0 / 3.0;
    return {
        GroupAlgebraElement::from_transpositions(6, {{{1, 2}, third}, {{1, 3}, third}, {{2, 3}, third}}),
        GroupAlgebraElement::from_transpositions(6, {{{4, 5}, third}, {{4, 6}, third}, {{5, 6}, third}}),
    };
}

Matrix decoupler_a(SpinSector sector) {
    return expm_hermitian(rep_matrix(local_sums().sigma_a, sector), kPi);
}

Matrix decoupler_b(SpinSector sector) {
    return expm_hermitian(rep_matrix(local_sums().sigma_b, sector), kPi);
}

Matrix decoupler_u(SpinSector sector) {
    const auto sums = local_sums();
    return expm_hermitian(rep_matrix(sums.sigma_a + sums.sigma_b, sector), kPi / 2.0);
}

DecouplerSet decoupler(SpinSector sector, DecouplerVariant variant) {
    const Eigen::Index dim = young_rep(irrep_of(sector)).dim();
    const Matrix id = Matrix::Identity(dim, dim);
    if (variant == DecouplerVariant::PairSet) {
        const Matrix ua = decoupler_a(sector);
        const Matrix ub = decoupler_b(sector);
        return {variant, sector, {id, ua, ub, ub * ua}};
    }
    const Matrix u = decoupler_u(sector);
    return {variant, sector, {id, u, u.adjoint(), u * u}};
}

Matrix decouple_map(const Matrix &hermitian, SpinSector sector, DecouplerVariant variant) {
    const auto set = decoupler(sector, variant);
    if (hermitian.rows() != set.unitaries[0].rows() || hermitian.cols() != hermitian.rows()) {
        throw std::invalid_argument("decouple_map: matrix dimension does not match irrep " +
                                    irrep_of(sector).str());
    }
    const double scale = std::max(1.0, max_abs(hermitian));
    if (!is_hermitian(hermitian, 1e-12 * scale)) {
        throw std::invalid_argument("decouple_map: input is not Hermitian");
    }
    Matrix out = Matrix::Zero(hermitian.rows(), hermitian.cols());
    for (const auto &u : set.unitaries) {
        out += u * hermitian * u.adjoint();
    }
    return out / 4.0;
}

RealMatrix adapted_basis(SpinSector sector) {
    const auto sums = local_sums();
    // rho(Sigma) has spectrum {0, 1}, so it is itself an orthogonal projector.
    const RealMatrix pa = rep_matrix(sums.sigma_a, sector).real();
    const RealMatrix pb = rep_matrix(sums.sigma_b, sector).real();
    const Eigen::Index dim = pa.rows();
    const RealMatrix id = RealMatrix::Identity(dim, dim);

    std::vector<RealVector> taken;
    const auto &pi = projector(sector).rows;
    for (int k = 0; k < 4; ++k) {
        taken.push_back(pi.row(k).transpose());
    }
    if (sector == SpinSector::Spin1) {
        span_of(pa * (id - pb), taken, 2);
        span_of((id - pa) * pb, taken, 2);
    }
    span_of(pa * pb, taken, 1);

    RealMatrix basis(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        basis.row(r) = taken[r].transpose();
    }
    return basis;
}

std::vector<int> adapted_block_sizes(SpinSector sector) {
    if (sector == SpinSector::Spin0) {
        return {4, 1};
    }
    return {4, 2, 2, 1};
}

double off_block_magnitude(const Matrix &m, SpinSector sector) {
    const Matrix b = adapted_basis(sector).cast<Complex>();
    const Matrix rotated = b * m * b.transpose();
    const auto sizes = adapted_block_sizes(sector);
    std::vector<int> block_of;
    for (size_t k = 0; k < sizes.size(); ++k) {
        block_of.insert(block_of.end(), sizes[k], static_cast<int>(k));
    }
    double worst = 0.0;
    for (Eigen::Index r = 0; r < rotated.rows(); ++r) {
        for (Eigen::Index c = 0; c < rotated.cols(); ++c) {
            if (block_of[r] != block_of[c]) {
                worst = std::max(worst, std::abs(rotated(r, c)));
            }
        }
    }
    return worst;
}

}  // namespace dfsgates
