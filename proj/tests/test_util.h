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
#ifndef DFSGATES_TESTS_TEST_UTIL_H
#define DFSGATES_TESTS_TEST_UTIL_H

// Reference helpers built without the library's own code paths.

#include <cmath>
#include <complex>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace testutil {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;

/// exp(i t h) by scaling-and-squaring Pade, independent of the eigensolver path.
inline M pade_exp(const M &h, double t = 1.0) {
    M a = h * C(0.0, t);
    return a.exp();
}

inline M pauli(char p) {
    M m = M::Zero(2, 2);
    switch (p) {
        case 'I':
            m << 1, 0, 0, 1;
            break;
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, C(0, -1), C(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

/// Two-letter Pauli word, first letter on qubit one (the more significant index).
inline M pauli2(const std::string &w) {
    M a = pauli(w[0]);
    M b = pauli(w[1]);
    M out(4, 4);
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            out.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
        }
    }
    return out;
}

inline M cnot() {
    M c = M::Zero(4, 4);
    c(0, 0) = c(1, 1) = c(2, 3) = c(3, 2) = 1.0;
    return c;
}

/// min over theta of max |a - e^{i theta} b|, with theta from the largest overlap.
inline double phase_distance(const M &a, const M &b) {
    C overlap = (b.adjoint() * a).trace();
    C phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : C(1.0);
    return (a - phase * b).cwiseAbs().maxCoeff();
}

inline M random_hermitian(Eigen::Index d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    M m(d, d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = 0; j < d; j++) {
            m(i, j) = C(g(rng), g(rng));
        }
    }
    return (m + m.adjoint()) / 2.0;
}

}  // namespace testutil

#endif
