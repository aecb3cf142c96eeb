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
#ifndef DFSGATES_LINALG_H
#define DFSGATES_LINALG_H

#include <complex>

#include <Eigen/Dense>

namespace dfsgates {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

/// exp(i * t * H) for Hermitian H, via eigendecomposition.
Matrix expm_hermitian(const Matrix &hermitian, double t = 1.0);

/// Largest absolute entry of a matrix (0 for empty).
double max_abs(const Matrix &m);

bool is_hermitian(const Matrix &m, double tol = 1e-12);
bool is_unitary(const Matrix &m, double tol = 1e-10);

/// Operator (spectral) norm.
double operator_norm(const Matrix &m);

Matrix commutator(const Matrix &a, const Matrix &b);

Matrix kron(const Matrix &a, const Matrix &b);

}  // namespace dfsgates

#endif
