// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

namespace ecb {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct LUFactors {
  Matrix L;  // unit lower triangular
  Matrix U;  // upper triangular
};

// Doolittle factorization without row exchanges. Throws
// EcbError(SingularSystem) if a pivot satisfies |u_kk| <= pivot_tol * (|a_kk| +
// sum_p |l_kp u_pk|), i.e. cancels almost completely (an exact zero always throws).
LUFactors doolittle_lu(const Matrix& A, double pivot_tol = 0.0);

Matrix unit_lower_inverse(const Matrix& L);
Matrix upper_inverse(const Matrix& U);

// Partially pivoted solve; throws EcbError(SingularSystem) when the
// reciprocal condition estimate drops below rcond_min.
Matrix solve_pivoted(const Matrix& A, const Matrix& B, double rcond_min = 1e-15);

double determinant(const Matrix& A);

}  // namespace ecb
