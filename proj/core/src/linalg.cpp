// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#include "ecb/linalg.hpp"

#include <cmath>
#include <string>

#include "ecb/errors.hpp"

namespace ecb {

LUFactors doolittle_lu(const Matrix& A, double pivot_tol) {
  if (A.rows() != A.cols())
    throw EcbError(ErrorKind::DimensionMismatch, "doolittle_lu needs a square matrix");
  const Eigen::Index n = A.rows();
  Matrix L = Matrix::Identity(n, n);
  Matrix U = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = i; k < n; ++k) {
      double s = 0.0;
      for (Eigen::Index p = 0; p < i; ++p) s += L(i, p) * U(p, k);
      U(i, k) = A(i, k) - s;
    }
    // relative to the terms that cancelled into the pivot, so the test is
    // invariant under row and column scaling
    double mass = std::abs(A(i, i));
    for (Eigen::Index p = 0; p < i; ++p) mass += std::abs(L(i, p) * U(p, i));
    if (U(i, i) == 0.0 || std::abs(U(i, i)) <= pivot_tol * mass)
      throw EcbError(ErrorKind::SingularSystem,
                     "zero pivot at step " + std::to_string(i) +
                         " (singular or needs row exchange)");
    for (Eigen::Index k = i + 1; k < n; ++k) {
      double s = 0.0;
      for (Eigen::Index p = 0; p < i; ++p) s += L(k, p) * U(p, i);
      L(k, i) = (A(k, i) - s) / U(i, i);
    }
  }
  return {L, U};
}

Matrix unit_lower_inverse(const Matrix& L) {
  const Eigen::Index n = L.rows();
  Matrix X = Matrix::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index i = c + 1; i < n; ++i) {
      double s = 0.0;
      for (Eigen::Index p = c; p < i; ++p) s += L(i, p) * X(p, c);
      X(i, c) = -s;
    }
  return X;
}

Matrix upper_inverse(const Matrix& U) {
  const Eigen::Index n = U.rows();
  Matrix X = Matrix::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    X(c, c) = 1.0 / U(c, c);
    for (Eigen::Index i = c - 1; i >= 0; --i) {
      double s = 0.0;
      for (Eigen::Index p = i + 1; p <= c; ++p) s += U(i, p) * X(p, c);
      X(i, c) = -s / U(i, i);
    }
  }
  return X;
}

Matrix solve_pivoted(const Matrix& A, const Matrix& B, double rcond_min) {
  Eigen::PartialPivLU<Matrix> lu(A);
  const double rc = lu.rcond();
  if (!(rc > rcond_min))
    throw EcbError(ErrorKind::SingularSystem,
                   "linear system is singular (rcond " + std::to_string(rc) + ")");
  return lu.solve(B);
}

double determinant(const Matrix& A) {
  return Eigen::PartialPivLU<Matrix>(A).determinant();
}

}  // namespace ecb
