// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>

#include "ecb/bbasis.hpp"
#include "ecb/ec_space.hpp"
#include "ecb/errors.hpp"
#include "ecb/linalg.hpp"

namespace ecb {

enum class End { Alpha, Beta };

enum class TableSource { Auto, ClosedForm, Mixed, Determinant };

const char* to_string(TableSource source);
TableSource table_source_from_string(const std::string& name);

// Closed forms for b^{(j)}_{2m,i} at 0 or beta, 0 <= j <= m.
double trig_endpoint_derivative(int m, double beta, int i, int j, End end);
double hyperbolic_endpoint_derivative(int m, double beta, int i, int j, End end);

// Bernstein basis on [0,1].
template <class T>
T bernstein_endpoint_derivative_exact(int n, int i, int j, End end) {
  if (i < 0 || i > n || j < 0)
    throw EcbError(ErrorKind::IndexOutOfRange, "Bernstein index out of range");
  if (end == End::Beta) {
    const T v = bernstein_endpoint_derivative_exact<T>(n, n - i, j, End::Alpha);
    return (j % 2 == 0) ? v : T(-v);
  }
  if (i > j || j > n) return T(0);
  auto choose = [](int a, int b) {
    T r(1);
    for (int p = 1; p <= b; ++p) r = r * T(a - b + p) / T(p);
    return r;
  };
  T fact(1);
  for (int p = 2; p <= j; ++p) fact *= T(p);
  T v = fact * choose(n, j) * choose(j, i);
  return ((j - i) % 2 == 0) ? v : T(-v);
}

double bernstein_endpoint_derivative(int n, int i, int j, End end);

double mixed_endpoint_derivative(const BBasis& basis, int i, int j, End end);

// Quotients of Wronskian-column determinants of the reduced system
// [phi_1, ..., phi_n]; valid for any family.
double determinant_endpoint_derivative(const SpaceSpec& space, int i, int j, End end);

struct EndpointTables {
  SpaceSpec space;
  TableSource source = TableSource::ClosedForm;
  // (n+1) x (floor(n/2)+1): entry (i, j) is the j-th derivative of function i
  Matrix phi_alpha;
  Matrix phi_beta;
  Matrix b_alpha;
  Matrix b_beta;
};

// Uncached construction.
EndpointTables compute_endpoint_tables(const SpaceSpec& space,
                                       TableSource source = TableSource::Auto);

// Memoized per (space, source); safe to call from several threads.
EndpointTables build_endpoint_tables(const SpaceSpec& space,
                                     TableSource source = TableSource::Auto);

void clear_endpoint_cache();

}  // namespace ecb
