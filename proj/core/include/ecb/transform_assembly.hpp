// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

// Column assembly of the B-basis to ordinary-basis transformation matrix,
// generic over the scalar type so that it can run in exact arithmetic.

#pragma once

#include <cmath>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "ecb/errors.hpp"

namespace ecb {

struct FlopTally {
  std::uint64_t mul = 0;
  std::uint64_t div = 0;
  std::uint64_t add = 0;  // additions and subtractions

  std::uint64_t total() const { return mul + div + add; }
};

// Strictly increasing interior sequences r < k_1 < ... < k_l < j, grouped by
// (r, l), for one column j. Built once per j and shared.
class SequenceTable {
 public:
  explicit SequenceTable(int j);

  int column() const { return j_; }
  // Number of sequences of length l starting after r.
  int count(int r, int l) const;
  // Pointer to the s-th sequence (l consecutive ints).
  const int* sequence(int r, int l, int s) const;

 private:
  int j_;
  std::vector<std::vector<std::vector<int>>> data_;  // [r][l] -> flattened
};

const SequenceTable& sequence_table(int j);

namespace detail {

template <class T>
bool vanishes(const T& x) {
  if constexpr (std::is_floating_point_v<T>)
    return !(std::abs(x) > 0.0) || !std::isfinite(x);
  else
    return x == T(0);
}

inline void count(FlopTally* t, std::uint64_t FlopTally::*field, std::uint64_t k = 1) {
  if (t) t->*field += k;
}

}  // namespace detail

// Computes t_{i,j} (i = 1..n) for one interior column index j >= 1 from
// endpoint data: B(k, d) is the d-th derivative of the k-th B-basis function
// and P(i, d) that of the i-th ordinary function, both at the same endpoint.
template <class T, class BGet, class PGet>
std::vector<T> assemble_column(int n, int j, const BGet& B, const PGet& P,
                               FlopTally* tally) {
  using detail::count;
  const SequenceTable& seq = sequence_table(j);
  std::vector<T> g(j > 0 ? j : 1, T(0));
  for (int r = 1; r < j; ++r) {
    T total = B(r, j);
    for (int l = 1; l <= j - r - 1; ++l) {
      const int cnt = seq.count(r, l);
      T s(0);
      for (int q = 0; q < cnt; ++q) {
        const int* ks = seq.sequence(r, l, q);
        T num = B(r, ks[0]);
        for (int p = 0; p + 1 < l; ++p) num = num * B(ks[p], ks[p + 1]);
        num = num * B(ks[l - 1], j);
        count(tally, &FlopTally::mul, l);
        T den = B(ks[0], ks[0]);
        for (int p = 1; p < l; ++p) den = den * B(ks[p], ks[p]);
        count(tally, &FlopTally::mul, l - 1);
        const T term = num / den;
        count(tally, &FlopTally::div);
        if (q == 0) {
          s = term;
        } else {
          s = s + term;
          count(tally, &FlopTally::add);
        }
      }
      total = (l % 2 == 1) ? T(total - s) : T(total + s);
      count(tally, &FlopTally::add);
    }
    const T brr = B(r, r);
    if (detail::vanishes(brr))
      throw EcbError(ErrorKind::DegenerateBasis, "vanishing diagonal endpoint derivative");
    g[r] = total / brr;
    count(tally, &FlopTally::div);
  }

  const T bjj = B(j, j);
  if (detail::vanishes(bjj))
    throw EcbError(ErrorKind::DegenerateBasis, "vanishing diagonal endpoint derivative");
  std::vector<T> col(n + 1, T(0));
  for (int i = 1; i <= n; ++i) {
    if (j == 1) {
      col[i] = P(i, 0) + P(i, 1) / bjj;
      count(tally, &FlopTally::div);
      count(tally, &FlopTally::add);
      continue;
    }
    T h = P(i, 1) * g[1];
    count(tally, &FlopTally::mul);
    for (int r = 2; r < j; ++r) {
      h = h + P(i, r) * g[r];
      count(tally, &FlopTally::mul);
      count(tally, &FlopTally::add);
    }
    col[i] = P(i, 0) - (h - P(i, j)) / bjj;
    count(tally, &FlopTally::add, 2);
    count(tally, &FlopTally::div);
  }
  return col;
}

template <class T>
struct TransformAssembly {
  std::vector<std::vector<T>> t;      // (n+1) x (n+1)
  std::vector<T> middle_last_half;    // even n: column n/2 from the beta side
  FlopTally flops;
};

// Table accessors: table(i, d) for 0 <= i <= n, 0 <= d <= floor(n/2).
template <class T, class Table>
TransformAssembly<T> assemble_transform(int n, const Table& phi_alpha,
                                        const Table& phi_beta,
                                        const Table& b_alpha,
                                        const Table& b_beta) {
  TransformAssembly<T> out;
  out.t.assign(n + 1, std::vector<T>(n + 1, T(0)));
  for (int j = 0; j <= n; ++j) out.t[0][j] = T(1);
  for (int i = 1; i <= n; ++i) {
    out.t[i][0] = T(phi_alpha(i, 0));
    out.t[i][n] = T(phi_beta(i, 0));
  }
  const int f = n / 2;

  auto Ba = [&](int k, int d) { return T(b_alpha(k, d)); };
  auto Pa_row = [&](int i, int d) { return T(phi_alpha(i, d)); };
  for (int j = 1; j <= f; ++j) {
    const std::vector<T> col = assemble_column<T>(n, j, Ba, Pa_row, &out.flops);
    for (int i = 1; i <= n; ++i) out.t[i][j] = col[i];
  }

  auto Bb = [&](int k, int d) { return T(b_beta(n - k, d)); };
  auto Pb_row = [&](int i, int d) { return T(phi_beta(i, d)); };
  const int last = (n % 2 == 1) ? f : f - 1;
  for (int j = 1; j <= last; ++j) {
    const std::vector<T> col = assemble_column<T>(n, j, Bb, Pb_row, &out.flops);
    for (int i = 1; i <= n; ++i) out.t[i][n - j] = col[i];
  }
  if (n % 2 == 0 && f >= 1) {
    std::vector<T> col = assemble_column<T>(n, f, Bb, Pb_row, nullptr);
    col[0] = T(1);
    out.middle_last_half = std::move(col);
  }
  return out;
}

}  // namespace ecb
