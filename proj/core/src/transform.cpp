// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#include "ecb/transform.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

namespace ecb {

SequenceTable::SequenceTable(int j) : j_(j) {
  data_.resize(std::max(j, 1));
  for (int r = 1; r < j; ++r) {
    data_[r].resize(std::max(j - r, 1));
    // all subsets of {r+1, ..., j-1}, grouped by size
    const int m = j - r - 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      const int l = __builtin_popcountll(mask);
      for (int b = 0; b < m; ++b)
        if (mask & (std::uint64_t{1} << b)) data_[r][l].push_back(r + 1 + b);
    }
  }
}

int SequenceTable::count(int r, int l) const {
  return static_cast<int>(data_[r][l].size()) / l;
}

const int* SequenceTable::sequence(int r, int l, int s) const {
  return data_[r][l].data() + static_cast<std::size_t>(s) * l;
}

const SequenceTable& sequence_table(int j) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<SequenceTable>> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = tables[j];
  if (!slot) slot = std::make_unique<SequenceTable>(j);
  return *slot;
}

TransformMatrix build_transform(const SpaceSpec& space, const EndpointTables& tables,
                                const TransformOptions& opts) {
  validate(space);
  const int n = space.n;
  if (!(tables.space == space))
    throw EcbError(ErrorKind::DimensionMismatch, "endpoint tables belong to another space");
  if (tables.b_alpha.rows() != n + 1 || tables.b_alpha.cols() < n / 2 + 1)
    throw EcbError(ErrorKind::DimensionMismatch, "endpoint tables are too small");

  const auto a = assemble_transform<double>(n, tables.phi_alpha, tables.phi_beta,
                                            tables.b_alpha, tables.b_beta);
  TransformMatrix out;
  out.space = space;
  out.t.resize(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) out.t(i, j) = a.t[i][j];
  out.tally = a.flops;
  out.flops = a.flops.total();
  if (!a.middle_last_half.empty()) {
    const int f = n / 2;
    out.middle_last_half = Vector::Map(a.middle_last_half.data(), n + 1);
    for (int i = 1; i <= n; ++i) {
      const double x = out.t(i, f), y = a.middle_last_half[i];
      out.middle_discrepancy =
          std::max(out.middle_discrepancy, std::abs(x - y) / std::max(1.0, std::abs(x)));
    }
    if (!(out.middle_discrepancy <= opts.middle_tolerance))
      throw EcbError(ErrorKind::DegenerateBasis,
                     "middle column disagrees between the two endpoint formulas "
                     "(discrepancy " + std::to_string(out.middle_discrepancy) + ")");
  }
  return out;
}

TransformMatrix build_transform(const SpaceSpec& space, const TransformOptions& opts) {
  return build_transform(space, build_endpoint_tables(space, opts.source), opts);
}

std::int64_t kappa(int n) {
  if (n < 1) throw EcbError(ErrorKind::IndexOutOfRange, "kappa needs n >= 1");
  const std::int64_t N = n;
  if (n % 2 == 1) {
    const std::int64_t f = N / 2;
    return (std::int64_t{1} << (f + 1)) * (f - 3) + 2 * f + 6 + 2 * N * f * (f + 1);
  }
  return (std::int64_t{1} << (N / 2 - 1)) * (3 * N / 2 - 10) + N + 5 + N * N * N / 2;
}

std::int64_t kappa_lu(int n, int delta) {
  if (n < 1 || delta < 1)
    throw EcbError(ErrorKind::IndexOutOfRange, "kappa_lu needs n >= 1 and delta >= 1");
  const std::int64_t N = n + 1;
  return (4 * N * N * N - 3 * N * N - N) / 6 + (2 * N * N - N) * delta;
}

std::vector<double> chebyshev_nodes(const SpaceSpec& space) {
  const int n = space.n;
  std::vector<double> u(n + 1);
  const double mid = 0.5 * (space.alpha + space.beta);
  const double rad = 0.5 * (space.beta - space.alpha);
  for (int k = 0; k <= n; ++k)
    u[n - k] = mid + rad * std::cos((2 * k + 1) * std::numbers::pi / (2.0 * (n + 1)));
  return u;
}

TransformMatrix collocation_oracle(const BBasis& basis, std::vector<double> nodes) {
  const SpaceSpec& s = basis.space();
  const int n = s.n;
  if (nodes.empty()) nodes = chebyshev_nodes(s);
  if (static_cast<int>(nodes.size()) != n + 1)
    throw EcbError(ErrorKind::NodeChoice, "collocation needs exactly n + 1 nodes");
  std::vector<double> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] < s.alpha || sorted[k] > s.beta)
      throw EcbError(ErrorKind::NodeChoice, "collocation node outside [alpha, beta]");
    if (k > 0 && sorted[k] == sorted[k - 1])
      throw EcbError(ErrorKind::NodeChoice, "collocation nodes must be distinct");
  }
  const OrdinaryBasis ord(s);
  Matrix B(n + 1, n + 1), Phi(n + 1, n + 1);
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= n; ++j) {
      B(k, j) = basis.eval(j, nodes[k]);
      Phi(k, j) = ord.eval(j, 0, nodes[k]);
    }
  Matrix X;
  try {
    X = solve_pivoted(B, Phi, 1e-14);
  } catch (const EcbError&) {
    throw EcbError(ErrorKind::NodeChoice, "collocation matrix is singular for these nodes");
  }
  TransformMatrix out;
  out.space = s;
  out.t = X.transpose();
  return out;
}

TransformMatrix collocation_oracle(const SpaceSpec& space, std::vector<double> nodes) {
  return collocation_oracle(make_bbasis(space), std::move(nodes));
}

std::uint64_t measured_flops(const SpaceSpec& space) {
  return build_transform(space).flops;
}

}  // namespace ecb
