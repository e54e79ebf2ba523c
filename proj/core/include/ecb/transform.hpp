// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "ecb/bbasis.hpp"
#include "ecb/ec_space.hpp"
#include "ecb/endpoint.hpp"
#include "ecb/linalg.hpp"
#include "ecb/transform_assembly.hpp"

namespace ecb {

// Row i, column j holds the coefficient of b_j in the expansion of phi_i.
struct TransformMatrix {
  Matrix t;
  SpaceSpec space;
  std::uint64_t flops = 0;
  FlopTally tally;
  // Even n: largest |a - b| / max(1, |a|) between the middle column computed
  // from the alpha side (a, stored in t) and from the beta side (b).
  double middle_discrepancy = 0.0;
  Vector middle_last_half;
};

struct TransformOptions {
  TableSource source = TableSource::Auto;
  double middle_tolerance = 1e-6;
};

TransformMatrix build_transform(const SpaceSpec& space, const EndpointTables& tables,
                                const TransformOptions& opts = {});
TransformMatrix build_transform(const SpaceSpec& space,
                                const TransformOptions& opts = {});

std::int64_t kappa(int n);
std::int64_t kappa_lu(int n, int delta);

// Chebyshev-Gauss points mapped to [alpha, beta], in increasing order.
std::vector<double> chebyshev_nodes(const SpaceSpec& space);

// Solves sum_j t_ij b_j(u_k) = phi_i(u_k) at n+1 nodes.
TransformMatrix collocation_oracle(const BBasis& basis, std::vector<double> nodes = {});
TransformMatrix collocation_oracle(const SpaceSpec& space, std::vector<double> nodes = {});

std::uint64_t measured_flops(const SpaceSpec& space);

}  // namespace ecb
