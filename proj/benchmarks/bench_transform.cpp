// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

// Transformation matrices from endpoint tables against a collocation solve,
// plus the cost of building the tables themselves.

#include <benchmark/benchmark.h>

#include "ecb/ecb.hpp"

namespace {

ecb::SpaceSpec space_for(int family, int n) {
  switch (family) {
    case 0: return ecb::polynomial_space(n);
    case 1: return ecb::trigonometric_space(n / 2, 1.0);
    default: return ecb::hyperbolic_space(n / 2, 1.0);
  }
}

void args(benchmark::internal::Benchmark* b) {
  for (int family = 0; family < 3; ++family)
    for (int n = 2; n <= 16; n += 2) b->Args({family, n});
}

// Tables are prebuilt, so only the assembly is timed.
void BM_TransformFromTables(benchmark::State& state) {
  const ecb::SpaceSpec s = space_for(int(state.range(0)), int(state.range(1)));
  const ecb::EndpointTables tables = ecb::compute_endpoint_tables(s);
  for (auto _ : state) benchmark::DoNotOptimize(ecb::build_transform(s, tables));
  state.counters["flops"] = double(ecb::kappa(s.n));
}
BENCHMARK(BM_TransformFromTables)->Apply(args);

void BM_Collocation(benchmark::State& state) {
  const ecb::SpaceSpec s = space_for(int(state.range(0)), int(state.range(1)));
  const ecb::BBasis basis = ecb::make_bbasis(s);
  const std::vector<double> nodes = ecb::chebyshev_nodes(s);
  for (auto _ : state) benchmark::DoNotOptimize(ecb::collocation_oracle(basis, nodes));
}
BENCHMARK(BM_Collocation)->Apply(args);

void BM_EndpointTables(benchmark::State& state) {
  const ecb::SpaceSpec s = space_for(int(state.range(0)), int(state.range(1)));
  const auto source = static_cast<ecb::TableSource>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(ecb::compute_endpoint_tables(s, source));
}
BENCHMARK(BM_EndpointTables)
    ->ArgsProduct({{1, 2}, {4, 8}, {int(ecb::TableSource::ClosedForm),
                                    int(ecb::TableSource::Mixed),
                                    int(ecb::TableSource::Determinant)}});

void BM_MixedConstruction(benchmark::State& state) {
  const ecb::SpaceSpec s =
      ecb::exponential_trigonometric_space(0.1, 2.0 + 0.1 * double(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ecb::construct_mixed_bbasis(s));
}
BENCHMARK(BM_MixedConstruction)->DenseRange(0, 4, 2);

}  // namespace

BENCHMARK_MAIN();
