// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ecb/ecb.hpp"

namespace ecb::testing {

inline constexpr double kPi = std::numbers::pi;
inline constexpr std::uint64_t kSeed = 20261016;

struct NamedSpace {
  std::string name;
  SpaceSpec space;
};

inline SpaceSpec ode(std::vector<Root> roots, double alpha, double beta) {
  return basis_from_characteristic(CharacteristicSpec{std::move(roots)}, alpha, beta);
}

inline SpaceSpec trig_ladder(int m, double beta) {
  std::vector<Root> roots{{0.0, 0.0, 1}};
  for (int k = 1; k <= m; ++k) roots.push_back({0.0, double(k), 1});
  return ode(roots, 0.0, beta);
}

inline SpaceSpec exp_trig_example() {
  return exponential_trigonometric_space(1.0 / (3.0 * kPi), 5.0 * kPi / 6.0);
}

// Representative spaces of every family with n <= 10.
inline std::vector<NamedSpace> all_family_spaces() {
  return {
      {"poly1", polynomial_space(1)},
      {"poly2", polynomial_space(2)},
      {"poly3", polynomial_space(3)},
      {"poly4_shifted", polynomial_space(4, -1.0, 2.0)},
      {"poly7", polynomial_space(7)},
      {"poly10", polynomial_space(10)},
      {"trig1", trigonometric_space(1, 2.5)},
      {"trig2", trigonometric_space(2, 1.0)},
      {"trig3", trigonometric_space(3, 2.0)},
      {"trig4", trigonometric_space(4, 0.7)},
      {"trig5", trigonometric_space(5, 1.5)},
      {"hyp1", hyperbolic_space(1, 3.0)},
      {"hyp2", hyperbolic_space(2, 1.0)},
      {"hyp3", hyperbolic_space(3, 2.0)},
      {"hyp4", hyperbolic_space(4, 0.6)},
      {"hyp5", hyperbolic_space(5, 1.2)},
      {"at_1", algebraic_trigonometric_space(1.0)},
      {"at_5", algebraic_trigonometric_space(5.0)},
      {"et_example", exp_trig_example()},
      {"et_shifted", exponential_trigonometric_space(0.3, 1.5, 0.5)},
      {"ode_ladder2", trig_ladder(2, 1.0)},
      {"ode_at", ode({{0, 0, 3}, {0, 1, 1}}, 0.0, 2.0)},
      {"ode_exp_real", ode({{0, 0, 1}, {1, 0, 1}, {-1, 0, 1}, {0, 2, 1}}, 0.0, 1.0)},
      {"ode_mixed6", ode({{0, 0, 3}, {0.5, 0, 1}, {-0.5, 0, 1}, {0, 1, 1}}, 0.0, 1.5)},
      {"ode_mult_trig", ode({{0, 0, 1}, {0, 1, 2}}, 0.0, 1.0)},
  };
}

inline std::vector<double> grid(const SpaceSpec& s, int points) {
  std::vector<double> u(points);
  for (int k = 0; k < points; ++k)
    u[k] = s.alpha + (s.beta - s.alpha) * k / (points - 1);
  return u;
}

inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) m(i, k) = dist(rng);
  return m;
}

// Shifts the last coordinate so that it stays at least 1 on [alpha, beta].
inline void make_denominator_positive(IntegralCurveSpec& curve) {
  const int last = static_cast<int>(curve.lambdas.cols()) - 1;
  double lo = 0.0;
  for (double u : grid(curve.space, 1001)) lo = std::min(lo, eval_integral_curve(curve, u)[last]);
  curve.lambdas(0, last) += 1.0 - lo;
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace ecb::testing
