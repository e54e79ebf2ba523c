// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "ecb/bbasis.hpp"
#include "ecb/ec_space.hpp"
#include "ecb/linalg.hpp"
#include "ecb/transform.hpp"

namespace ecb {

// c(u) = sum_i lambdas.row(i) * phi_i(u); lambdas is (n+1) x delta.
struct IntegralCurveSpec {
  SpaceSpec space;
  Matrix lambdas;
};

struct ControlPolygon {
  SpaceSpec space;
  Matrix points;  // (n+1) x delta
};

// One separable term prod_r (sum_i coeffs[r][i] phi^r_i).
struct SeparableTerm {
  Vector u;
  Vector v;
};

struct SurfaceSpec {
  std::array<SpaceSpec, 2> spaces;
  // coordinates[l] is the list of separable terms of coordinate l.
  std::vector<std::vector<SeparableTerm>> coordinates;
};

struct ControlNet {
  std::array<SpaceSpec, 2> spaces;
  std::vector<Matrix> coordinates;  // each (n1+1) x (n2+1)
};

struct RationalBRep {
  SpaceSpec space;
  Matrix points;   // (n+1) x delta, projected
  Vector weights;  // (n+1)
  bool all_nonneg = false;
};

struct RationalNet {
  std::array<SpaceSpec, 2> spaces;
  std::vector<Matrix> coordinates;  // projected, each (n1+1) x (n2+1)
  Matrix weights;
  bool all_nonneg = false;
};

inline constexpr double kWeightSignTolerance = -1e-12;
inline constexpr int kDenominatorCheckGrid = 1001;

Vector eval_integral_curve(const IntegralCurveSpec& spec, double u);
Vector eval_integral_surface(const SurfaceSpec& spec, double u, double v);

ControlPolygon convert_curve(const IntegralCurveSpec& spec, const TransformMatrix& T);
ControlNet convert_surface(const SurfaceSpec& spec, const TransformMatrix& T1,
                           const TransformMatrix& T2);

// The last coordinate of the pre-image is the denominator.
RationalBRep rationalize_curve(const IntegralCurveSpec& spec, const TransformMatrix& T);
RationalNet rationalize_surface(const SurfaceSpec& spec, const TransformMatrix& T1,
                                const TransformMatrix& T2);

// Re-expresses the curve in a larger space that contains every ordinary basis
// function of spec.space.
IntegralCurveSpec elevate_embedding(const IntegralCurveSpec& spec, const SpaceSpec& target);

// Next space in the canonical nested chain (Trigonometric and Hyperbolic:
// m -> m+1; Polynomial: n -> n+1). Throws NotNested for other families.
SpaceSpec next_nested_space(const SpaceSpec& space);

// Order of a space in its nested chain: m for Trigonometric and Hyperbolic,
// n for Polynomial.
int nested_order(const SpaceSpec& space);

struct ElevatedRational {
  IntegralCurveSpec spec;  // the pre-image in the final space
  RationalBRep rep;
  int elevations = 0;
  bool success = false;
};

// Elevates along the nested chain until all weights are nonnegative or the
// order exceeds max_order.
ElevatedRational rationalize_with_elevation(const IntegralCurveSpec& spec, int max_order);

Vector eval_bcurve(const ControlPolygon& polygon, const BBasis& basis, double u);
Vector eval_bsurface(const ControlNet& net, const BBasis& bu, const BBasis& bv,
                     double u, double v);
Vector eval_rational(const RationalBRep& rep, const BBasis& basis, double u);
Vector eval_rational_surface(const RationalNet& net, const BBasis& bu, const BBasis& bv,
                             double u, double v);

}  // namespace ecb
