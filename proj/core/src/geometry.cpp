// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#include "ecb/geometry.hpp"

#include <cmath>
#include <string>

#include "ecb/errors.hpp"

namespace ecb {

namespace {

[[noreturn]] void mismatch(const std::string& msg) {
  throw EcbError(ErrorKind::DimensionMismatch, msg);
}

Vector ordinary_values(const OrdinaryBasis& ord, double u) {
  Vector v(ord.n() + 1);
  for (int i = 0; i <= ord.n(); ++i) v[i] = ord.eval(i, 0, u);
  return v;
}

void check_curve(const IntegralCurveSpec& spec) {
  validate(spec.space);
  if (spec.lambdas.rows() != spec.space.n + 1)
    mismatch("curve needs n + 1 coefficient vectors");
  if (spec.lambdas.cols() < 1) mismatch("curve coefficients need at least one coordinate");
}

void check_surface(const SurfaceSpec& spec) {
  for (const SpaceSpec& s : spec.spaces) validate(s);
  if (spec.coordinates.empty()) mismatch("surface has no coordinates");
  for (const auto& terms : spec.coordinates) {
    if (terms.empty()) mismatch("surface coordinate has no terms");
    for (const SeparableTerm& t : terms)
      if (t.u.size() != spec.spaces[0].n + 1 || t.v.size() != spec.spaces[1].n + 1)
        mismatch("separable term length does not match the directional order");
  }
}

void check_transform(const SpaceSpec& s, const TransformMatrix& T) {
  if (!(T.space == s)) mismatch("transformation matrix belongs to another space");
  if (T.t.rows() != s.n + 1 || T.t.cols() != s.n + 1) mismatch("transformation matrix size");
}

double weight_scale(const Eigen::Ref<const Matrix>& w) {
  return w.size() ? w.cwiseAbs().maxCoeff() : 0.0;
}

void check_weight(double w, double scale) {
  if (!(std::abs(w) > 1e-13 * scale))
    throw EcbError(ErrorKind::ProjectionSingular,
                   "zero weight: control point cannot be projected");
}

}  // namespace

Vector eval_integral_curve(const IntegralCurveSpec& spec, double u) {
  check_curve(spec);
  const OrdinaryBasis ord(spec.space);
  return spec.lambdas.transpose() * ordinary_values(ord, u);
}

Vector eval_integral_surface(const SurfaceSpec& spec, double u, double v) {
  check_surface(spec);
  const OrdinaryBasis o1(spec.spaces[0]), o2(spec.spaces[1]);
  const Vector pu = ordinary_values(o1, u), pv = ordinary_values(o2, v);
  Vector out(spec.coordinates.size());
  for (std::size_t l = 0; l < spec.coordinates.size(); ++l) {
    double s = 0.0;
    for (const SeparableTerm& t : spec.coordinates[l]) s += t.u.dot(pu) * t.v.dot(pv);
    out[l] = s;
  }
  return out;
}

ControlPolygon convert_curve(const IntegralCurveSpec& spec, const TransformMatrix& T) {
  check_curve(spec);
  check_transform(spec.space, T);
  return {spec.space, T.t.transpose() * spec.lambdas};
}

ControlNet convert_surface(const SurfaceSpec& spec, const TransformMatrix& T1,
                           const TransformMatrix& T2) {
  check_surface(spec);
  check_transform(spec.spaces[0], T1);
  check_transform(spec.spaces[1], T2);
  ControlNet net;
  net.spaces = spec.spaces;
  for (const auto& terms : spec.coordinates) {
    Matrix P = Matrix::Zero(spec.spaces[0].n + 1, spec.spaces[1].n + 1);
    for (const SeparableTerm& t : terms) {
      const Vector pu = T1.t.transpose() * t.u;
      const Vector pv = T2.t.transpose() * t.v;
      P += pu * pv.transpose();
    }
    net.coordinates.push_back(P);
  }
  return net;
}

RationalBRep rationalize_curve(const IntegralCurveSpec& spec, const TransformMatrix& T) {
  check_curve(spec);
  const Eigen::Index d = spec.lambdas.cols() - 1;
  if (d < 1) mismatch("rational pre-image needs at least two coordinates");
  const OrdinaryBasis ord(spec.space);
  const Vector wl = spec.lambdas.col(d);
  for (int k = 0; k < kDenominatorCheckGrid; ++k) {
    const double u = spec.space.alpha + (spec.space.beta - spec.space.alpha) * k /
                                            (kDenominatorCheckGrid - 1);
    if (!(wl.dot(ordinary_values(ord, u)) > 0.0))
      throw EcbError(ErrorKind::InvalidRationalInput,
                     "denominator is not positive at u = " + std::to_string(u));
  }
  const ControlPolygon pre = convert_curve(spec, T);
  RationalBRep rep;
  rep.space = spec.space;
  rep.weights = pre.points.col(d);
  rep.points.resize(pre.points.rows(), d);
  const double scale = weight_scale(rep.weights);
  rep.all_nonneg = true;
  for (Eigen::Index j = 0; j < pre.points.rows(); ++j) {
    const double w = rep.weights[j];
    check_weight(w, scale);
    rep.points.row(j) = pre.points.row(j).head(d) / w;
    if (w < kWeightSignTolerance) rep.all_nonneg = false;
  }
  return rep;
}

RationalNet rationalize_surface(const SurfaceSpec& spec, const TransformMatrix& T1,
                                const TransformMatrix& T2) {
  check_surface(spec);
  const std::size_t d = spec.coordinates.size() - 1;
  if (d < 1) mismatch("rational surface pre-image needs at least two coordinates");
  SurfaceSpec den{spec.spaces, {spec.coordinates[d]}};
  for (int a = 0; a < 101; ++a)
    for (int b = 0; b < 101; ++b) {
      const double u = spec.spaces[0].alpha + (spec.spaces[0].beta - spec.spaces[0].alpha) * a / 100.0;
      const double v = spec.spaces[1].alpha + (spec.spaces[1].beta - spec.spaces[1].alpha) * b / 100.0;
      if (!(eval_integral_surface(den, u, v)[0] > 0.0))
        throw EcbError(ErrorKind::InvalidRationalInput, "denominator is not positive on the grid");
    }
  const ControlNet pre = convert_surface(spec, T1, T2);
  RationalNet out;
  out.spaces = spec.spaces;
  out.weights = pre.coordinates[d];
  const double scale = weight_scale(out.weights);
  out.all_nonneg = true;
  for (Eigen::Index a = 0; a < out.weights.rows(); ++a)
    for (Eigen::Index b = 0; b < out.weights.cols(); ++b) {
      check_weight(out.weights(a, b), scale);
      if (out.weights(a, b) < kWeightSignTolerance) out.all_nonneg = false;
    }
  for (std::size_t l = 0; l < d; ++l)
    out.coordinates.push_back(pre.coordinates[l].cwiseQuotient(out.weights));
  return out;
}

IntegralCurveSpec elevate_embedding(const IntegralCurveSpec& spec, const SpaceSpec& target) {
  check_curve(spec);
  validate(target);
  if (target.alpha != spec.space.alpha || target.beta != spec.space.beta)
    throw EcbError(ErrorKind::NotNested, "target space lives on a different interval");
  const std::vector<Term> from = basis_terms(spec.space);
  const std::vector<Term> to = basis_terms(target);
  IntegralCurveSpec out{target, Matrix::Zero(target.n + 1, spec.lambdas.cols())};
  std::vector<bool> used(to.size(), false);
  for (std::size_t i = 0; i < from.size(); ++i) {
    std::size_t k = 0;
    while (k < to.size() && (used[k] || !from[i].same_function(to[k]))) ++k;
    if (k == to.size())
      throw EcbError(ErrorKind::NotNested,
                     "basis function " + std::to_string(i) + " is missing from the target space");
    used[k] = true;
    out.lambdas.row(k) = spec.lambdas.row(i);
  }
  return out;
}

int nested_order(const SpaceSpec& s) {
  switch (s.family) {
    case Family::Trigonometric:
    case Family::Hyperbolic: return s.n / 2;
    case Family::Polynomial: return s.n;
    default: break;
  }
  throw EcbError(ErrorKind::NotNested,
                 std::string("no canonical nested chain for ") + to_string(s.family));
}

SpaceSpec next_nested_space(const SpaceSpec& s) {
  SpaceSpec t = s;
  switch (s.family) {
    case Family::Trigonometric:
    case Family::Hyperbolic: t.n = s.n + 2; break;
    case Family::Polynomial: t.n = s.n + 1; break;
    default:
      throw EcbError(ErrorKind::NotNested,
                     std::string("no canonical nested chain for ") + to_string(s.family));
  }
  validate(t);
  return t;
}

ElevatedRational rationalize_with_elevation(const IntegralCurveSpec& spec, int max_order) {
  ElevatedRational out;
  out.spec = spec;
  for (;;) {
    const bool last = nested_order(out.spec.space) >= max_order;
    try {
      out.rep = rationalize_curve(out.spec, build_transform(out.spec.space));
    } catch (const EcbError& e) {
      // a vanishing weight at an intermediate order is skipped like a negative one
      if (e.kind() != ErrorKind::ProjectionSingular || last) throw;
      out.rep = RationalBRep{};
    }
    if (out.rep.all_nonneg) {
      out.success = true;
      return out;
    }
    if (last) return out;
    out.spec = elevate_embedding(out.spec, next_nested_space(out.spec.space));
    ++out.elevations;
  }
}

Vector eval_bcurve(const ControlPolygon& polygon, const BBasis& basis, double u) {
  if (polygon.points.rows() != basis.n() + 1) mismatch("polygon size does not match basis");
  return polygon.points.transpose() * basis.eval_all(u);
}

Vector eval_bsurface(const ControlNet& net, const BBasis& bu, const BBasis& bv, double u,
                     double v) {
  const Vector a = bu.eval_all(u), b = bv.eval_all(v);
  Vector out(net.coordinates.size());
  for (std::size_t l = 0; l < net.coordinates.size(); ++l) {
    const Matrix& P = net.coordinates[l];
    if (P.rows() != a.size() || P.cols() != b.size()) mismatch("net size does not match bases");
    out[l] = a.dot(P * b);
  }
  return out;
}

Vector eval_rational(const RationalBRep& rep, const BBasis& basis, double u) {
  if (rep.points.rows() != basis.n() + 1) mismatch("rational polygon size does not match basis");
  const Vector b = basis.eval_all(u);
  const Vector wb = rep.weights.cwiseProduct(b);
  const double den = wb.sum();
  if (!(den > 0.0))
    throw EcbError(ErrorKind::InvalidRationalInput, "rational denominator is not positive");
  return rep.points.transpose() * wb / den;
}

Vector eval_rational_surface(const RationalNet& net, const BBasis& bu, const BBasis& bv,
                             double u, double v) {
  const Vector a = bu.eval_all(u), b = bv.eval_all(v);
  const Matrix W = net.weights.cwiseProduct(a * b.transpose());
  const double den = W.sum();
  if (!(den > 0.0))
    throw EcbError(ErrorKind::InvalidRationalInput, "rational denominator is not positive");
  Vector out(net.coordinates.size());
  for (std::size_t l = 0; l < net.coordinates.size(); ++l)
    out[l] = net.coordinates[l].cwiseProduct(W).sum() / den;
  return out;
}

}  // namespace ecb
