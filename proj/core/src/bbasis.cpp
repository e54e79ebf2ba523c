// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#include "ecb/bbasis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ecb/errors.hpp"

namespace ecb {

namespace {

using Series = std::vector<double>;  // Taylor coefficients, truncated

Series series_mul(const Series& x, const Series& y) {
  Series z(x.size(), 0.0);
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t q = 0; p + q < z.size(); ++q) z[p + q] += x[p] * y[q];
  return z;
}

Series series_pow(const Series& x, int e) {
  Series r(x.size(), 0.0);
  r[0] = 1.0;
  for (int k = 0; k < e; ++k) r = series_mul(r, x);
  return r;
}

// k-th derivative of sin or sinh at x
double sdiff(bool hyp, int k, double x) {
  if (hyp) return (k % 2 == 0) ? std::sinh(x) : std::cosh(x);
  switch (k % 4) {
    case 0: return std::sin(x);
    case 1: return std::cos(x);
    case 2: return -std::sin(x);
    default: return -std::cos(x);
  }
}

// j-th derivative of S^{p}((beta-u)/2) S^{q}(u/2)
double sine_product_derivative(bool hyp, double beta, int p, int q, int j,
                               double u) {
  const double x1 = 0.5 * (beta - u), x2 = 0.5 * u;
  if (j == 0) {
    const double s1 = hyp ? std::sinh(x1) : std::sin(x1);
    const double s2 = hyp ? std::sinh(x2) : std::sin(x2);
    return std::pow(s1, p) * std::pow(s2, q);
  }
  Series f1(j + 1), f2(j + 1);
  double fact = 1.0;
  for (int k = 0; k <= j; ++k) {
    if (k > 0) fact *= k;
    f1[k] = std::pow(-0.5, k) * sdiff(hyp, k, x1) / fact;
    f2[k] = std::pow(0.5, k) * sdiff(hyp, k, x2) / fact;
  }
  const Series prod = series_mul(series_pow(f1, p), series_pow(f2, q));
  return prod[j] * fact;
}

double sine_normalizing(bool hyp, int n, double beta, int i) {
  if (n % 2 != 0)
    throw EcbError(ErrorKind::InvalidSpace, "normalizing coefficient needs even n");
  if (i < 0 || i > n)
    throw EcbError(ErrorKind::IndexOutOfRange, "index out of range");
  const int m = n / 2;
  const int ii = std::min(i, n - i);
  const double half = 0.5 * beta;
  const double c2 = 2.0 * (hyp ? std::cosh(half) : std::cos(half));
  double sum = 0.0;
  for (int r = 0; 2 * r <= ii; ++r)
    sum += binomial(m, ii - r) * binomial(ii - r, r) * std::pow(c2, ii - 2 * r);
  return sum / std::pow(hyp ? std::sinh(half) : std::sin(half), n);
}

void check_trig_beta(double beta) {
  if (!(beta > 0.0 && beta < std::numbers::pi))
    throw EcbError(ErrorKind::InvalidSpace, "beta must lie in (0, pi)");
}

void check_hyp_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw EcbError(ErrorKind::InvalidSpace, "beta must be positive");
}

}  // namespace

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int p = 1; p <= k; ++p) r = r * (n - k + p) / p;
  return std::round(r);
}

double bernstein_eval(int n, int i, int j, double u) {
  if (n < 0 || i < 0 || i > n)
    throw EcbError(ErrorKind::IndexOutOfRange, "Bernstein index out of range");
  if (j > n) return 0.0;
  const double v = 1.0 - u;
  double sum = 0.0;
  // Leibniz: k derivatives on u^i, j-k on (1-u)^(n-i)
  for (int k = std::max(0, j - (n - i)); k <= std::min(j, i); ++k) {
    double a = 1.0;
    for (int p = 0; p < k; ++p) a *= (i - p);
    double b = 1.0;
    for (int p = 0; p < j - k; ++p) b *= -(n - i - p);
    const int ea = i - k, eb = n - i - j + k;
    sum += binomial(j, k) * a * (ea ? std::pow(u, ea) : 1.0) * b *
           (eb ? std::pow(v, eb) : 1.0);
  }
  return binomial(n, i) * sum;
}

double trig_normalizing_coefficient(int n, double beta, int i) {
  check_trig_beta(beta);
  return sine_normalizing(false, n, beta, i);
}

double trig_bbasis_eval(int n, double beta, int i, double u) {
  const double c = trig_normalizing_coefficient(n, beta, i);
  return c * sine_product_derivative(false, beta, n - i, i, 0, u);
}

double hyperbolic_normalizing_coefficient(int n, double beta, int i) {
  check_hyp_beta(beta);
  return sine_normalizing(true, n, beta, i);
}

double hyperbolic_bbasis_eval(int n, double beta, int i, double u) {
  const double c = hyperbolic_normalizing_coefficient(n, beta, i);
  return c * sine_product_derivative(true, beta, n - i, i, 0, u);
}

bool has_closed_form(Family f) {
  return f == Family::Polynomial || f == Family::Trigonometric ||
         f == Family::Hyperbolic;
}

double BBasis::derivative(int i, int j, double u) const {
  if (i < 0 || i > n())
    throw EcbError(ErrorKind::IndexOutOfRange,
                   "B-basis index " + std::to_string(i) + " out of range");
  if (j < 0) throw EcbError(ErrorKind::IndexOutOfRange, "negative derivative order");
  return kind_ == BasisKind::ClosedForm ? closed_form(i, j, u) : mixed(i, j, u);
}

Vector BBasis::eval_all(double u) const {
  Vector v(n() + 1);
  for (int i = 0; i <= n(); ++i) v[i] = eval(i, u);
  return v;
}

double BBasis::closed_form(int i, int j, double u) const {
  switch (space_.family) {
    case Family::Polynomial: {
      const double h = space_.beta - space_.alpha;
      return bernstein_eval(n(), i, j, (u - space_.alpha) / h) / std::pow(h, j);
    }
    case Family::Trigonometric:
    case Family::Hyperbolic: {
      const bool hyp = space_.family == Family::Hyperbolic;
      return coeff_[i] *
             sine_product_derivative(hyp, space_.beta, n() - i, i, j, u);
    }
    default:
      break;
  }
  throw EcbError(ErrorKind::InvalidSpace, "family has no closed-form B-basis");
}

double BBasis::mixed(int i, int j, double u) const {
  const int n = this->n();
  if (2 * i < n) {
    const double s = (j % 2 == 0) ? 1.0 : -1.0;
    return s * mixed(n - i, j, space_.alpha + space_.beta - u);
  }
  const Vector c = half_coeffs_.row(n - i);
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) sum += c[k] * ordinary_->eval(k, j, u);
  return sum;
}

Vector BBasis::mixed_coefficients(int i) const {
  if (kind_ != BasisKind::Mixed || 2 * i < n() || i > n())
    throw EcbError(ErrorKind::IndexOutOfRange,
                   "mixed coefficients exist for i >= ceil(n/2) of a mixed basis");
  return half_coeffs_.row(n() - i).transpose();
}

BBasis closed_form_bbasis(const SpaceSpec& space) {
  validate(space);
  if (!has_closed_form(space.family))
    throw EcbError(ErrorKind::InvalidSpace,
                   std::string("no closed-form B-basis for ") + to_string(space.family));
  BBasis b;
  b.space_ = space;
  b.kind_ = BasisKind::ClosedForm;
  if (space.family != Family::Polynomial) {
    const bool hyp = space.family == Family::Hyperbolic;
    for (int i = 0; i <= space.n; ++i)
      b.coeff_.push_back(sine_normalizing(hyp, space.n, space.beta, i));
  }
  return b;
}

BBasis construct_mixed_bbasis(const SpaceSpec& space) {
  validate(space);
  if (!reflection_invariant(space))
    throw EcbError(ErrorKind::InvalidSpace, "space is not reflection invariant");
  const int n = space.n;
  const double a = space.alpha, be = space.beta;
  auto ord = std::make_shared<OrdinaryBasis>(space);
  auto mc = std::make_shared<MixedConstruction>();

  mc->rho.resize(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    Matrix A(n + 1, n + 1);
    Vector rhs = Vector::Zero(n + 1);
    int row = 0;
    for (int j = 0; j <= i; ++j, ++row)
      for (int c = 0; c <= n; ++c) A(row, c) = ord->eval(c, j, a);
    rhs[i] = 1.0;
    for (int j = 0; j <= n - 1 - i; ++j, ++row)
      for (int c = 0; c <= n; ++c) A(row, c) = ord->eval(c, j, be);
    try {
      mc->rho.row(i) = solve_pivoted(A, rhs).transpose();
    } catch (const EcbError&) {
      throw EcbError(ErrorKind::BeyondCriticalLength,
                     "initial-condition system is singular; beta is at or "
                     "beyond the critical length");
    }
  }

  auto v = [&](int k, int j, double u) {
    double s = 0.0;
    for (int c = 0; c <= n; ++c) s += mc->rho(k, c) * ord->eval(c, j, u);
    return s;
  };
  mc->wronskian.resize(n + 1, n + 1);
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n; ++k) mc->wronskian(j, k) = v(n - k, j, be);

  LUFactors lu;
  try {
    lu = doolittle_lu(mc->wronskian, 1e-10);
  } catch (const EcbError&) {
    throw EcbError(ErrorKind::BeyondCriticalLength,
                   "reversed Wronskian pivot degenerates; beta is at or beyond "
                   "the critical length");
  }
  mc->L = lu.L;
  mc->U = lu.U;
  mc->lambda0 = unit_lower_inverse(lu.L).col(0);
  mc->mu = upper_inverse(lu.U);

  BBasis b;
  b.space_ = space;
  b.kind_ = BasisKind::Mixed;
  b.ordinary_ = ord;
  const int half = n / 2;  // q = n - i runs over 0..floor(n/2)
  b.half_coeffs_ = Matrix::Zero(half + 1, n + 1);
  for (int q = 0; q <= half; ++q)
    for (int r = 0; r <= q; ++r)
      b.half_coeffs_.row(q) += mc->lambda0[q] * mc->mu(r, q) * mc->rho.row(n - r);
  b.mixed_ = mc;

  for (int i = 0; i <= n; ++i) {
    const double d = b.derivative(i, i, a);
    if (!(d > 0.0) || !std::isfinite(d))
      throw EcbError(ErrorKind::BeyondCriticalLength,
                     "constructed basis violates the endpoint sign conditions; "
                     "beta is at or beyond the critical length");
  }
  return b;
}

BBasis make_bbasis(const SpaceSpec& space) {
  return has_closed_form(space.family) ? closed_form_bbasis(space)
                                       : construct_mixed_bbasis(space);
}

}  // namespace ecb
