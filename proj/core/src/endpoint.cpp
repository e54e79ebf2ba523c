// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#include "ecb/endpoint.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace ecb {

namespace {

double ipow(double x, int e) { return e == 0 ? 1.0 : std::pow(x, e); }

double sign(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

// cos(x - j pi / 2)
double cos_shift(double x, int j) {
  switch (j % 4) {
    case 0: return std::cos(x);
    case 1: return std::sin(x);
    case 2: return -std::cos(x);
    default: return -std::sin(x);
  }
}

void check_closed_form_args(int m, int i, int j) {
  if (m < 1) throw EcbError(ErrorKind::InvalidSpace, "order m must be positive");
  if (i < 0 || i > 2 * m)
    throw EcbError(ErrorKind::IndexOutOfRange, "basis index out of range");
  if (j < 0) throw EcbError(ErrorKind::IndexOutOfRange, "negative derivative order");
  if (j > m)
    throw EcbError(ErrorKind::OutOfClosedFormRange,
                   "closed-form endpoint derivative needs j <= m; use the "
                   "determinant route");
}

// Unnormalized b^{(j)}_{2m,i}(0), j >= 1.
double trig_sum(int m, double beta, int i, int j) {
  const double scale = std::ldexp(1.0, -(2 * m - 1));
  double s = 0.0;
  if (i % 2 == 1) {
    const int r = (i - 1) / 2;
    for (int k = 0; k <= m - r - 1; ++k)
      for (int l = 0; l <= r; ++l)
        s += sign(m + 1 - k - l) * binomial(2 * (m - r - 1) + 1, k) *
             binomial(2 * r + 1, l) *
             (ipow(m - k - l, j) - ipow(m - k - 2 * r + l - 1, j)) *
             cos_shift((2 * (m - r - k) - 1) * beta / 2, j);
    return s * scale;
  }
  const int r = i / 2, q = m - r;
  const double cj = cos_shift(0.0, j);
  double s1 = 0.0;
  for (int l = 0; l < r; ++l)
    s1 += sign(r - l) * binomial(2 * r, l) * ipow(r - l, j) * cj;
  double s2 = 0.0;
  for (int k = 0; k < q; ++k)
    s2 += sign(q - k) * binomial(2 * q, k) * ipow(q - k, j) *
          cos_shift((q - k) * beta, j);
  double s3 = 0.0;
  for (int k = 0; k < q; ++k)
    for (int l = 0; l < r; ++l)
      s3 += sign(m - k - l) * binomial(2 * q, k) * binomial(2 * r, l) *
            (ipow(m - k - l, j) + ipow(m - k - 2 * r + l, j)) *
            cos_shift((q - k) * beta, j);
  return (binomial(2 * q, q) * s1 + binomial(2 * r, r) * s2 + s3) * scale;
}

double hyp_sum(int m, double beta, int i, int j) {
  const double scale = std::ldexp(1.0, -(2 * m - 1));
  const bool even_j = j % 2 == 0;
  auto h = [&](double x) { return even_j ? std::cosh(x) : std::sinh(x); };
  if (i % 2 == 1) {
    const int r = (i - 1) / 2;
    double s = 0.0;
    for (int k = 0; k <= m - r - 1; ++k)
      for (int l = 0; l <= r; ++l) {
        const int e = m + ((m - r - 1) % 2) + (r % 2) - k - l - (even_j ? 1 : 0);
        s += sign(e) * binomial(2 * (m - r - 1) + 1, k) * binomial(2 * r + 1, l) *
             (ipow(m - k - 2 * r + l - 1, j) - ipow(m - k - l, j)) *
             h((2 * (m - k - r) - 1) * beta / 2);
      }
    return s * scale;
  }
  const int r = i / 2, q = m - r;
  double s1 = 0.0;
  if (even_j)
    for (int l = 0; l < r; ++l)
      s1 += sign(l) * binomial(2 * r, l) * ipow(r - l, j);
  double s2 = 0.0;
  for (int k = 0; k < q; ++k)
    s2 += sign(k) * binomial(2 * q, k) * ipow(q - k, j) * h((q - k) * beta);
  double s3 = 0.0;
  for (int k = 0; k < q; ++k)
    for (int l = 0; l < r; ++l)
      s3 += sign(k + l) * binomial(2 * q, k) * binomial(2 * r, l) *
            (ipow(m - k - l, j) + ipow(m - k - 2 * r + l, j)) * h((q - k) * beta);
  return (sign(q) * binomial(2 * q, q) * s1 + sign(r + j) * binomial(2 * r, r) * s2 +
          sign(j) * s3) *
         scale;
}

double sine_endpoint(bool hyp, int m, double beta, int i, int j, End end) {
  check_closed_form_args(m, i, j);
  if (end == End::Beta)
    return sign(j) * sine_endpoint(hyp, m, beta, 2 * m - i, j, End::Alpha);
  if (j == 0) return i == 0 ? 1.0 : 0.0;
  // Hermite zeros; the sums only reach them up to cancellation error
  if (j < i) return 0.0;
  if (hyp) return hyperbolic_normalizing_coefficient(2 * m, beta, i) * hyp_sum(m, beta, i, j);
  return trig_normalizing_coefficient(2 * m, beta, i) * trig_sum(m, beta, i, j);
}

// Degeneracy is judged on a row- and column-equilibrated copy, since the
// Wronskian columns grow with the derivative order.
double checked_quotient(const Matrix& num, const Matrix& den) {
  Matrix e = den;
  for (int pass = 0; pass < 3; ++pass) {
    for (Eigen::Index r = 0; r < e.rows(); ++r) {
      const double m = e.row(r).cwiseAbs().maxCoeff();
      if (m > 0.0) e.row(r) /= m;
    }
    for (Eigen::Index c = 0; c < e.cols(); ++c) {
      const double m = e.col(c).cwiseAbs().maxCoeff();
      if (m > 0.0) e.col(c) /= m;
    }
  }
  if (!(Eigen::PartialPivLU<Matrix>(e).rcond() > 1e-14))
    throw EcbError(ErrorKind::DegenerateBasis,
                   "vanishing denominator determinant in the endpoint formula");
  return determinant(num) / determinant(den);
}

}  // namespace

const char* to_string(TableSource s) {
  switch (s) {
    case TableSource::Auto: return "Auto";
    case TableSource::ClosedForm: return "ClosedForm";
    case TableSource::Mixed: return "Mixed";
    case TableSource::Determinant: return "Determinant";
  }
  return "?";
}

TableSource table_source_from_string(const std::string& name) {
  for (TableSource s : {TableSource::Auto, TableSource::ClosedForm,
                        TableSource::Mixed, TableSource::Determinant})
    if (name == to_string(s)) return s;
  throw EcbError(ErrorKind::Schema, "unknown table source '" + name + "'");
}

double trig_endpoint_derivative(int m, double beta, int i, int j, End end) {
  if (!(beta > 0.0 && beta < std::numbers::pi))
    throw EcbError(ErrorKind::InvalidSpace, "beta must lie in (0, pi)");
  return sine_endpoint(false, m, beta, i, j, end);
}

double hyperbolic_endpoint_derivative(int m, double beta, int i, int j, End end) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw EcbError(ErrorKind::InvalidSpace, "beta must be positive");
  return sine_endpoint(true, m, beta, i, j, end);
}

double bernstein_endpoint_derivative(int n, int i, int j, End end) {
  return bernstein_endpoint_derivative_exact<double>(n, i, j, end);
}

double mixed_endpoint_derivative(const BBasis& basis, int i, int j, End end) {
  const SpaceSpec& s = basis.space();
  return basis.derivative(i, j, end == End::Alpha ? s.alpha : s.beta);
}

double determinant_endpoint_derivative(const SpaceSpec& space, int i, int j, End end) {
  validate(space);
  const int n = space.n;
  if (i < 0 || i > n || j < 0)
    throw EcbError(ErrorKind::IndexOutOfRange, "index out of range");
  if (j == 0) return (end == End::Alpha ? i == 0 : i == n) ? 1.0 : 0.0;

  const OrdinaryBasis ord(space);
  const double a = space.alpha, b = space.beta;
  const double u = end == End::Alpha ? a : b;
  auto P = [&](int d, double x) {
    Vector v(n);
    for (int c = 1; c <= n; ++c) v[c - 1] = ord.eval(c, d, x);
    return v;
  };
  const Vector D = P(0, b) - P(0, a);
  Matrix num(n, n), den(n, n);

  if (i == 0 || i == n) {
    const double x = i == 0 ? b : a;
    for (int d = 1; d < n; ++d) {
      num.col(d - 1) = P(d, x);
      den.col(d - 1) = P(d, x);
    }
    num.col(n - 1) = P(j, u);
    den.col(n - 1) = i == 0 ? Vector(-D) : D;
    return checked_quotient(num, den);
  }

  Matrix n1(n, n), d1(n, n), n2(n, n), d2(n, n);
  int c = 0;
  for (int d = 1; d < i; ++d, ++c) n1.col(c) = d1.col(c) = P(d, a);
  n1.col(c) = P(i, a);
  d1.col(c) = D;
  ++c;
  for (int d = 1; d < n - i; ++d, ++c) n1.col(c) = d1.col(c) = P(d, b);
  n1.col(c) = d1.col(c) = P(n - i, b);

  c = 0;
  n2.col(c) = d2.col(c) = D;
  ++c;
  for (int d = 1; d < i; ++d, ++c) n2.col(c) = d2.col(c) = P(d, a);
  n2.col(c) = P(j, u);
  d2.col(c) = P(i, a);
  ++c;
  for (int d = 1; d < n - i; ++d, ++c) n2.col(c) = d2.col(c) = P(d, b);
  return checked_quotient(n1, d1) * checked_quotient(n2, d2);
}

EndpointTables compute_endpoint_tables(const SpaceSpec& space, TableSource source) {
  validate(space);
  const int n = space.n, f = n / 2;
  if (source == TableSource::Auto)
    source = has_closed_form(space.family) ? TableSource::ClosedForm : TableSource::Mixed;
  if (source == TableSource::ClosedForm && !has_closed_form(space.family))
    throw EcbError(ErrorKind::InvalidSpace,
                   std::string("no closed-form endpoint derivatives for ") +
                       to_string(space.family));

  EndpointTables t;
  t.space = space;
  t.source = source;
  t.phi_alpha.resize(n + 1, f + 1);
  t.phi_beta.resize(n + 1, f + 1);
  t.b_alpha.resize(n + 1, f + 1);
  t.b_beta.resize(n + 1, f + 1);

  const OrdinaryBasis ord(space);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= f; ++j) {
      t.phi_alpha(i, j) = ord.eval(i, j, space.alpha);
      t.phi_beta(i, j) = ord.eval(i, j, space.beta);
    }

  std::function<double(int, int, End)> bfun;
  std::shared_ptr<BBasis> mixed;
  switch (source) {
    case TableSource::ClosedForm:
      if (space.family == Family::Polynomial) {
        const double h = space.beta - space.alpha;
        bfun = [n, h](int i, int j, End e) {
          return bernstein_endpoint_derivative(n, i, j, e) / std::pow(h, j);
        };
      } else {
        const bool hyp = space.family == Family::Hyperbolic;
        const double beta = space.beta;
        bfun = [hyp, n, beta](int i, int j, End e) {
          return sine_endpoint(hyp, n / 2, beta, i, j, e);
        };
      }
      break;
    case TableSource::Mixed:
      mixed = std::make_shared<BBasis>(construct_mixed_bbasis(space));
      bfun = [mixed](int i, int j, End e) {
        return mixed_endpoint_derivative(*mixed, i, j, e);
      };
      break;
    default:
      bfun = [&space](int i, int j, End e) {
        return determinant_endpoint_derivative(space, i, j, e);
      };
      break;
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= f; ++j) {
      t.b_alpha(i, j) = bfun(i, j, End::Alpha);
      t.b_beta(i, j) = bfun(i, j, End::Beta);
    }
  return t;
}

namespace {

std::string cache_key(const SpaceSpec& s, TableSource source) {
  std::string key;
  char buf[64];
  auto put = [&](double x) {
    std::snprintf(buf, sizeof buf, "%a|", x);
    key += buf;
  };
  key += std::to_string(static_cast<int>(s.family)) + "|" + std::to_string(s.n) + "|";
  put(s.alpha);
  put(s.beta);
  put(s.omega);
  for (const Root& r : s.roots) {
    put(r.re);
    put(r.im);
    key += std::to_string(r.multiplicity) + ";";
  }
  key += to_string(source);
  return key;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::shared_ptr<const EndpointTables>>& cache() {
  static std::map<std::string, std::shared_ptr<const EndpointTables>> c;
  return c;
}

}  // namespace

EndpointTables build_endpoint_tables(const SpaceSpec& space, TableSource source) {
  const std::string key = cache_key(space, source);
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return *it->second;
  }
  auto built = std::make_shared<const EndpointTables>(compute_endpoint_tables(space, source));
  std::lock_guard<std::mutex> lock(cache_mutex());
  cache()[key] = built;
  return *built;
}

void clear_endpoint_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex());
  cache().clear();
}

}  // namespace ecb
