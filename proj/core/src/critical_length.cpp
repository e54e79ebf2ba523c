// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ecb/bbasis.hpp"
#include "ecb/errors.hpp"

namespace ecb {

namespace {

// Derivatives of the canonical basis at alpha (v_k^{(j)}(alpha) = delta_jk).
// Close to alpha the functions vanish to high order and direct evaluation
// loses all digits, so a Taylor expansion about alpha is used there.
class CanonicalBasis {
 public:
  explicit CanonicalBasis(const SpaceSpec& s) : ord_(s), n_(s.n), alpha_(s.alpha) {
    Matrix M(n_ + 1, n_ + 1);
    for (int j = 0; j <= n_; ++j)
      for (int c = 0; c <= n_; ++c) M(j, c) = ord_.eval(c, j, alpha_);
    R_ = solve_pivoted(M, Matrix::Identity(n_ + 1, n_ + 1));

    double rate = 1.0;
    for (const Term& t : ord_.terms()) rate = std::max(rate, std::hypot(t.a, t.b));
    radius_ = 4.0 / rate;
    order_ = n_ + 80;
    taylor_.resize(order_ + 1, n_ + 1);
    for (int p = 0; p <= order_; ++p) {
      if (p <= n_) {  // exact by construction of the canonical basis
        taylor_.row(p) = Vector::Unit(n_ + 1, p).transpose();
        continue;
      }
      Vector phi(n_ + 1);
      for (int c = 0; c <= n_; ++c) phi[c] = ord_.eval(c, p, alpha_);
      taylor_.row(p) = phi.transpose() * R_;
    }
  }

  // V(d-1, k) = v_k^{(d)}(u) for d = 1..n+1
  Matrix derivative_rows(double u) const {
    Matrix V(n_ + 1, n_ + 1);
    const double h = u - alpha_;
    if (h <= radius_) {
      for (int d = 1; d <= n_ + 1; ++d) {
        Vector acc = Vector::Zero(n_ + 1);
        double w = 1.0;
        for (int p = d; p <= order_; ++p) {
          acc += w * taylor_.row(p).transpose();
          w *= h / (p - d + 1);
        }
        V.row(d - 1) = acc.transpose();
      }
      return V;
    }
    for (int d = 1; d <= n_ + 1; ++d) {
      Vector phi(n_ + 1);
      for (int c = 0; c <= n_; ++c) phi[c] = ord_.eval(c, d, u);
      V.row(d - 1) = phi.transpose() * R_;
    }
    return V;
  }

 private:
  OrdinaryBasis ord_;
  int n_;
  double alpha_;
  Matrix R_;
  double radius_ = 1.0;
  int order_ = 0;
  Matrix taylor_;  // taylor_(p, k) = v_k^{(p)}(alpha)
};

struct DetSample {
  double det = 0.0;
  double rcond = 0.0;  // of the column-normalized matrix
};

// det of the Wronskian of {v_i..v_n} built from derivative rows 1..n+1-i,
// sampled at distance h from alpha. Near alpha entry (d, k) behaves like
// h^(k-d), so rows and columns are first rescaled by those powers and then
// equilibrated. All factors are positive, which keeps the sign.
DetSample wronskian_det(const Matrix& V, int n, int i, double h) {
  const int m = n + 1 - i;
  Matrix W = V.block(0, i, m, m);
  const double g = std::min(h, 1.0);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) W(r, c) *= std::pow(g, r + 1 - i - c);
  for (int pass = 0; pass < 3; ++pass) {
    for (int r = 0; r < m; ++r) {
      const double s = W.row(r).cwiseAbs().maxCoeff();
      if (s > 0.0) W.row(r) /= s;
    }
    for (int c = 0; c < m; ++c) {
      const double s = W.col(c).cwiseAbs().maxCoeff();
      if (s > 0.0) W.col(c) /= s;
    }
  }
  Eigen::PartialPivLU<Matrix> lu(W);
  return {lu.determinant(), lu.rcond()};
}

// Below this the computed sign of a scan sample is not trusted.
constexpr double kReliableRcond = 1e-10;

}  // namespace

CriticalLengthResult critical_length(const SpaceSpec& space,
                                     const CriticalLengthOptions& opts) {
  validate(space);
  const int n = space.n;
  const double len = space.beta - space.alpha;
  const double scan_max =
      opts.scan_max > 0.0 ? opts.scan_max : std::max(20.0 * len, 4.0 * std::numbers::pi);
  double step = opts.scan_step > 0.0 ? opts.scan_step : len / 1000.0;
  step = std::max(step, scan_max / 1e5);
  if (!(opts.tol > 0.0))
    throw EcbError(ErrorKind::InvalidSpace, "critical_length tolerance must be positive");

  const CanonicalBasis cb(space);
  // b_0 = 1 - (b_1 + ... + b_n) never fails on its own
  const int first = std::max(1, n / 2);
  CriticalLengthResult res;
  res.first_index = first;
  res.zeros.assign(n - first + 1, std::nullopt);

  const int count = n - first + 1;
  auto dets = [&](double h) {
    const Matrix V = cb.derivative_rows(space.alpha + h);
    std::vector<DetSample> w(count);
    for (int i = first; i <= n; ++i) w[i - first] = wronskian_det(V, n, i, h);
    return w;
  };

  // reach[q]: length up to which index q was scanned with trusted signs
  std::vector<double> reach(count, 0.0);
  std::vector<bool> open(count, true);
  std::vector<DetSample> prev = dets(step);
  for (int q = 0; q < count; ++q)
    if (prev[q].rcond < kReliableRcond) open[q] = false;
  double h_prev = step;
  for (long k = 2; std::find(open.begin(), open.end(), true) != open.end(); ++k) {
    const double h = std::min(k * step, scan_max);
    const std::vector<DetSample> cur = dets(h);
    for (int q = 0; q < count; ++q) {
      if (!open[q]) continue;
      if (cur[q].rcond < kReliableRcond) {
        open[q] = false;
        reach[q] = h_prev;
        continue;
      }
      reach[q] = h;
      if (!(prev[q].det * cur[q].det <= 0.0)) continue;
      const int i = first + q;
      double lo = h_prev, hi = h;
      double flo = prev[q].det;
      while (hi - lo > opts.tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = wronskian_det(cb.derivative_rows(space.alpha + mid), n, i, mid).det;
        if (flo * fm <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      res.zeros[q] = 0.5 * (lo + hi);
      open[q] = false;
    }
    prev = cur;
    h_prev = h;
    if (h >= scan_max) break;
  }

  res.scanned_to = scan_max;
  for (int q = 0; q < count; ++q)
    if (!res.zeros[q]) res.scanned_to = std::min(res.scanned_to, reach[q]);
  res.estimate = std::numeric_limits<double>::infinity();
  for (const auto& z : res.zeros)
    if (z) {
      res.found = true;
      res.estimate = std::min(res.estimate, *z);
    }
  return res;
}

}  // namespace ecb
