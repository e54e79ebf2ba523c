// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#include "ecb/ec_space.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <tuple>

#include "ecb/errors.hpp"

namespace ecb {

namespace {

[[noreturn]] void invalid(const std::string& msg) {
  throw EcbError(ErrorKind::InvalidSpace, msg);
}

int root_dimension(const Root& r) {
  return r.im > 0.0 ? 2 * r.multiplicity : r.multiplicity;
}

bool near(double x, double y) {
  return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(x));
}

void validate_roots(const std::vector<Root>& roots, int n) {
  if (roots.empty()) invalid("characteristic spec has no roots");
  int total = 0;
  bool has_zero = false;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const Root& r = roots[k];
    if (!std::isfinite(r.re) || !std::isfinite(r.im))
      invalid("root is not finite");
    if (r.im < 0.0)
      invalid("roots are given by their upper half-plane representative");
    if (r.multiplicity < 1) invalid("root multiplicity must be positive");
    for (std::size_t q = 0; q < k; ++q)
      if (near(roots[q].re, r.re) && near(roots[q].im, r.im))
        invalid("duplicate root in characteristic spec");
    if (r.re == 0.0 && r.im == 0.0) has_zero = true;
    total += root_dimension(r);
    bool mirrored = false;
    for (const Root& s : roots)
      if (near(s.re, -r.re) && near(s.im, r.im) &&
          s.multiplicity == r.multiplicity)
        mirrored = true;
    if (!mirrored)
      invalid("root set must be symmetric under negation");
  }
  if (!has_zero) invalid("root 0 is required so that constants are included");
  if (n >= 0 && total != n + 1)
    invalid("total multiplicity must equal n + 1");
}

std::vector<Term> ode_terms(const std::vector<Root>& roots) {
  std::vector<Term> out;
  for (const Root& r : roots) {
    for (int e = 0; e < r.multiplicity; ++e) {
      out.push_back({TermKind::Cos, e, r.re, r.im});
      if (r.im > 0.0) out.push_back({TermKind::Sin, e, r.re, r.im});
    }
  }
  auto is_const = [](const Term& t) {
    return t.kind == TermKind::Cos && t.power == 0 && t.a == 0.0 &&
           t.b == 0.0;
  };
  auto it = std::find_if(out.begin(), out.end(), is_const);
  std::iter_swap(out.begin(), it);
  std::sort(out.begin() + 1, out.end(), [](const Term& x, const Term& y) {
    return std::make_tuple(x.a, x.b, x.power, static_cast<int>(x.kind)) <
           std::make_tuple(y.a, y.b, y.power, static_cast<int>(y.kind));
  });
  return out;
}

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::Polynomial: return "Polynomial";
    case Family::Trigonometric: return "Trigonometric";
    case Family::Hyperbolic: return "Hyperbolic";
    case Family::AlgebraicTrigonometric4: return "AlgebraicTrigonometric4";
    case Family::ExponentialTrigonometric4: return "ExponentialTrigonometric4";
    case Family::OdeDefined: return "OdeDefined";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::Polynomial, Family::Trigonometric,
                   Family::Hyperbolic, Family::AlgebraicTrigonometric4,
                   Family::ExponentialTrigonometric4, Family::OdeDefined})
    if (name == to_string(f)) return f;
  throw EcbError(ErrorKind::Schema, "unknown family '" + name + "'");
}

bool Term::same_function(const Term& other, double tol) const {
  return kind == other.kind && power == other.power &&
         std::abs(a - other.a) <= tol && std::abs(b - other.b) <= tol;
}

void validate(const SpaceSpec& s) {
  if (s.n < 1) invalid("n must be at least 1");
  if (!std::isfinite(s.alpha) || !std::isfinite(s.beta))
    invalid("interval endpoints must be finite");
  if (!(s.alpha < s.beta)) invalid("alpha must be less than beta");
  const double len = s.beta - s.alpha;
  switch (s.family) {
    case Family::Polynomial:
      break;
    case Family::Trigonometric:
      if (s.alpha != 0.0) invalid("trigonometric spaces require alpha = 0");
      if (s.n % 2 != 0) invalid("trigonometric spaces require even n");
      if (!(s.beta < std::numbers::pi))
        invalid("trigonometric spaces require beta in (0, pi)");
      break;
    case Family::Hyperbolic:
      if (s.alpha != 0.0) invalid("hyperbolic spaces require alpha = 0");
      if (s.n % 2 != 0) invalid("hyperbolic spaces require even n");
      break;
    case Family::AlgebraicTrigonometric4:
      if (s.n != 4) invalid("AlgebraicTrigonometric4 requires n = 4");
      if (!(len < 2.0 * std::numbers::pi))
        invalid("AlgebraicTrigonometric4 requires beta - alpha < 2 pi");
      break;
    case Family::ExponentialTrigonometric4:
      if (s.n != 4) invalid("ExponentialTrigonometric4 requires n = 4");
      if (!(s.omega > 0.0) || !std::isfinite(s.omega))
        invalid("ExponentialTrigonometric4 requires omega > 0");
      break;
    case Family::OdeDefined:
      validate_roots(s.roots, s.n);
      break;
  }
}

std::vector<Term> basis_terms(const SpaceSpec& s) {
  std::vector<Term> t;
  t.reserve(s.n + 1);
  switch (s.family) {
    case Family::Polynomial:
      for (int i = 0; i <= s.n; ++i) t.push_back({TermKind::Cos, i, 0.0, 0.0});
      break;
    case Family::Trigonometric:
      t.push_back({TermKind::Cos, 0, 0.0, 0.0});
      for (int k = 1; 2 * k <= s.n; ++k) {
        t.push_back({TermKind::Sin, 0, 0.0, double(k)});
        t.push_back({TermKind::Cos, 0, 0.0, double(k)});
      }
      break;
    case Family::Hyperbolic:
      t.push_back({TermKind::Cos, 0, 0.0, 0.0});
      for (int k = 1; 2 * k <= s.n; ++k) {
        t.push_back({TermKind::Sinh, 0, 0.0, double(k)});
        t.push_back({TermKind::Cosh, 0, 0.0, double(k)});
      }
      break;
    case Family::AlgebraicTrigonometric4:
      for (int i = 0; i <= 2; ++i) t.push_back({TermKind::Cos, i, 0.0, 0.0});
      t.push_back({TermKind::Sin, 0, 0.0, 1.0});
      t.push_back({TermKind::Cos, 0, 0.0, 1.0});
      break;
    case Family::ExponentialTrigonometric4:
      t.push_back({TermKind::Cos, 0, 0.0, 0.0});
      t.push_back({TermKind::Cos, 0, -s.omega, 1.0});
      t.push_back({TermKind::Sin, 0, -s.omega, 1.0});
      t.push_back({TermKind::Cos, 0, s.omega, 1.0});
      t.push_back({TermKind::Sin, 0, s.omega, 1.0});
      break;
    case Family::OdeDefined:
      t = ode_terms(s.roots);
      break;
  }
  return t;
}

bool reflection_invariant(const SpaceSpec& s) {
  if (s.family != Family::OdeDefined) return true;
  try {
    validate_roots(s.roots, -1);
  } catch (const EcbError&) {
    return false;
  }
  return true;
}

double eval_term(const Term& t, int j, double u) {
  if (j < 0) throw EcbError(ErrorKind::IndexOutOfRange, "negative derivative order");
  // m-th derivative of g at u
  auto g = [&](int m) -> double {
    switch (t.kind) {
      case TermKind::Sinh:
      case TermKind::Cosh: {
        const bool odd = (m % 2) != 0;
        const bool use_sinh = (t.kind == TermKind::Sinh) != odd;
        const double v = use_sinh ? std::sinh(t.b * u) : std::cosh(t.b * u);
        return std::pow(t.b, m) * v;
      }
      case TermKind::Cos:
      case TermKind::Sin: {
        const std::complex<double> z(t.a, t.b);
        std::complex<double> zm(1.0, 0.0);
        for (int k = 0; k < m; ++k) zm *= z;
        const double ea = t.a == 0.0 ? 1.0 : std::exp(t.a * u);
        const double c = t.b == 0.0 ? 1.0 : std::cos(t.b * u);
        const double s = t.b == 0.0 ? 0.0 : std::sin(t.b * u);
        if (t.kind == TermKind::Cos) return ea * (zm.real() * c - zm.imag() * s);
        return ea * (zm.imag() * c + zm.real() * s);
      }
    }
    return 0.0;
  };
  if (t.power == 0) return g(j);
  // Leibniz over u^power * g(u)
  double sum = 0.0;
  double binom = 1.0;  // C(j, k)
  double falling = 1.0;  // power! / (power - k)!
  for (int k = 0; k <= std::min(j, t.power); ++k) {
    if (k > 0) {
      binom = binom * (j - k + 1) / k;
      falling *= (t.power - k + 1);
    }
    const int e = t.power - k;
    const double upow = e == 0 ? 1.0 : std::pow(u, e);
    if (upow != 0.0) sum += binom * falling * upow * g(j - k);
  }
  return sum;
}

OrdinaryBasis::OrdinaryBasis(const SpaceSpec& space)
    : space_(space), terms_(basis_terms(space)) {}

double OrdinaryBasis::eval(int i, int j, double u) const {
  if (i < 0 || i >= static_cast<int>(terms_.size()))
    throw EcbError(ErrorKind::IndexOutOfRange,
                   "basis index " + std::to_string(i) + " out of range");
  return eval_term(terms_[i], j, u);
}

double ordinary_eval(const SpaceSpec& space, int i, int j, double u) {
  return OrdinaryBasis(space).eval(i, j, u);
}

SpaceSpec polynomial_space(int n, double alpha, double beta) {
  SpaceSpec s{Family::Polynomial, n, alpha, beta, 0.0, {}};
  validate(s);
  return s;
}

SpaceSpec trigonometric_space(int m, double beta) {
  SpaceSpec s{Family::Trigonometric, 2 * m, 0.0, beta, 0.0, {}};
  validate(s);
  return s;
}

SpaceSpec hyperbolic_space(int m, double beta) {
  SpaceSpec s{Family::Hyperbolic, 2 * m, 0.0, beta, 0.0, {}};
  validate(s);
  return s;
}

SpaceSpec algebraic_trigonometric_space(double beta, double alpha) {
  SpaceSpec s{Family::AlgebraicTrigonometric4, 4, alpha, beta, 0.0, {}};
  validate(s);
  return s;
}

SpaceSpec exponential_trigonometric_space(double omega, double beta,
                                          double alpha) {
  SpaceSpec s{Family::ExponentialTrigonometric4, 4, alpha, beta, omega, {}};
  validate(s);
  return s;
}

SpaceSpec basis_from_characteristic(const CharacteristicSpec& spec,
                                    double alpha, double beta) {
  validate_roots(spec.roots, -1);
  int total = 0;
  for (const Root& r : spec.roots) total += root_dimension(r);
  SpaceSpec s{Family::OdeDefined, total - 1, alpha, beta, 0.0, spec.roots};
  validate(s);
  return s;
}

}  // namespace ecb
