// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace ecb {

enum class Family {
  Polynomial,
  Trigonometric,
  Hyperbolic,
  AlgebraicTrigonometric4,
  ExponentialTrigonometric4,
  OdeDefined,
};

const char* to_string(Family family);
Family family_from_string(const std::string& name);

// Root a + ib of a characteristic polynomial. When b > 0 the conjugate
// a - ib is implied, so the root contributes 2*multiplicity functions.
struct Root {
  double re = 0.0;
  double im = 0.0;
  int multiplicity = 1;

  bool operator==(const Root&) const = default;
};

struct CharacteristicSpec {
  std::vector<Root> roots;
};

struct SpaceSpec {
  Family family = Family::Polynomial;
  int n = 1;
  double alpha = 0.0;
  double beta = 1.0;
  double omega = 0.0;       // ExponentialTrigonometric4
  std::vector<Root> roots;  // OdeDefined

  bool operator==(const SpaceSpec&) const = default;
};

// One ordinary basis function u^power * g(u), where g is
//   Cos:  e^{a u} cos(b u)     (b = 0 gives e^{a u})
//   Sin:  e^{a u} sin(b u)
//   Sinh: sinh(b u)
//   Cosh: cosh(b u)
enum class TermKind { Cos, Sin, Sinh, Cosh };

struct Term {
  TermKind kind = TermKind::Cos;
  int power = 0;
  double a = 0.0;
  double b = 0.0;

  bool same_function(const Term& other, double tol = 1e-12) const;
};

// Throws EcbError(InvalidSpace) when an invariant of the family is violated.
void validate(const SpaceSpec& space);

std::vector<Term> basis_terms(const SpaceSpec& space);

// Whether u -> alpha + beta - u maps the space onto itself.
bool reflection_invariant(const SpaceSpec& space);

// Precomputed ordinary basis for repeated evaluation.
class OrdinaryBasis {
 public:
  explicit OrdinaryBasis(const SpaceSpec& space);

  int n() const { return static_cast<int>(terms_.size()) - 1; }
  const SpaceSpec& space() const { return space_; }
  const std::vector<Term>& terms() const { return terms_; }

  // j-th derivative of phi_i at u.
  double eval(int i, int j, double u) const;

 private:
  SpaceSpec space_;
  std::vector<Term> terms_;
};

double eval_term(const Term& term, int j, double u);

double ordinary_eval(const SpaceSpec& space, int i, int j, double u);

SpaceSpec polynomial_space(int n, double alpha = 0.0, double beta = 1.0);
SpaceSpec trigonometric_space(int m, double beta);
SpaceSpec hyperbolic_space(int m, double beta);
SpaceSpec algebraic_trigonometric_space(double beta, double alpha = 0.0);
SpaceSpec exponential_trigonometric_space(double omega, double beta,
                                          double alpha = 0.0);

// The space of all solutions of the constant-coefficient ODE whose
// characteristic polynomial has the given roots.
SpaceSpec basis_from_characteristic(const CharacteristicSpec& spec,
                                    double alpha = 0.0, double beta = 1.0);

}  // namespace ecb
