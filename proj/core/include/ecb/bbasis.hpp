// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ecb/ec_space.hpp"
#include "ecb/linalg.hpp"

namespace ecb {

// Binomial coefficient as a double (exact for the sizes used here).
double binomial(int n, int k);

// j-th derivative of C(n,i) u^i (1-u)^(n-i).
double bernstein_eval(int n, int i, int j, double u);

double trig_normalizing_coefficient(int n, double beta, int i);
double trig_bbasis_eval(int n, double beta, int i, double u);
double hyperbolic_normalizing_coefficient(int n, double beta, int i);
double hyperbolic_bbasis_eval(int n, double beta, int i, double u);

struct MixedConstruction {
  Matrix rho;        // row i holds the ordinary-basis coefficients of v_i
  Matrix wronskian;  // wronskian(j, k) = v_{n-k}^{(j)}(beta)
  Matrix L;
  Matrix U;
  Vector lambda0;    // first column of L^{-1}
  Matrix mu;         // U^{-1}
};

enum class BasisKind { ClosedForm, Mixed };

class BBasis {
 public:
  const SpaceSpec& space() const { return space_; }
  int n() const { return space_.n; }
  BasisKind kind() const { return kind_; }
  // Null for closed-form bases.
  const MixedConstruction* construction() const { return mixed_.get(); }

  double eval(int i, double u) const { return derivative(i, 0, u); }
  double derivative(int i, int j, double u) const;
  Vector eval_all(double u) const;

  // Ordinary-basis coefficients of b_i (mixed bases only; i >= ceil(n/2)).
  Vector mixed_coefficients(int i) const;

 private:
  friend BBasis closed_form_bbasis(const SpaceSpec& space);
  friend BBasis construct_mixed_bbasis(const SpaceSpec& space);

  double closed_form(int i, int j, double u) const;
  double mixed(int i, int j, double u) const;

  SpaceSpec space_;
  BasisKind kind_ = BasisKind::ClosedForm;
  std::vector<double> coeff_;  // normalizing constants for trig/hyperbolic
  std::shared_ptr<const MixedConstruction> mixed_;
  std::shared_ptr<const OrdinaryBasis> ordinary_;
  Matrix half_coeffs_;  // row q = n - i, for i >= ceil(n/2)
};

bool has_closed_form(Family family);

BBasis closed_form_bbasis(const SpaceSpec& space);

// Particular integrals, reversed Wronskian at beta, Doolittle LU and the
// half-basis evaluator with reflection for the remaining indices.
BBasis construct_mixed_bbasis(const SpaceSpec& space);

// Closed form when the family has one, mixed construction otherwise.
BBasis make_bbasis(const SpaceSpec& space);

struct CriticalLengthOptions {
  double scan_step = 0.0;  // 0: (beta - alpha) / 1000, capped at 1e5 steps
  double scan_max = 0.0;   // 0: max(20 (beta - alpha), 4 pi)
  double tol = 1e-10;
};

struct CriticalLengthResult {
  double estimate = 0.0;  // +inf when no zero was found
  bool found = false;
  // Length up to which every index without a zero was scanned with
  // well-conditioned determinants; a lower bound for the critical length
  // when !found.
  double scanned_to = 0.0;
  int first_index = 0;      // max(1, floor(n/2))
  std::vector<std::optional<double>> zeros;  // zeros[k] for i = first_index + k
};

// Lengths are measured from alpha.
CriticalLengthResult critical_length(const SpaceSpec& space,
                                     const CriticalLengthOptions& opts = {});

}  // namespace ecb
