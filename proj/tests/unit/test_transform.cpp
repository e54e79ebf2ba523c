// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "reference.hpp"
#include "support.hpp"

namespace ecb {
namespace {

using reference::Rational;
using testing::kPi;

double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Exact tables for the monomials u^i on [0, 1].
std::vector<std::vector<Rational>> exact_bernstein_transform(int n) {
  const int f = n / 2;
  using Table = std::vector<std::vector<Rational>>;
  Table pa(n + 1, std::vector<Rational>(f + 1)), pb = pa, ba = pa, bb = pa;
  for (int i = 0; i <= n; ++i)
    for (int d = 0; d <= f; ++d) {
      Rational falling(d <= i ? 1 : 0);
      for (int p = 0; p < d && d <= i; ++p) falling *= (i - p);
      pa[i][d] = (i == d) ? falling : Rational(0);
      pb[i][d] = falling;
      ba[i][d] = bernstein_endpoint_derivative_exact<Rational>(n, i, d, End::Alpha);
      bb[i][d] = bernstein_endpoint_derivative_exact<Rational>(n, i, d, End::Beta);
    }
  auto acc = [](const Table& t) { return [&t](int i, int d) { return t[i][d]; }; };
  return assemble_transform<Rational>(n, acc(pa), acc(pb), acc(ba), acc(bb)).t;
}

TEST(BernsteinTransform, ExactRational) {
  for (int n = 1; n <= 10; ++n)
    EXPECT_EQ(exact_bernstein_transform(n), reference::bernstein_matrix(n)) << "n=" << n;
}

TEST(BernsteinTransform, FloatingPoint) {
  for (int n = 1; n <= 10; ++n) {
    const TransformMatrix t = build_transform(polynomial_space(n));
    const auto ref = reference::bernstein_matrix(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        EXPECT_NEAR(t.t(i, j), ref[i][j].convert_to<double>(), 1e-12) << n << " " << i << " " << j;
  }
}

TEST(SineTransform, TrigonometricMatrix) {
  for (double beta : {0.5, 1.0, 2.0}) {
    const TransformMatrix t = build_transform(trigonometric_space(2, beta));
    EXPECT_LE(max_abs_diff(t.t, reference::sine_matrix(beta, false)), 1e-10) << beta;
    EXPECT_NEAR(t.t(1, 1), 0.5 * std::tan(beta / 2), 1e-12);
  }
}

TEST(SineTransform, HyperbolicMatrix) {
  for (double beta : {0.5, 1.0, 2.0}) {
    const TransformMatrix t = build_transform(hyperbolic_space(2, beta));
    EXPECT_LE(max_abs_diff(t.t, reference::sine_matrix(beta, true)), 1e-10) << beta;
    const double th = std::tanh(beta / 2);
    EXPECT_NEAR(t.t(2, 3), std::cosh(beta) - 0.5 * std::sinh(beta) * th, 1e-10);
    EXPECT_NEAR(t.t(4, 3), std::cosh(2 * beta) - std::sinh(2 * beta) * th, 1e-10);
  }
}

TEST(SineTransform, AllSourcesAgree) {
  for (bool hyp : {false, true}) {
    const SpaceSpec s = hyp ? hyperbolic_space(2, 1.0) : trigonometric_space(2, 1.0);
    const Matrix ref = reference::sine_matrix(1.0, hyp);
    for (TableSource src : {TableSource::ClosedForm, TableSource::Mixed, TableSource::Determinant})
      EXPECT_LE(max_abs_diff(build_transform(s, {src}).t, ref), 1e-9) << to_string(src);
  }
}

TEST(MixedTransform, ExpTrigExample) {
  const TransformMatrix t = build_transform(testing::exp_trig_example());
  EXPECT_LE(max_abs_diff(t.t, reference::exp_trig_t()), 1e-3);
}

TEST(MixedTransform, AlgebraicTrigonometric) {
  for (double beta : {1.0, 3.0, 5.5}) {
    const TransformMatrix t = build_transform(algebraic_trigonometric_space(beta));
    EXPECT_LE(max_abs_diff(t.t, reference::algebraic_trig_matrix(beta)), 1e-8) << beta;
  }
}

TEST(Kappa, Formulas) {
  const std::vector<std::int64_t> expect{0, 4, 12, 33, 62, 115, 180, 285, 406, 595, 804, 1137};
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(kappa(n), expect[n - 1]) << n;
  EXPECT_EQ(kappa_lu(1, 1), (4 * 8 - 12 - 2) / 6 + 6);
  for (int n = 1; n <= 15; ++n)
    for (int d = 1; d <= 3; ++d) EXPECT_LT(kappa(n), kappa_lu(n, d)) << n << " " << d;
  EXPECT_GT(kappa(16), kappa_lu(16, 1));
  EXPECT_THROW(kappa(0), EcbError);
  EXPECT_THROW(kappa_lu(3, 0), EcbError);
}

TEST(Kappa, MeasuredFlopsMatch) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(measured_flops(polynomial_space(n)), static_cast<std::uint64_t>(kappa(n))) << n;
    if (n % 2 == 0)
      EXPECT_EQ(measured_flops(trigonometric_space(n / 2, 1.0)), static_cast<std::uint64_t>(kappa(n)));
  }
  const TransformMatrix t = build_transform(polynomial_space(7));
  EXPECT_EQ(t.tally.total(), t.flops);
}

TEST(SequenceTable, Counts) {
  for (int j = 1; j <= 10; ++j) {
    const SequenceTable& tab = sequence_table(j);
    EXPECT_EQ(tab.column(), j);
    for (int r = 1; r < j; ++r) {
      int total = 0;
      for (int l = 1; l < j - r; ++l) {
        EXPECT_EQ(tab.count(r, l), static_cast<int>(binomial(j - r - 1, l)));
        total += tab.count(r, l);
        for (int s = 0; s < tab.count(r, l); ++s) {
          const int* q = tab.sequence(r, l, s);
          EXPECT_GT(q[0], r);
          EXPECT_LT(q[l - 1], j);
          for (int k = 1; k < l; ++k) EXPECT_LT(q[k - 1], q[k]);
        }
      }
      EXPECT_EQ(total, (1 << (j - r - 1)) - 1);
    }
  }
  EXPECT_EQ(&sequence_table(6), &sequence_table(6));
}

TEST(TransformProperties, ReconstructionAndCollocation) {
  for (const auto& [name, s] : testing::all_family_spaces()) {
    const TransformMatrix t = build_transform(s);
    const TransformMatrix c = collocation_oracle(s);
    EXPECT_LE(max_abs_diff(t.t, c.t), 1e-6 * std::max(1.0, c.t.cwiseAbs().maxCoeff())) << name;
    const BBasis b = make_bbasis(s);
    const OrdinaryBasis ord(s);
    for (double u : testing::grid(s, 51)) {
      const Vector bv = b.eval_all(u);
      for (int i = 0; i <= s.n; ++i)
        EXPECT_NEAR(ord.eval(i, 0, u), t.t.row(i).dot(bv), 1e-7) << name << " i=" << i;
    }
    EXPECT_TRUE(t.t.row(0).isOnes()) << name;
  }
}

TEST(TransformProperties, MiddleColumnConsistency) {
  for (int n : {4, 6, 8})
    for (const SpaceSpec& s : {polynomial_space(n), trigonometric_space(n / 2, 1.3),
                               hyperbolic_space(n / 2, 0.9)}) {
      const TransformMatrix t = build_transform(s);
      ASSERT_EQ(t.middle_last_half.size(), n + 1);
      EXPECT_LE(t.middle_discrepancy, 1e-8) << to_string(s.family) << " n=" << n;
    }
  const TransformMatrix et = build_transform(testing::exp_trig_example());
  EXPECT_LE(et.middle_discrepancy, 1e-8);
  EXPECT_EQ(build_transform(polynomial_space(5)).middle_last_half.size(), 0);
}

TEST(TransformProperties, MiddleToleranceViolationThrows) {
  EndpointTables tables = compute_endpoint_tables(trigonometric_space(2, 1.0));
  tables.b_beta(2, 2) *= 1.01;
  try {
    build_transform(tables.space, tables);
    FAIL();
  } catch (const EcbError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateBasis);
  }
}

TEST(TransformErrors, MismatchedTables) {
  const EndpointTables tables = compute_endpoint_tables(polynomial_space(3));
  try {
    build_transform(polynomial_space(4), tables);
    FAIL();
  } catch (const EcbError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Collocation, NodeErrors) {
  const SpaceSpec s = polynomial_space(2);
  auto kind = [&](std::vector<double> nodes) {
    try {
      collocation_oracle(s, nodes);
    } catch (const EcbError& e) {
      return e.kind();
    }
    return ErrorKind::Schema;
  };
  EXPECT_EQ(kind({0.0, 0.5}), ErrorKind::NodeChoice);
  EXPECT_EQ(kind({0.0, 0.5, 0.5}), ErrorKind::NodeChoice);
  EXPECT_EQ(kind({0.0, 0.5, 1.5}), ErrorKind::NodeChoice);
  EXPECT_NO_THROW(collocation_oracle(s, {0.0, 0.5, 1.0}));
  const std::vector<double> cheb = chebyshev_nodes(trigonometric_space(3, 2.0));
  EXPECT_TRUE(std::is_sorted(cheb.begin(), cheb.end()));
  EXPECT_GT(cheb.front(), 0.0);
  EXPECT_LT(cheb.back(), 2.0);
}

}  // namespace
}  // namespace ecb
