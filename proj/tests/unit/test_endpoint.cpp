// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <thread>

#include "support.hpp"

namespace ecb {
namespace {

double five_point(const std::function<double(double)>& f, double u, double h) {
  return (-f(u + 2 * h) + 8 * f(u + h) - 8 * f(u - h) + f(u - 2 * h)) / (12 * h);
}

TEST(TrigEndpoint, Examples) {
  for (double beta : {0.5, 1.0, 2.0, 3.0}) {
    const double s = std::sin(beta / 2);
    EXPECT_NEAR(trig_endpoint_derivative(2, beta, 1, 1, End::Alpha),
                trig_normalizing_coefficient(4, beta, 1) / 2 * s * s * s, 1e-12);
    EXPECT_NEAR(trig_endpoint_derivative(2, beta, 2, 2, End::Alpha),
                trig_normalizing_coefficient(4, beta, 2) / 2 * s * s, 1e-12);
    EXPECT_EQ(trig_endpoint_derivative(2, beta, 3, 1, End::Alpha), 0.0);
    EXPECT_NEAR(trig_endpoint_derivative(2, beta, 0, 0, End::Alpha), 1.0, 1e-14);
  }
  try {
    trig_endpoint_derivative(2, 1.0, 1, 3, End::Alpha);
    FAIL();
  } catch (const EcbError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfClosedFormRange);
  }
}

TEST(HyperbolicEndpoint, Examples) {
  EXPECT_NEAR(hyperbolic_endpoint_derivative(2, 0.7, 0, 0, End::Alpha), 1.0, 1e-14);
  auto f = [](double u) { return hyperbolic_bbasis_eval(4, 1.0, 1, u); };
  EXPECT_NEAR(hyperbolic_endpoint_derivative(2, 1.0, 1, 1, End::Alpha), five_point(f, 0.0, 1e-3),
              1e-6);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 2; ++j)
      EXPECT_EQ(hyperbolic_endpoint_derivative(2, 1.3, i, j, End::Beta),
                (j % 2 ? -1.0 : 1.0) * hyperbolic_endpoint_derivative(2, 1.3, 4 - i, j, End::Alpha));
  EXPECT_THROW(hyperbolic_endpoint_derivative(2, 1.0, 0, 3, End::Beta), EcbError);
}

TEST(ClosedFormEndpoint, MatchesBasisDerivatives) {
  for (int m = 1; m <= 5; ++m)
    for (double beta : {0.4, 1.1, 2.5}) {
      const BBasis t = closed_form_bbasis(trigonometric_space(m, beta));
      const BBasis h = closed_form_bbasis(hyperbolic_space(m, beta));
      for (int i = 0; i <= 2 * m; ++i)
        for (int j = 0; j <= m; ++j) {
          const double tv = t.derivative(i, j, 0.0), hv = h.derivative(i, j, beta);
          EXPECT_NEAR(trig_endpoint_derivative(m, beta, i, j, End::Alpha), tv,
                      1e-8 * std::max(1.0, std::abs(tv)));
          EXPECT_NEAR(hyperbolic_endpoint_derivative(m, beta, i, j, End::Beta), hv,
                      1e-8 * std::max(1.0, std::abs(hv)));
        }
    }
}

TEST(BernsteinEndpoint, Examples) {
  EXPECT_EQ(bernstein_endpoint_derivative(3, 1, 2, End::Alpha), -12.0);
  EXPECT_EQ(bernstein_endpoint_derivative(5, 3, 2, End::Alpha), 0.0);
  EXPECT_EQ(bernstein_endpoint_derivative(2, 0, 0, End::Alpha), 1.0);
  EXPECT_EQ(bernstein_endpoint_derivative(3, 2, 2, End::Beta), -12.0);
  for (int n = 1; n <= 8; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        EXPECT_DOUBLE_EQ(bernstein_endpoint_derivative(n, i, j, End::Alpha), bernstein_eval(n, i, j, 0.0));
        EXPECT_NEAR(bernstein_endpoint_derivative(n, i, j, End::Beta), bernstein_eval(n, i, j, 1.0),
                    1e-9 * std::max(1.0, std::abs(bernstein_eval(n, i, j, 1.0))));
      }
}

TEST(MixedEndpoint, ExpTrigExample) {
  const BBasis b = construct_mixed_bbasis(testing::exp_trig_example());
  EXPECT_NEAR(mixed_endpoint_derivative(b, 4, 0, End::Beta), 1.0, 1e-12);
  EXPECT_NEAR(mixed_endpoint_derivative(b, 2, 1, End::Alpha), 0.0, 1e-12);
  auto f = [&](double u) { return b.eval(1, u); };
  // one-sided stencil at the left end
  const double h = 1e-4;
  const double fd = (-25 * f(0) + 48 * f(h) - 36 * f(2 * h) + 16 * f(3 * h) - 3 * f(4 * h)) / (12 * h);
  EXPECT_NEAR(mixed_endpoint_derivative(b, 1, 1, End::Alpha), fd, 1e-6);
}

TEST(DeterminantEndpoint, AgreesWithClosedForms) {
  for (double beta : {0.5, 1.0, 2.0}) {
    const double ref = trig_endpoint_derivative(2, beta, 1, 1, End::Alpha);
    EXPECT_NEAR(determinant_endpoint_derivative(trigonometric_space(2, beta), 1, 1, End::Alpha), ref,
                1e-8 * std::abs(ref));
  }
  EXPECT_NEAR(determinant_endpoint_derivative(polynomial_space(3), 2, 3, End::Alpha),
              bernstein_endpoint_derivative(3, 2, 3, End::Alpha), 1e-9);
  EXPECT_NEAR(determinant_endpoint_derivative(polynomial_space(3), 0, 0, End::Beta), 0.0, 1e-12);
}

void expect_table_invariants(const EndpointTables& t, const std::string& name) {
  const int n = t.space.n, f = n / 2;
  EXPECT_EQ(t.phi_alpha.rows(), n + 1) << name;
  EXPECT_EQ(t.phi_alpha.cols(), f + 1) << name;
  EXPECT_EQ(t.phi_alpha(0, 0), 1.0) << name;
  for (int j = 1; j <= f; ++j) {
    EXPECT_EQ(t.phi_alpha(0, j), 0.0) << name;
    EXPECT_EQ(t.phi_beta(0, j), 0.0) << name;
    const double scale = t.b_alpha.col(j).cwiseAbs().maxCoeff();
    EXPECT_NEAR(t.b_alpha.col(j).sum(), 0.0, 1e-9 * std::max(1.0, scale)) << name;
    EXPECT_NEAR(t.b_beta.col(j).sum(), 0.0, 1e-9 * std::max(1.0, scale)) << name;
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= f; ++j) {
      const double sa = std::max(1.0, t.b_alpha.col(j).cwiseAbs().maxCoeff());
      const double sb = std::max(1.0, t.b_beta.col(j).cwiseAbs().maxCoeff());
      if (j < i) EXPECT_NEAR(t.b_alpha(i, j), 0.0, 1e-9 * sa) << name << " i=" << i << " j=" << j;
      if (j == i) EXPECT_GT(t.b_alpha(i, j), 0.0) << name;
      if (j < n - i) EXPECT_NEAR(t.b_beta(i, j), 0.0, 1e-9 * sb) << name << " i=" << i << " j=" << j;
      if (j == n - i) EXPECT_GT(t.b_beta(i, j) * (j % 2 ? -1.0 : 1.0), 0.0) << name;
    }
}

TEST(EndpointTables, InvariantsAcrossFamilies) {
  for (const auto& [name, s] : testing::all_family_spaces()) {
    expect_table_invariants(compute_endpoint_tables(s), name);
    expect_table_invariants(compute_endpoint_tables(s, TableSource::Mixed), name + "/mixed");
  }
}

TEST(EndpointTables, SourcesAgree) {
  for (const auto& [name, s] : testing::all_family_spaces()) {
    if (s.n > 8) continue;
    const EndpointTables m = compute_endpoint_tables(s, TableSource::Mixed);
    const EndpointTables d = compute_endpoint_tables(s, TableSource::Determinant);
    const double scale = std::max(1.0, m.b_alpha.cwiseAbs().maxCoeff());
    EXPECT_LE((m.b_alpha - d.b_alpha).cwiseAbs().maxCoeff(), 1e-7 * scale) << name;
    EXPECT_LE((m.b_beta - d.b_beta).cwiseAbs().maxCoeff(), 1e-7 * scale) << name;
    if (has_closed_form(s.family)) {
      const EndpointTables c = compute_endpoint_tables(s, TableSource::ClosedForm);
      EXPECT_LE((m.b_alpha - c.b_alpha).cwiseAbs().maxCoeff(), 1e-8 * scale) << name;
      EXPECT_LE((m.b_beta - c.b_beta).cwiseAbs().maxCoeff(), 1e-8 * scale) << name;
    }
  }
}

TEST(EndpointTables, ClosedFormRejectedForMixedFamilies) {
  try {
    compute_endpoint_tables(testing::exp_trig_example(), TableSource::ClosedForm);
    FAIL();
  } catch (const EcbError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidSpace);
  }
}

TEST(EndpointTables, SourceNames) {
  for (TableSource s : {TableSource::Auto, TableSource::ClosedForm, TableSource::Mixed,
                        TableSource::Determinant})
    EXPECT_EQ(table_source_from_string(to_string(s)), s);
  EXPECT_THROW(table_source_from_string("bogus"), EcbError);
}

TEST(EndpointTables, CacheIsThreadSafeAndConsistent) {
  clear_endpoint_cache();
  const SpaceSpec s = trigonometric_space(3, 1.2);
  const EndpointTables ref = compute_endpoint_tables(s);
  std::vector<std::thread> pool;
  std::vector<EndpointTables> got(8);
  for (int k = 0; k < 8; ++k)
    pool.emplace_back([&, k] { got[k] = build_endpoint_tables(s); });
  for (auto& th : pool) th.join();
  for (const auto& t : got) {
    EXPECT_EQ(t.b_alpha, ref.b_alpha);
    EXPECT_EQ(t.b_beta, ref.b_beta);
    EXPECT_EQ(t.source, TableSource::ClosedForm);
  }
  EXPECT_EQ(build_endpoint_tables(s, TableSource::Mixed).source, TableSource::Mixed);
  clear_endpoint_cache();
}

}  // namespace
}  // namespace ecb
