#include <gtest/gtest.h>

#include "bethe/suites.hpp"

using namespace bethe;

namespace {

void expect_exact(const CheckList& l) {
  ASSERT_FALSE(l.checks.empty());
  for (const auto& c : l.checks) {
    EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
    EXPECT_EQ(c.max_abs_error, 0) << c.name;
  }
}

Matrix<Rational> full_twist(int N) {
  RationalSource src(9);
  Matrix<Rational> q(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) q(a, b) = src.next();
  return q;
}

}  // namespace

TEST(Suites, RMatrix) {
  for (int N = 2; N <= 4; ++N) expect_exact(rmatrix_suite(N, 5, N == 4 ? 2 : 4));
}

TEST(Suites, Yangian) {
  expect_exact(yangian_suite({std::vector<GlModule>(2, vector_rep(2)), {rat(1, 2), -3}, Matrix<Rational>::identity(2)}, 3, 3));
  expect_exact(yangian_suite({{vector_rep(3), wedge_rep(3, 2)}, {rat(1, 3), 2}, full_twist(3)}, 4, 2));
}

TEST(Suites, Constructions) {
  expect_exact(bethe_construction_suite(1));
  expect_exact(gaudin_identity_suite(1));
  expect_exact(forms_suite(1));
  expect_exact(dynamical_suite(1));
}

TEST(Suites, RejectsMismatchedChain) {
  ChainSpec bad{{vector_rep(2), vector_rep(3)}, {Rational(0), Rational(1)}, Matrix<Rational>::identity(2)};
  EXPECT_THROW(yangian_suite(bad, 1, 1), Error);
  EXPECT_THROW(rmatrix_suite(0, 1, 1), Error);
}

TEST(Suites, RealEigenvalues) {
  std::vector<double> us{0.3, 1.7, -2.3, 4.1};
  auto x = real_eigenvalue_check(desk_xxx_problem(), {{Complex(1, 0)}}, us);
  EXPECT_TRUE(x.pass) << x.detail;
  EXPECT_LT(x.max_abs_error, 1e-12);
  auto g = real_eigenvalue_check(desk_gaudin_problem(), {{Complex(0.5, 0)}}, us);
  EXPECT_TRUE(g.pass) << g.detail;
  // a complex root off the real solution set gives complex eigenvalues
  EXPECT_FALSE(real_eigenvalue_check(desk_gaudin_problem(), {{Complex(0.5, 0.3)}}, us).pass);
}
