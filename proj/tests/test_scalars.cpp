#include <gtest/gtest.h>

#include "bethe/linalg.hpp"
#include "bethe/poly.hpp"
#include "bethe/scalar.hpp"

using namespace bethe;

TEST(SamplePoints, DeterministicAndDistinct) {
  auto a = sample_points(1, 3, {Rational(0)});
  auto b = sample_points(1, 3, {Rational(0)});
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a, b);
  for (const auto& x : a) EXPECT_NE(x, 0);
  EXPECT_NE(a[0], a[1]);
  EXPECT_NE(a[1], a[2]);
  EXPECT_NE(a[0], a[2]);
}

TEST(SamplePoints, SeedChangesOutput) {
  EXPECT_NE(sample_points(1, 1), sample_points(2, 1));
}

TEST(SamplePoints, RespectsExclusions) {
  auto pts = sample_points(7, 5, {Rational(1), Rational(2), Rational(3)});
  for (const auto& x : pts) {
    EXPECT_NE(x, 1);
    EXPECT_NE(x, 2);
    EXPECT_NE(x, 3);
  }
}

TEST(SamplePoints, BoundedNumeratorsAndDenominators) {
  for (const auto& x : sample_points(3, 50)) {
    EXPECT_LE(abs(x.get_num()), 1000);
    EXPECT_LE(x.get_den(), 1000);
  }
}

TEST(Rationals, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), rat(3, 2));
  EXPECT_EQ(to_string(rat(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(rat(4, 2)), "2");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Interpolation, InverseLinear) {
  RationalFunctionSample s;
  s.denominator = {Rational(-2), Rational(1)};
  s.numerator_degree_bound = 0;
  s.points = sample_points(11, 2, {Rational(2)});
  for (const auto& p : s.points) s.values.push_back(1 / (p - 2));
  EXPECT_EQ(interpolate_with_known_denominator(s), (Poly{Rational(1)}));
}

TEST(Interpolation, QuadraticOverU) {
  RationalFunctionSample s;
  s.denominator = {Rational(0), Rational(1)};
  s.numerator_degree_bound = 2;
  s.points = sample_points(12, 4, {Rational(0)});
  for (const auto& p : s.points) s.values.push_back((p * p + 1) / p);
  EXPECT_EQ(interpolate_with_known_denominator(s), (Poly{Rational(1), Rational(0), Rational(1)}));
}

TEST(Interpolation, HeldOutPointCatchesLowBound) {
  RationalFunctionSample s;
  s.denominator = {Rational(1)};
  s.numerator_degree_bound = 1;
  s.points = sample_points(13, 3);
  for (const auto& p : s.points) s.values.push_back(p * p * p);
  EXPECT_THROW(interpolate_with_known_denominator(s), Error);
}

TEST(Interpolation, RoundTrip) {
  Poly p{rat(3, 7), rat(-2), Rational(0), rat(5, 3)};
  Poly q{rat(1), rat(-1, 2)};
  RationalFunctionSample s;
  s.denominator = q;
  s.numerator_degree_bound = 3;
  s.points = sample_points(14, 5, {Rational(2)});
  for (const auto& x : s.points) s.values.push_back(poly_eval(p, x) / poly_eval(q, x));
  EXPECT_EQ(interpolate_with_known_denominator(s), p);
}

TEST(Interpolation, SeriesDivision) {
  // 1/(1 − x) = 1 + x + x² + …
  auto f = series_divide<Rational>({Rational(1)}, {Rational(1), Rational(-1)}, 4, Rational(0));
  for (const auto& c : f) EXPECT_EQ(c, 1);
}

TEST(LinearAlgebra, ExactNullspaceAndDeterminant) {
  Matrix<Rational> a(2, 3);
  a(0, 0) = 1, a(0, 1) = 2, a(0, 2) = 3;
  a(1, 0) = 2, a(1, 1) = 4, a(1, 2) = 6;
  auto ns = nullspace(a);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_TRUE(vec_is_zero(a * v));
  Matrix<Rational> b(2, 2);
  b(0, 0) = 1, b(0, 1) = 2, b(1, 0) = 3, b(1, 1) = 4;
  EXPECT_EQ(determinant(b), -2);
  EXPECT_EQ(inverse(b) * b, Matrix<Rational>::identity(2));
}

TEST(LinearAlgebra, ComplexSolve) {
  Matrix<Complex> a(2, 2);
  a(0, 0) = Complex(1, 1), a(0, 1) = 2, a(1, 0) = 0, a(1, 1) = Complex(0, 3);
  Vec<Complex> b{Complex(1, 0), Complex(0, 1)};
  auto x = solve(a, b);
  EXPECT_LT(vec_norm(a * x - b), 1e-12);
}
