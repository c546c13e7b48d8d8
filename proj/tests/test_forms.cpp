#include <gtest/gtest.h>

#include "bethe/forms.hpp"
#include "bethe/gaudin.hpp"
#include "bethe/linalg.hpp"
#include "bethe/rmatrix.hpp"
#include "bethe/tensor.hpp"

using namespace bethe;
using M = Matrix<Rational>;

namespace {

std::vector<GlModule> vectors(int N, int n) { return std::vector<GlModule>(n, vector_rep(N)); }

bool contravariant(const GlModule& m, const M& s) {
  for (int a = 0; a < m.N; ++a)
    for (int b = 0; b < m.N; ++b)
      if (!(m.e(a, b).transpose() * s == s * m.e(b, a))) return false;
  return true;
}

M symmetric_random(int N, RationalSource& src) {
  M q(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) q(a, b) = q(b, a) = src.next();
  return q;
}

}  // namespace

TEST(Shapovalov, VectorRepIsIdentity) {
  for (int N = 2; N <= 4; ++N) EXPECT_EQ(shapovalov_gram(vector_rep(N)), M::identity(N));
}

TEST(Shapovalov, DefiningProperties) {
  std::vector<GlModule> mods{wedge_rep(4, 2), irrep_from_partition(2, {3, 0}), irrep_from_partition(3, {2, 1, 0}),
                             irrep_from_partition(3, {3, 1, 0}), irrep_from_partition(3, {2, 2, 0})};
  for (const auto& m : mods) {
    M s = shapovalov_gram(m);
    EXPECT_EQ(s(m.hwv, m.hwv), 1);
    EXPECT_EQ(s, s.transpose());
    EXPECT_TRUE(contravariant(m, s)) << m.label;
    EXPECT_NE(determinant(s), 0) << m.label;
  }
}

TEST(Intertwiner, VectorReps) {
  for (int N = 2; N <= 3; ++N)
    for (const auto& u : sample_points(71, 3)) {
      M r = intertwiner_R(vector_rep(N), vector_rep(N), u);
      EXPECT_EQ(r, rational_R<Rational>(N, u) * Rational(1 / (u + 1)));
    }
}

// ∧^l V as an evaluation module sits at a point shifted by its rank, so the
// fused matrix enters at v = u + l − m.
TEST(Intertwiner, ExteriorPowers) {
  int N = 3;
  for (int l = 1; l <= 2; ++l)
    for (int m = 1; m <= 2; ++m)
      for (const auto& u : sample_points(72 + l * 3 + m, 2)) {
        Rational v = u + l - m;
        Rational c = Rational(v + std::max(m - l, 0)) / Rational(v + m);
        for (int i = 0; i < l; ++i)
          for (int j = 0; j < m; ++j) c /= Rational(v + j - i);
        EXPECT_EQ(intertwiner_R(wedge_rep(N, l), wedge_rep(N, m), u), fused_R(N, l, m, v) * c) << l << m;
      }
}

TEST(Intertwiner, FullRelationAndInvariance) {
  GlModule L = irrep_from_partition(3, {2, 1, 0}), Mm = vector_rep(3);
  Rational u = rat(7, 3);
  M r = intertwiner_R(L, Mm, u);
  M IL = M::identity(L.dim), IM = M::identity(Mm.dim);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      M d = kron(L.e(a, b), IM) + kron(IL, Mm.e(a, b));
      EXPECT_EQ(r * d, d * r);
      M X = kron(M(L.e(a, b) * u), IM), Y = X;
      for (int c = 0; c < 3; ++c) {
        X += kron(L.e(a, c), Mm.e(c, b));
        Y += kron(L.e(c, b), Mm.e(a, c));
      }
      EXPECT_EQ(r * X, Y * r);
    }
}

TEST(Intertwiner, TendsToIdentity) {
  GlModule L = irrep_from_partition(2, {2, 0});
  Rational u = Rational(100000000);
  M r = intertwiner_R(L, vector_rep(2), u);
  EXPECT_LT(max_abs_diff(convert<Complex>(r), convert<Complex>(M::identity(r.rows()))), 1e-7);
}

TEST(Intertwiner, DegenerateAtPole) {
  auto s = intertwiner_singularities(vector_rep(3), vector_rep(3));
  EXPECT_EQ(s.pole, -1);
  EXPECT_EQ(s.degenerate, 1);
  EXPECT_THROW(intertwiner_R(vector_rep(3), vector_rep(3), Rational(-1)), Error);
  M r = intertwiner_R(vector_rep(3), vector_rep(3), Rational(1));
  EXPECT_EQ(determinant(r), 0);
  EXPECT_FALSE(r.is_zero());
}

TEST(ChainR, SingleSiteAndInverse) {
  EXPECT_EQ(chain_R(vectors(2, 1), {Rational(5)}), M::identity(2));
  std::vector<GlModule> mods{vector_rep(3), irrep_from_partition(3, {1, 1, 0}), vector_rep(3)};
  std::vector<Rational> z{rat(1, 3), rat(-5, 2), 4};
  M r = chain_R(mods, z);
  EXPECT_EQ(r * chain_R_reversed(mods, z), M::identity(r.rows()));
}

TEST(ChainR, YangBaxter) {
  auto mods = vectors(3, 3);
  auto dims = module_dims(mods);
  Rational u1 = rat(3, 7), u2 = rat(-11, 5);
  auto R = [&](std::size_t i, std::size_t j, const Rational& u) {
    return embed(intertwiner_R(mods[i], mods[j], u), dims, {i, j});
  };
  EXPECT_EQ(R(0, 1, u1 - u2) * R(0, 2, u1) * R(1, 2, u2), R(1, 2, u2) * R(0, 2, u1) * R(0, 1, u1 - u2));
}

TEST(DeformedForm, SymmetricAndReducesToShapovalov) {
  std::vector<GlModule> one{irrep_from_partition(3, {2, 1, 0})};
  EXPECT_EQ(deformed_form(one, {Rational(2)}), shapovalov_gram(one[0]));
  std::vector<GlModule> mods{vector_rep(3), irrep_from_partition(3, {2, 1, 0})};
  M s = deformed_form(mods, {rat(5, 2), rat(-1, 3)});
  EXPECT_EQ(s, s.transpose());
}

TEST(DeformedForm, PositiveWhenSitesSeparated) {
  {
    auto mods = vectors(2, 2);
    for (const auto& m : leading_minors(deformed_form(mods, {3, 0}))) EXPECT_GT(m, 0);
  }
  {
    std::vector<GlModule> mods{irrep_from_partition(3, {2, 0, 0}), vector_rep(3)};
    // z_1 − z_2 = 4 > Λ¹_1 − Λ'_2 = 2
    for (const auto& m : leading_minors(deformed_form(mods, {4, 0}))) EXPECT_GT(m, 0);
  }
}

TEST(DeformedForm, TransferMatricesSymmetric) {
  RationalSource src(73);
  for (int N = 2; N <= 3; ++N) {
    std::vector<GlModule> mods{vector_rep(N), irrep_from_partition(N, N == 2 ? GlWeight{2, 0} : GlWeight{1, 1, 0})};
    std::vector<Rational> z{src.next(), src.next()};
    M g = deformed_form(mods, z);
    auto c = Chain<Rational>::from_modules(mods, z);
    M q = symmetric_random(N, src);
    Rational u = src.next();
    for (int k = 1; k <= N; ++k) EXPECT_TRUE(symmetric_wrt(g, transfer_matrix(c, q, k, u))) << N << " " << k;
  }
}

TEST(TensorShapovalov, GaudinTransferSymmetric) {
  RationalSource src(74);
  std::vector<GlModule> mods{vector_rep(3), irrep_from_partition(3, {2, 1, 0})};
  std::vector<Rational> z{src.next(), src.next()};
  M g = tensor_shapovalov(mods);
  auto c = Chain<Rational>::from_modules(mods, z);
  M K = symmetric_random(3, src);
  auto G = gaudin_transfer_all(c, K, src.next());
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(symmetric_wrt(g, G[k]));
  // a non-symmetric twist pairs G_K with G_{Kᵀ}
  M Kf(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) Kf(a, b) = src.next();
  Rational u = src.next();
  auto A = gaudin_transfer_all(c, Kf, u), B = gaudin_transfer_all(c, M(Kf.transpose()), u);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(A[k].transpose() * g, g * B[k]);
}

TEST(TensorShapovalov, TransferAdjointIsReversedChain) {
  RationalSource src(75);
  std::vector<GlModule> mods{vector_rep(3), irrep_from_partition(3, {2, 1, 0})};
  std::vector<Rational> z{src.next(), src.next()};
  std::vector<GlModule> rmods{mods[1], mods[0]};
  std::vector<Rational> rz{z[1], z[0]};
  M g = tensor_shapovalov(mods);
  auto c = Chain<Rational>::from_modules(mods, z);
  auto rc = Chain<Rational>::from_modules(rmods, rz);
  M q(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) q(a, b) = src.next();
  M P = factor_permutation<Rational>(module_dims(mods), {1, 0});
  Rational u = src.next();
  for (int k = 1; k <= 3; ++k) {
    M t = transfer_matrix(c, q, k, u);
    M tr = transfer_matrix(rc, M(q.transpose()), k, u);
    EXPECT_EQ(t.transpose() * g, g * P.transpose() * tr * P) << k;
  }
}
