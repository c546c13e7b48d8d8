#include <gtest/gtest.h>

#include "bethe/gaudin.hpp"

using namespace bethe;
using M = Matrix<Rational>;
using V = Vec<Rational>;
using Ch = Chain<Rational>;

namespace {

std::vector<GlModule> vectors(int N, int n) { return std::vector<GlModule>(n, vector_rep(N)); }

M random_matrix(int N, RationalSource& src, bool diagonal) {
  M k(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (!diagonal || a == b) k(a, b) = src.next();
  return k;
}

Roots<Rational> random_roots(const std::vector<int>& xi, RationalSource& src) {
  Roots<Rational> t;
  for (int x : xi) {
    std::vector<Rational> lv;
    for (int i = 0; i < x; ++i) lv.push_back(src.next());
    t.push_back(lv);
  }
  return t;
}

}  // namespace

TEST(CurrentL, PartialFractions) {
  std::vector<GlModule> mods{vector_rep(3), irrep_from_partition(3, {2, 1, 0})};
  std::vector<Rational> z{rat(1, 2), -2};
  auto c = Ch::from_modules(mods, z);
  Rational u = rat(7, 5);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      M expect = c.site_generator(0, b, a) * Rational(1 / (u - z[0])) + c.site_generator(1, b, a) * Rational(1 / (u - z[1]));
      EXPECT_EQ(L_entry(c, a, b, u), expect);
    }
  EXPECT_THROW(L_entry(c, 0, 1, Rational(-2)), Error);
}

TEST(CurrentL, CommutationRelation) {
  auto mods = vectors(2, 2);
  auto c = Ch::from_modules(mods, {rat(1, 3), 2});
  RationalSource src(51);
  for (int s = 0; s < 3; ++s) {
    Rational u = src.next(), v = src.next();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int cc = 0; cc < 2; ++cc)
          for (int d = 0; d < 2; ++d) {
            M lhs = commutator(L_entry(c, a, b, u), L_entry(c, cc, d, v)) * Rational(u - v);
            M rhs(c.dim(), c.dim());
            if (b == cc) rhs += L_entry(c, a, d, u) - L_entry(c, a, d, v);
            if (a == d) rhs -= L_entry(c, cc, b, u) - L_entry(c, cc, b, v);
            EXPECT_EQ(lhs, rhs);
          }
  }
}

TEST(GaudinTransfer, LowOrderCoefficients) {
  RationalSource src(52);
  for (int N = 2; N <= 3; ++N) {
    std::vector<GlModule> mods{vector_rep(N), irrep_from_partition(N, GlWeight(N == 2 ? GlWeight{2, 0} : GlWeight{1, 1, 0}))};
    auto c = Ch::from_modules(mods, {src.next(), src.next()});
    M K = random_matrix(N, src, false);
    Rational u = src.next();
    auto G = gaudin_transfer_all(c, K, u);
    std::size_t D = c.dim();
    EXPECT_EQ(G[0], M::identity(D));
    auto L = c.gaudin_L(u, 0);
    auto dL = c.gaudin_L(u, 1);
    M g1(D, D), dg1(D, D), sq(D, D);
    for (int a = 0; a < N; ++a) {
      g1 += L[a * N + a] + M::scalar(D, K(a, a));
      dg1 += dL[a * N + a];
      for (int b = 0; b < N; ++b)
        sq += (L[a * N + b] + M::scalar(D, K(a, b))) * (L[b * N + a] + M::scalar(D, K(b, a)));
    }
    EXPECT_EQ(G[1], g1);
    EXPECT_EQ(G[2], (g1 * g1 - dg1 * Rational(N - 1) - sq) * rat(1, 2));
  }
}

TEST(GaudinTransfer, SingleSiteRankTwoByHand) {
  // N = 2, n = 1, vector rep at z = 0, K = diag(k1, k2)
  auto c = Ch::from_modules({vector_rep(2)}, {Rational(0)});
  M K(2, 2);
  K(0, 0) = 3, K(1, 1) = rat(-1, 2);
  Rational u = rat(5, 3);
  M g2 = gaudin_transfer(c, K, 2, u);
  // K_1K_2 + (K_2 e11 + K_1 e22)/u, the e-quadratic terms cancel on C^2
  M expect(2, 2);
  expect(0, 0) = K(0, 0) * K(1, 1) + K(1, 1) / u;
  expect(1, 1) = K(0, 0) * K(1, 1) + K(0, 0) / u;
  EXPECT_EQ(g2, expect);
}

TEST(GaudinTransfer, AntisymmetrizerSidesAgree) {
  RationalSource src(53);
  for (int N = 2; N <= 3; ++N) {
    auto c = Ch::from_modules(vectors(N, 1), {src.next()});
    M K = random_matrix(N, src, false);
    auto [lhs, rhs] = antisymmetrized_pencil_sides(c, K, src.next());
    for (int p = 0; p <= N; ++p) EXPECT_EQ(lhs[p], rhs[p]) << "N=" << N << " p=" << p;
  }
  auto c = Ch::from_modules(vectors(2, 2), {1, rat(-3, 4)});
  auto [lhs, rhs] = antisymmetrized_pencil_sides(c, random_matrix(2, src, false), src.next());
  for (int p = 0; p <= 2; ++p) EXPECT_EQ(lhs[p], rhs[p]);
}

TEST(GaudinTransfer, Commute) {
  RationalSource src(54);
  struct Case {
    int N, n;
    bool diagonal;
  };
  for (auto cs : {Case{2, 2, false}, Case{2, 3, true}, Case{3, 2, false}, Case{3, 3, true}}) {
    std::vector<Rational> z;
    for (int i = 0; i < cs.n; ++i) z.push_back(src.next());
    auto c = Ch::from_modules(vectors(cs.N, cs.n), z);
    M K = random_matrix(cs.N, src, cs.diagonal);
    auto Gu = gaudin_transfer_all(c, K, src.next());
    auto Gv = gaudin_transfer_all(c, K, src.next());
    for (int k = 1; k <= cs.N; ++k)
      for (int l = 1; l <= cs.N; ++l) EXPECT_TRUE(commutator(Gu[k], Gv[l]).is_zero()) << k << "," << l;
  }
}

TEST(GaudinTransfer, UntwistedIsInvariant) {
  RationalSource src(55);
  auto c = Ch::from_modules({vector_rep(3), irrep_from_partition(3, {2, 1, 0})}, {src.next(), src.next()});
  auto G = gaudin_transfer_all(c, M(3, 3), src.next());
  for (int k = 1; k <= 3; ++k)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) EXPECT_TRUE(commutator(G[k], c.generator(a, b)).is_zero());
}

TEST(GaudinTransfer, InvalidRank) {
  auto c = Ch::from_modules(vectors(2, 1), {Rational(0)});
  EXPECT_THROW(gaudin_transfer(c, M(2, 2), 3, Rational(1)), Error);
}

TEST(WeightF, RankTwo) {
  std::vector<GlModule> mods{vector_rep(2), irrep_from_partition(2, {3, 1})};
  std::vector<Rational> z{rat(2, 3), -1};
  auto c = Ch::from_modules(mods, z);
  V v = tensor_hwv(mods);
  Rational t = rat(1, 7);
  V expect = (c.site_generator(0, 1, 0) * Rational(1 / (t - z[0])) + c.site_generator(1, 1, 0) * Rational(1 / (t - z[1]))) * v;
  EXPECT_EQ(gaudin_weight_function(mods, z, {{1}}, Roots<Rational>{{t}}), expect);
}

TEST(WeightF, RankThree) {
  auto mods = vectors(3, 3);
  std::vector<Rational> z{0, rat(3, 2), -2};
  auto c = Ch::from_modules(mods, z);
  V v = tensor_hwv(mods);
  Rational t1 = rat(5, 4), t2 = rat(-2, 9);
  V expect = L_entry(c, 0, 1, t1) * (L_entry(c, 1, 2, t2) * v) + L_entry(c, 0, 2, t1) * v * Rational(1 / (t2 - t1));
  EXPECT_EQ(gaudin_weight_function(mods, z, {{1, 1}}, Roots<Rational>{{t1}, {t2}}), expect);
}

TEST(WeightF, EmptyConfiguration) {
  auto mods = vectors(3, 2);
  std::vector<Rational> z{1, 2};
  Roots<Rational> t{{}, {}};
  EXPECT_EQ(gaudin_weight_function(mods, z, {{0, 0}}, t), V(tensor_hwv(mods)));
  EXPECT_EQ(gaudin_weight_function_recursive(mods, z, {{0, 0}}, t), V(tensor_hwv(mods)));
}

TEST(WeightF, SumMatchesRecursion) {
  RationalSource src(56);
  struct Case {
    std::vector<GlModule> mods;
    std::vector<int> xi;
  };
  std::vector<Case> cases{
      {vectors(2, 3), {2}},
      {vectors(3, 2), {1, 1}},
      {vectors(3, 3), {2, 1}},
      {vectors(3, 3), {1, 2}},
      {{vector_rep(3), irrep_from_partition(3, {2, 1, 0})}, {2, 2}},
      {vectors(4, 2), {1, 1, 0}},
      {vectors(4, 3), {1, 1, 1}},
      {{vector_rep(4), wedge_rep(4, 2)}, {2, 1, 1}},
  };
  for (const auto& cs : cases) {
    std::vector<Rational> z;
    for (std::size_t i = 0; i < cs.mods.size(); ++i) z.push_back(src.next());
    auto t = random_roots(cs.xi, src);
    EXPECT_EQ(gaudin_weight_function(cs.mods, z, {cs.xi}, t), gaudin_weight_function_recursive(cs.mods, z, {cs.xi}, t));
  }
}

TEST(WeightF, LeadingTermOfXxxWeightFunction) {
  // 𝔹(t/ε; z/ε)·∏ ε/(t − z)·∏ ε/(t^{a+1} − t^a) → ε^{|ξ|} 𝔽(t; z)
  RationalSource src(57);
  auto mods = vectors(3, 2);
  std::vector<Rational> z{src.next(), src.next()};
  auto t = random_roots({1, 1}, src);
  V F = gaudin_weight_function(mods, z, {{1, 1}}, t);
  Rational eps = rat(1, 1000000);
  std::vector<Rational> ze;
  for (const auto& x : z) ze.push_back(x / eps);
  Roots<Rational> te{{t[0][0] / eps}, {t[1][0] / eps}};
  V B = universal_weight_function(mods, ze, {{1, 1}}, te);
  Rational f = eps / ((t[1][0] - t[0][0]) * eps * eps);
  for (const auto& lv : t)
    for (const auto& x : lv)
      for (const auto& zi : z) f *= eps / (x - zi);
  V scaled = B * f;
  for (std::size_t i = 0; i < F.size(); ++i) EXPECT_LT(std::abs(Rational(scaled[i] - F[i]).get_d()), 1e-3);
}

TEST(GaudinBae, Examples) {
  GaudinProblem p{2, vectors(2, 2), {0, 1}, {0, 0}, {1}};
  EXPECT_EQ(gaudin_bae_residual<Rational>(p, {{rat(1, 2)}}), std::vector<Rational>{0});
  EXPECT_NE(gaudin_bae_residual<Rational>(p, {{rat(1, 3)}})[0], 0);
  Rational kappa = rat(7, 3);
  GaudinProblem q{2, vectors(2, 1), {0}, {0, kappa}, {1}};
  EXPECT_EQ(gaudin_bae_residual<Rational>(q, {{1 / kappa}}), std::vector<Rational>{0});
  GaudinProblem r{2, vectors(2, 3), {0, 1, 2}, {0, 0}, {2}};
  EXPECT_THROW(gaudin_bae_residual<Rational>(r, {{1, 1}}), Error);
}

TEST(MasterOperator, FirstCoefficientAndSingleSite) {
  RationalSource src(58);
  std::vector<GlWeight> lam{{2, 1, 0}, {1, 0, 0}};
  std::vector<Rational> z{src.next(), src.next()}, K{src.next(), src.next(), src.next()};
  auto t = random_roots({2, 1}, src);
  Rational u = src.next();
  auto Z = master_operator_coeffs(3, t, z, lam, K, u);
  Rational z1 = 0;
  for (int a = 0; a < 3; ++a) {
    z1 += K[a];
    for (int i = 0; i < 2; ++i) z1 += Rational(lam[i][a]) / (u - z[i]);
  }
  EXPECT_EQ(Z[0], 1);
  EXPECT_EQ(Z[1], z1);

  // (∂ − Λ¹/(u − z))(∂ − Λ²/(u − z))
  std::vector<GlWeight> one{{3, 1}};
  Rational zz = rat(1, 4);
  auto Y = master_operator_coeffs<Rational>(2, {{}}, {zz}, one, {0, 0}, u);
  Rational w = 1 / (u - zz);
  EXPECT_EQ(Y[1], 4 * w);
  EXPECT_EQ(Y[2], (1 + 3) * w * w);

  auto W = master_operator_coeffs<Rational>(1, {}, {zz}, {{2}}, {rat(1, 3)}, u);
  EXPECT_EQ(W[1], rat(1, 3) + 2 * w);
}

TEST(GaudinEigen, ExactRationalRoot) {
  auto mods = vectors(2, 2);
  std::vector<Rational> z{0, 1};
  auto c = Ch::from_modules(mods, z);
  Roots<Rational> t{{rat(1, 2)}};
  V F = gaudin_weight_function(mods, z, {{1}}, t);
  ASSERT_FALSE(vec_is_zero(F));
  std::vector<GlWeight> lam{{1, 0}, {1, 0}};
  for (const auto& u : sample_points(59, 4)) {
    auto G = gaudin_transfer_all(c, M(2, 2), u);
    auto Z = master_operator_coeffs<Rational>(2, t, z, lam, {0, 0}, u);
    for (int k = 1; k <= 2; ++k) EXPECT_EQ(G[k] * F, F * Z[k]);
  }
}

TEST(GaudinEigen, NumericChecks) {
  GaudinProblem p{2, vectors(2, 2), {0, 1}, {0, 0}, {1}};
  GaudinEigenOptions opt;
  opt.u_samples = {0.3, 2.5, -1.5, 4.0, 7.25};
  auto r = verify_gaudin_eigenpair(p, {{Complex(0.5, 0)}}, opt);
  for (const auto& c : r.checks) {
    EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
    if (c.name.rfind("eigenvector", 0) == 0) EXPECT_LT(c.max_abs_error, 1e-10);
  }
  Rational kappa = rat(7, 3);
  GaudinProblem q{2, vectors(2, 1), {0}, {0, kappa}, {1}};
  EXPECT_TRUE(verify_gaudin_eigenpair(q, {{Complex(3.0 / 7.0, 0)}}, {}).all_pass());
}

TEST(GaudinEigen, EmptyConfigurationExact) {
  auto mods = std::vector<GlModule>{vector_rep(3), irrep_from_partition(3, {2, 1, 0})};
  std::vector<Rational> z{rat(1, 2), 3};
  std::vector<Rational> K{1, rat(-2, 3), 4};
  auto c = Ch::from_modules(mods, z);
  M Km(3, 3);
  for (int a = 0; a < 3; ++a) Km(a, a) = K[a];
  V v = tensor_hwv(mods);
  Rational u = rat(9, 7);
  auto G = gaudin_transfer_all(c, Km, u);
  auto Z = master_operator_coeffs<Rational>(3, {{}, {}}, z, {{1, 0, 0}, {2, 1, 0}}, K, u);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(G[k] * v, v * Z[k]);
}

TEST(Hamiltonians, SingleSite) {
  auto h = gaudin_hamiltonians(vectors(2, 1), {Rational(0)}, {0, 1});
  M e22(2, 2);
  e22(1, 1) = 1;
  EXPECT_EQ(h.H[0], e22);
}

TEST(Hamiltonians, ResiduesOfSecondTransferMatrix) {
  RationalSource src(60);
  int N = 3;
  std::vector<GlModule> mods{vector_rep(3), irrep_from_partition(3, {2, 1, 0}), vector_rep(3)};
  std::vector<Rational> z{src.next(), src.next(), src.next()};
  std::vector<Rational> K{src.next(), src.next(), src.next()};
  auto c = Ch::from_modules(mods, z);
  M Km(3, 3);
  for (int a = 0; a < 3; ++a) Km(a, a) = K[a];
  auto h = gaudin_hamiltonians(mods, z, K);
  std::size_t D = c.dim();
  Rational trK = K[0] + K[1] + K[2];
  Rational trK2 = K[0] * K[1] + K[0] * K[2] + K[1] * K[2];
  std::vector<M> C1, C2;
  for (std::size_t i = 0; i < 3; ++i) {
    M c1(D, D), c2(D, D);
    for (int a = 0; a < N; ++a) {
      c1 += c.site_generator(i, a, a);
      for (int b = a + 1; b < N; ++b)
        c2 += c.site_generator(i, a, a) * c.site_generator(i, b, b) - c.site_generator(i, a, b) * c.site_generator(i, b, a) +
              c.site_generator(i, a, a);
    }
    C1.push_back(c1);
    C2.push_back(c2);
  }
  for (const auto& u : sample_points(61, 2, z)) {
    M expect = M::scalar(D, trK2);
    for (std::size_t i = 0; i < 3; ++i) {
      M inner = M::scalar(D, trK);
      for (std::size_t j = 0; j < 3; ++j)
        if (j != i) inner += C1[j] * Rational(1 / (z[i] - z[j]));
      expect += (C1[i] * inner - h.H[i]) * Rational(1 / (u - z[i]));
      expect += C2[i] * Rational(1 / ((u - z[i]) * (u - z[i])));
    }
    EXPECT_EQ(gaudin_transfer(c, Km, 2, u), expect);
  }
}

TEST(Hamiltonians, DynamicalExpansion) {
  RationalSource src(62);
  for (int N = 2; N <= 3; ++N) {
    auto mods = vectors(N, 2);
    std::vector<Rational> z{src.next(), src.next()};
    std::vector<Rational> K;
    for (int a = 0; a < N; ++a) K.push_back(src.next());
    auto c = Ch::from_modules(mods, z);
    auto h = gaudin_hamiltonians(mods, z, K);
    Rational x = src.next();
    auto e = gaudin_dynamical_expansion(mods, z, K, x);
    std::size_t D = c.dim();
    M o1(D, D), o2(D, D);
    for (int a = 0; a < N; ++a) {
      Rational w = 1 / (x - K[a]);
      o1.axpy(-w, c.generator(a, a));
      M inner = h.G[a];
      for (int b = 0; b < N; ++b)
        if (b != a) inner.axpy(-1 / (K[a] - K[b]), c.generator(a, a) * c.generator(b, b));
      o2.axpy(-w, inner);
    }
    EXPECT_EQ(e.order0, M::identity(D));
    EXPECT_EQ(e.order1, o1);
    EXPECT_EQ(e.order2, o2);
  }
}

TEST(Hamiltonians, Errors) {
  EXPECT_THROW(gaudin_hamiltonians(vectors(2, 2), {1, 1}, {0, 1}), Error);
  EXPECT_THROW(gaudin_hamiltonians(vectors(2, 2), {1, 2}, {1, 1}), Error);
}
