#include <gtest/gtest.h>

#include "bethe/linalg.hpp"
#include "bethe/yangian.hpp"

using namespace bethe;
using M = Matrix<Rational>;

namespace {

Chain<Rational> vector_chain(int N, const std::vector<Rational>& z) {
  std::vector<GlModule> mods(z.size(), vector_rep(N));
  return Chain<Rational>::from_modules(mods, z);
}

M diag(const std::vector<Rational>& d) {
  M q(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) q(i, i) = d[i];
  return q;
}

M random_matrix(RationalSource& src, int N) {
  M q(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) q(a, b) = src.next();
  return q;
}

// Σ E_ab ⊗ X_ab as one operator on V ⊗ H
M assemble(const OpGrid<Rational>& g, int N) {
  std::size_t D = g[0].rows();
  M out(N * D, N * D);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) out += kron(M::unit(N, a, b), g[a * N + b]);
  return out;
}

}  // namespace

TEST(ChainT, SingleSiteFormula) {
  for (int N = 1; N <= 3; ++N) {
    Rational z = rat(2, 3), u = rat(-5, 7);
    auto c = vector_chain(N, {z});
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        M expect = M::unit(N, b, a) * Rational(1 / (u - z));
        if (a == b) expect += M::identity(N);
        EXPECT_EQ(chain_T_entry(c, a, b, u), expect);
      }
  }
}

TEST(ChainT, EmptyChain) {
  Chain<Rational> c(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) EXPECT_EQ(chain_T_entry(c, a, b, Rational(4)), M::scalar(1, a == b ? 1 : 0));
}

TEST(ChainT, PoleRejected) {
  auto c = vector_chain(2, {Rational(1)});
  EXPECT_THROW(chain_T_entry(c, 0, 0, Rational(1)), Error);
}

// T_12(u) = T^{[2]}_11 T^{[1]}_12 + T^{[2]}_12 T^{[1]}_22 with site 1 the first
// tensor factor; the reversed convention gives a different operator.
TEST(ChainT, SiteTwoIsLeftmost) {
  int N = 2;
  Rational z1 = 0, z2 = 3, u = rat(1, 2);
  auto c = vector_chain(N, {z1, z2});
  auto I = M::identity(2);
  auto site1 = [&](int a, int b) {
    M m = M::unit(N, b, a) * Rational(1 / (u - z1));
    if (a == b) m += I;
    return kron(m, I);
  };
  auto site2 = [&](int a, int b) {
    M m = M::unit(N, b, a) * Rational(1 / (u - z2));
    if (a == b) m += I;
    return kron(I, m);
  };
  M expect = site2(0, 0) * site1(0, 1) + site2(0, 1) * site1(1, 1);
  M reversed = site1(0, 0) * site2(0, 1) + site1(0, 1) * site2(1, 1);
  EXPECT_EQ(chain_T_entry(c, 0, 1, u), expect);
  EXPECT_NE(chain_T_entry(c, 0, 1, u), reversed);
}

TEST(ChainT, RTTRelation) {
  int N = 2;
  auto c = vector_chain(N, {rat(1, 2), rat(-3)});
  auto us = sample_points(31, 5, {rat(1, 2), rat(-3)});
  auto vs = sample_points(32, 5, {rat(1, 2), rat(-3)});
  std::size_t D = c.dim();
  for (int s = 0; s < 5; ++s) {
    Rational u = us[s], v = vs[s];
    // operators on V ⊗ V ⊗ H
    std::vector<std::size_t> dims{(std::size_t)N, (std::size_t)N, D};
    M t1 = embed(assemble(c.monodromy(u), N), dims, {0, 2});
    M t2 = embed(assemble(c.monodromy(v), N), dims, {1, 2});
    M r = embed(rational_R<Rational>(N, u - v), dims, {0, 1});
    EXPECT_EQ(r * t1 * t2, t2 * t1 * r);
  }
}

TEST(ChainTWedge, MatchesCheckedRestriction) {
  auto c = vector_chain(3, {rat(1, 3), rat(2)});
  Rational u = rat(17, 5);
  for (int k = 1; k <= 3; ++k) {
    auto grid = chain_T_wedge(c, k, u);
    M full = chain_T_wedge_checked(c, k, u);
    std::size_t W = binomial(3, k);
    EXPECT_EQ(blocks_of(full, W), grid) << k;
  }
  auto top = chain_T_wedge(vector_chain(3, {Rational(0)}), 3, u);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_TRUE(top[0].is_diagonal());
  EXPECT_EQ(top[0](0, 0), top[0](1, 1));
}

TEST(ChainTWedge, FusedRTT) {
  int N = 3;
  auto c = vector_chain(N, {rat(1, 4)});
  std::size_t D = c.dim();
  RationalSource src(33);
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l) {
      Rational u = src.next(), v = src.next();
      std::size_t dk = binomial(N, k), dl = binomial(N, l);
      std::vector<std::size_t> dims{dk, dl, D};
      M tk = embed(chain_T_wedge_checked(c, k, u), dims, {0, 2});
      M tl = embed(chain_T_wedge_checked(c, l, v), dims, {1, 2});
      M r = embed(fused_R(N, k, l, Rational(u - v)), dims, {0, 1});
      EXPECT_EQ(r * tk * tl, tl * tk * r);
    }
}

TEST(Transfer, ZeroIsIdentityAndTopIsDeterminant) {
  int N = 3;
  auto c = vector_chain(N, {rat(1, 2), rat(5, 3)});
  RationalSource src(34);
  M q = random_matrix(src, N);
  Rational u = src.next();
  EXPECT_EQ(transfer_matrix(c, q, 0, u), M::identity(c.dim()));
  EXPECT_EQ(transfer_matrix(c, q, N, u), qdet(c, u) * determinant(q));
}

TEST(Transfer, DiagonalTwistSingleSite) {
  auto c = vector_chain(2, {Rational(0)});
  M t = transfer_matrix(c, diag({Rational(1), Rational(2)}), 1, Rational(2));
  M expect(2, 2);
  expect(0, 0) = rat(7, 2);
  expect(1, 1) = 4;
  EXPECT_EQ(t, expect);
}

TEST(Qdet, FormsAgreeAndHighestWeightValue) {
  EXPECT_EQ(qdet(vector_chain(1, {rat(2)}), rat(5)), chain_T_entry(vector_chain(1, {rat(2)}), 0, 0, rat(5)));
  std::vector<GlModule> mods{vector_rep(3), irrep_from_partition(3, {2, 1, 0})};
  std::vector<Rational> z{rat(1, 3), rat(-2)};
  auto c = Chain<Rational>::from_modules(mods, z);
  for (const auto& u : sample_points(35, 2, {rat(1, 3), rat(4, 3), rat(7, 3), rat(-2), rat(-1), rat(0)})) {
    M a = qdet(c, u, QdetForm::Rows);
    EXPECT_EQ(a, qdet(c, u, QdetForm::Columns));
    EXPECT_EQ(a, qdet(c, u, QdetForm::Wedge));
    Rational val = qdet_highest_weight_value(std::vector<GlWeight>{{1, 0, 0}, {2, 1, 0}}, z, u);
    EXPECT_EQ(a, M::scalar(c.dim(), val));
  }
}

TEST(Qdet, Central) {
  auto c = vector_chain(2, {rat(1, 5), rat(3)});
  RationalSource src(36);
  Rational u = src.next(), v = src.next();
  M d = qdet(c, u);
  auto t = c.monodromy(v);
  for (const auto& x : t) EXPECT_EQ(d * x, x * d);
}

TEST(Transfer, CommuteAndGlInvariance) {
  for (int N = 2; N <= 3; ++N) {
    std::vector<Rational> z{rat(1, 2), rat(-1, 3), rat(2)};
    if (N == 3) z.pop_back();
    auto c = vector_chain(N, z);
    int n = static_cast<int>(z.size());
    RationalSource src(37 + N);
    M q = random_matrix(src, N);
    std::vector<Rational> poles;
    for (const auto& zi : z)
      for (int j = 0; j < N; ++j) poles.push_back(zi + j);
    for (int k = 1; k <= N; ++k)
      for (int l = 1; l <= N; ++l) {
        // deg in u is n·k; test at n·k+1 points for a fixed v
        auto vs = sample_points(300 + k * 7 + l, n * l + 1, poles);
        bool ok = vanishes_identically(
            [&](const Rational& u) {
              M a = transfer_matrix(c, q, k, u);
              for (const auto& v : vs) {
                M b = transfer_matrix(c, q, l, v);
                if (a * b != b * a) return false;
              }
              return true;
            },
            n * k, 400 + k, poles);
        EXPECT_TRUE(ok) << N << " " << k << " " << l;
      }
    M id = M::identity(N);
    Rational u = src.next();
    for (int k = 1; k <= N; ++k) {
      M t = transfer_matrix(c, id, k, u);
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
          M e = c.generator(a, b);
          EXPECT_EQ(t * e, e * t);
        }
    }
  }
}

TEST(Transfer, LeadingAsymptotics) {
  int N = 2;
  std::vector<Rational> z{rat(1), rat(-2, 3)};
  auto c = vector_chain(N, z);
  Poly den = poly_from_roots(z);
  auto us = sample_points(38, 4, z);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      std::vector<M> vals;
      for (const auto& u : us) vals.push_back(chain_T_entry(c, a, b, u));
      auto num = interpolate_values(us, vals, den, 2);
      EXPECT_EQ(num[2], M::scalar(c.dim(), a == b ? 1 : 0));
    }
}

TEST(Transfer, TraceFormulaWithFactorThree) {
  int N = 3, m = 3, k = 2;
  auto c = vector_chain(N, {rat(2, 7)});
  RationalSource src(39);
  M q = random_matrix(src, N);
  Rational u = src.next();
  M expect = transfer_matrix(c, q, k, u);
  Rational factor = rat(factorial(m) * factorial(N - m), factorial(k) * factorial(N - k));
  EXPECT_EQ(factor, 3);
  for (int i1 = 0; i1 < m; ++i1)
    for (int i2 = 0; i2 < m; ++i2) {
      if (i1 == i2) continue;
      EXPECT_EQ(trace_formula_term(c, q, m, {i1, i2}, u) * factor, expect) << i1 << i2;
    }
}

TEST(DifferenceOperator, SingleRankAndPencil) {
  auto c = vector_chain(1, {rat(1, 2)});
  M q = diag({rat(3)});
  auto p = difference_operator(c, q, rat(5));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], M::identity(1));
  EXPECT_EQ(p[1], chain_T_entry(c, 0, 0, rat(5)) * Rational(-3));
}

TEST(DifferenceOperator, AntisymmetrizerIdentity) {
  int N = 3;
  auto c = vector_chain(N, {rat(1, 3), rat(-1)});
  RationalSource src(40);
  M q = random_matrix(src, N);
  Rational u = src.next();
  std::size_t D = c.dim();
  M A = antisymmetrizer<Rational>(N, N);
  for (int k = 0; k <= N; ++k) {
    M lhs = kron(A, transfer_matrix(c, q, k, u));
    EXPECT_EQ(ordered_pencil_term(c, q, N, k, u), lhs) << k;
  }
  // prefactor form of the m-trace: (1/(N−m)!)·(N−k)!/(m−k)!·T_k
  for (int m = 1; m <= N; ++m)
    for (int k = 0; k <= m; ++k) {
      M lhs = trace_leading(ordered_pencil_term(c, q, m, k, u), std::size_t(std::pow(N, m)));
      Rational f = rat(factorial(N - k), factorial(N - m) * factorial(m - k));
      EXPECT_EQ(lhs, transfer_matrix(c, q, k, u) * f) << m << " " << k;
    }
  (void)D;
}

TEST(ModifiedTransfer, LowOrdersAndGeneratingIdentity) {
  int N = 3;
  auto c = vector_chain(N, {rat(1, 3), rat(4)});
  RationalSource src(41);
  M q = random_matrix(src, N);
  Rational u = src.next(), y = src.next();
  std::size_t D = c.dim();
  EXPECT_EQ(modified_transfer(c, q, 0, u), M::identity(D));
  EXPECT_EQ(modified_transfer(c, q, 1, u), transfer_matrix(c, q, 1, u) - M::scalar(D, N));
  M lhs(D, D), rhs(D, D);
  for (int k = 0; k <= N; ++k) {
    Rational yp = 1, y1 = 1;
    for (int i = 0; i < N - k; ++i) yp *= y, y1 *= y + 1;
    Rational s = k % 2 ? -1 : 1;
    lhs.axpy(Rational(s * yp), modified_transfer(c, q, k, u));
    rhs.axpy(Rational(s * y1), transfer_matrix(c, q, k, u));
  }
  EXPECT_EQ(lhs, rhs);
}

TEST(DynamicalExpansion, MatchesTrigonometricHamiltonians) {
  RationalSource src(42);
  for (int N = 2; N <= 3; ++N)
    for (int n = 1; n <= 2; ++n) {
      std::vector<GlModule> mods(n, vector_rep(N));
      std::vector<Rational> z, K;
      for (int i = 0; i < n; ++i) z.push_back(src.next());
      for (int a = 0; a < N; ++a) K.push_back(src.next());
      Rational x = src.next();
      auto c = Chain<Rational>::from_modules(mods, z);
      auto X = trig_dynamical_hamiltonians(mods, z, K);
      auto e = xxx_dynamical_expansion(mods, z, K, x);
      std::size_t D = c.dim();
      M o1(D, D), o2(D, D);
      for (int a = 0; a < N; ++a) {
        Rational w = K[a] / (x - K[a]);
        M eaa = c.generator(a, a);
        o1.axpy(-w, eaa);
        M inner = X[a] + eaa * eaa * rat(1, 2);
        for (int b = 0; b < N; ++b)
          if (b != a) inner.axpy(-K[b] / (K[a] - K[b]), eaa * c.generator(b, b));
        o2.axpy(-w, inner);
      }
      EXPECT_EQ(e.order0, M::identity(D));
      EXPECT_EQ(e.order1, o1) << N << " " << n;
      EXPECT_EQ(e.order2, o2) << N << " " << n;
    }
  EXPECT_THROW(trig_dynamical_hamiltonians({vector_rep(2)}, {Rational(0)}, {1, 1}), Error);
}
