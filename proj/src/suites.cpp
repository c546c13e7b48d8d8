#include "bethe/suites.hpp"

#include <algorithm>
#include <cmath>

#include "bethe/forms.hpp"
#include "bethe/linalg.hpp"
#include "bethe/poly.hpp"
#include "bethe/rmatrix.hpp"
#include "bethe/tensor.hpp"

namespace bethe {

namespace {

using M = Matrix<Rational>;
using V = Vec<Rational>;

// Exact comparisons; the reported error is the largest entry of any mismatch.
struct Tally {
  bool ok = true;
  double err = 0;

  void eq(const M& a, const M& b) {
    if (a == b) return;
    ok = false;
    err = std::max({err, max_abs_diff(a, b), 1e-300});
  }
  void eq(const V& a, const V& b) {
    if (a == b) return;
    ok = false;
    double d = 1e-300;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) d = std::max(d, magnitude(Rational(a[i] - b[i])));
    err = std::max(err, d);
  }
  void truth(bool b) {
    if (!b) ok = false, err = std::max(err, 1.0);
  }
  std::pair<bool, double> result() const { return {ok, err}; }
};

M random_matrix(RationalSource& src, int N, bool diagonal = false, bool symmetric = false) {
  M q(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = symmetric ? a : 0; b < N; ++b)
      if (!diagonal || a == b) {
        q(a, b) = src.next();
        if (symmetric) q(b, a) = q(a, b);
      }
  return q;
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

std::vector<GlModule> vectors(int N, int n) { return std::vector<GlModule>(n, vector_rep(N)); }

// Σ E_ab ⊗ X_ab on V ⊗ H
M assemble(const OpGrid<Rational>& g, int N) {
  std::size_t D = g[0].rows();
  M out(N * D, N * D);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) out += kron(M::unit(N, a, b), g[a * N + b]);
  return out;
}

std::vector<Rational> chain_poles(const ChainSpec& c) {
  std::vector<Rational> poles;
  for (const auto& zi : c.z)
    for (int j = 0; j <= c.N(); ++j) poles.push_back(zi + j);
  return poles;
}

Rational inversion_scalar(int k, int l, const Rational& u) {
  Rational s = 1;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j) {
      Rational x = u - i + j;
      s *= 1 - x * x;
    }
  return s;
}

// wedge ranks used for fused checks; larger spaces are too costly at N = 4
bool fused_pair(int N, int k, int l) { return k <= std::min(N, 2) && l <= std::min(N, 2) && (N < 4 || k + l <= 3); }

}  // namespace

CheckList rmatrix_suite(int N, std::uint64_t seed, int draws) {
  if (N < 1) fail(ErrorKind::InvalidRank, "N must be positive");
  CheckList out;
  auto us = sample_points(seed, draws), vs = sample_points(seed + 1, draws);
  auto place = [&](int i, int j, const Rational& u) { return place2(N, 3, rational_R<Rational>(N, u), i, j); };

  out.checks.push_back(run_check("R inversion", "R(u)·R21(−u) = (1 − u²)", [&] {
    Tally t;
    for (const auto& u : us)
      t.eq(rational_R<Rational>(N, u) * swap_factors(rational_R<Rational>(N, Rational(-u)), N, N),
           M::scalar(N * N, 1 - u * u));
    return t.result();
  }));
  out.checks.push_back(run_check("Yang-Baxter", "R12(u−v)R13(u)R23(v) = R23(v)R13(u)R12(u−v)", [&] {
    Tally t;
    for (int s = 0; s < draws; ++s) {
      Rational u = us[s], v = vs[s];
      t.eq(place(0, 1, u - v) * place(0, 2, u) * place(1, 2, v), place(1, 2, v) * place(0, 2, u) * place(0, 1, u - v));
    }
    return t.result();
  }));
  out.checks.push_back(run_check("fused R inversion", "R^{∧k,∧l}(u)·R^{∧l,∧k}(−u)^{21} = ∏(1 − (u − i + j)²)", [&] {
    Tally t;
    for (int k = 1; k <= N; ++k)
      for (int l = 1; l <= N; ++l) {
        if (!fused_pair(N, k, l)) continue;
        std::size_t dk = binomial(N, k), dl = binomial(N, l);
        for (const auto& u : us)
          t.eq(fused_R(N, k, l, u) * swap_factors(fused_R(N, l, k, Rational(-u)), dl, dk),
               M::scalar(dk * dl, inversion_scalar(k, l, u)));
      }
    return t.result();
  }));
  out.checks.push_back(run_check("fused Yang-Baxter", "fused R-matrices satisfy the Yang-Baxter equation", [&] {
    Tally t;
    RationalSource src(seed + 2);
    for (int k = 1; k <= N; ++k)
      for (int l = 1; l <= N; ++l) {
        if (!fused_pair(N, k, l)) continue;
        std::vector<std::size_t> d{(std::size_t)binomial(N, k), (std::size_t)binomial(N, l), (std::size_t)N};
        for (int s = 0; s < draws; ++s) {
          Rational u = src.next(), v = src.next();
          auto r12 = embed(fused_R(N, k, l, Rational(u - v)), d, {0, 1});
          auto r13 = embed(fused_R(N, k, 1, u), d, {0, 2});
          auto r23 = embed(fused_R(N, l, 1, v), d, {1, 2});
          t.eq(r12 * r13 * r23, r23 * r13 * r12);
        }
      }
    return t.result();
  }));
  out.checks.push_back(run_check("twist commutation", "[R^{∧k,∧l}(u), Q^{∧k} ⊗ Q^{∧l}] = 0", [&] {
    Tally t;
    RationalSource src(seed + 3);
    for (int k = 1; k <= N; ++k)
      for (int l = 1; l <= N; ++l) {
        if (!fused_pair(N, k, l)) continue;
        for (int s = 0; s < draws; ++s) {
          M q = random_matrix(src, N, s % 2 == 0);
          M qq = kron(wedge_power(q, k), wedge_power(q, l));
          M r = fused_R(N, k, l, us[s]);
          t.eq(r * qq, qq * r);
        }
      }
    return t.result();
  }));
  out.checks.push_back(run_check("ordered R product", "ordered product of R^{ij}(i − j) is a multiple of the antisymmetrizer", [&] {
    Tally t;
    for (int k = 2; k <= std::min(N, 3); ++k) {
      M a = antisymmetrizer<Rational>(N, k) * rra_scalar(k);
      t.eq(ordered_R_product<Rational>(N, k, false), a);
      t.eq(ordered_R_product<Rational>(N, k, true), a);
    }
    return t.result();
  }));
  out.checks.push_back(run_check("reduced fused R", "R^{∧k,∧1}(u) = R_{∧k,∧1}(u)·∏(u − i), and the mirrored form", [&] {
    Tally t;
    for (int k = 1; k <= std::min(N, 3); ++k)
      for (const auto& u : us) {
        Rational left = 1, right = 1;
        for (int i = 1; i <= k - 1; ++i) left *= u - i;
        for (int i = 0; i <= k - 2; ++i) right *= u + i;
        t.eq(fused_R(N, k, 1, u), reduced_fused_R(N, k, WedgeSide::WedgeFirst, u) * left);
        t.eq(fused_R(N, 1, k, u), reduced_fused_R(N, k, WedgeSide::WedgeSecond, u) * right);
      }
    return t.result();
  }));
  out.checks.push_back(run_check("reduced inversion", "R_{∧k,∧1}(u)·R_{∧1,∧k}(−u)^{21} = (u + 1)(k − u)", [&] {
    Tally t;
    for (int k = 1; k <= std::min(N, 3); ++k) {
      std::size_t dk = binomial(N, k);
      for (const auto& u : us)
        t.eq(reduced_fused_R(N, k, WedgeSide::WedgeFirst, u) *
                 swap_factors(reduced_fused_R(N, k, WedgeSide::WedgeSecond, Rational(-u)), N, dk),
             M::scalar(N * dk, (u + 1) * (k - u)));
    }
    return t.result();
  }));
  return out;
}

CheckList yangian_suite(const ChainSpec& cs, std::uint64_t seed, int draws) {
  int N = cs.N();
  if (N < 1) fail(ErrorKind::InvalidRank, "N must be positive");
  for (const auto& m : cs.modules)
    if (m.N != N) fail(ErrorKind::MismatchedN, "module rank differs from twist size");
  if (cs.z.size() != cs.modules.size()) fail(ErrorKind::SchemaError, "one evaluation point per site");
  auto c = Chain<Rational>::from_modules(cs.modules, cs.z);
  const M& q = cs.Q;
  int n = static_cast<int>(cs.z.size());
  std::size_t D = c.dim();
  auto poles = chain_poles(cs);
  auto us = sample_points(seed, draws, poles), vs = sample_points(seed + 1, draws, poles);
  CheckList out;

  out.checks.push_back(run_check("RTT", "R(u − v)T1(u)T2(v) = T2(v)T1(u)R(u − v)", [&] {
    Tally t;
    std::vector<std::size_t> dims{(std::size_t)N, (std::size_t)N, D};
    for (int s = 0; s < draws; ++s) {
      M t1 = embed(assemble(c.monodromy(us[s]), N), dims, {0, 2});
      M t2 = embed(assemble(c.monodromy(vs[s]), N), dims, {1, 2});
      M r = embed(rational_R<Rational>(N, Rational(us[s] - vs[s])), dims, {0, 1});
      t.eq(r * t1 * t2, t2 * t1 * r);
    }
    return t.result();
  }));
  out.checks.push_back(run_check("fused RTT", "fused R intertwines the wedge monodromies", [&] {
    Tally t;
    int top = std::min(N, 2);
    for (int k = 1; k <= top; ++k)
      for (int l = 1; l <= top; ++l) {
        if (!fused_pair(N, k, l)) continue;
        std::size_t dk = binomial(N, k), dl = binomial(N, l);
        std::vector<std::size_t> dims{dk, dl, D};
        for (int s = 0; s < std::min(draws, 3); ++s) {
          M tk = embed(chain_T_wedge_checked(c, k, us[s]), dims, {0, 2});
          M tl = embed(chain_T_wedge_checked(c, l, vs[s]), dims, {1, 2});
          M r = embed(fused_R(N, k, l, Rational(us[s] - vs[s])), dims, {0, 1});
          t.eq(r * tk * tl, tl * tk * r);
        }
      }
    return t.result();
  }));
  out.checks.push_back(run_check("transfer commutativity", "[T_k(u), T_l(v)] = 0 at degree bound + 1 points", [&] {
    Tally t;
    for (int k = 1; k <= N; ++k)
      for (int l = 1; l <= N; ++l) {
        auto vv = sample_points(seed + 300 + 7 * k + l, n * l + 1, poles);
        std::vector<M> b;
        for (const auto& v : vv) b.push_back(transfer_matrix(c, q, l, v));
        t.truth(vanishes_identically(
            [&](const Rational& u) {
              M a = transfer_matrix(c, q, k, u);
              for (const auto& x : b)
                if (!(a * x == x * a)) return false;
              return true;
            },
            n * k, seed + 400 + k, poles));
      }
    return t.result();
  }));
  out.checks.push_back(run_check("qdet central", "qdet T(u) commutes with every T_ab(v)", [&] {
    Tally t;
    for (int s = 0; s < std::min(draws, 3); ++s) {
      M d = qdet(c, us[s]);
      for (const auto& x : c.monodromy(vs[s])) t.eq(d * x, x * d);
    }
    return t.result();
  }));
  out.checks.push_back(run_check("qdet forms", "row, column and wedge forms of qdet agree; T_N = det Q·qdet", [&] {
    Tally t;
    for (int s = 0; s < std::min(draws, 3); ++s) {
      M a = qdet(c, us[s], QdetForm::Rows);
      t.eq(a, qdet(c, us[s], QdetForm::Columns));
      t.eq(a, qdet(c, us[s], QdetForm::Wedge));
      t.eq(transfer_matrix(c, q, N, us[s]), a * determinant(q));
    }
    return t.result();
  }));
  out.checks.push_back(run_check("trace formula", "every (m; i1…ik) partial-trace form reproduces T_k", [&] {
    Tally t;
    const Rational& u = us[0];
    for (int m = 1; m <= std::min(N, 3); ++m)
      for (int k = 1; k <= m; ++k) {
        M expect = transfer_matrix(c, q, k, u);
        Rational factor = rat(factorial(m) * factorial(N - m), factorial(k) * factorial(N - k));
        for (const auto& sub : subsets(m, k)) {
          auto perm = sub;
          do {
            t.eq(trace_formula_term(c, q, m, perm, u) * factor, expect);
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
      }
    return t.result();
  }));
  out.checks.push_back(run_check("antisymmetrized pencil", "A_N·(pencil term k) = A_N ⊗ T_k and its m-traces", [&] {
    Tally t;
    const Rational& u = us[0];
    if (N <= 3)
      for (int k = 0; k <= N; ++k)
        t.eq(ordered_pencil_term(c, q, N, k, u), kron(antisymmetrizer<Rational>(N, N), transfer_matrix(c, q, k, u)));
    for (int m = 1; m <= std::min(N, 3); ++m)
      for (int k = 0; k <= m; ++k) {
        M lhs = trace_leading(ordered_pencil_term(c, q, m, k, u), static_cast<std::size_t>(std::pow(N, m)));
        Rational f = rat(factorial(N - k), factorial(N - m) * factorial(m - k));
        t.eq(lhs, transfer_matrix(c, q, k, u) * f);
      }
    return t.result();
  }));
  out.checks.push_back(run_check("modified transfer generating identity",
                                 "Σ(−1)^k S_k(u) y^{N−k} = Σ(−1)^k T_k(u) (y + 1)^{N−k}", [&] {
    Tally t;
    auto ys = sample_points(seed + 5, std::min(draws, 3));
    for (const auto& y : ys) {
      const Rational& u = us[0];
      M lhs(D, D), rhs(D, D);
      for (int k = 0; k <= N; ++k) {
        Rational yp = 1, y1 = 1;
        for (int i = 0; i < N - k; ++i) yp *= y, y1 *= y + 1;
        Rational s = k % 2 ? -1 : 1;
        lhs.axpy(Rational(s * yp), modified_transfer(c, q, k, u));
        rhs.axpy(Rational(s * y1), transfer_matrix(c, q, k, u));
      }
      t.eq(lhs, rhs);
    }
    return t.result();
  }));
  out.checks.push_back(run_check("difference operator coefficients", "pencil coefficients are (−1)^k T_k", [&] {
    Tally t;
    for (int s = 0; s < std::min(draws, 3); ++s) {
      auto p = difference_operator(c, q, us[s]);
      for (int k = 0; k <= N; ++k) {
        M tk = transfer_matrix(c, q, k, us[s]);
        t.eq(p[k], k % 2 ? M(-tk) : tk);
      }
    }
    return t.result();
  }));
  return out;
}

CheckList bethe_construction_suite(std::uint64_t seed) {
  using Ch = Chain<Rational>;
  auto T = [](const Ch& c, int a, int b, const Rational& u, const V& v) { return chain_T_entry(c, a, b, u) * v; };
  CheckList out;
  out.checks.push_back(run_check("trace vs recursion", "trace-form Bethe vector equals the N → N−1 recursion", [&] {
    Tally t;
    RationalSource src(seed);
    struct Case {
      std::vector<GlModule> mods;
      std::vector<int> xi;
    };
    std::vector<Case> cases{{vectors(2, 3), {2}},
                            {vectors(3, 2), {1, 1}},
                            {vectors(3, 3), {2, 1}},
                            {{vector_rep(3), irrep_from_partition(3, {2, 1, 0})}, {1, 2}},
                            {vectors(4, 2), {1, 1, 1}},
                            {{vector_rep(4), wedge_rep(4, 2)}, {2, 1, 0}}};
    for (const auto& cs : cases) {
      std::vector<Rational> z;
      for (std::size_t i = 0; i < cs.mods.size(); ++i) z.push_back(src.next());
      auto r = random_roots(cs.xi, src);
      t.eq(universal_weight_function(cs.mods, z, {cs.xi}, r), universal_weight_function_recursive(cs.mods, z, {cs.xi}, r));
    }
    return t.result();
  }));
  out.checks.push_back(run_check("worked examples", "N = 2, 3, 4 closed forms of the Bethe vector", [&] {
    Tally t;
    {
      std::vector<GlModule> mods{vector_rep(2), irrep_from_partition(2, {2, 0}), vector_rep(2)};
      std::vector<Rational> z{rat(1, 3), 2, rat(-5, 7)};
      auto c = Ch::from_modules(mods, z);
      V v = tensor_hwv(mods);
      Rational x = rat(11, 13), f = 1;
      for (const auto& zi : z) f *= x - zi;
      t.eq(universal_weight_function(mods, z, {{1}}, Roots<Rational>{{x}}), T(c, 0, 1, x, v) * f);
    }
    {
      auto mods = vectors(3, 3);
      std::vector<Rational> z{0, rat(2, 3), -4};
      auto c = Ch::from_modules(mods, z);
      V v = tensor_hwv(mods);
      Rational t1 = rat(3, 5), t2 = rat(-7, 4);
      V expect = T(c, 0, 1, t1, T(c, 1, 2, t2, v)) + T(c, 0, 2, t1, T(c, 1, 1, t2, v)) * Rational(1 / (t2 - t1));
      t.eq(bethe_vector_trace_apply(c, {{1, 1}}, Roots<Rational>{{t1}, {t2}}, v), expect);
    }
    {
      std::vector<GlModule> mods{vector_rep(4), irrep_from_partition(4, {1, 1, 0, 0}), vector_rep(4)};
      std::vector<Rational> z{1, rat(-1, 2), rat(5, 3)};
      auto c = Ch::from_modules(mods, z);
      V v = tensor_hwv(mods);
      Rational t1 = rat(2, 7), t2 = rat(-3, 2), t3 = rat(9, 5);
      Rational d21 = t2 - t1, d31 = t3 - t1, d32 = t3 - t2;
      auto tt = [&](int a, int b, int e, int f, int g, int h) { return T(c, a, b, t1, T(c, e, f, t2, T(c, g, h, t3, v))); };
      V expect = tt(0, 1, 1, 2, 2, 3) + tt(0, 2, 1, 1, 2, 3) * Rational(1 / d21) +
                 tt(0, 1, 1, 3, 2, 2) * Rational(1 / d32) +
                 (tt(0, 3, 1, 1, 2, 2) + tt(0, 2, 1, 3, 2, 1)) * Rational(1 / (d21 * d31)) +
                 tt(0, 3, 1, 2, 2, 1) * Rational((d21 * d31 + 1) / (d21 * d31 * d32));
      t.eq(bethe_vector_trace_apply(c, {{1, 1, 1}}, Roots<Rational>{{t1}, {t2}, {t3}}, v), expect);
    }
    return t.result();
  }));
  out.checks.push_back(run_check("symmetry within a level", "Bethe vector is invariant under permuting roots of one level", [&] {
    Tally t;
    RationalSource src(seed + 1);
    auto mods = vectors(3, 3);
    std::vector<Rational> z{src.next(), src.next(), src.next()};
    auto c = Ch::from_modules(mods, z);
    V v = tensor_hwv(mods);
    auto r = random_roots({2, 2}, src);
    V ref = bethe_vector_trace_apply(c, {{2, 2}}, r, v);
    for (int a = 0; a < 2; ++a) {
      auto s = r;
      std::swap(s[a][0], s[a][1]);
      t.eq(bethe_vector_trace_apply(c, {{2, 2}}, s, v), ref);
    }
    return t.result();
  }));
  out.checks.push_back(run_check("weight function polynomial", "the universal weight function is polynomial in each root", [&] {
    RationalSource src(seed + 2);
    auto mods = vectors(3, 2);
    std::vector<Rational> z{src.next(), src.next()};
    std::vector<int> xi{2, 1};
    auto r = random_roots(xi, src);
    int bound = static_cast<int>(mods.size()) + 3;
    for (int a = 0; a < 2; ++a) {
      auto pts = sample_points(seed + 10 + a, bound + 3);
      std::vector<V> vals;
      for (const auto& p : pts) {
        auto s = r;
        s[a][0] = p;
        vals.push_back(universal_weight_function(mods, z, {xi}, s));
      }
      interpolate_values(pts, vals, Poly{Rational(1)}, bound);  // throws on a held-out mismatch
    }
    return std::pair<bool, double>{true, 0.0};
  }));
  return out;
}

CheckList gaudin_identity_suite(std::uint64_t seed) {
  using Ch = Chain<Rational>;
  CheckList out;
  out.checks.push_back(run_check("weight function sum vs recursion", "symmetrized sum form of 𝔽 equals its recursion", [&] {
    Tally t;
    RationalSource src(seed);
    struct Case {
      std::vector<GlModule> mods;
      std::vector<int> xi;
    };
    std::vector<Case> cases{{vectors(2, 3), {2}},
                            {vectors(3, 2), {1, 1}},
                            {vectors(3, 3), {2, 1}},
                            {{vector_rep(3), irrep_from_partition(3, {2, 1, 0})}, {2, 2}},
                            {vectors(4, 3), {1, 1, 1}}};
    for (const auto& cs : cases) {
      std::vector<Rational> z;
      for (std::size_t i = 0; i < cs.mods.size(); ++i) z.push_back(src.next());
      auto r = random_roots(cs.xi, src);
      t.eq(gaudin_weight_function(cs.mods, z, {cs.xi}, r), gaudin_weight_function_recursive(cs.mods, z, {cs.xi}, r));
    }
    return t.result();
  }));
  out.checks.push_back(run_check("Gaudin commutativity", "[G_k(u), G_l(v)] = 0", [&] {
    Tally t;
    RationalSource src(seed + 1);
    struct Case {
      int N, n;
      bool diagonal;
    };
    for (auto cs : {Case{2, 2, false}, Case{2, 3, true}, Case{3, 2, false}, Case{3, 3, true}}) {
      std::vector<Rational> z;
      for (int i = 0; i < cs.n; ++i) z.push_back(src.next());
      auto c = Ch::from_modules(vectors(cs.N, cs.n), z);
      M K = random_matrix(src, cs.N, cs.diagonal);
      auto Gu = gaudin_transfer_all(c, K, src.next());
      auto Gv = gaudin_transfer_all(c, K, src.next());
      for (int k = 1; k <= cs.N; ++k)
        for (int l = 1; l <= cs.N; ++l) t.eq(Gu[k] * Gv[l], Gv[l] * Gu[k]);
    }
    return t.result();
  }));
  out.checks.push_back(run_check("antisymmetrizer sides", "left and right antisymmetrizer forms of 𝒟_K agree", [&] {
    Tally t;
    RationalSource src(seed + 2);
    for (int N = 2; N <= 3; ++N) {
      auto c = Ch::from_modules(vectors(N, 1), {src.next()});
      auto [lhs, rhs] = antisymmetrized_pencil_sides(c, random_matrix(src, N), src.next());
      for (int p = 0; p <= N; ++p) t.eq(lhs[p], rhs[p]);
    }
    auto c = Ch::from_modules(vectors(2, 2), {1, rat(-3, 4)});
    auto [lhs, rhs] = antisymmetrized_pencil_sides(c, random_matrix(src, 2), src.next());
    for (int p = 0; p <= 2; ++p) t.eq(lhs[p], rhs[p]);
    return t.result();
  }));
  return out;
}

CheckList forms_suite(std::uint64_t seed) {
  using Ch = Chain<Rational>;
  CheckList out;
  out.checks.push_back(run_check("Shapovalov of vector rep", "Gram matrix of the vector representation is the identity", [&] {
    Tally t;
    for (int N = 2; N <= 4; ++N) t.eq(shapovalov_gram(vector_rep(N)), M::identity(N));
    return t.result();
  }));
  out.checks.push_back(run_check("deformed form symmetry", "T_k(u) is symmetric for the deformed form when Q = Qᵀ", [&] {
    Tally t;
    RationalSource src(seed);
    for (int N = 2; N <= 3; ++N) {
      std::vector<GlModule> mods{vector_rep(N), irrep_from_partition(N, N == 2 ? GlWeight{2, 0} : GlWeight{1, 1, 0})};
      std::vector<Rational> z{src.next(), src.next()};
      M g = deformed_form(mods, z);
      auto c = Ch::from_modules(mods, z);
      M q = random_matrix(src, N, false, true);
      Rational u = src.next();
      for (int k = 1; k <= N; ++k) {
        M x = transfer_matrix(c, q, k, u);
        t.eq(M(x.transpose() * g), g * x);
      }
    }
    return t.result();
  }));
  out.checks.push_back(run_check("tensor Shapovalov symmetry", "G_k(u) is symmetric for the tensor Shapovalov form when K = Kᵀ", [&] {
    Tally t;
    RationalSource src(seed + 1);
    std::vector<GlModule> mods{vector_rep(3), irrep_from_partition(3, {2, 1, 0})};
    std::vector<Rational> z{src.next(), src.next()};
    M g = tensor_shapovalov(mods);
    auto c = Ch::from_modules(mods, z);
    auto G = gaudin_transfer_all(c, random_matrix(src, 3, false, true), src.next());
    for (int k = 1; k <= 3; ++k) t.eq(M(G[k].transpose() * g), g * G[k]);
    return t.result();
  }));
  out.checks.push_back(run_check("deformed form positive", "leading minors positive when sites are far enough apart", [&] {
    Tally t;
    for (const auto& m : leading_minors(deformed_form(vectors(2, 2), {3, 0}))) t.truth(m > 0);
    std::vector<GlModule> mods{irrep_from_partition(3, {2, 0, 0}), vector_rep(3)};
    for (const auto& m : leading_minors(deformed_form(mods, {4, 0}))) t.truth(m > 0);
    return t.result();
  }));
  out.checks.push_back(run_check("exterior-power intertwiner", "R_{∧l,∧m}(u) is the scaled fused R at the shifted point", [&] {
    Tally t;
    int N = 3;
    for (int l = 1; l <= 2; ++l)
      for (int m = 1; m <= 2; ++m)
        for (const auto& u : sample_points(seed + 3 * l + m, 2)) {
          Rational v = u + l - m;
          Rational c = Rational(v + std::max(m - l, 0)) / Rational(v + m);
          for (int i = 0; i < l; ++i)
            for (int j = 0; j < m; ++j) c /= Rational(v + j - i);
          t.eq(intertwiner_R(wedge_rep(N, l), wedge_rep(N, m), u), fused_R(N, l, m, v) * c);
        }
    return t.result();
  }));
  return out;
}

CheckList dynamical_suite(std::uint64_t seed) {
  using Ch = Chain<Rational>;
  CheckList out;
  auto run = [&](bool xxx) {
    return [&, xxx] {
      Tally t;
      RationalSource src(seed + (xxx ? 1 : 0));
      for (int N = 2; N <= 3; ++N)
        for (int n = 1; n <= 2; ++n) {
          auto mods = vectors(N, n);
          std::vector<Rational> z, K;
          for (int i = 0; i < n; ++i) z.push_back(src.next());
          for (int a = 0; a < N; ++a) K.push_back(src.next());
          Rational x = src.next();
          auto c = Ch::from_modules(mods, z);
          std::size_t D = c.dim();
          auto e = xxx ? xxx_dynamical_expansion(mods, z, K, x) : gaudin_dynamical_expansion(mods, z, K, x);
          std::vector<M> H = xxx ? trig_dynamical_hamiltonians(mods, z, K) : gaudin_hamiltonians(mods, z, K).G;
          M o1(D, D), o2(D, D);
          for (int a = 0; a < N; ++a) {
            Rational w = (xxx ? K[a] : Rational(1)) / (x - K[a]);
            M eaa = c.generator(a, a);
            o1.axpy(-w, eaa);
            M inner = H[a];
            if (xxx) inner += eaa * eaa * rat(1, 2);
            for (int b = 0; b < N; ++b)
              if (b != a) inner.axpy(-(xxx ? K[b] : Rational(1)) / (K[a] - K[b]), eaa * c.generator(b, b));
            o2.axpy(-w, inner);
          }
          t.eq(e.order0, M::identity(D));
          t.eq(e.order1, o1);
          t.eq(e.order2, o2);
        }
      return t.result();
    };
  };
  out.checks.push_back(run_check("XXX dynamical expansion", "u^{-1}, u^{-2} terms give the trigonometric dynamical Hamiltonians", run(true)));
  out.checks.push_back(run_check("Gaudin dynamical expansion", "u^{-1}, u^{-2} terms give the rational dynamical Hamiltonians", run(false)));
  out.checks.push_back(run_check("G_2 residues", "residues of G_2(u) at z_i give the Gaudin Hamiltonians", [&] {
    Tally t;
    RationalSource src(seed + 2);
    int N = 3;
    std::vector<GlModule> mods{vector_rep(3), irrep_from_partition(3, {2, 1, 0}), vector_rep(3)};
    std::vector<Rational> z{src.next(), src.next(), src.next()};
    std::vector<Rational> K{src.next(), src.next(), src.next()};
    auto c = Ch::from_modules(mods, z);
    M Km(3, 3);
    for (int a = 0; a < 3; ++a) Km(a, a) = K[a];
    auto h = gaudin_hamiltonians(mods, z, K);
    std::size_t D = c.dim();
    Rational trK = K[0] + K[1] + K[2], trK2 = K[0] * K[1] + K[0] * K[2] + K[1] * K[2];
    std::vector<M> C1, C2;
    for (std::size_t i = 0; i < 3; ++i) {
      M c1(D, D), c2(D, D);
      for (int a = 0; a < N; ++a) {
        c1 += c.site_generator(i, a, a);
        for (int b = a + 1; b < N; ++b)
          c2 += c.site_generator(i, a, a) * c.site_generator(i, b, b) -
                c.site_generator(i, a, b) * c.site_generator(i, b, a) + c.site_generator(i, a, a);
      }
      C1.push_back(c1);
      C2.push_back(c2);
    }
    for (const auto& u : sample_points(seed + 3, 2, z)) {
      M expect = M::scalar(D, trK2);
      for (std::size_t i = 0; i < 3; ++i) {
        M inner = M::scalar(D, trK);
        for (std::size_t j = 0; j < 3; ++j)
          if (j != i) inner += C1[j] * Rational(1 / (z[i] - z[j]));
        expect += (C1[i] * inner - h.H[i]) * Rational(1 / (u - z[i]));
        expect += C2[i] * Rational(1 / ((u - z[i]) * (u - z[i])));
      }
      t.eq(gaudin_transfer(c, Km, 2, u), expect);
    }
    return t.result();
  }));
  return out;
}

namespace {

std::vector<Complex> as_complex(const std::vector<Rational>& xs) {
  std::vector<Complex> out;
  for (const auto& x : xs) out.push_back(from_rational<Complex>(x));
  return out;
}

template <class Eval>
CheckResult imaginary_parts(const std::string& name, int N, const std::vector<double>& us, double tol, Eval eval) {
  return run_check(name, "eigenvalues are real at real u for real data", [&] {
    double worst = 0;
    for (double u : us) {
      auto c = eval(Complex(u, 0));
      for (int k = 1; k <= N; ++k) worst = std::max(worst, std::abs(c[k].imag()));
    }
    return std::pair<bool, double>{worst < tol, worst};
  });
}

}  // namespace

CheckResult real_eigenvalue_check(const BetheProblem& p, const Roots<Complex>& t, const std::vector<double>& us,
                                  double tol) {
  auto z = as_complex(p.z), q = as_complex(p.q);
  auto lam = p.lambdas();
  return imaginary_parts("real XXX eigenvalues", p.N, us, tol, [&](const Complex& u) {
    return fundamental_difference_operator(p.N, t, z, lam, q, u);
  });
}

CheckResult real_eigenvalue_check(const GaudinProblem& p, const Roots<Complex>& t, const std::vector<double>& us,
                                  double tol) {
  auto z = as_complex(p.z), K = as_complex(p.K);
  auto lam = p.lambdas();
  return imaginary_parts("real Gaudin eigenvalues", p.N, us, tol, [&](const Complex& u) {
    return master_operator_coeffs<Complex>(p.N, t, z, lam, K, u);
  });
}

BetheProblem desk_xxx_problem() { return BetheProblem{2, vectors(2, 2), {0, 3}, {1, 1}, {1}}; }

GaudinProblem desk_gaudin_problem() { return GaudinProblem{2, vectors(2, 2), {0, 1}, {0, 0}, {1}}; }

}  // namespace bethe
