#pragma once

#include <functional>
#include <vector>

#include "bethe/bethe_xxx.hpp"

namespace bethe {

// Differential operators Σ_p c_p(u) ∂^p evaluated at a point. Each
// coefficient is carried as its jet (c, c', c'', …) so products can apply
// the Leibniz rule exactly.
template <class T>
using Jet = std::vector<T>;

template <class T>
using DiffOp = std::vector<Jet<T>>;

namespace detail {

template <class S, class T>
Jet<T> jet_mul(const Jet<T>& a, const Jet<T>& b) {
  std::size_t n = std::min(a.size(), b.size());
  Jet<T> out;
  for (std::size_t s = 0; s < n; ++s) {
    T acc = a[0] * b[s];
    for (std::size_t r = 1; r <= s; ++r) acc = acc + S(binomial(static_cast<int>(s), static_cast<int>(r))) * (a[r] * b[s - r]);
    out.push_back(std::move(acc));
  }
  return out;
}

template <class T>
void jet_add(Jet<T>& acc, const Jet<T>& x) {
  if (acc.empty()) {
    acc = x;
    return;
  }
  acc.resize(std::min(acc.size(), x.size()));
  for (std::size_t s = 0; s < acc.size(); ++s) acc[s] = acc[s] + x[s];
}

// (d·∂ + A)·R
template <class S, class T>
DiffOp<T> left_mul(bool d, const Jet<T>& A, const DiffOp<T>& R) {
  DiffOp<T> out(R.size() + (d ? 1 : 0));
  for (std::size_t q = 0; q < R.size(); ++q) {
    if (R[q].empty()) continue;
    jet_add(out[q], jet_mul<S>(A, R[q]));
    if (d) {
      jet_add(out[q], Jet<T>(R[q].begin() + 1, R[q].end()));
      jet_add(out[q + 1], R[q]);
    }
  }
  return out;
}

inline int sequence_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// jets of M_ab = K_ab + L_ab(u), up to order J−1
template <class S>
std::vector<Jet<Matrix<S>>> current_jets(const Chain<S>& c, const Matrix<S>& K, const S& u, int J) {
  int N = c.N();
  std::size_t D = c.dim();
  std::vector<Jet<Matrix<S>>> m(static_cast<std::size_t>(N * N));
  for (int s = 0; s < J; ++s) {
    OpGrid<S> L = c.gaudin_L(u, s);
    for (int ab = 0; ab < N * N; ++ab) {
      Matrix<S> x = L[ab];
      if (s == 0 && !is_zero(K(ab / N, ab % N))) x += Matrix<S>::scalar(D, K(ab / N, ab % N));
      m[ab].push_back(std::move(x));
    }
  }
  return m;
}

}  // namespace detail

// L_ab(u) = Σ_i e_ba^{(i)}/(u − z_i), a and b 0-based.
template <class S>
Matrix<S> L_entry(const Chain<S>& c, int a, int b, const S& u) {
  return c.gaudin_L(u, 0)[a * c.N() + b];
}

// Coefficients (value at u) of 𝒟_K(u, ∂) = tr((∂ − K − L)…(∂ − K − L) A_N),
// indexed by the power of ∂.
template <class S>
std::vector<Matrix<S>> gaudin_pencil(const Chain<S>& c, const Matrix<S>& K, const S& u) {
  int N = c.N();
  std::size_t D = c.dim();
  auto M = detail::current_jets(c, K, u, N + 1);
  std::vector<Jet<Matrix<S>>> negM(M.size());
  for (std::size_t i = 0; i < M.size(); ++i)
    for (const auto& x : M[i]) negM[i].push_back(-x);
  DiffOp<Matrix<S>> total(N + 1);
  Jet<Matrix<S>> one(N + 1, Matrix<S>(D, D));
  one[0] = Matrix<S>::identity(D);
  std::vector<int> alpha(N), beta(N);
  std::vector<bool> ua(N, false), ub(N, false);
  // (1/N!) Σ_{α,β} sgn α sgn β ∏_i (δ ∂ − M_{α_i β_i}), built right to left
  std::function<void(int, const DiffOp<Matrix<S>>&)> rec = [&](int i, const DiffOp<Matrix<S>>& R) {
    if (i < 0) {
      int sg = detail::sequence_sign(alpha) * detail::sequence_sign(beta);
      for (std::size_t p = 0; p < R.size(); ++p) {
        if (R[p].empty()) continue;
        Jet<Matrix<S>> x = R[p];
        if (sg < 0)
          for (auto& m : x) m = -m;
        detail::jet_add(total[p], x);
      }
      return;
    }
    for (int a = 0; a < N; ++a) {
      if (ua[a]) continue;
      for (int b = 0; b < N; ++b) {
        if (ub[b]) continue;
        ua[a] = ub[b] = true;
        alpha[i] = a;
        beta[i] = b;
        rec(i - 1, detail::left_mul<S>(a == b, negM[a * N + b], R));
        ua[a] = ub[b] = false;
      }
    }
  };
  rec(N - 1, DiffOp<Matrix<S>>{one});
  S inv = S(1) / from_int<S>(static_cast<long>(factorial(N)));
  std::vector<Matrix<S>> out;
  for (int p = 0; p <= N; ++p) out.push_back(total[p].empty() ? Matrix<S>(D, D) : Matrix<S>(inv * total[p][0]));
  return out;
}

// G_{0,K}(u), …, G_{N,K}(u)
template <class S>
std::vector<Matrix<S>> gaudin_transfer_all(const Chain<S>& c, const Matrix<S>& K, const S& u) {
  auto p = gaudin_pencil(c, K, u);
  int N = c.N();
  std::vector<Matrix<S>> out;
  for (int k = 0; k <= N; ++k) out.push_back(k % 2 ? Matrix<S>(-p[N - k]) : p[N - k]);
  return out;
}

template <class S>
Matrix<S> gaudin_transfer(const Chain<S>& c, const Matrix<S>& K, int k, const S& u) {
  if (k < 0 || k > c.N()) fail(ErrorKind::InvalidRank, "k outside 0..N");
  return gaudin_transfer_all(c, K, u)[k];
}

// Both sides of A_N·𝒟_K = (∂ − K − L)^{(1)}…(∂ − K − L)^{(N)}·A_N on (C^N)^{⊗N} ⊗ H,
// coefficients indexed by the power of ∂.
template <class S>
std::pair<std::vector<Matrix<S>>, std::vector<Matrix<S>>> antisymmetrized_pencil_sides(const Chain<S>& c,
                                                                                     const Matrix<S>& K,
                                                                                     const S& u) {
  int N = c.N();
  std::size_t D = c.dim();
  std::size_t A = 1;
  for (int i = 0; i < N; ++i) A *= N;
  Matrix<S> anti = antisymmetrizer<S>(N, N);
  auto M = detail::current_jets(c, K, u, N + 1);
  DiffOp<Matrix<S>> R(1);
  for (int s = 0; s <= N; ++s) R[0].push_back(s == 0 ? kron(anti, Matrix<S>::identity(D)) : Matrix<S>(A * D, A * D));
  for (int i = N - 1; i >= 0; --i) {
    Jet<Matrix<S>> f(N + 1, Matrix<S>(A * D, A * D));
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        Matrix<S> e = place1(N, N, Matrix<S>::unit(N, a, b), i);
        for (int s = 0; s <= N; ++s) f[s] -= kron(e, M[a * N + b][s]);
      }
    R = detail::left_mul<S>(true, f, R);
  }
  auto pen = gaudin_pencil(c, K, u);
  std::vector<Matrix<S>> lhs, rhs;
  for (int p = 0; p <= N; ++p) {
    lhs.push_back(kron(anti, pen[p]));
    rhs.push_back(R[p].empty() ? Matrix<S>(A * D, A * D) : R[p][0]);
  }
  return {lhs, rhs};
}

struct GaudinProblem {
  int N = 2;
  std::vector<GlModule> modules;
  std::vector<Rational> z;
  std::vector<Rational> K;
  std::vector<int> xi;

  std::vector<GlWeight> lambdas() const {
    std::vector<GlWeight> l;
    for (const auto& m : modules) l.push_back(m.highest_weight());
    return l;
  }
  Matrix<Rational> twist() const {
    Matrix<Rational> m(N, N);
    for (int a = 0; a < N; ++a) m(a, a) = K[a];
    return m;
  }
};

namespace detail {

template <class S>
S pole_power(const S& u, const S& p, int s) {
  S d = u - p;
  if (is_zero(d)) fail(ErrorKind::PoleAtSample, "sample point hits a pole");
  // d^s/du^s (u − p)^{-1}
  S out = from_int<S>(static_cast<long>(factorial(s)));
  if (s % 2) out = -out;
  for (int i = 0; i <= s; ++i) out /= d;
  return out;
}

}  // namespace detail

// Coefficients Z_0..Z_N of ∏_a (∂ − K_a − Σ Λ^a_i/(u − z_i) − Σ_{t^{a−1}} 1/(u − t) + Σ_{t^a} 1/(u − t)).
template <class S>
std::vector<S> master_operator_coeffs(int N, const Roots<S>& t, const std::vector<S>& z,
                                      const std::vector<GlWeight>& lam, const std::vector<S>& K, const S& u) {
  DiffOp<S> R(1);
  R[0] = Jet<S>(N + 1, S(0));
  R[0][0] = S(1);
  for (int a = N - 1; a >= 0; --a) {
    Jet<S> f(N + 1, S(0));
    f[0] = -K[a];
    for (int s = 0; s <= N; ++s) {
      S acc(0);
      for (std::size_t i = 0; i < z.size(); ++i)
        if (lam[i][a]) acc += S(lam[i][a]) * detail::pole_power(u, z[i], s);
      if (a >= 1)
        for (const auto& y : t[a - 1]) acc += detail::pole_power(u, y, s);
      if (a < static_cast<int>(t.size()))
        for (const auto& y : t[a]) acc -= detail::pole_power(u, y, s);
      f[s] -= acc;
    }
    R = detail::left_mul<S>(true, f, R);
  }
  std::vector<S> out;
  for (int k = 0; k <= N; ++k) {
    S v = R[N - k].empty() ? S(0) : R[N - k][0];
    out.push_back(k % 2 ? S(-v) : v);
  }
  return out;
}

// 𝔽_ξ(t)·v from the symmetrized sum over arrays m_ab.
template <class S>
Vec<S> gaudin_weight_F_apply(const Chain<S>& c, const BetheConfig& cfg, const Roots<S>& t, const Vec<S>& v) {
  int N = c.N();
  check_root_shape(cfg, t);
  if (cfg.levels() != N - 1) fail(ErrorKind::MismatchedN, "ξ must have N−1 entries");
  if (cfg.total() == 0) return v;
  for (int a = 0; a < cfg.levels(); ++a) {
    for (int i = 0; i < cfg.xi[a]; ++i)
      for (int j = i + 1; j < cfg.xi[a]; ++j)
        if (is_zero(S(t[a][i] - t[a][j]))) fail(ErrorKind::CoincidentRoots, "roots coincide within a level");
    if (a + 1 < cfg.levels())
      for (const auto& x : t[a])
        for (const auto& y : t[a + 1])
          if (is_zero(S(x - y))) fail(ErrorKind::CoincidentRoots, "roots coincide across adjacent levels");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) pairs.push_back({a, b});
  // arrays m with Σ_{c≤a<b} m_cb = ξ^a
  std::vector<std::vector<int>> arrays;
  std::vector<int> m(pairs.size(), 0);
  std::function<void(std::size_t)> gen = [&](std::size_t idx) {
    if (idx == pairs.size()) {
      std::vector<int> used(cfg.levels(), 0);
      for (std::size_t p = 0; p < pairs.size(); ++p)
        for (int l = pairs[p].first; l < pairs[p].second; ++l) used[l] += m[p];
      if (used == cfg.xi) arrays.push_back(m);
      return;
    }
    int cap = cfg.total();
    for (int l = pairs[idx].first; l < pairs[idx].second; ++l) cap = std::min(cap, cfg.xi[l]);
    for (int x = 0; x <= cap; ++x) {
      m[idx] = x;
      gen(idx + 1);
    }
    m[idx] = 0;
  };
  gen(0);

  // all level-wise orderings of t
  std::vector<std::vector<std::vector<int>>> perms(cfg.levels());
  for (int a = 0; a < cfg.levels(); ++a)
    for (const auto& sp : signed_permutations(cfg.xi[a])) perms[a].push_back(sp.p);

  std::vector<OpGrid<S>> Lcache;
  std::vector<std::vector<std::size_t>> Lindex(cfg.levels());
  for (int a = 0; a < cfg.levels(); ++a)
    for (const auto& x : t[a]) {
      Lindex[a].push_back(Lcache.size());
      Lcache.push_back(c.gaudin_L(x, 0));
    }

  Vec<S> out(v.size(), S(0));
  std::vector<int> choice(cfg.levels(), 0);
  std::function<void(int)> over = [&](int a) {
    if (a < cfg.levels()) {
      for (std::size_t i = 0; i < perms[a].size(); ++i) {
        choice[a] = static_cast<int>(i);
        over(a + 1);
      }
      return;
    }
    auto var = [&](int level, int idx) { return perms[level][choice[level]][idx]; };
    for (const auto& arr : arrays) {
      S coef(1);
      std::vector<const Matrix<S>*> ops;
      std::vector<int> hat(cfg.levels(), 0);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [a0, b0] = pairs[p];
        int mm = arr[p];
        if (mm == 0) continue;
        coef /= from_int<S>(static_cast<long>(factorial(mm)));
        for (int i = 0; i < mm; ++i) {
          ops.push_back(&Lcache[Lindex[a0][var(a0, hat[a0] + i)]][a0 * N + b0]);
          for (int cc = a0; cc + 1 < b0; ++cc)
            coef /= t[cc + 1][var(cc + 1, hat[cc + 1] + i)] - t[cc][var(cc, hat[cc] + i)];
        }
        for (int l = a0; l < b0; ++l) hat[l] += mm;
      }
      Vec<S> w = v;
      for (auto it = ops.rbegin(); it != ops.rend(); ++it) w = (**it) * w;
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += coef * w[i];
    }
  };
  over(0);
  return out;
}

// N → N−1 recursion: 𝔽_ξ = Σ_a L_{1,a1+1}(t¹_1)…L_{1,ar+1}(t¹_r) (ψ̃(t¹)(𝔽_{ξ̄}(t̄)))^{a1…ar}.
template <class S>
Vec<S> gaudin_weight_F_recursive_apply(std::shared_ptr<const Chain<S>> c, const BetheConfig& cfg, const Roots<S>& t,
                                       const Vec<S>& v) {
  int N = c->N();
  check_root_shape(cfg, t);
  if (cfg.levels() != N - 1) fail(ErrorKind::MismatchedN, "ξ must have N−1 entries");
  if (cfg.total() == 0) return v;
  int r = cfg.xi[0];
  auto hybrid = std::make_shared<Chain<S>>(N - 1);
  GlModule w = vector_rep(N - 1);
  std::vector<Matrix<S>> wg;
  for (const auto& g : w.gens) wg.push_back(convert<S>(g));
  for (int i = 0; i < r; ++i) hybrid->add_generators(wg, t[0][i]);
  hybrid->add_parent(c);
  Vec<S> start = v;
  for (int i = 0; i < r; ++i) start = vec_kron(unit_vec<S>(N - 1, 0), start);
  BetheConfig bar{std::vector<int>(cfg.xi.begin() + 1, cfg.xi.end())};
  Roots<S> tbar(t.begin() + 1, t.end());
  Vec<S> y = gaudin_weight_F_recursive_apply<S>(hybrid, bar, tbar, start);

  std::size_t H = v.size();
  std::vector<OpGrid<S>> L;
  for (int i = 0; i < r; ++i) L.push_back(c->gaudin_L(t[0][i], 0));
  Vec<S> out(H, S(0));
  std::size_t comps = 1;
  for (int i = 0; i < r; ++i) comps *= (N - 1);
  for (std::size_t ci = 0; ci < comps; ++ci) {
    Vec<S> comp(y.begin() + ci * H, y.begin() + (ci + 1) * H);
    if (vec_is_zero(comp)) continue;
    auto a = tuple_of(ci, N - 1, r);
    for (int i = r - 1; i >= 0; --i) comp = L[i][a[i] + 1] * comp;
    out = out + comp;
  }
  return out;
}

template <class S>
Vec<S> gaudin_weight_function(const std::vector<GlModule>& mods, const std::vector<S>& z, const BetheConfig& cfg,
                              const Roots<S>& t) {
  auto c = Chain<S>::from_modules(mods, z);
  return gaudin_weight_F_apply(c, cfg, t, hw_vector<S>(mods));
}

template <class S>
Vec<S> gaudin_weight_function_recursive(const std::vector<GlModule>& mods, const std::vector<S>& z,
                                        const BetheConfig& cfg, const Roots<S>& t) {
  auto c = std::make_shared<const Chain<S>>(Chain<S>::from_modules(mods, z));
  return gaudin_weight_F_recursive_apply<S>(c, cfg, t, hw_vector<S>(mods));
}

// LHS − (K_{a+1} − K_a) of the Gaudin Bethe equations, in (level, index) order.
template <class S>
std::vector<S> gaudin_bae_residual(const GaudinProblem& p, const Roots<S>& t) {
  BetheConfig cfg{p.xi};
  check_root_shape(cfg, t);
  auto lam = p.lambdas();
  auto inv = [](const S& d) {
    if (is_zero(d)) fail(ErrorKind::CoincidentRoots, "a denominator of the Bethe equations vanishes");
    return S(S(1) / d);
  };
  std::vector<S> out;
  for (int a = 0; a < cfg.levels(); ++a)
    for (int i = 0; i < cfg.xi[a]; ++i) {
      const S& x = t[a][i];
      S lhs(0);
      for (std::size_t j = 0; j < p.z.size(); ++j) {
        int d = lam[j][a] - lam[j][a + 1];
        S inv_d = inv(S(x - from_rational<S>(p.z[j])));
        if (d) lhs += S(d) * inv_d;
      }
      if (a > 0)
        for (const auto& y : t[a - 1]) lhs += inv(S(x - y));
      for (int j = 0; j < cfg.xi[a]; ++j)
        if (j != i) lhs -= S(2) * inv(S(x - t[a][j]));
      if (a + 1 < cfg.levels())
        for (const auto& y : t[a + 1]) lhs += inv(S(x - y));
      out.push_back(lhs - from_rational<S>(p.K[a + 1] - p.K[a]));
    }
  return out;
}

struct GaudinHamiltonians {
  std::vector<Matrix<Rational>> H;  // H_{i,K}(z), one per site
  std::vector<Matrix<Rational>> G;  // rational dynamical G_{a,K}(z)
};

// Sites must be evaluation modules; G needs pairwise distinct K entries.
GaudinHamiltonians gaudin_hamiltonians(const std::vector<GlModule>& mods, const std::vector<Rational>& z,
                                       const std::vector<Rational>& K);

// u⁰, u^{−1}, u^{−2} coefficients of Σ_k (−1)^k G_{k,K}(u) x^{N−k} / ∏(x − K_a).
DynamicalExpansion gaudin_dynamical_expansion(const std::vector<GlModule>& mods, const std::vector<Rational>& z,
                                              const std::vector<Rational>& K, const Rational& x,
                                              std::uint64_t seed = 1);

struct GaudinEigenOptions {
  std::vector<Complex> u_samples;
  double offdiag_tol = 1e-8;
  double residual_tol = 1e-8;
};

// G_{k,K}(u)·𝔽 = Z_k(u)·𝔽 for all k, spectrum membership, weight, and
// singularity when K = 0.
CheckList verify_gaudin_eigenpair(const GaudinProblem& p, const Roots<Complex>& t, const GaudinEigenOptions& opt);

}  // namespace bethe
