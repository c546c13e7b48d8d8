#pragma once

#include <Eigen/Eigenvalues>
#include <functional>
#include <memory>
#include <vector>

#include "bethe/report.hpp"
#include "bethe/yangian.hpp"

namespace bethe {

template <class S>
using Roots = std::vector<std::vector<S>>;

// ξ = (ξ¹,…,ξ^{N−1}); levels are 0-based here.
struct BetheConfig {
  std::vector<int> xi;

  int levels() const { return static_cast<int>(xi.size()); }
  int at(int a) const { return a >= 0 && a < levels() ? xi[a] : 0; }
  int before(int a) const {
    int s = 0;
    for (int b = 0; b < a; ++b) s += xi[b];
    return s;
  }
  int total() const { return before(levels()); }
};

// Chain data, diagonal twist and configuration for the XXX-type model.
struct BetheProblem {
  int N = 2;
  std::vector<GlModule> modules;
  std::vector<Rational> z;
  std::vector<Rational> q;
  std::vector<int> xi;

  std::vector<GlWeight> lambdas() const {
    std::vector<GlWeight> l;
    for (const auto& m : modules) l.push_back(m.highest_weight());
    return l;
  }
  Matrix<Rational> twist() const {
    Matrix<Rational> m(N, N);
    for (int a = 0; a < N; ++a) m(a, a) = q[a];
    return m;
  }
};

template <class S>
void check_root_shape(const BetheConfig& cfg, const Roots<S>& t) {
  if (static_cast<int>(t.size()) != cfg.levels()) fail(ErrorKind::SchemaError, "roots have the wrong number of levels");
  for (int a = 0; a < cfg.levels(); ++a)
    if (static_cast<int>(t[a].size()) != cfg.xi[a]) fail(ErrorKind::SchemaError, "root count differs from ξ");
}

// All within-level and adjacent-level separations exceed tol (exactly nonzero
// for rationals).
template <class S>
bool classify_offdiagonal(const Roots<S>& t, double tol = 1e-8) {
  auto apart = [&](const S& x, const S& y) {
    if constexpr (ScalarTraits<S>::exact)
      return !is_zero(S(x - y));
    else
      return magnitude(S(x - y)) > tol;
  };
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t i = 0; i < t[a].size(); ++i)
      for (std::size_t j = i + 1; j < t[a].size(); ++j)
        if (!apart(t[a][i], t[a][j])) return false;
    if (a + 1 < t.size())
      for (const auto& x : t[a])
        for (const auto& y : t[a + 1])
          if (!apart(x, y)) return false;
  }
  return true;
}

namespace detail {

// v ↦ x·v + P^{(p,q)} v on V^{⊗m}
template <class S>
Vec<S> apply_R_slots(const Vec<S>& v, int N, int m, int p, int q, const S& x) {
  Vec<S> out(v.size(), S(0));
  std::vector<int> t;
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (is_zero(v[idx])) continue;
    out[idx] += x * v[idx];
    t = tuple_of(idx, N, m);
    std::swap(t[p], t[q]);
    out[tuple_index(t, N)] += v[idx];
  }
  return out;
}

}  // namespace detail

// B̂_ξ(t)·v = Σ_{α,β} X_{β,α} T_{α1β1}(t_1)…T_{αmβm}(t_m) v with
// X = →∏_{(a,i)<(b,j)} R^{(ξ^{<b}+j, ξ^{<a}+i)}(t^b_j − t^a_i) · E_{21}^{⊗ξ¹}⊗…⊗E_{N,N−1}^{⊗ξ^{N−1}}.
template <class S>
Vec<S> bethe_hat_apply(const Chain<S>& c, const BetheConfig& cfg, const Roots<S>& t, const Vec<S>& v) {
  int N = c.N();
  check_root_shape(cfg, t);
  if (cfg.levels() != N - 1) fail(ErrorKind::MismatchedN, "ξ must have N−1 entries");
  int m = cfg.total();
  if (m == 0) return v;
  struct SlotInfo {
    int level, idx;
  };
  std::vector<SlotInfo> slots;
  std::vector<S> flat;
  for (int a = 0; a < cfg.levels(); ++a)
    for (int i = 0; i < cfg.xi[a]; ++i) {
      slots.push_back({a, i});
      flat.push_back(t[a][i]);
    }
  // column γ0 of the R-product: slot p of level a carries v_{a+1} (0-based a+1)
  std::vector<int> gamma(m), alpha(m);
  for (int p = 0; p < m; ++p) {
    gamma[p] = slots[p].level + 1;
    alpha[p] = slots[p].level;
  }
  std::size_t full = 1;
  for (int i = 0; i < m; ++i) full *= N;
  Vec<S> col(full, S(0));
  col[tuple_index(gamma, N)] = S(1);
  // pairs (P, Q) with P < Q in slot order; the ordered product is applied right to left
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) pairs.push_back({p, q});
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    auto [p, q] = *it;
    S x = flat[q] - flat[p];
    col = detail::apply_R_slots(col, N, m, q, p, x);
  }
  std::vector<OpGrid<S>> T;
  for (int p = 0; p < m; ++p) T.push_back(c.monodromy(flat[p]));
  Vec<S> out(v.size(), S(0));
  // β is indexed with slot 0 most significant; recurse from the last slot
  std::size_t stride = 1;
  std::vector<std::size_t> place(m);
  for (int p = m - 1; p >= 0; --p) {
    place[p] = stride;
    stride *= N;
  }
  std::function<void(int, std::size_t, const Vec<S>&)> rec = [&](int slot, std::size_t prefix, const Vec<S>& vec) {
    if (slot < 0) {
      const S& coef = col[prefix];
      if (is_zero(coef)) return;
      for (std::size_t i = 0; i < out.size(); ++i)
        if (!is_zero(vec[i])) out[i] += coef * vec[i];
      return;
    }
    for (int b = 0; b < N; ++b) {
      const Matrix<S>& op = T[slot][alpha[slot] * N + b];
      if (op.is_zero()) continue;
      Vec<S> next = op * vec;
      if (vec_is_zero(next)) continue;
      rec(slot - 1, prefix + static_cast<std::size_t>(b) * place[slot], next);
    }
  };
  rec(m - 1, 0, v);
  return out;
}

// ∏_a ∏_{i<j} (t^a_j − t^a_i + 1) · ∏_{a<b} ∏_{i,j} (t^b_j − t^a_i)
template <class S>
S bethe_normalizer(const BetheConfig& cfg, const Roots<S>& t) {
  S d(1);
  for (int a = 0; a < cfg.levels(); ++a) {
    for (int i = 0; i < cfg.xi[a]; ++i)
      for (int j = i + 1; j < cfg.xi[a]; ++j) d *= t[a][j] - t[a][i] + S(1);
    for (int b = a + 1; b < cfg.levels(); ++b)
      for (const auto& x : t[a])
        for (const auto& y : t[b]) d *= y - x;
  }
  return d;
}

template <class S>
Vec<S> bethe_vector_trace_apply(const Chain<S>& c, const BetheConfig& cfg, const Roots<S>& t, const Vec<S>& v) {
  S d = bethe_normalizer(cfg, t);
  if (is_zero(d)) fail(ErrorKind::CoincidentRoots, "a normalizing denominator vanishes");
  return bethe_hat_apply(c, cfg, t, v) * S(S(1) / d);
}

// N → N−1 recursion: B_ξ(t) = Σ_a T_{1,a1+1}(t¹_1)…T_{1,ar+1}(t¹_r) (ψ̃(t¹)(B_{ξ̄}(t̄)))^{a1…ar}.
template <class S>
Vec<S> bethe_vector_recursive_apply(std::shared_ptr<const Chain<S>> c, const BetheConfig& cfg, const Roots<S>& t,
                                    const Vec<S>& v) {
  int N = c->N();
  check_root_shape(cfg, t);
  if (cfg.levels() != N - 1) fail(ErrorKind::MismatchedN, "ξ must have N−1 entries");
  if (cfg.total() == 0) return v;
  int r = cfg.xi[0];
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (is_zero(S(t[0][j] - t[0][i] + S(1)))) fail(ErrorKind::CoincidentRoots, "a normalizing denominator vanishes");
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
  Vec<S> y = bethe_vector_recursive_apply<S>(hybrid, bar, tbar, start);

  std::size_t H = v.size();
  std::vector<OpGrid<S>> T;
  for (int i = 0; i < r; ++i) T.push_back(c->monodromy(t[0][i]));
  Vec<S> out(H, S(0));
  std::size_t comps = 1;
  for (int i = 0; i < r; ++i) comps *= (N - 1);
  for (std::size_t ci = 0; ci < comps; ++ci) {
    Vec<S> comp(y.begin() + ci * H, y.begin() + (ci + 1) * H);
    if (vec_is_zero(comp)) continue;
    auto a = tuple_of(ci, N - 1, r);
    for (int i = r - 1; i >= 0; --i) comp = T[i][0 * N + a[i] + 1] * comp;
    out = out + comp;
  }
  return out;
}

// ∏_a ∏_i ∏_j (t^a_i − z_j) · ∏_{a} ∏_{i,j} (t^{a+1}_j − t^a_i)
template <class S>
S weight_function_prefactor(const BetheConfig& cfg, const Roots<S>& t, const std::vector<S>& z) {
  S f(1);
  for (int a = 0; a < cfg.levels(); ++a) {
    for (const auto& x : t[a])
      for (const auto& zj : z) f *= x - zj;
    if (a + 1 < cfg.levels())
      for (const auto& x : t[a])
        for (const auto& y : t[a + 1]) f *= y - x;
  }
  return f;
}

template <class S>
Vec<S> hw_vector(const std::vector<GlModule>& mods) {
  return convert_vec<S>(tensor_hwv(mods));
}

// Universal weight function 𝔹^{v}_ξ(t; z) via the trace construction.
template <class S>
Vec<S> universal_weight_function(const std::vector<GlModule>& mods, const std::vector<S>& z, const BetheConfig& cfg,
                                 const Roots<S>& t) {
  auto c = Chain<S>::from_modules(mods, z);
  Vec<S> b = bethe_vector_trace_apply(c, cfg, t, hw_vector<S>(mods));
  return b * weight_function_prefactor(cfg, t, z);
}

template <class S>
Vec<S> universal_weight_function_recursive(const std::vector<GlModule>& mods, const std::vector<S>& z,
                                           const BetheConfig& cfg, const Roots<S>& t) {
  auto c = std::make_shared<const Chain<S>>(Chain<S>::from_modules(mods, z));
  Vec<S> b = bethe_vector_recursive_apply<S>(c, cfg, t, hw_vector<S>(mods));
  return b * weight_function_prefactor(cfg, t, z);
}

// LHS − RHS of the Bethe ansatz equations, in (level, index) order.
template <class S>
std::vector<S> bae_residual(const BetheProblem& p, const Roots<S>& t) {
  BetheConfig cfg{p.xi};
  check_root_shape(cfg, t);
  auto lam = p.lambdas();
  std::vector<S> out;
  for (int a = 0; a < cfg.levels(); ++a)
    for (int i = 0; i < cfg.xi[a]; ++i) {
      const S& x = t[a][i];
      S lhs = from_rational<S>(p.q[a]), rhs = from_rational<S>(p.q[a + 1]);
      for (std::size_t j = 0; j < p.z.size(); ++j) {
        S zj = from_rational<S>(p.z[j]);
        lhs *= x - zj + S(lam[j][a]);
        rhs *= x - zj + S(lam[j][a + 1]);
      }
      if (a > 0)
        for (const auto& y : t[a - 1]) {
          lhs *= x - y + S(1);
          rhs *= x - y;
        }
      for (int j = 0; j < cfg.xi[a]; ++j) {
        if (j == i) continue;
        lhs *= x - t[a][j] - S(1);
        rhs *= x - t[a][j] + S(1);
      }
      if (a + 1 < cfg.levels())
        for (const auto& y : t[a + 1]) {
          lhs *= x - y;
          rhs *= x - y - S(1);
        }
      out.push_back(lhs - rhs);
    }
  return out;
}

// X^a(u) for a = 0..N−1.
template <class S>
S eigenvalue_X(int a, const S& u, const Roots<S>& t, const std::vector<S>& z, const std::vector<GlWeight>& lam,
               const std::vector<S>& q) {
  S x = q[a];
  auto guard = [](const S& d) {
    if (is_zero(d)) fail(ErrorKind::PoleAtSample, "sample point hits a pole of the eigenvalue function");
    return d;
  };
  for (std::size_t i = 0; i < z.size(); ++i) {
    S d = guard(u - z[i]);
    x *= (d + S(lam[i][a])) / d;
  }
  if (a >= 1)
    for (const auto& y : t[a - 1]) {
      S d = guard(u - y);
      x *= (d + S(1)) / d;
    }
  if (a < static_cast<int>(t.size()))
    for (const auto& y : t[a]) {
      S d = guard(u - y);
      x *= (d - S(1)) / d;
    }
  return x;
}

// Coefficients of ∏_a (1 − X^a(u) e^{−∂}): k-th entry (−1)^k Σ_{a1<…<ak} ∏_r X^{a_r}(u − r + 1).
template <class S>
std::vector<S> fundamental_difference_operator(int N, const Roots<S>& t, const std::vector<S>& z,
                                               const std::vector<GlWeight>& lam, const std::vector<S>& q, const S& u) {
  // X[r][a] = X^a(u − r)
  std::vector<std::vector<S>> X(N, std::vector<S>(N));
  for (int r = 0; r < N; ++r)
    for (int a = 0; a < N; ++a) X[r][a] = eigenvalue_X(a, S(u - S(r)), t, z, lam, q);
  std::vector<S> out(N + 1, S(0));
  for (int k = 0; k <= N; ++k) {
    S acc(0);
    for (const auto& sub : subsets(N, k)) {
      S term(1);
      for (int r = 0; r < k; ++r) term *= X[r][sub[r]];
      acc += term;
    }
    out[k] = k % 2 ? S(-acc) : acc;
  }
  return out;
}

// Eigenvalue predicted for T_{k,Q}(u): Σ_{a1<…<ak} ∏ X^{a_r}(u − r + 1).
template <class S>
S predicted_eigenvalue(int k, int N, const Roots<S>& t, const std::vector<S>& z, const std::vector<GlWeight>& lam,
                       const std::vector<S>& q, const S& u) {
  auto c = fundamental_difference_operator(N, t, z, lam, q, u);
  return k % 2 ? S(-c[k]) : c[k];
}

// Eigenvalues of a complex matrix.
inline std::vector<Complex> dense_eigenvalues(const Matrix<Complex>& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(e, false);
  std::vector<Complex> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

struct EigenpairOptions {
  std::vector<Complex> u_samples;
  double tol = 1e-10;
  double offdiag_tol = 1e-8;
  double residual_tol = 1e-8;
};

// Checks T_{k,Q}(u)·𝔹 = λ_k(u)·𝔹 for all k and sampled u, the spectrum
// membership of λ_k(u), reality of eigenvalue samples when all data is real,
// weight, and singularity when Q = 1.
CheckList verify_eigenpair(const BetheProblem& p, const Roots<Complex>& t, const EigenpairOptions& opt);

std::vector<Complex> default_u_samples(int count, std::uint64_t seed);

}  // namespace bethe
