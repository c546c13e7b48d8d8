#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "bethe/error.hpp"
#include "bethe/poly.hpp"
#include "bethe/reps.hpp"
#include "bethe/rmatrix.hpp"
#include "bethe/tensor.hpp"

namespace bethe {

// N×N array of operators on the chain space, row-major: g[a*N+b].
template <class S>
using OpGrid = std::vector<Matrix<S>>;

// A tensor product of evaluation modules M_1(z_1)⊗…⊗M_n(z_n). A site may
// also be a whole gl_{N+1} chain seen through the embedding
// T_cd ↦ T_{c+1,d+1}; the Bethe vector recursions need those hybrids.
template <class S>
class Chain {
 public:
  struct Site {
    std::vector<Matrix<S>> gens;  // e_ab of an evaluation site
    S z{};
    std::shared_ptr<const Chain<S>> parent;
    std::size_t dim = 0;
  };

  Chain() = default;
  explicit Chain(int N) : N_(N) {}

  static Chain from_modules(const std::vector<GlModule>& mods, const std::vector<S>& z) {
    if (mods.size() != z.size()) fail(ErrorKind::SchemaError, "one evaluation point per module required");
    int N = mods.empty() ? 1 : mods[0].N;
    Chain c(N);
    for (std::size_t i = 0; i < mods.size(); ++i) c.add_site(mods[i], z[i]);
    return c;
  }

  void add_site(const GlModule& m, const S& z) {
    if (m.N != N_) fail(ErrorKind::MismatchedN, "module N differs from chain N");
    Site s;
    for (const auto& g : m.gens) s.gens.push_back(convert<S>(g));
    s.z = z;
    s.dim = static_cast<std::size_t>(m.dim);
    sites_.push_back(std::move(s));
  }
  void add_generators(const std::vector<Matrix<S>>& gens, const S& z) {
    Site s;
    s.gens = gens;
    s.z = z;
    s.dim = gens.at(0).rows();
    sites_.push_back(std::move(s));
  }
  void add_parent(std::shared_ptr<const Chain<S>> parent) {
    if (parent->N() != N_ + 1) fail(ErrorKind::MismatchedN, "embedded chain must have rank N+1");
    Site s;
    s.dim = parent->dim();
    s.parent = std::move(parent);
    sites_.push_back(std::move(s));
  }

  int N() const { return N_; }
  std::size_t size() const { return sites_.size(); }
  const Site& site(std::size_t i) const { return sites_[i]; }
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& s : sites_) d.push_back(s.dim);
    return d;
  }
  std::size_t dim() const { return dims_product(dims()); }
  std::vector<S> points() const {
    std::vector<S> z;
    for (const auto& s : sites_)
      if (!s.parent) z.push_back(s.z);
    return z;
  }

  // Single-site auxiliary matrix T^{[i]}_cd(u) = δ_cd + e_dc/(u − z_i).
  OpGrid<S> local_T(std::size_t i, const S& u) const {
    const Site& s = sites_[i];
    OpGrid<S> g;
    if (s.parent) {
      OpGrid<S> p = s.parent->monodromy(u);
      int M = N_ + 1;
      for (int c = 0; c < N_; ++c)
        for (int d = 0; d < N_; ++d) g.push_back(p[(c + 1) * M + d + 1]);
      return g;
    }
    S du = u - s.z;
    if (is_zero(du)) fail(ErrorKind::PoleAtEvaluationPoint, "u coincides with an evaluation point");
    S inv = S(1) / du;
    for (int c = 0; c < N_; ++c)
      for (int d = 0; d < N_; ++d) {
        Matrix<S> m = s.gens[d * N_ + c] * inv;
        if (c == d) m += Matrix<S>::identity(s.dim);
        g.push_back(std::move(m));
      }
    return g;
  }

  // T(u) = T^{[n]}(u)…T^{[1]}(u); site 1 is the most significant tensor factor.
  OpGrid<S> monodromy(const S& u) const {
    OpGrid<S> cur;
    for (int a = 0; a < N_; ++a)
      for (int b = 0; b < N_; ++b) cur.push_back(Matrix<S>::scalar(1, S(a == b ? 1 : 0)));
    for (std::size_t i = 0; i < sites_.size(); ++i) {
      OpGrid<S> loc = local_T(i, u);
      OpGrid<S> next;
      for (int a = 0; a < N_; ++a)
        for (int b = 0; b < N_; ++b) {
          std::size_t d = cur[0].rows() * loc[0].rows();
          Matrix<S> acc(d, d);
          for (int c = 0; c < N_; ++c) {
            const auto& p = cur[c * N_ + b];
            const auto& l = loc[a * N_ + c];
            if (p.is_zero() || l.is_zero()) continue;
            acc += kron(p, l);
          }
          next.push_back(std::move(acc));
        }
      cur = std::move(next);
    }
    return cur;
  }

  // s-th u-derivative of L_ab(u) = Σ_i e_ba^{(i)}/(u − z_i).
  OpGrid<S> gaudin_L(const S& u, int s = 0) const {
    std::size_t D = dim();
    auto dd = dims();
    OpGrid<S> out(static_cast<std::size_t>(N_ * N_), Matrix<S>(D, D));
    for (std::size_t i = 0; i < sites_.size(); ++i) {
      const Site& site = sites_[i];
      if (site.parent) {
        OpGrid<S> p = site.parent->gaudin_L(u, s);
        int M = N_ + 1;
        for (int a = 0; a < N_; ++a)
          for (int b = 0; b < N_; ++b) out[a * N_ + b] += embed(p[(a + 1) * M + b + 1], dd, {i});
        continue;
      }
      S du = u - site.z;
      if (is_zero(du)) fail(ErrorKind::PoleAtEvaluationPoint, "u coincides with an evaluation point");
      S c = S(s % 2 ? -1 : 1) * S(factorial(s));
      S p = S(1);
      for (int k = 0; k <= s; ++k) p *= du;
      c /= p;
      for (int a = 0; a < N_; ++a)
        for (int b = 0; b < N_; ++b) {
          const auto& g = site.gens[b * N_ + a];
          if (g.is_zero()) continue;
          out[a * N_ + b] += embed(Matrix<S>(g * c), dd, {i});
        }
    }
    return out;
  }

  // Total action of e_ab on the chain.
  Matrix<S> generator(int a, int b) const {
    std::size_t D = dim();
    auto dd = dims();
    Matrix<S> out(D, D);
    for (std::size_t i = 0; i < sites_.size(); ++i) {
      const Site& s = sites_[i];
      Matrix<S> g = s.parent ? s.parent->generator(a + 1, b + 1) : s.gens[a * N_ + b];
      out += embed(g, dd, {i});
    }
    return out;
  }

  // e_ab acting on site i alone.
  Matrix<S> site_generator(std::size_t i, int a, int b) const {
    const Site& s = sites_[i];
    Matrix<S> g = s.parent ? s.parent->generator(a + 1, b + 1) : s.gens[a * N_ + b];
    return embed(g, dims(), {i});
  }

 private:
  int N_ = 1;
  std::vector<Site> sites_;
};

template <class S>
Matrix<S> chain_T_entry(const Chain<S>& c, int a, int b, const S& u) {
  return c.monodromy(u)[a * c.N() + b];
}

// Entries of T^{∧k}(u) on the sorted wedge basis:
// (T^{∧k})_{I,J} = Σ_σ sgn σ T_{i_k j_σ(k)}(u) T_{i_{k−1} j_σ(k−1)}(u−1)…T_{i_1 j_σ(1)}(u−k+1).
template <class S>
std::vector<Matrix<S>> chain_T_wedge(const Chain<S>& c, int k, const S& u) {
  int N = c.N();
  if (k < 1 || k > N) fail(ErrorKind::InvalidRank, "wedge rank out of range");
  std::vector<OpGrid<S>> T;
  for (int s = 0; s < k; ++s) T.push_back(c.monodromy(u - S(s)));
  auto subs = subsets(N, k);
  auto perms = signed_permutations(k);
  std::size_t D = c.dim();
  std::vector<Matrix<S>> out;
  for (const auto& I : subs)
    for (const auto& J : subs) {
      Matrix<S> acc(D, D);
      for (const auto& sp : perms) {
        Matrix<S> term = T[0][I[k - 1] * N + J[sp.p[k - 1]]];
        for (int r = k - 2; r >= 0 && !term.is_zero(); --r) term = term * T[k - 1 - r][I[r] * N + J[sp.p[r]]];
        if (!term.is_zero()) acc.axpy(S(sp.sign), term);
      }
      out.push_back(std::move(acc));
    }
  return out;
}

// Auxiliary-slot operator Σ E_ab^{(slot)} ⊗ T_ab(u) on V^{⊗m} ⊗ H.
template <class S>
Matrix<S> aux_T(const Chain<S>& c, int m, int slot, const S& u) {
  int N = c.N();
  OpGrid<S> t = c.monodromy(u);
  std::size_t full = 1;
  for (int i = 0; i < m; ++i) full *= N;
  std::size_t D = c.dim();
  Matrix<S> out(full * D, full * D);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      if (t[a * N + b].is_zero()) continue;
      out += kron(place1(N, m, Matrix<S>::unit(N, a, b), slot), t[a * N + b]);
    }
  return out;
}

template <class S>
Matrix<S> aux_const(const Matrix<S>& aux_op, std::size_t hdim) {
  return kron(aux_op, Matrix<S>::identity(hdim));
}

// T^{(k,k+1)}(u)…T^{(1,k+1)}(u−k+1) on V^{⊗k}⊗H, restricted to ∧k⊗H after the
// invariance check.
template <class S>
Matrix<S> chain_T_wedge_checked(const Chain<S>& c, int k, const S& u) {
  int N = c.N();
  std::size_t D = c.dim();
  std::size_t full = 1;
  for (int i = 0; i < k; ++i) full *= N;
  Matrix<S> prod = Matrix<S>::identity(full * D);
  for (int s = k; s >= 1; --s) prod = prod * aux_T(c, k, s - 1, S(u - S(k - s)));
  Matrix<S> inc = kron(wedge_inclusion<S>(N, k), Matrix<S>::identity(D));
  Matrix<S> proj = kron(wedge_projection<S>(N, k), Matrix<S>::identity(D));
  return restrict_to(prod, inc, proj);
}

// Entry grid of an operator on A ⊗ H (A of dimension aux) as aux×aux blocks.
template <class S>
std::vector<Matrix<S>> blocks_of(const Matrix<S>& x, std::size_t aux) {
  std::size_t h = x.rows() / aux;
  std::vector<Matrix<S>> out;
  for (std::size_t i = 0; i < aux; ++i)
    for (std::size_t j = 0; j < aux; ++j) out.push_back(x.block(i * h, j * h, h, h));
  return out;
}

// T_{k,Q}(u) = tr_{∧k}(Q^{∧k} T^{∧k}(u)).
template <class S>
Matrix<S> transfer_matrix(const Chain<S>& c, const Matrix<S>& q, int k, const S& u) {
  int N = c.N();
  if (k < 0 || k > N) fail(ErrorKind::InvalidRank, "transfer matrix rank out of range");
  std::size_t D = c.dim();
  if (k == 0) return Matrix<S>::identity(D);
  Matrix<S> qw = wedge_power(q, k);
  auto tw = chain_T_wedge(c, k, u);
  std::size_t W = qw.rows();
  Matrix<S> out(D, D);
  for (std::size_t I = 0; I < W; ++I)
    for (std::size_t J = 0; J < W; ++J)
      if (!is_zero(qw(I, J))) out.axpy(qw(I, J), tw[J * W + I]);
  return out;
}

enum class QdetForm { Rows, Columns, Wedge };

// Rows: Σ_τ sgn τ T_{1,τ1}(u)…T_{N,τN}(u−N+1).
// Columns: Σ_τ sgn τ T_{τN,N}(u−N+1)…T_{τ1,1}(u).
// Wedge: the 1×1 block T^{∧N}(u).
template <class S>
Matrix<S> qdet(const Chain<S>& c, const S& u, QdetForm form = QdetForm::Rows) {
  int N = c.N();
  if (form == QdetForm::Wedge) return chain_T_wedge(c, N, u)[0];
  std::vector<OpGrid<S>> T;
  for (int s = 0; s < N; ++s) T.push_back(c.monodromy(u - S(s)));
  std::size_t D = c.dim();
  Matrix<S> acc(D, D);
  for (const auto& sp : signed_permutations(N)) {
    Matrix<S> term;
    if (form == QdetForm::Rows) {
      term = T[0][0 * N + sp.p[0]];
      for (int r = 1; r < N; ++r) term = term * T[r][r * N + sp.p[r]];
    } else {
      term = T[N - 1][sp.p[N - 1] * N + N - 1];
      for (int r = N - 2; r >= 0; --r) term = term * T[r][sp.p[r] * N + r];
    }
    acc.axpy(S(sp.sign), term);
  }
  return acc;
}

// ∏_i ∏_a (u − a + 1 − z_i + Λ^a_i)/(u − a + 1 − z_i)
template <class S>
S qdet_highest_weight_value(const std::vector<GlWeight>& lambdas, const std::vector<S>& z, const S& u) {
  S v(1);
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (std::size_t a = 0; a < lambdas[i].size(); ++a) {
      S base = u - S(static_cast<long>(a)) - z[i];
      v *= (base + S(lambdas[i][a])) / base;
    }
  return v;
}

// S_k = (1/(N−k)!) Σ_l (−1)^{k−l} ((N−l)!/(k−l)!) T_l
template <class S>
Matrix<S> modified_transfer(const Chain<S>& c, const Matrix<S>& q, int k, const S& u) {
  int N = c.N();
  std::size_t D = c.dim();
  Matrix<S> acc(D, D);
  for (int l = 0; l <= k; ++l) {
    Rational coef = rat((k - l) % 2 ? -1 : 1) * rat(factorial(N - l), factorial(k - l) * factorial(N - k));
    acc.axpy(from_rational<S>(coef), transfer_matrix(c, q, l, u));
  }
  return acc;
}

// Coefficients of e^{−k∂} in 𝔇_{N,Q}: (−1)^k T_{k,Q}(u).
template <class S>
std::vector<Matrix<S>> difference_operator(const Chain<S>& c, const Matrix<S>& q, const S& u) {
  std::vector<Matrix<S>> out;
  for (int k = 0; k <= c.N(); ++k) {
    Matrix<S> t = transfer_matrix(c, q, k, u);
    if (k % 2) t = -t;
    out.push_back(std::move(t));
  }
  return out;
}

// Σ over distinct ordered slots i_1..i_k of tr_{V^{⊗m}}(Q^{i1}…Q^{ik} T^{i1}(u)…T^{ik}(u−k+1) A^(m)),
// built on the full auxiliary space.
template <class S>
Matrix<S> trace_formula_term(const Chain<S>& c, const Matrix<S>& q, int m, const std::vector<int>& slots,
                             const S& u) {
  int N = c.N();
  std::size_t D = c.dim();
  std::size_t full = 1;
  for (int i = 0; i < m; ++i) full *= N;
  Matrix<S> x = Matrix<S>::identity(full * D);
  for (int s : slots) x = x * aux_const(place1(N, m, q, s), D);
  for (std::size_t r = 0; r < slots.size(); ++r) x = x * aux_T(c, m, slots[r], S(u - S(static_cast<long>(r))));
  x = x * aux_const(antisymmetrizer<S>(N, m), D);
  return trace_leading(x, full);
}

// Σ_{i1<…<ik} Q^{i1}T^{i1}(u)…Q^{ik}T^{ik}(u−k+1) · A^(m) on V^{⊗m}⊗H, and its partial trace.
template <class S>
Matrix<S> ordered_pencil_term(const Chain<S>& c, const Matrix<S>& q, int m, int k, const S& u) {
  int N = c.N();
  std::size_t D = c.dim();
  std::size_t full = 1;
  for (int i = 0; i < m; ++i) full *= N;
  Matrix<S> acc(full * D, full * D);
  for (const auto& sub : subsets(m, k)) {
    Matrix<S> x = Matrix<S>::identity(full * D);
    for (int r = 0; r < k; ++r)
      x = x * aux_const(place1(N, m, q, sub[r]), D) * aux_T(c, m, sub[r], S(u - S(r)));
    acc += x * aux_const(antisymmetrizer<S>(N, m), D);
  }
  return acc;
}

// Checks that f, a rational function whose numerator (after clearing the
// declared denominator) has degree ≤ degree_bound, vanishes identically:
// zero at degree_bound + 1 distinct sample points.
template <class Fn>
bool vanishes_identically(Fn f, int degree_bound, std::uint64_t seed, const std::vector<Rational>& poles) {
  auto pts = sample_points(seed, degree_bound + 1, poles);
  for (const auto& p : pts)
    if (!f(p)) return false;
  return true;
}

struct DynamicalExpansion {
  Matrix<Rational> order0, order1, order2;
};

// Trigonometric dynamical Hamiltonians X_{a,K}(z), one per a; K entries distinct.
std::vector<Matrix<Rational>> trig_dynamical_hamiltonians(const std::vector<GlModule>& mods,
                                                          const std::vector<Rational>& z, const std::vector<Rational>& K);

// u⁰, u^{−1}, u^{−2} coefficients of Σ_k (−1)^k T_{k,K}(u) x^{N−k} / ∏(x − K_a).
DynamicalExpansion xxx_dynamical_expansion(const std::vector<GlModule>& mods, const std::vector<Rational>& z,
                                           const std::vector<Rational>& K, const Rational& x, std::uint64_t seed = 1);

}  // namespace bethe
