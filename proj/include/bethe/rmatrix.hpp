#pragma once

#include <vector>

#include "bethe/combinatorics.hpp"
#include "bethe/error.hpp"
#include "bethe/reps.hpp"
#include "bethe/tensor.hpp"

namespace bethe {

// Operator on V^{⊗m} acting as `op` (on V⊗V) in the aux slots (i, j).
template <class S>
Matrix<S> place2(int N, int m, const Matrix<S>& op, int i, int j) {
  std::vector<std::size_t> dims(m, N);
  return embed(op, dims, {static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
}

template <class S>
Matrix<S> place1(int N, int m, const Matrix<S>& op, int i) {
  std::vector<std::size_t> dims(m, N);
  return embed(op, dims, {static_cast<std::size_t>(i)});
}

template <class S>
Matrix<S> flip(int N) {
  Matrix<S> p(N * N, N * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) p(b * N + a, a * N + b) = S(1);
  return p;
}

// R(u) = u + P
template <class S>
Matrix<S> rational_R(int N, const S& u) {
  return Matrix<S>::scalar(N * N, u) + flip<S>(N);
}

// Permutation of tensor factors: v_{i_1}⊗…⊗v_{i_k} ↦ v_{i_{p^{-1}(1)}}⊗…, so
// the factor in slot s lands in slot p[s].
template <class S>
Matrix<S> slot_permutation(int N, const std::vector<int>& p) {
  int k = static_cast<int>(p.size());
  std::size_t full = 1;
  for (int i = 0; i < k; ++i) full *= N;
  Matrix<S> m(full, full);
  std::vector<int> out(k);
  for (std::size_t idx = 0; idx < full; ++idx) {
    auto t = tuple_of(idx, N, k);
    for (int s = 0; s < k; ++s) out[p[s]] = t[s];
    m(tuple_index(out, N), idx) = S(1);
  }
  return m;
}

// A^(k) = (1/k!) Σ sgn σ · σ
template <class S>
Matrix<S> antisymmetrizer(int N, int k) {
  std::size_t full = 1;
  for (int i = 0; i < k; ++i) full *= N;
  Matrix<S> a(full, full);
  for (const auto& sp : signed_permutations(k)) a.axpy(S(sp.sign), slot_permutation<S>(N, sp.p));
  a *= S(1) / S(factorial(k));
  return a;
}

// Restriction of X (on V^{⊗k}) to a subspace with inclusion ι and projection π,
// after checking that the subspace is invariant.
template <class S>
Matrix<S> restrict_to(const Matrix<S>& x, const Matrix<S>& inc, const Matrix<S>& proj) {
  Matrix<S> xi = x * inc;
  Matrix<S> r = proj * xi;
  Matrix<S> back = inc * r;
  if constexpr (ScalarTraits<S>::exact) {
    if (xi != back) fail(ErrorKind::NotInvariant, "operator does not preserve the wedge subspace");
  } else {
    if ((xi - back).max_abs() > 1e-9 * std::max(1.0, xi.max_abs()))
      fail(ErrorKind::NotInvariant, "operator does not preserve the wedge subspace");
  }
  return r;
}

// ←∏_{i=k..1} →∏_{j=1..l} R^{(i, j+k)}(u + i − j − k + l), restricted to ∧k ⊗ ∧l.
template <class S>
Matrix<S> fused_R_full(int N, int k, int l, const S& u) {
  int m = k + l;
  std::size_t full = 1;
  for (int i = 0; i < m; ++i) full *= N;
  Matrix<S> prod = Matrix<S>::identity(full);
  for (int i = k; i >= 1; --i)
    for (int j = 1; j <= l; ++j) {
      S arg = u + S(i - j - k + l);
      prod = prod * place2(N, m, rational_R<S>(N, arg), i - 1, j + k - 1);
    }
  return prod;
}

template <class S>
Matrix<S> fused_R(int N, int k, int l, const S& u) {
  if (k < 1 || l < 1 || k > N || l > N) fail(ErrorKind::InvalidRank, "fused_R needs 1 <= k,l <= N");
  Matrix<S> inc = kron(wedge_inclusion<S>(N, k), wedge_inclusion<S>(N, l));
  Matrix<S> proj = kron(wedge_projection<S>(N, k), wedge_projection<S>(N, l));
  return restrict_to(fused_R_full(N, k, l, u), inc, proj);
}

enum class WedgeSide { WedgeFirst, WedgeSecond };

// R_{∧k,∧1}(u) = u + Σ (E¹+…+E^k)_ab|∧k ⊗ E_ba, and
// R_{∧1,∧k}(u) = u + k − 1 + Σ E_ab ⊗ (E¹+…+E^k)_ba|∧k.
template <class S>
Matrix<S> reduced_fused_R(int N, int k, WedgeSide side, const S& u) {
  if (k < 1 || k > N) fail(ErrorKind::InvalidRank, "reduced_fused_R needs 1 <= k <= N");
  GlModule w = wedge_rep(N, k);
  std::size_t d = w.dim;
  Matrix<S> out;
  if (side == WedgeSide::WedgeFirst) {
    out = Matrix<S>::scalar(d * N, u);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) out += kron(convert<S>(w.e(a, b)), Matrix<S>::unit(N, b, a));
  } else {
    out = Matrix<S>::scalar(d * N, u + S(k - 1));
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) out += kron(Matrix<S>::unit(N, a, b), convert<S>(w.e(b, a)));
  }
  return out;
}

// X^{(21)} for X on A⊗B with dims (da, db): the same operator acting on B⊗A.
template <class S>
Matrix<S> swap_factors(const Matrix<S>& x, std::size_t da, std::size_t db) {
  Matrix<S> p = factor_permutation<S>({da, db}, {1, 0});
  return p * x * p.transpose();
}

// Q^{∧k}: entries are the k×k minors det Q[I, J] in the sorted wedge basis.
template <class S>
Matrix<S> wedge_power(const Matrix<S>& q, int k) {
  int N = static_cast<int>(q.rows());
  auto subs = subsets(N, k);
  auto perms = signed_permutations(k);
  Matrix<S> out(subs.size(), subs.size());
  for (std::size_t I = 0; I < subs.size(); ++I)
    for (std::size_t J = 0; J < subs.size(); ++J) {
      S acc(0);
      for (const auto& sp : perms) {
        S term(sp.sign);
        for (int r = 0; r < k && !is_zero(term); ++r) term *= q(subs[I][r], subs[J][sp.p[r]]);
        acc += term;
      }
      out(I, J) = acc;
    }
  return out;
}

// →∏_{1≤i<j≤k} R^{ij}(i − j), or the reversed order.
template <class S>
Matrix<S> ordered_R_product(int N, int k, bool reversed) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) pairs.push_back({i, j});
  if (reversed) std::reverse(pairs.begin(), pairs.end());
  std::size_t full = 1;
  for (int i = 0; i < k; ++i) full *= N;
  Matrix<S> prod = Matrix<S>::identity(full);
  for (auto [i, j] : pairs) prod = prod * place2(N, k, rational_R<S>(N, S(i - j)), i - 1, j - 1);
  return prod;
}

// (−1)^k ∏_{j=1..k} (−j)^{k−j+1}
inline Rational rra_scalar(int k) {
  Rational s = k % 2 ? -1 : 1;
  for (int j = 1; j <= k; ++j)
    for (int e = 0; e < k - j + 1; ++e) s *= -j;
  return s;
}

}  // namespace bethe
