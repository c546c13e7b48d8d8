#pragma once

#include <vector>

#include "bethe/error.hpp"
#include "bethe/matrix.hpp"

namespace bethe {

namespace detail {

// Exact domains pivot on the first nonzero entry; floating ones on the
// largest entry above a relative threshold.
template <class S>
long choose_pivot(const Matrix<S>& a, std::size_t col, std::size_t from, double tol) {
  if constexpr (ScalarTraits<S>::exact) {
    (void)tol;
    for (std::size_t i = from; i < a.rows(); ++i)
      if (!is_zero(a(i, col))) return static_cast<long>(i);
    return -1;
  } else {
    long best = -1;
    double bm = tol;
    for (std::size_t i = from; i < a.rows(); ++i) {
      double m = magnitude(a(i, col));
      if (m > bm) {
        bm = m;
        best = static_cast<long>(i);
      }
    }
    return best;
  }
}

template <class S>
void swap_rows(Matrix<S>& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

}  // namespace detail

template <class S>
struct Echelon {
  Matrix<S> reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form.
template <class S>
Echelon<S> rref(Matrix<S> a, double rel_tol = 1e-11) {
  double tol = rel_tol * std::max(1.0, a.max_abs());
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    long p = detail::choose_pivot(a, col, row, tol);
    if (p < 0) continue;
    detail::swap_rows(a, row, static_cast<std::size_t>(p));
    S inv = S(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c)
      if (!is_zero(a(row, c))) a(row, c) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      S f = a(i, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!is_zero(a(row, c))) a(i, c) -= f * a(row, c);
      if constexpr (!ScalarTraits<S>::exact) a(i, col) = S(0);
    }
    piv.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(piv)};
}

template <class S>
std::size_t rank(const Matrix<S>& a) {
  return rref(a).pivots.size();
}

template <class S>
std::vector<Vec<S>> nullspace(const Matrix<S>& a) {
  auto e = rref(a);
  std::vector<bool> is_piv(a.cols(), false);
  for (auto p : e.pivots) is_piv[p] = true;
  std::vector<Vec<S>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec<S> v(a.cols(), S(0));
    v[f] = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve A X = B for square nonsingular A.
template <class S>
Matrix<S> solve(const Matrix<S>& a, const Matrix<S>& b) {
  if (!a.square() || a.rows() != b.rows()) fail(ErrorKind::Singular, "solve: shape mismatch");
  std::size_t n = a.rows();
  Matrix<S> aug(n, n + b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  auto e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) fail(ErrorKind::Singular, "solve: singular matrix");
  return e.reduced.block(0, n, n, b.cols());
}

template <class S>
Vec<S> solve(const Matrix<S>& a, const Vec<S>& b) {
  return solve(a, Matrix<S>::column(b)).col(0);
}

template <class S>
Matrix<S> inverse(const Matrix<S>& a) {
  return solve(a, Matrix<S>::identity(a.rows()));
}

template <class S>
S determinant(Matrix<S> a) {
  std::size_t n = a.rows();
  S det(1);
  double tol = 1e-14 * std::max(1.0, a.max_abs());
  for (std::size_t col = 0; col < n; ++col) {
    long p = detail::choose_pivot(a, col, col, tol);
    if (p < 0) return S(0);
    if (static_cast<std::size_t>(p) != col) {
      detail::swap_rows(a, col, static_cast<std::size_t>(p));
      det = -det;
    }
    det *= a(col, col);
    S inv = S(1) / a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(a(i, col))) continue;
      S f = a(i, col) * inv;
      for (std::size_t c = col; c < n; ++c)
        if (!is_zero(a(col, c))) a(i, c) -= f * a(col, c);
    }
  }
  return det;
}

// Leading principal minors Δ_1..Δ_n.
template <class S>
std::vector<S> leading_minors(const Matrix<S>& a) {
  std::vector<S> out;
  for (std::size_t k = 1; k <= a.rows(); ++k) out.push_back(determinant(a.block(0, 0, k, k)));
  return out;
}

// Is v in the column span of `basis`?
template <class S>
bool in_span(const std::vector<Vec<S>>& basis, const Vec<S>& v) {
  if (basis.empty()) return vec_is_zero(v);
  Matrix<S> m(v.size(), basis.size() + 1);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = basis[j][i];
  for (std::size_t i = 0; i < v.size(); ++i) m(i, basis.size()) = v[i];
  return rank(m) == rank(m.block(0, 0, v.size(), basis.size()));
}

}  // namespace bethe
