#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <vector>

#include "bethe/scalar.hpp"

namespace bethe {

template <class S>
using Vec = std::vector<S>;

// Dense row-major matrix. Products skip zero entries, which matters a lot for
// the sparse operators that show up on tensor chains.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  static Matrix scalar(std::size_t n, const S& s) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
  }
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = S(1);
    return m;
  }
  static Matrix column(const Vec<S>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  S& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
  const std::vector<S>& data() const { return d_; }
  std::vector<S>& data() { return d_; }

  Matrix& operator+=(const Matrix& o) {
    assert(r_ == o.r_ && c_ == o.c_);
    for (std::size_t i = 0; i < d_.size(); ++i)
      if (!bethe::is_zero(o.d_[i])) d_[i] += o.d_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    assert(r_ == o.r_ && c_ == o.c_);
    for (std::size_t i = 0; i < d_.size(); ++i)
      if (!bethe::is_zero(o.d_[i])) d_[i] -= o.d_[i];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& x : d_)
      if (!bethe::is_zero(x)) x *= s;
    return *this;
  }
  // this += s * o
  Matrix& axpy(const S& s, const Matrix& o) {
    assert(r_ == o.r_ && c_ == o.c_);
    if (bethe::is_zero(s)) return *this;
    for (std::size_t i = 0; i < d_.size(); ++i)
      if (!bethe::is_zero(o.d_[i])) d_[i] += s * o.d_[i];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.d_) x = -x;
    return a;
  }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.c_ == b.r_);
    Matrix out(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const S& x = a(i, k);
        if (bethe::is_zero(x)) continue;
        const S* brow = &b.d_[k * b.c_];
        S* orow = &out.d_[i * out.c_];
        for (std::size_t j = 0; j < b.c_; ++j)
          if (!bethe::is_zero(brow[j])) orow[j] += x * brow[j];
      }
    return out;
  }

  friend Vec<S> operator*(const Matrix& a, const Vec<S>& v) {
    assert(a.c_ == v.size());
    Vec<S> out(a.r_, S(0));
    for (std::size_t k = 0; k < a.c_; ++k) {
      if (bethe::is_zero(v[k])) continue;
      for (std::size_t i = 0; i < a.r_; ++i) {
        const S& x = a(i, k);
        if (!bethe::is_zero(x)) out[i] += x * v[k];
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    return std::all_of(d_.begin(), d_.end(), [](const S& x) { return bethe::is_zero(x); });
  }
  bool is_diagonal() const {
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (i != j && !bethe::is_zero((*this)(i, j))) return false;
    return true;
  }
  double max_abs() const {
    double m = 0;
    for (const auto& x : d_) m = std::max(m, bethe::magnitude(x));
    return m;
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  S trace() const {
    S s(0);
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
    return s;
  }
  Vec<S> col(std::size_t j) const {
    Vec<S> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<S> d_;
};

template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const S& x = a(i, j);
      if (is_zero(x)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const S& y = b(k, l);
          if (!is_zero(y)) out(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return out;
}

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
  return a * b - b * a;
}

template <class T, class S>
Matrix<T> convert(const Matrix<S>& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<T, S>)
        out(i, j) = m(i, j);
      else
        out(i, j) = from_rational<T>(m(i, j));
    }
  return out;
}

template <class S>
double max_abs_diff(const Matrix<S>& a, const Matrix<S>& b) {
  return (a - b).max_abs();
}

// vector helpers
template <class S>
Vec<S> operator+(Vec<S> a, const Vec<S>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
template <class S>
Vec<S> operator-(Vec<S> a, const Vec<S>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
template <class S>
Vec<S> operator*(Vec<S> a, const S& s) {
  for (auto& x : a) x *= s;
  return a;
}
template <class S>
Vec<S> operator*(const S& s, Vec<S> a) {
  for (auto& x : a) x *= s;
  return a;
}
template <class S>
bool vec_is_zero(const Vec<S>& v) {
  return std::all_of(v.begin(), v.end(), [](const S& x) { return is_zero(x); });
}
template <class S>
double vec_norm(const Vec<S>& v) {
  double s = 0;
  for (const auto& x : v) {
    double m = magnitude(x);
    s += m * m;
  }
  return std::sqrt(s);
}
template <class S>
Vec<S> unit_vec(std::size_t n, std::size_t i) {
  Vec<S> v(n, S(0));
  v[i] = S(1);
  return v;
}
template <class S>
Vec<S> vec_kron(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> out(a.size() * b.size(), S(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}
template <class T, class S>
Vec<T> convert_vec(const Vec<S>& v) {
  Vec<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if constexpr (std::is_same_v<T, S>)
      out[i] = v[i];
    else
      out[i] = from_rational<T>(v[i]);
  }
  return out;
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Matrix<S>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

}  // namespace bethe
