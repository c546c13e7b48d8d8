#pragma once

#include <numeric>
#include <vector>

#include "bethe/matrix.hpp"

namespace bethe {

inline std::size_t dims_product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// Place `op`, acting on the factors `sites` (in that order, first site most
// significant in op's own indexing), into the tensor product with factor
// dimensions `dims`. Identity on the remaining factors.
template <class S>
Matrix<S> embed(const Matrix<S>& op, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& sites) {
  std::size_t n = dims.size();
  std::size_t total = dims_product(dims);
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t i = n; i-- > 1;) stride[i - 1] = stride[i] * dims[i];

  std::vector<bool> used(n, false);
  for (auto s : sites) used[s] = true;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) rest.push_back(i);

  // flat offsets of op's local indices
  std::size_t local = 1;
  for (auto s : sites) local *= dims[s];
  std::vector<std::size_t> loc_off(local, 0);
  for (std::size_t l = 0; l < local; ++l) {
    std::size_t rem = l, off = 0;
    for (std::size_t k = sites.size(); k-- > 0;) {
      std::size_t d = dims[sites[k]];
      off += (rem % d) * stride[sites[k]];
      rem /= d;
    }
    loc_off[l] = off;
  }
  std::size_t rest_count = total / local;
  std::vector<std::size_t> rest_off(rest_count, 0);
  for (std::size_t r = 0; r < rest_count; ++r) {
    std::size_t rem = r, off = 0;
    for (std::size_t k = rest.size(); k-- > 0;) {
      std::size_t d = dims[rest[k]];
      off += (rem % d) * stride[rest[k]];
      rem /= d;
    }
    rest_off[r] = off;
  }

  Matrix<S> out(total, total);
  for (std::size_t i = 0; i < local; ++i)
    for (std::size_t j = 0; j < local; ++j) {
      const S& x = op(i, j);
      if (is_zero(x)) continue;
      for (std::size_t r = 0; r < rest_count; ++r) out(rest_off[r] + loc_off[i], rest_off[r] + loc_off[j]) = x;
    }
  return out;
}

// Permutation operator sending factor k of the input to position perm[k] of
// the output.
template <class S>
Matrix<S> factor_permutation(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
  std::size_t n = dims.size();
  std::vector<std::size_t> out_dims(n);
  for (std::size_t k = 0; k < n; ++k) out_dims[perm[k]] = dims[k];
  std::size_t total = dims_product(dims);
  Matrix<S> p(total, total);
  std::vector<std::size_t> idx(n);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (std::size_t k = n; k-- > 0;) {
      idx[k] = rem % dims[k];
      rem /= dims[k];
    }
    std::size_t o = 0;
    std::vector<std::size_t> oidx(n);
    for (std::size_t k = 0; k < n; ++k) oidx[perm[k]] = idx[k];
    for (std::size_t k = 0; k < n; ++k) o = o * out_dims[k] + oidx[k];
    p(o, flat) = S(1);
  }
  return p;
}

// Partial trace over the leading factor of dimension `aux`.
template <class S>
Matrix<S> trace_leading(const Matrix<S>& x, std::size_t aux) {
  std::size_t h = x.rows() / aux;
  Matrix<S> out(h, h);
  for (std::size_t a = 0; a < aux; ++a)
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j) {
        const S& v = x(a * h + i, a * h + j);
        if (!is_zero(v)) out(i, j) += v;
      }
  return out;
}

}  // namespace bethe
