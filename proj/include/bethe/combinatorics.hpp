#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace bethe {

struct SignedPerm {
  std::vector<int> p;
  int sign;
};

// All permutations of {0..k-1} in lexicographic order, with their signs.
inline std::vector<SignedPerm> signed_permutations(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<SignedPerm> out;
  do {
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (p[i] > p[j]) ++inv;
    out.push_back({p, inv % 2 ? -1 : 1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Sorted k-subsets of {0..n-1}, lexicographic.
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  for (;;) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

// Flat index of a tuple in {0..n-1}^k, first entry most significant.
inline std::size_t tuple_index(const std::vector<int>& t, int n) {
  std::size_t idx = 0;
  for (int x : t) idx = idx * n + x;
  return idx;
}

inline std::vector<int> tuple_of(std::size_t idx, int n, int k) {
  std::vector<int> t(k);
  for (int i = k; i-- > 0;) {
    t[i] = static_cast<int>(idx % n);
    idx /= n;
  }
  return t;
}

// All tuples in {0..bound[i]-1}, lexicographic.
inline std::vector<std::vector<int>> all_tuples(const std::vector<int>& bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(bound.size(), 0);
  for (int b : bound)
    if (b <= 0) return out;
  for (;;) {
    out.push_back(t);
    int i = static_cast<int>(t.size()) - 1;
    while (i >= 0 && ++t[i] == bound[i]) t[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

}  // namespace bethe
