#include "bethe/reps.hpp"

#include <deque>
#include <sstream>

#include "bethe/error.hpp"
#include "bethe/linalg.hpp"
#include "bethe/tensor.hpp"

namespace bethe {

namespace {

// Incremental echelon basis for exact span tests.
class SpanBuilder {
 public:
  // Adds v if independent; returns whether it was added.
  bool add(const Vec<Rational>& v) {
    Vec<Rational> r = v;
    for (std::size_t k = 0; k < red_.size(); ++k) {
      const Rational c = r[piv_[k]];
      if (sgn(c) == 0) continue;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (sgn(red_[k][i]) != 0) r[i] -= c * red_[k][i];
    }
    std::size_t p = 0;
    while (p < r.size() && sgn(r[p]) == 0) ++p;
    if (p == r.size()) return false;
    Rational inv = 1 / r[p];
    for (auto& x : r) x *= inv;
    red_.push_back(std::move(r));
    piv_.push_back(p);
    return true;
  }

 private:
  std::vector<Vec<Rational>> red_;
  std::vector<std::size_t> piv_;
};

GlWeight weight_of_tuple(const std::vector<int>& t, int N) {
  GlWeight w(N, 0);
  for (int x : t) ++w[x];
  return w;
}

// Express columns of `images` in the basis given by the columns of `basis`
// (full column rank).
Matrix<Rational> coordinates(const Matrix<Rational>& basis, const Matrix<Rational>& images) {
  std::size_t n = basis.rows(), d = basis.cols();
  Matrix<Rational> aug(n, d + images.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug(i, j) = basis(i, j);
    for (std::size_t j = 0; j < images.cols(); ++j) aug(i, d + j) = images(i, j);
  }
  auto e = rref(std::move(aug));
  if (e.pivots.size() != d || (d > 0 && e.pivots[d - 1] != d - 1))
    fail(ErrorKind::NotInvariant, "span closure is not invariant under the generators");
  return e.reduced.block(0, d, d, images.cols());
}

}  // namespace

GlModule vector_rep(int N) {
  if (N < 1) fail(ErrorKind::InvalidRank, "N must be at least 1");
  GlModule m;
  m.N = N;
  m.dim = N;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) m.gens.push_back(Matrix<Rational>::unit(N, a, b));
  for (int a = 0; a < N; ++a) {
    GlWeight w(N, 0);
    w[a] = 1;
    m.weights.push_back(w);
  }
  m.hwv = 0;
  m.label = "vector";
  return m;
}

GlModule wedge_rep(int N, int k) {
  if (N < 1 || k < 0 || k > N) fail(ErrorKind::InvalidRank, "wedge power k must satisfy 0 <= k <= N");
  GlModule m;
  m.N = N;
  auto subs = subsets(N, k);
  m.dim = static_cast<int>(subs.size());
  std::vector<std::size_t> dims(k, N);
  if (k == 0) {
    for (int i = 0; i < N * N; ++i) m.gens.emplace_back(1, 1);
  } else {
    auto inc = wedge_inclusion<Rational>(N, k);
    auto proj = wedge_projection<Rational>(N, k);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        Matrix<Rational> full(inc.rows(), inc.rows());
        auto eab = Matrix<Rational>::unit(N, a, b);
        for (int s = 0; s < k; ++s) full += embed(eab, dims, {static_cast<std::size_t>(s)});
        m.gens.push_back(proj * full * inc);
      }
  }
  for (const auto& s : subs) m.weights.push_back(weight_of_tuple(s, N));
  m.hwv = 0;
  m.label = "wedge" + std::to_string(k);
  return m;
}

bool is_polynomial_dominant(const GlWeight& lambda) {
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  return lambda.empty() || lambda.back() >= 0;
}

GlModule irrep_from_partition(int N, const GlWeight& lambda) {
  if (static_cast<int>(lambda.size()) != N) fail(ErrorKind::MismatchedN, "weight length differs from N");
  if (!is_polynomial_dominant(lambda)) fail(ErrorKind::NoHighestWeightVector, "weight is not polynomial dominant");
  int m = 0;
  for (int x : lambda) m += x;
  GlModule out;
  out.N = N;
  std::ostringstream lab;
  lab << "partition(";
  for (int i = 0; i < N; ++i) lab << (i ? "," : "") << lambda[i];
  lab << ")";
  out.label = lab.str();
  if (m == 0) {
    out.dim = 1;
    for (int i = 0; i < N * N; ++i) out.gens.emplace_back(1, 1);
    out.weights.push_back(lambda);
    return out;
  }

  std::vector<std::size_t> dims(m, N);
  std::size_t full = dims_product(dims);
  auto tuples = all_tuples(std::vector<int>(m, N));
  std::vector<std::size_t> wspace;
  for (std::size_t i = 0; i < full; ++i)
    if (weight_of_tuple(tuples[i], N) == lambda) wspace.push_back(i);

  std::vector<Matrix<Rational>> e;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      Matrix<Rational> g(full, full);
      auto eab = Matrix<Rational>::unit(N, a, b);
      for (int s = 0; s < m; ++s) g += embed(eab, dims, {static_cast<std::size_t>(s)});
      e.push_back(std::move(g));
    }

  // highest weight vector: kernel of the simple raising operators on the weight space
  Matrix<Rational> sys((N - 1) * full, wspace.size());
  for (int a = 0; a + 1 < N; ++a)
    for (std::size_t j = 0; j < wspace.size(); ++j)
      for (std::size_t i = 0; i < full; ++i) sys(a * full + i, j) = e[a * N + a + 1](i, wspace[j]);
  auto ker = nullspace(sys);
  if (ker.empty()) fail(ErrorKind::NoHighestWeightVector, "no singular vector of weight " + out.label);
  Vec<Rational> hw(full, Rational(0));
  for (std::size_t j = 0; j < wspace.size(); ++j) hw[wspace[j]] = ker[0][j];

  // breadth-first closure under lowering generators
  std::vector<Vec<Rational>> basis;
  SpanBuilder span;
  std::deque<Vec<Rational>> queue;
  span.add(hw);
  basis.push_back(hw);
  queue.push_back(hw);
  while (!queue.empty()) {
    Vec<Rational> v = queue.front();
    queue.pop_front();
    for (int a = 0; a < N; ++a)
      for (int b = a + 1; b < N; ++b) {
        Vec<Rational> w = e[b * N + a] * v;
        if (vec_is_zero(w)) continue;
        if (span.add(w)) {
          basis.push_back(w);
          queue.push_back(w);
        }
      }
  }

  Matrix<Rational> bm(full, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < full; ++i) bm(i, j) = basis[j][i];
  out.dim = static_cast<int>(basis.size());
  for (int g = 0; g < N * N; ++g) out.gens.push_back(coordinates(bm, e[g] * bm));
  for (const auto& v : basis) {
    std::size_t i = 0;
    while (sgn(v[i]) == 0) ++i;
    out.weights.push_back(weight_of_tuple(tuples[i], N));
  }
  out.hwv = 0;
  return out;
}

std::vector<std::size_t> module_dims(const std::vector<GlModule>& modules) {
  std::vector<std::size_t> d;
  for (const auto& m : modules) d.push_back(static_cast<std::size_t>(m.dim));
  return d;
}

Matrix<Rational> tensor_generator(const std::vector<GlModule>& modules, int a, int b) {
  if (modules.empty()) return Matrix<Rational>(1, 1);
  int N = modules[0].N;
  for (const auto& m : modules)
    if (m.N != N) fail(ErrorKind::MismatchedN, "modules disagree on N");
  auto dims = module_dims(modules);
  std::size_t total = dims_product(dims);
  Matrix<Rational> out(total, total);
  for (std::size_t i = 0; i < modules.size(); ++i) out += embed(modules[i].e(a, b), dims, {i});
  return out;
}

std::vector<GlWeight> tensor_weights(const std::vector<GlModule>& modules) {
  int N = modules.empty() ? 0 : modules[0].N;
  std::vector<GlWeight> out{GlWeight(N, 0)};
  for (const auto& m : modules) {
    std::vector<GlWeight> next;
    for (const auto& w : out)
      for (const auto& x : m.weights) {
        GlWeight s = w;
        for (int a = 0; a < N; ++a) s[a] += x[a];
        next.push_back(s);
      }
    out = std::move(next);
  }
  return out;
}

Vec<Rational> tensor_hwv(const std::vector<GlModule>& modules) {
  Vec<Rational> v{Rational(1)};
  for (const auto& m : modules) v = vec_kron(v, unit_vec<Rational>(m.dim, m.hwv));
  return v;
}

std::vector<Vec<Rational>> singular_space(const std::vector<GlModule>& modules, const GlWeight& weight) {
  if (modules.empty()) return {};
  int N = modules[0].N;
  auto ws = tensor_weights(modules);
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (ws[i] == weight) cols.push_back(i);
  if (cols.empty()) return {};
  std::size_t total = ws.size();
  std::vector<Matrix<Rational>> raise;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) raise.push_back(tensor_generator(modules, a, b));
  Matrix<Rational> sys(std::max<std::size_t>(1, raise.size()) * total, cols.size());
  for (std::size_t r = 0; r < raise.size(); ++r)
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < total; ++i) sys(r * total + i, j) = raise[r](i, cols[j]);
  std::vector<Vec<Rational>> out;
  for (const auto& k : nullspace(sys)) {
    Vec<Rational> v(total, Rational(0));
    for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j]] = k[j];
    out.push_back(std::move(v));
  }
  return out;
}

long weyl_dimension(const GlWeight& l) {
  Rational d = 1;
  int n = static_cast<int>(l.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= rat(l[i] - l[j] + j - i, j - i);
  return d.get_num().get_si();
}

bool module_invariants_hold(const GlModule& m) {
  int N = m.N;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d) {
          Matrix<Rational> lhs = commutator(m.e(a, b), m.e(c, d));
          Matrix<Rational> rhs(m.dim, m.dim);
          if (b == c) rhs += m.e(a, d);
          if (a == d) rhs -= m.e(c, b);
          if (lhs != rhs) return false;
        }
  for (int a = 0; a < N; ++a) {
    const auto& h = m.e(a, a);
    if (!h.is_diagonal()) return false;
    for (int i = 0; i < m.dim; ++i)
      if (h(i, i) != m.weights[i][a]) return false;
  }
  auto v = unit_vec<Rational>(m.dim, m.hwv);
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      if (!vec_is_zero(m.e(a, b) * v)) return false;
  return true;
}

int lambda_prime(const GlWeight& l) {
  int N = static_cast<int>(l.size());
  int amax = 0;
  for (int a = 0; a < N; ++a)
    if (l[a] > l[N - 1]) amax = a + 1;
  return l[N - 1] + 1 - amax;
}

}  // namespace bethe
