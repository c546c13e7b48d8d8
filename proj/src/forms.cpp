#include "bethe/forms.hpp"

#include <map>
#include <sstream>

#include "bethe/error.hpp"
#include "bethe/tensor.hpp"

namespace bethe {

namespace {

// Exact affine system A x = b fed one sparse row at a time; rows are
// reduced on arrival so storage never exceeds the number of unknowns.
class AffineSystem {
 public:
  explicit AffineSystem(std::size_t n) : n_(n) {}

  void add(const std::map<std::size_t, Rational>& row, const Rational& rhs) {
    Vec<Rational> d(n_ + 1, Rational(0));
    bool any = sgn(rhs) != 0;
    for (const auto& [j, c] : row)
      if (sgn(c) != 0) {
        d[j] += c;
        any = true;
      }
    if (!any) return;
    d[n_] = rhs;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      Rational f = d[piv_[k]];
      if (sgn(f) == 0) continue;
      for (auto j : nz_[k]) d[j] -= f * rows_[k][j];
    }
    std::size_t p = n_;
    for (std::size_t j = 0; j < n_; ++j)
      if (sgn(d[j]) != 0) {
        p = j;
        break;
      }
    if (p == n_) {
      if (sgn(d[n_]) != 0) inconsistent_ = true;
      return;
    }
    Rational inv = 1 / d[p];
    std::vector<std::size_t> nz;
    for (std::size_t j = p; j <= n_; ++j)
      if (sgn(d[j]) != 0) {
        d[j] *= inv;
        nz.push_back(j);
      }
    rows_.push_back(std::move(d));
    piv_.push_back(p);
    nz_.push_back(std::move(nz));
  }

  bool inconsistent() const { return inconsistent_; }
  std::size_t rank() const { return rows_.size(); }

  Vec<Rational> unique_solution() const {
    Vec<Rational> x(n_, Rational(0));
    for (std::size_t k = rows_.size(); k-- > 0;) {
      Rational v = rows_[k][n_];
      for (auto j : nz_[k])
        if (j != piv_[k] && j < n_) v -= rows_[k][j] * x[j];
      x[piv_[k]] = v;
    }
    return x;
  }

 private:
  std::size_t n_;
  std::vector<Vec<Rational>> rows_;
  std::vector<std::size_t> piv_;
  std::vector<std::vector<std::size_t>> nz_;
  bool inconsistent_ = false;
};

GlWeight shifted(GlWeight w, int a, int b) {
  // weight change of e_ab
  w[a] += 1;
  w[b] -= 1;
  return w;
}

}  // namespace

Matrix<Rational> shapovalov_gram(const GlModule& m) {
  std::size_t D = m.dim;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = i; j < D; ++j)
      if (m.weights[i] == m.weights[j]) var.emplace(std::make_pair(i, j), var.size());
  auto idx = [&](std::size_t i, std::size_t j) -> long {
    auto it = var.find({std::min(i, j), std::max(i, j)});
    return it == var.end() ? -1 : static_cast<long>(it->second);
  };
  AffineSystem sys(var.size());
  {
    std::map<std::size_t, Rational> r;
    r[static_cast<std::size_t>(idx(m.hwv, m.hwv))] = 1;
    sys.add(r, 1);
  }
  // S(e_ab w_i, w_j) = S(w_i, e_ba w_j) for the simple root generators
  int N = m.N;
  for (int a = 0; a + 1 < N; ++a)
    for (auto [p, q] : {std::make_pair(a, a + 1), std::make_pair(a + 1, a)}) {
      const auto& g = m.e(p, q);
      const auto& gt = m.e(q, p);
      for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) {
          if (shifted(m.weights[i], p, q) != m.weights[j]) continue;
          std::map<std::size_t, Rational> r;
          for (std::size_t k = 0; k < D; ++k) {
            if (sgn(g(k, i)) != 0) r[static_cast<std::size_t>(idx(k, j))] += g(k, i);
            if (sgn(gt(k, j)) != 0) r[static_cast<std::size_t>(idx(i, k))] -= gt(k, j);
          }
          sys.add(r, 0);
        }
    }
  if (sys.inconsistent() || sys.rank() < var.size())
    fail(ErrorKind::NonUnique, "Shapovalov form is not unique; module is not a highest-weight module on its basis");
  auto x = sys.unique_solution();
  Matrix<Rational> s(D, D);
  for (const auto& [ij, k] : var) {
    s(ij.first, ij.second) = x[k];
    s(ij.second, ij.first) = x[k];
  }
  return s;
}

Matrix<Rational> tensor_shapovalov(const std::vector<GlModule>& mods) {
  Matrix<Rational> g = Matrix<Rational>::identity(1);
  for (const auto& m : mods) g = kron(g, shapovalov_gram(m));
  return g;
}

IntertwinerSingularities intertwiner_singularities(const GlModule& L, const GlModule& M) {
  auto l = L.highest_weight(), m = M.highest_weight();
  return {lambda_prime(l) - m[0], l[0] - lambda_prime(m)};
}

Matrix<Rational> intertwiner_R(const GlModule& L, const GlModule& M, const Rational& u) {
  if (L.N != M.N) fail(ErrorKind::MismatchedN, "modules over different gl_N");
  int N = L.N;
  std::vector<GlModule> pair{L, M};
  auto w = tensor_weights(pair);
  std::size_t D = L.dim * M.dim;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;
  std::vector<std::vector<std::size_t>> same(D);
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j)
      if (w[i] == w[j]) {
        var.emplace(std::make_pair(i, j), var.size());
        same[i].push_back(j);
      }
  AffineSystem sys(var.size());
  std::size_t h = L.hwv * M.dim + M.hwv;
  {
    std::map<std::size_t, Rational> r;
    r[var.at({h, h})] = 1;
    sys.add(r, 1);
  }
  Matrix<Rational> IL = Matrix<Rational>::identity(L.dim), IM = Matrix<Rational>::identity(M.dim);
  // R A = B R, with A, B of weight change (p, q) (p = q means weight zero)
  auto relation = [&](const Matrix<Rational>& A, const Matrix<Rational>& B, int p, int q) {
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j) {
        if ((p == q ? w[j] : shifted(w[j], p, q)) != w[i]) continue;
        std::map<std::size_t, Rational> r;
        for (auto k : same[i])
          if (sgn(A(k, j)) != 0) r[var.at({i, k})] += A(k, j);
        for (auto k : same[j])
          if (sgn(B(i, k)) != 0) r[var.at({k, j})] -= B(i, k);
        sys.add(r, 0);
      }
  };
  for (int a = 0; a + 1 < N; ++a)
    for (auto [p, q] : {std::make_pair(a, a + 1), std::make_pair(a + 1, a)}) {
      Matrix<Rational> d = kron(L.e(p, q), IM) + kron(IL, M.e(p, q));
      relation(d, d, p, q);
    }
  // u e_11⊗1 + Σ_c e_1c⊗e_c1 on the right, u e_11⊗1 + Σ_c e_c1⊗e_1c on the left
  Matrix<Rational> X = kron(Matrix<Rational>(L.e(0, 0) * u), IM), Y = X;
  for (int c = 0; c < N; ++c) {
    X += kron(L.e(0, c), M.e(c, 0));
    Y += kron(L.e(c, 0), M.e(0, c));
  }
  relation(X, Y, 0, 0);
  if (sys.inconsistent() || sys.rank() < var.size()) {
    auto s = intertwiner_singularities(L, M);
    std::ostringstream msg;
    msg << "R-matrix degenerate at u = " << to_string(u) << " (pole expected at " << s.pole
        << ", degenerate value at " << s.degenerate << ")";
    fail(ErrorKind::DegenerateAt, msg.str());
  }
  auto x = sys.unique_solution();
  Matrix<Rational> R(D, D);
  for (const auto& [ij, k] : var) R(ij.first, ij.second) = x[k];
  return R;
}

Matrix<Rational> chain_R(const std::vector<GlModule>& mods, const std::vector<Rational>& z) {
  if (mods.size() != z.size()) fail(ErrorKind::SchemaError, "one evaluation point per site");
  auto dims = module_dims(mods);
  Matrix<Rational> out = Matrix<Rational>::identity(dims_product(dims));
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = i + 1; j < mods.size(); ++j)
      out = out * embed(intertwiner_R(mods[i], mods[j], Rational(z[i] - z[j])), dims, {i, j});
  return out;
}

Matrix<Rational> chain_R_reversed(const std::vector<GlModule>& mods, const std::vector<Rational>& z) {
  if (mods.size() != z.size()) fail(ErrorKind::SchemaError, "one evaluation point per site");
  auto dims = module_dims(mods);
  Matrix<Rational> out = Matrix<Rational>::identity(dims_product(dims));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = i + 1; j < mods.size(); ++j) pairs.push_back({i, j});
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    auto [i, j] = *it;
    out = out * embed(intertwiner_R(mods[j], mods[i], Rational(z[j] - z[i])), dims, {j, i});
  }
  return out;
}

Matrix<Rational> deformed_form(const std::vector<GlModule>& mods, const std::vector<Rational>& z) {
  return tensor_shapovalov(mods) * chain_R(mods, z);
}

}  // namespace bethe
