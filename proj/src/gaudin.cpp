#include "bethe/gaudin.hpp"

#include <algorithm>
#include <sstream>

namespace bethe {

GaudinHamiltonians gaudin_hamiltonians(const std::vector<GlModule>& mods, const std::vector<Rational>& z,
                                       const std::vector<Rational>& K) {
  if (mods.size() != z.size()) fail(ErrorKind::SchemaError, "one evaluation point per site");
  int N = mods.empty() ? static_cast<int>(K.size()) : mods[0].N;
  if (static_cast<int>(K.size()) != N) fail(ErrorKind::MismatchedN, "twist length differs from N");
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (z[i] == z[j]) fail(ErrorKind::CoincidentEvaluationPoints, "evaluation points must be distinct");
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      if (K[a] == K[b]) fail(ErrorKind::DegenerateTwist, "twist entries must be distinct");
  auto c = Chain<Rational>::from_modules(mods, z);
  std::size_t n = mods.size(), D = c.dim();
  GaudinHamiltonians out;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<Rational> h(D, D);
    for (int a = 0; a < N; ++a) h.axpy(K[a], c.site_generator(i, a, a));
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Rational w = 1 / (z[i] - z[j]);
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) h.axpy(w, c.site_generator(i, a, b) * c.site_generator(j, b, a));
    }
    out.H.push_back(std::move(h));
  }
  for (int a = 0; a < N; ++a) {
    Matrix<Rational> g(D, D);
    for (std::size_t i = 0; i < n; ++i) g.axpy(z[i], c.site_generator(i, a, a));
    Matrix<Rational> eaa = c.generator(a, a);
    for (int b = 0; b < N; ++b) {
      if (b == a) continue;
      g.axpy(1 / (K[a] - K[b]), c.generator(a, b) * c.generator(b, a) - eaa);
    }
    out.G.push_back(std::move(g));
  }
  return out;
}

DynamicalExpansion gaudin_dynamical_expansion(const std::vector<GlModule>& mods, const std::vector<Rational>& z,
                                              const std::vector<Rational>& K, const Rational& x, std::uint64_t seed) {
  int N = mods.empty() ? static_cast<int>(K.size()) : mods[0].N;
  if (static_cast<int>(K.size()) != N) fail(ErrorKind::MismatchedN, "twist length differs from N");
  Rational px = 1;
  for (const auto& k : K) {
    if (x == k) fail(ErrorKind::PoleAtEvaluationPoint, "x coincides with a twist entry");
    px *= x - k;
  }
  auto chain = Chain<Rational>::from_modules(mods, z);
  Matrix<Rational> q(N, N);
  for (int a = 0; a < N; ++a) q(a, a) = K[a];
  std::size_t D = chain.dim();
  int n = static_cast<int>(mods.size());

  // G_k(1/w)·∏(1 − z_i w)^k is a polynomial in w of degree ≤ n·k
  std::vector<Rational> excluded{Rational(0)};
  for (const auto& zi : z)
    if (sgn(zi) != 0) excluded.push_back(1 / zi);
  int top = n * N;
  auto ws = sample_points(seed, top + 2, excluded);
  std::vector<std::vector<Matrix<Rational>>> at;
  for (const auto& w : ws) at.push_back(gaudin_transfer_all(chain, q, Rational(1 / w)));

  DynamicalExpansion out{Matrix<Rational>(D, D), Matrix<Rational>(D, D), Matrix<Rational>(D, D)};
  for (int k = 0; k <= N; ++k) {
    Poly den{Rational(1)};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) den = poly_mul(den, Poly{Rational(1), Rational(-z[i])});
    std::vector<Matrix<Rational>> vals;
    for (auto& v : at) vals.push_back(v[k]);
    auto num = interpolate_values(ws, vals, den, n * k);
    auto ser = series_divide(num, den, 3, Matrix<Rational>(D, D));
    Rational coef = (k % 2 ? -1 : 1) / px;
    for (int p = 0; p < N - k; ++p) coef *= x;
    out.order0.axpy(coef, ser[0]);
    out.order1.axpy(coef, ser[1]);
    out.order2.axpy(coef, ser[2]);
  }
  return out;
}

namespace {

std::vector<Complex> to_complex(const std::vector<Rational>& xs) {
  std::vector<Complex> out;
  for (const auto& x : xs) out.push_back(from_rational<Complex>(x));
  return out;
}

}  // namespace

CheckList verify_gaudin_eigenpair(const GaudinProblem& p, const Roots<Complex>& t, const GaudinEigenOptions& opt) {
  BetheConfig cfg{p.xi};
  check_root_shape(cfg, t);
  if (!classify_offdiagonal(t, opt.offdiag_tol)) fail(ErrorKind::NotOffDiagonal, "roots are not off-diagonal");
  auto z = to_complex(p.z);
  auto K = to_complex(p.K);
  auto lam = p.lambdas();
  auto chain = Chain<Complex>::from_modules(p.modules, z);
  Vec<Complex> F = gaudin_weight_function(p.modules, z, cfg, t);
  double nf = vec_norm(F);
  if (nf < 1e-10) fail(ErrorKind::ZeroBetheVector, "Bethe vector vanishes");
  Matrix<Complex> Km = convert<Complex>(p.twist());

  auto us = opt.u_samples.empty() ? default_u_samples(3, 11) : opt.u_samples;
  std::vector<std::vector<Matrix<Complex>>> G;
  std::vector<std::vector<Complex>> Z;
  for (const auto& u : us) {
    G.push_back(gaudin_transfer_all(chain, Km, u));
    Z.push_back(master_operator_coeffs(p.N, t, z, lam, K, u));
  }
  CheckList out;
  for (int k = 1; k <= p.N; ++k) {
    std::ostringstream nm;
    nm << "eigenvector G_" << k;
    out.checks.push_back(run_check(nm.str(), "Gaudin transfer matrix eigenvector with master-operator eigenvalue", [&] {
      double worst = 0;
      for (std::size_t s = 0; s < us.size(); ++s) {
        Vec<Complex> r = G[s][k] * F - Z[s][k] * F;
        worst = std::max(worst, vec_norm(r) / nf);
      }
      return std::pair<bool, double>{worst < opt.residual_tol, worst};
    }));
    nm.str("");
    nm << "spectrum contains eigenvalue of G_" << k;
    out.checks.push_back(run_check(nm.str(), "predicted eigenvalue lies in the dense spectrum", [&] {
      double best = 1e300;
      for (const auto& e : dense_eigenvalues(G[0][k])) best = std::min(best, std::abs(e - Z[0][k]));
      double rel = best / std::max(1.0, std::abs(Z[0][k]));
      return std::pair<bool, double>{rel < 1e-7, rel};
    }));
  }
  out.checks.push_back(run_check("weight", "Bethe vector has weight sum of highest weights minus simple roots", [&] {
    GlWeight w(p.N, 0);
    for (const auto& l : lam)
      for (int a = 0; a < p.N; ++a) w[a] += l[a];
    for (int a = 0; a + 1 < p.N; ++a) {
      w[a] -= p.xi[a];
      w[a + 1] += p.xi[a];
    }
    auto ws = tensor_weights(p.modules);
    double worst = 0;
    for (std::size_t i = 0; i < F.size(); ++i)
      if (ws[i] != w) worst = std::max(worst, std::abs(F[i]) / nf);
    return std::pair<bool, double>{worst < 1e-10, worst};
  }));
  bool untwisted = std::all_of(p.K.begin(), p.K.end(), [](const Rational& x) { return sgn(x) == 0; });
  if (untwisted)
    out.checks.push_back(run_check("singular", "untwisted Bethe vector is annihilated by raising operators", [&] {
      double worst = 0;
      for (int a = 0; a < p.N; ++a)
        for (int b = a + 1; b < p.N; ++b) worst = std::max(worst, vec_norm(chain.generator(a, b) * F) / nf);
      return std::pair<bool, double>{worst < 1e-8, worst};
    }));
  return out;
}

}  // namespace bethe
