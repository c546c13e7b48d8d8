#include "bethe/bethe_xxx.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace bethe {

std::vector<Complex> default_u_samples(int count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  std::vector<Complex> out;
  for (int i = 0; i < count; ++i) out.emplace_back(d(gen), d(gen));
  return out;
}

namespace {

std::vector<Complex> to_complex(const std::vector<Rational>& xs) {
  std::vector<Complex> out;
  for (const auto& x : xs) out.push_back(from_rational<Complex>(x));
  return out;
}

GlWeight expected_weight(const BetheProblem& p) {
  GlWeight w(p.N, 0);
  for (const auto& l : p.lambdas())
    for (int a = 0; a < p.N; ++a) w[a] += l[a];
  for (int a = 0; a + 1 < p.N; ++a) {
    w[a] -= p.xi[a];
    w[a + 1] += p.xi[a];
  }
  return w;
}

}  // namespace

CheckList verify_eigenpair(const BetheProblem& p, const Roots<Complex>& t, const EigenpairOptions& opt) {
  BetheConfig cfg{p.xi};
  check_root_shape(cfg, t);
  if (!classify_offdiagonal(t, opt.offdiag_tol)) fail(ErrorKind::NotOffDiagonal, "roots are not off-diagonal");
  auto z = to_complex(p.z);
  auto q = to_complex(p.q);
  auto lam = p.lambdas();
  auto chain = Chain<Complex>::from_modules(p.modules, z);
  Vec<Complex> B = universal_weight_function(p.modules, z, cfg, t);
  double nb = vec_norm(B);
  if (nb < 1e-10) fail(ErrorKind::ZeroBetheVector, "Bethe vector vanishes");
  Matrix<Complex> Q = convert<Complex>(p.twist());

  CheckList out;
  auto us = opt.u_samples.empty() ? default_u_samples(3, 7) : opt.u_samples;
  for (int k = 1; k <= p.N; ++k) {
    std::ostringstream nm;
    nm << "eigenvector T_" << k;
    out.checks.push_back(run_check(nm.str(), "transfer matrix eigenvector with predicted eigenvalue", [&] {
      double worst = 0;
      for (const auto& u : us) {
        Matrix<Complex> Tk = transfer_matrix(chain, Q, k, u);
        Complex lam_k = predicted_eigenvalue(k, p.N, t, z, lam, q, u);
        Vec<Complex> r = Tk * B - lam_k * B;
        worst = std::max(worst, vec_norm(r) / nb);
      }
      return std::pair<bool, double>{worst < opt.residual_tol, worst};
    }));
    nm.str("");
    nm << "spectrum contains eigenvalue of T_" << k;
    out.checks.push_back(run_check(nm.str(), "predicted eigenvalue lies in the dense spectrum", [&] {
      const Complex& u = us.front();
      Matrix<Complex> Tk = transfer_matrix(chain, Q, k, u);
      Complex lam_k = predicted_eigenvalue(k, p.N, t, z, lam, q, u);
      double best = 1e300;
      for (const auto& e : dense_eigenvalues(Tk)) best = std::min(best, std::abs(e - lam_k));
      double rel = best / std::max(1.0, std::abs(lam_k));
      return std::pair<bool, double>{rel < 1e-7, rel};
    }));
  }
  out.checks.push_back(run_check("weight", "Bethe vector has weight sum of highest weights minus simple roots", [&] {
    auto w = expected_weight(p);
    auto ws = tensor_weights(p.modules);
    double worst = 0;
    for (std::size_t i = 0; i < B.size(); ++i)
      if (ws[i] != w) worst = std::max(worst, std::abs(B[i]) / nb);
    return std::pair<bool, double>{worst < 1e-10, worst};
  }));
  bool untwisted = std::all_of(p.q.begin(), p.q.end(), [](const Rational& x) { return x == 1; });
  if (untwisted)
    out.checks.push_back(run_check("singular", "untwisted Bethe vector is annihilated by raising operators", [&] {
      double worst = 0;
      for (int a = 0; a < p.N; ++a)
        for (int b = a + 1; b < p.N; ++b) worst = std::max(worst, vec_norm(chain.generator(a, b) * B) / nb);
      return std::pair<bool, double>{worst < 1e-8, worst};
    }));
  return out;
}

}  // namespace bethe
