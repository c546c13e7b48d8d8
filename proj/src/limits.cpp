#include "bethe/limits.hpp"

#include <algorithm>
#include <sstream>

#include "bethe/combinatorics.hpp"
#include "bethe/forms.hpp"
#include "bethe/yangian.hpp"

namespace bethe {

namespace {

using M = Matrix<Rational>;

// ∏ (c0 + c1 ε) together with the ε values where it vanishes
struct Denominator {
  std::vector<std::pair<Rational, Rational>> factors;
  void add(const Rational& c0, const Rational& c1) { factors.push_back({c0, c1}); }
  Poly poly() const { return poly_from_linear(factors); }
  int degree() const {
    int d = 0;
    for (const auto& f : factors) d += sgn(f.second) != 0;
    return d;
  }
};

double gap(const M& a, const M& b) { return max_abs_diff(a, b); }
double gap(const Rational& a, const Rational& b) { return std::abs(Rational(a - b).get_d()); }
double gap(const Vec<Rational>& a, const Vec<Rational>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, gap(a[i], b[i]));
  return m;
}

std::vector<Rational> scaled(const std::vector<Rational>& xs, const Rational& eps) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(x / eps);
  return out;
}

Roots<Rational> scaled(const Roots<Rational>& t, const Rational& eps) {
  Roots<Rational> out;
  for (const auto& level : t) out.push_back(scaled(level, eps));
  return out;
}

std::vector<Rational> diag(const M& K) {
  std::vector<Rational> d;
  for (std::size_t a = 0; a < K.rows(); ++a) d.push_back(K(a, a));
  return d;
}

void require_bethe_data(const LimitProblem& p) {
  if (!p.diagonal_twist()) fail(ErrorKind::SchemaError, "Bethe-side limits need a diagonal twist");
  if (static_cast<int>(p.xi.size()) != p.N() - 1) fail(ErrorKind::SchemaError, "ξ must have N−1 entries");
  check_root_shape(BetheConfig{p.xi}, p.t);
}

// ∏_i ∏_{r<R} (u − z_i − εr)
Denominator transfer_denominator(const LimitProblem& p, int R) {
  Denominator d;
  for (const auto& zi : p.z)
    for (int r = 0; r < R; ++r) d.add(p.u - zi, Rational(-r));
  return d;
}

Rational fact(int m) { return Rational(static_cast<long>(factorial(m))); }

Rational pow_of(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::vector<Rational> eps_points(const Poly& den, int bound, std::uint64_t seed, int held_out) {
  std::vector<Rational> excluded{Rational(0)};
  auto all = sample_points(seed, bound + 1 + held_out + 64, excluded);
  std::vector<Rational> out;
  for (const auto& x : all) {
    if (sgn(poly_eval(den, x)) == 0) continue;
    out.push_back(x);
    if (static_cast<int>(out.size()) == bound + 1 + held_out) break;
  }
  return out;
}

bool LimitProblem::diagonal_twist() const {
  for (std::size_t a = 0; a < K.rows(); ++a)
    for (std::size_t b = 0; b < K.cols(); ++b)
      if (a != b && sgn(K(a, b)) != 0) return false;
  return true;
}

Matrix<Rational> LimitProblem::Q(const Rational& eps) const {
  M q = M::identity(K.rows());
  q.axpy(eps, K);
  return q;
}

CheckResult check_monodromy_limit(const LimitProblem& p) {
  return run_check("monodromy limit", "T_ab(u/ε; z/ε) = δ_ab + ε L_ab(u; z) + O(ε²)", [&] {
    int N = p.N(), n = static_cast<int>(p.z.size());
    Poly one{Rational(1)};
    auto pts = eps_points(one, n, p.seed);
    std::vector<std::vector<M>> vals(N * N);
    for (const auto& e : pts) {
      auto c = Chain<Rational>::from_modules(p.modules, scaled(p.z, e));
      auto T = c.monodromy(Rational(p.u / e));
      for (int k = 0; k < N * N; ++k) vals[k].push_back(T[k]);
    }
    auto c0 = Chain<Rational>::from_modules(p.modules, p.z);
    std::size_t D = c0.dim();
    double err = 0;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        auto s = eps_expand(pts, vals[a * N + b], one, n, 2, M(D, D));
        err = std::max(err, gap(s[0], a == b ? M::identity(D) : M(D, D)));
        err = std::max(err, gap(s[1], L_entry(c0, a, b, p.u)));
      }
    return std::pair<bool, double>{err == 0, err};
  });
}

CheckResult check_transfer_limit(const LimitProblem& p) {
  return run_check("transfer matrix limit", "S_{k,1+εK}(u/ε; z/ε) = ε^k G_{k,K}(u; z) + O(ε^{k+1})", [&] {
    int N = p.N(), n = static_cast<int>(p.z.size());
    auto den = transfer_denominator(p, N);
    Poly dp = den.poly();
    int bound = n * N + N;
    auto pts = eps_points(dp, bound, p.seed);
    auto c0 = Chain<Rational>::from_modules(p.modules, p.z);
    std::size_t D = c0.dim();
    auto G = gaudin_transfer_all(c0, p.K, p.u);
    double err = 0;
    for (int k = 0; k <= N; ++k) {
      std::vector<M> vals;
      for (const auto& e : pts) {
        auto c = Chain<Rational>::from_modules(p.modules, scaled(p.z, e));
        vals.push_back(modified_transfer(c, p.Q(e), k, Rational(p.u / e)));
      }
      auto s = eps_expand(pts, vals, dp, bound, k + 1, M(D, D));
      for (int j = 0; j < k; ++j) err = std::max(err, s[j].max_abs());
      err = std::max(err, gap(s[k], G[k]));
    }
    return std::pair<bool, double>{err == 0, err};
  });
}

CheckResult check_difference_operator_limit(const LimitProblem& p) {
  return run_check("difference operator limit", "𝔇_{N,1+εK}(u/ε, ε∂; z/ε) = ε^N 𝒟_K(u, ∂; z) + O(ε^{N+1})", [&] {
    int N = p.N(), n = static_cast<int>(p.z.size());
    auto den = transfer_denominator(p, N);
    Poly dp = den.poly();
    int bound = n * N + N;
    auto pts = eps_points(dp, bound, p.seed);
    auto c0 = Chain<Rational>::from_modules(p.modules, p.z);
    std::size_t D = c0.dim();
    std::vector<std::vector<M>> vals(N + 1);
    for (const auto& e : pts) {
      auto c = Chain<Rational>::from_modules(p.modules, scaled(p.z, e));
      auto d = difference_operator(c, p.Q(e), Rational(p.u / e));
      for (int k = 0; k <= N; ++k) vals[k].push_back(d[k]);
    }
    std::vector<std::vector<M>> ser;
    for (int k = 0; k <= N; ++k) ser.push_back(eps_expand(pts, vals[k], dp, bound, N + 1, M(D, D)));
    // e^{−kε∂} = Σ_m (−kε)^m ∂^m / m!
    auto coefficient = [&](int j, int m) {
      M acc(D, D);
      for (int k = 0; k <= N; ++k) acc.axpy(pow_of(Rational(-k), m) / fact(m), ser[k][j - m]);
      return acc;
    };
    auto pen = gaudin_pencil(c0, p.K, p.u);
    double err = 0;
    for (int j = 0; j <= N; ++j)
      for (int m = 0; m <= j; ++m) err = std::max(err, j < N ? coefficient(j, m).max_abs() : gap(coefficient(j, m), pen[m]));
    return std::pair<bool, double>{err == 0, err};
  });
}

CheckResult check_weight_function_limit(const LimitProblem& p) {
  return run_check("weight function limit", "rescaled universal weight function = ε^{|ξ|} 𝔽_ξ(t; z) + O(ε^{|ξ|+1})", [&] {
    require_bethe_data(p);
    BetheConfig cfg{p.xi};
    int n = static_cast<int>(p.z.size()), m = cfg.total();
    int P = n * m;
    for (int a = 0; a + 1 < cfg.levels(); ++a) P += cfg.xi[a] * cfg.xi[a + 1];
    Rational pre = weight_function_prefactor(cfg, p.t, p.z);
    if (sgn(pre) == 0) fail(ErrorKind::PoleAtSample, "roots meet evaluation points or each other");
    Poly one{Rational(1)};
    auto pts = eps_points(one, P, p.seed);
    std::vector<Vec<Rational>> vals;
    for (const auto& e : pts) {
      // ∏ ε/(t − z)·∏ ε/(t^{a+1} − t^a) = ε^P / prefactor
      Vec<Rational> w = universal_weight_function(p.modules, scaled(p.z, e), cfg, scaled(p.t, e));
      vals.push_back(w * Rational(pow_of(e, P) / pre));
    }
    std::size_t D = vals[0].size();
    auto s = eps_expand(pts, vals, one, P, m + 1, Vec<Rational>(D, Rational(0)));
    double err = 0;
    for (int j = 0; j < m; ++j) err = std::max(err, gap(s[j], Vec<Rational>(D, Rational(0))));
    err = std::max(err, gap(s[m], gaudin_weight_function(p.modules, p.z, cfg, p.t)));
    return std::pair<bool, double>{err == 0, err};
  });
}

CheckResult check_bethe_equation_limit(const LimitProblem& p) {
  return run_check("Bethe equation limit", "XXX Bethe ratio = 1 + ε·(Gaudin Bethe expression) + O(ε²)", [&] {
    require_bethe_data(p);
    int N = p.N();
    auto K = diag(p.K);
    std::vector<GlWeight> lam;
    for (const auto& m : p.modules) lam.push_back(m.highest_weight());
    GaudinProblem g{N, p.modules, p.z, K, p.xi};
    auto expected = gaudin_bae_residual<Rational>(g, p.t);
    double err = 0;
    std::size_t row = 0;
    for (int a = 0; a + 1 < N; ++a)
      for (int i = 0; i < p.xi[a]; ++i, ++row) {
        const Rational& x = p.t[a][i];
        // numerator and denominator of the ratio, each linear factor c0 + c1 ε
        Denominator num, den;
        num.add(1, K[a]);
        den.add(1, K[a + 1]);
        for (std::size_t j = 0; j < p.z.size(); ++j) {
          num.add(x - p.z[j], lam[j][a]);
          den.add(x - p.z[j], lam[j][a + 1]);
        }
        if (a > 0)
          for (const auto& y : p.t[a - 1]) {
            num.add(x - y, 1);
            den.add(x - y, 0);
          }
        for (int j = 0; j < p.xi[a]; ++j)
          if (j != i) {
            num.add(x - p.t[a][j], -1);
            den.add(x - p.t[a][j], 1);
          }
        if (a + 2 < N)
          for (const auto& y : p.t[a + 1]) {
            num.add(x - y, 0);
            den.add(x - y, -1);
          }
        // sample the ratio itself and expand it
        Poly dp = den.poly();
        int bound = num.degree();
        auto pts = eps_points(dp, bound, p.seed + row);
        std::vector<Rational> vals;
        Poly np = num.poly();
        for (const auto& e : pts) vals.push_back(poly_eval(np, e) / poly_eval(dp, e));
        auto s = eps_expand(pts, vals, dp, bound, 2, Rational(0));
        err = std::max(err, gap(s[0], Rational(1)));
        err = std::max(err, gap(s[1], expected[row]));
      }
    return std::pair<bool, double>{err == 0, err};
  });
}

CheckResult check_master_operator_limit(const LimitProblem& p) {
  return run_check("master operator limit",
                   "scaled fundamental difference operator = ε^N·(Gaudin master operator) at leading order", [&] {
    require_bethe_data(p);
    int N = p.N();
    auto K = diag(p.K);
    std::vector<GlWeight> lam;
    for (const auto& m : p.modules) lam.push_back(m.highest_weight());
    Denominator den;
    for (int r = 0; r < N; ++r) {
      for (const auto& zi : p.z) den.add(p.u - zi, Rational(-r));
      for (const auto& level : p.t)
        for (const auto& y : level) den.add(p.u - y, Rational(-r));
    }
    Poly dp = den.poly();
    int bound = static_cast<int>(den.factors.size()) + N;
    auto pts = eps_points(dp, bound, p.seed);
    std::vector<std::vector<Rational>> vals(N + 1);
    for (const auto& e : pts) {
      std::vector<Rational> q;
      for (int a = 0; a < N; ++a) q.push_back(1 + e * K[a]);
      auto c = fundamental_difference_operator<Rational>(N, scaled(p.t, e), scaled(p.z, e), lam, q, Rational(p.u / e));
      for (int k = 0; k <= N; ++k) vals[k].push_back(c[k]);
    }
    std::vector<std::vector<Rational>> ser;
    for (int k = 0; k <= N; ++k) ser.push_back(eps_expand(pts, vals[k], dp, bound, N + 1, Rational(0)));
    auto coefficient = [&](int j, int m) {
      Rational acc = 0;
      for (int k = 0; k <= N; ++k) acc += pow_of(Rational(-k), m) / fact(m) * ser[k][j - m];
      return acc;
    };
    auto Z = master_operator_coeffs<Rational>(N, p.t, p.z, lam, K, p.u);
    double err = 0;
    for (int j = 0; j <= N; ++j)
      for (int m = 0; m <= j; ++m) {
        Rational want = 0;
        if (j == N) want = (N - m) % 2 ? Rational(-Z[N - m]) : Z[N - m];
        err = std::max(err, gap(coefficient(j, m), want));
      }
    return std::pair<bool, double>{err == 0, err};
  });
}

CheckResult check_form_limit(const LimitProblem& p, const Rational& eps, double tol) {
  M target = tensor_shapovalov(p.modules);
  double e2 = 0;
  auto r = run_check("deformed form limit", "S^{z/ε} → ⊗S as ε → 0", [&] {
    double e1 = gap(deformed_form(p.modules, scaled(p.z, eps)), target);
    e2 = gap(deformed_form(p.modules, scaled(p.z, Rational(eps / 10))), target);
    return std::pair<bool, double>{e1 <= tol, e1};
  });
  std::ostringstream d;
  d << "at ε = " << to_string(eps) << ", tol " << tol << "; error at ε/10 is " << e2;
  if (r.detail.empty()) r.detail = d.str();
  return r;
}

CheckList limit_suite(const LimitProblem& p) {
  CheckList out;
  out.checks.push_back(check_monodromy_limit(p));
  out.checks.push_back(check_transfer_limit(p));
  out.checks.push_back(check_difference_operator_limit(p));
  if (p.diagonal_twist() && !p.t.empty()) {
    out.checks.push_back(check_weight_function_limit(p));
    out.checks.push_back(check_bethe_equation_limit(p));
    out.checks.push_back(check_master_operator_limit(p));
  }
  out.checks.push_back(check_form_limit(p));
  return out;
}

}  // namespace bethe
