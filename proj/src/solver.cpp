#include "bethe/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <random>

namespace bethe {

namespace {

struct Slot {
  int level, index;
};

std::vector<Slot> flatten(const std::vector<int>& xi) {
  std::vector<Slot> s;
  for (int a = 0; a < static_cast<int>(xi.size()); ++a)
    for (int i = 0; i < xi[a]; ++i) s.push_back({a, i});
  return s;
}

int offset(const std::vector<int>& xi, int a) {
  int s = 0;
  for (int b = 0; b < a; ++b) s += xi[b];
  return s;
}

// x_eq − x_var + c, with var = −1 meaning a constant factor
struct Factor {
  int var;
  Complex c;
};

Complex factor_value(const Factor& f, int x, const std::vector<Complex>& v) {
  return v[x] - (f.var >= 0 ? v[f.var] : Complex(0)) + f.c;
}

// ql ∏ left − qr ∏ right
class XxxSystem : public BaeSystem {
 public:
  explicit XxxSystem(const BetheProblem& p) {
    auto lam = p.lambdas();
    auto slots = flatten(p.xi);
    for (const auto& [a, i] : slots) {
      Eq e;
      e.x = offset(p.xi, a) + i;
      e.ql = from_rational<Complex>(p.q[a]);
      e.qr = from_rational<Complex>(p.q[a + 1]);
      for (std::size_t j = 0; j < p.z.size(); ++j) {
        Complex zj = from_rational<Complex>(p.z[j]);
        e.left.push_back({-1, -zj + double(lam[j][a])});
        e.right.push_back({-1, -zj + double(lam[j][a + 1])});
      }
      if (a > 0)
        for (int j = 0; j < p.xi[a - 1]; ++j) {
          int y = offset(p.xi, a - 1) + j;
          e.left.push_back({y, 1.0});
          e.right.push_back({y, 0.0});
        }
      for (int j = 0; j < p.xi[a]; ++j) {
        if (j == i) continue;
        int y = offset(p.xi, a) + j;
        e.left.push_back({y, -1.0});
        e.right.push_back({y, 1.0});
      }
      if (a + 1 < static_cast<int>(p.xi.size()))
        for (int j = 0; j < p.xi[a + 1]; ++j) {
          int y = offset(p.xi, a + 1) + j;
          e.left.push_back({y, 0.0});
          e.right.push_back({y, -1.0});
        }
      eqs_.push_back(std::move(e));
    }
  }

  int size() const override { return static_cast<int>(eqs_.size()); }

  void eval(const std::vector<Complex>& v, std::vector<Complex>& F,
            std::vector<std::vector<Complex>>* J) const override {
    int n = size();
    F.assign(n, 0);
    if (J) J->assign(n, std::vector<Complex>(n, 0));
    for (int r = 0; r < n; ++r) {
      const auto& e = eqs_[r];
      F[r] = e.ql * product(e, e.left, v, J ? &(*J)[r] : nullptr, 1.0 * e.ql) -
             e.qr * product(e, e.right, v, J ? &(*J)[r] : nullptr, -e.qr);
    }
  }

 private:
  struct Eq {
    int x;
    Complex ql, qr;
    std::vector<Factor> left, right;
  };

  // ∏ factors; adds scale·∂(∏)/∂v into row
  static Complex product(const Eq& e, const std::vector<Factor>& fs, const std::vector<Complex>& v,
                         std::vector<Complex>* row, Complex scale) {
    std::size_t m = fs.size();
    std::vector<Complex> val(m), pre(m + 1, 1.0), suf(m + 1, 1.0);
    for (std::size_t k = 0; k < m; ++k) val[k] = factor_value(fs[k], e.x, v);
    for (std::size_t k = 0; k < m; ++k) pre[k + 1] = pre[k] * val[k];
    for (std::size_t k = m; k-- > 0;) suf[k] = suf[k + 1] * val[k];
    if (row)
      for (std::size_t k = 0; k < m; ++k) {
        Complex others = scale * pre[k] * suf[k + 1];
        (*row)[e.x] += others;
        if (fs[k].var >= 0) (*row)[fs[k].var] -= others;
      }
    return pre[m];
  }

  std::vector<Eq> eqs_;
};

// (Σ w/(x_eq − y) − κ)·∏(x_eq − y), the pole form with denominators cleared
class GaudinSystem : public BaeSystem {
 public:
  explicit GaudinSystem(const GaudinProblem& p) {
    auto lam = p.lambdas();
    for (const auto& [a, i] : flatten(p.xi)) {
      Eq e;
      e.x = offset(p.xi, a) + i;
      e.kappa = from_rational<Complex>(p.K[a + 1] - p.K[a]);
      for (std::size_t j = 0; j < p.z.size(); ++j) {
        int d = lam[j][a] - lam[j][a + 1];
        if (d) e.terms.push_back({-1, from_rational<Complex>(p.z[j]), double(d)});
      }
      if (a > 0)
        for (int j = 0; j < p.xi[a - 1]; ++j) e.terms.push_back({offset(p.xi, a - 1) + j, 0.0, 1.0});
      for (int j = 0; j < p.xi[a]; ++j)
        if (j != i) e.terms.push_back({offset(p.xi, a) + j, 0.0, -2.0});
      if (a + 1 < static_cast<int>(p.xi.size()))
        for (int j = 0; j < p.xi[a + 1]; ++j) e.terms.push_back({offset(p.xi, a + 1) + j, 0.0, 1.0});
      eqs_.push_back(std::move(e));
    }
  }

  int size() const override { return static_cast<int>(eqs_.size()); }

  void eval(const std::vector<Complex>& v, std::vector<Complex>& F,
            std::vector<std::vector<Complex>>* J) const override {
    int n = size();
    F.assign(n, 0);
    if (J) J->assign(n, std::vector<Complex>(n, 0));
    for (int r = 0; r < n; ++r) {
      const auto& e = eqs_[r];
      std::size_t m = e.terms.size();
      std::vector<Complex> d(m);
      for (std::size_t l = 0; l < m; ++l) d[l] = v[e.x] - (e.terms[l].var >= 0 ? v[e.terms[l].var] : e.terms[l].at);
      // product of d over l ∉ skip
      auto prod = [&](std::size_t s1, std::size_t s2) {
        Complex p = 1;
        for (std::size_t l = 0; l < m; ++l)
          if (l != s1 && l != s2) p *= d[l];
        return p;
      };
      Complex f = -e.kappa * prod(m, m);
      for (std::size_t k = 0; k < m; ++k) f += e.terms[k].w * prod(k, m);
      F[r] = f;
      if (!J) continue;
      for (std::size_t l = 0; l < m; ++l) {
        // ∂F/∂d_l
        Complex g = -e.kappa * prod(l, m);
        for (std::size_t k = 0; k < m; ++k)
          if (k != l) g += e.terms[k].w * prod(k, l);
        (*J)[r][e.x] += g;
        if (e.terms[l].var >= 0) (*J)[r][e.terms[l].var] -= g;
      }
    }
  }

 private:
  struct Term {
    int var;
    Complex at;  // the pole when var < 0
    Complex w;
  };
  struct Eq {
    int x;
    Complex kappa;
    std::vector<Term> terms;
  };
  std::vector<Eq> eqs_;
};

double norm2(const std::vector<Complex>& F) {
  double s = 0;
  for (const auto& f : F) s += std::norm(f);
  return std::sqrt(s);
}

double norm_inf(const std::vector<Complex>& F) {
  double s = 0;
  for (const auto& f : F) s = std::max(s, std::abs(f));
  return s;
}

bool finite(const std::vector<Complex>& F) {
  return std::all_of(F.begin(), F.end(), [](const Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

const std::vector<int>& xi_of(const AnyProblem& p) {
  return std::visit([](const auto& q) -> const std::vector<int>& { return q.xi; }, p);
}

void validate(const AnyProblem& p) {
  std::visit(
      [](const auto& q) {
        if (static_cast<int>(q.xi.size()) != q.N - 1) fail(ErrorKind::SchemaError, "ξ must have N−1 entries");
        for (int x : q.xi)
          if (x < 0) fail(ErrorKind::SchemaError, "ξ entries must be non-negative");
        if (q.modules.size() != q.z.size()) fail(ErrorKind::SchemaError, "one evaluation point per site");
        for (const auto& m : q.modules)
          if (m.N != q.N) fail(ErrorKind::MismatchedN, "module over a different gl_N");
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, BetheProblem>) {
          if (static_cast<int>(q.q.size()) != q.N) fail(ErrorKind::SchemaError, "twist must have N entries");
        } else {
          if (static_cast<int>(q.K.size()) != q.N) fail(ErrorKind::SchemaError, "twist must have N entries");
        }
      },
      p);
}

double independent_residual(const AnyProblem& p, const Roots<Complex>& t) {
  auto r = std::visit(
      [&](const auto& q) {
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, BetheProblem>)
          return bae_residual<Complex>(q, t);
        else
          return gaudin_bae_residual<Complex>(q, t);
      },
      p);
  return norm_inf(r);
}

Roots<Complex> unflatten(const std::vector<int>& xi, const std::vector<Complex>& x) {
  Roots<Complex> t(xi.size());
  std::size_t k = 0;
  for (std::size_t a = 0; a < xi.size(); ++a)
    for (int i = 0; i < xi[a]; ++i) t[a].push_back(x[k++]);
  return t;
}

}  // namespace

std::unique_ptr<BaeSystem> make_bae_system(const AnyProblem& p) {
  validate(p);
  if (auto b = std::get_if<BetheProblem>(&p)) return std::make_unique<XxxSystem>(*b);
  return std::make_unique<GaudinSystem>(std::get<GaudinProblem>(p));
}

Roots<Complex> canonical_roots(Roots<Complex> t) {
  for (auto& level : t)
    std::sort(level.begin(), level.end(), [](const Complex& a, const Complex& b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
  return t;
}

double roots_distance(const Roots<Complex>& a, const Roots<Complex>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0;
  for (std::size_t l = 0; l < a.size(); ++l) {
    if (a[l].size() != b[l].size()) return std::numeric_limits<double>::infinity();
    std::vector<bool> used(b[l].size(), false);
    for (const auto& x : a[l]) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t pick = 0;
      for (std::size_t j = 0; j < b[l].size(); ++j)
        if (!used[j] && std::abs(x - b[l][j]) < best) {
          best = std::abs(x - b[l][j]);
          pick = j;
        }
      used[pick] = true;
      worst = std::max(worst, best);
    }
  }
  return worst;
}

SolveReport solve_bae(const AnyProblem& p, const SolveOptions& opt) {
  if (opt.starts < 1) fail(ErrorKind::SchemaError, "at least one start is needed");
  if (!(opt.tol > 0)) fail(ErrorKind::SchemaError, "tolerance must be positive");
  auto sys = make_bae_system(p);
  const auto& xi = xi_of(p);
  SolveReport rep;
  int n = sys->size();
  if (n == 0) {
    rep.roots.push_back({Roots<Complex>(xi.size()), 0.0, true, opt.starts, 0});
    return rep;
  }

  double zmin = 0, zmax = 0;
  int top = 0;
  std::visit(
      [&](const auto& q) {
        for (std::size_t i = 0; i < q.z.size(); ++i) {
          double v = q.z[i].get_d();
          zmin = i ? std::min(zmin, v) : v;
          zmax = i ? std::max(zmax, v) : v;
        }
        for (const auto& l : q.lambdas()) top = std::max(top, l[0]);
      },
      p);
  double mid = (zmin + zmax) / 2, half = 1 + (zmax - zmin) / 2 + top;

  for (int s = 0; s < opt.starts; ++s) {
    std::mt19937_64 rng(opt.seed * 1000003ULL + static_cast<std::uint64_t>(s));
    std::uniform_real_distribution<double> U(-half, half);
    std::vector<Complex> x;
    for (std::size_t a = 0; a < xi.size(); ++a)
      for (int i = 0; i < xi[a]; ++i) {
        double re = U(rng), im = U(rng);
        x.push_back(Complex(mid - 0.5 * static_cast<double>(a) + re, im));
      }

    StartOutcome out;
    std::vector<Complex> F;
    std::vector<std::vector<Complex>> J;
    sys->eval(x, F, &J);
    double cur = finite(F) ? norm2(F) : std::numeric_limits<double>::infinity();
    int polish = 0;
    for (out.iterations = 0; out.iterations < opt.max_iter; ++out.iterations) {
      if (norm_inf(F) <= opt.tol) {
        // a couple of extra steps tighten the cluster
        if (++polish > 2) break;
      }
      Eigen::MatrixXcd Jm(n, n);
      Eigen::VectorXcd Fv(n);
      for (int r = 0; r < n; ++r) {
        Fv(r) = F[r];
        for (int c = 0; c < n; ++c) Jm(r, c) = J[r][c];
      }
      Eigen::VectorXcd d = Jm.fullPivLu().solve(-Fv);
      if (!d.allFinite()) {
        out.note = "singular Jacobian";
        break;
      }
      bool moved = false;
      double step = 1;
      for (int h = 0; h <= 30; ++h, step /= 2) {
        std::vector<Complex> y(x);
        for (int k = 0; k < n; ++k) y[k] += step * d(k);
        std::vector<Complex> Fy;
        sys->eval(y, Fy, nullptr);
        if (!finite(Fy)) continue;
        double ny = norm2(Fy);
        if (ny < cur) {
          x = std::move(y);
          cur = ny;
          moved = true;
          break;
        }
      }
      if (!moved) {
        if (norm_inf(F) > opt.tol) out.note = "damping exhausted";
        break;
      }
      sys->eval(x, F, &J);
    }
    if (norm_inf(F) > opt.tol) {
      if (out.note.empty()) out.note = "iteration limit";
      rep.starts.push_back(out);
      continue;
    }

    Roots<Complex> t = canonical_roots(unflatten(xi, x));
    double res;
    try {
      res = independent_residual(p, t);
    } catch (const Error& e) {
      out.note = e.what();
      rep.starts.push_back(out);
      continue;
    }
    if (!(res <= opt.tol)) {
      out.note = "independent residual above tolerance";
      rep.starts.push_back(out);
      continue;
    }
    out.converged = true;
    for (std::size_t r = 0; r < rep.roots.size(); ++r)
      if (roots_distance(rep.roots[r].t, t) <= opt.cluster_radius) {
        out.root = static_cast<int>(r);
        ++rep.roots[r].hits;
        ++rep.duplicates_merged;
        rep.roots[r].residual = std::max(rep.roots[r].residual, res);
        break;
      }
    if (out.root < 0) {
      out.root = static_cast<int>(rep.roots.size());
      rep.roots.push_back({t, res, classify_offdiagonal(t, opt.offdiag_tol), 1, s});
    }
    rep.starts.push_back(out);
  }
  if (rep.roots.empty()) {
    rep.diagnostics = "no start converged:";
    for (std::size_t s = 0; s < rep.starts.size(); ++s) rep.diagnostics += " [" + std::to_string(s) + "] " + rep.starts[s].note;
  }
  return rep;
}

}  // namespace bethe
