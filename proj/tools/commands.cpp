#include "commands.hpp"

#include <functional>
#include <map>

#include "bethe/forms.hpp"
#include "bethe/linalg.hpp"
#include "bethe/solver.hpp"
#include "bethe/tensor.hpp"

namespace bethe::app {

namespace {

using M = Matrix<Rational>;

struct Output {
  CheckList checks;
  json extra = json::object();
};

std::vector<double> real_samples(const ProblemSpec& p, int count) {
  std::vector<double> out;
  for (const auto& x : sample_points(p.seed + 17, count, p.z)) out.push_back(x.get_d());
  return out;
}

std::vector<Complex> complex_samples(const ProblemSpec& p) {
  return default_u_samples(std::min(p.samples, 5), p.seed);
}

template <class Residual>
CheckResult residual_check(const std::string& name, double tol, Residual r) {
  return run_check(name, "roots solve the Bethe ansatz equations", [&] {
    double worst = 0;
    for (const auto& x : r()) worst = std::max(worst, std::abs(x));
    return std::pair<bool, double>{worst <= tol, worst};
  });
}

Output check_identities(const ProblemSpec& p) {
  Output o;
  o.checks = rmatrix_suite(p.N, p.seed, p.samples);
  o.checks.append(yangian_suite(to_chain(p), p.seed, p.samples));
  if (p.model == "gaudin") {
    auto c = Chain<Rational>::from_modules(p.modules, p.z);
    auto us = sample_points(p.seed + 9, 2, p.z);
    o.checks.checks.push_back(run_check("Gaudin commutativity", "[G_k(u), G_l(v)] = 0", [&] {
      auto a = gaudin_transfer_all(c, p.twist, us[0]), b = gaudin_transfer_all(c, p.twist, us[1]);
      bool ok = true;
      for (int k = 1; k <= p.N; ++k)
        for (int l = 1; l <= p.N; ++l) ok = ok && a[k] * b[l] == b[l] * a[k];
      return std::pair<bool, double>{ok, ok ? 0.0 : 1.0};
    }));
  }
  return o;
}

Output transfer_eval(const ProblemSpec& p) {
  Output o;
  auto c = Chain<Rational>::from_modules(p.modules, p.z);
  std::vector<M> T;
  if (p.model == "gaudin") {
    T = gaudin_transfer_all(c, p.twist, p.u);
  } else {
    for (int k = 0; k <= p.N; ++k) T.push_back(transfer_matrix(c, p.twist, k, p.u));
  }
  json list = json::array();
  for (int k = 0; k <= p.N; ++k) list.push_back({{"k", k}, {"matrix", matrix_to_json(T[k])}});
  o.extra["u"] = to_string(p.u);
  o.extra["transfer"] = list;
  o.checks.checks.push_back(run_check("zeroth is identity", "T_0 = 1", [&] {
    bool ok = T[0] == M::identity(c.dim());
    return std::pair<bool, double>{ok, ok ? 0.0 : 1.0};
  }));
  if (p.model != "gaudin")
    o.checks.checks.push_back(run_check("top is determinant", "T_N(u) = det Q·qdet T(u)", [&] {
      bool ok = T[p.N] == qdet(c, p.u) * determinant(p.twist);
      return std::pair<bool, double>{ok, ok ? 0.0 : 1.0};
    }));
  Rational v = sample_points(p.seed, 1, p.z)[0];
  o.checks.checks.push_back(run_check("commute with a second point", "[T_k(u), T_l(v)] = 0 at one extra v", [&] {
    bool ok = true;
    for (int l = 1; l <= p.N; ++l) {
      M b = p.model == "gaudin" ? gaudin_transfer(c, p.twist, l, v) : transfer_matrix(c, p.twist, l, v);
      for (int k = 1; k <= p.N; ++k) ok = ok && T[k] * b == b * T[k];
    }
    return std::pair<bool, double>{ok, ok ? 0.0 : 1.0};
  }));
  return o;
}

Output solve(const ProblemSpec& p, bool gaudin) {
  AnyProblem prob = gaudin ? AnyProblem(to_gaudin(p)) : AnyProblem(to_bethe(p));
  SolveOptions opt;
  opt.seed = p.seed;
  opt.tol = p.tol;
  opt.starts = std::max(p.samples, 20);
  SolveReport r = solve_bae(prob, opt);
  Output o;
  json roots = json::array();
  for (const auto& s : r.roots)
    roots.push_back({{"t", complex_roots_to_json(s.t)},
                     {"residual", s.residual},
                     {"offdiagonal", s.offdiagonal},
                     {"hits", s.hits},
                     {"first_start", s.first_start}});
  o.extra["roots"] = roots;
  int converged = 0;
  for (const auto& s : r.starts) converged += s.converged;
  o.extra["solver"] = {{"starts", opt.starts},
                       {"converged_starts", converged},
                       {"duplicates_merged", r.duplicates_merged},
                       {"diagnostics", r.diagnostics}};
  o.checks.checks.push_back(run_check("solver found roots", "Newton from seeded starts reaches a solution", [&] {
    return std::pair<bool, double>{r.success(), 0.0};
  }));
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    const auto& s = r.roots[i];
    o.checks.checks.push_back(run_check("root " + std::to_string(i) + " residual", "roots solve the Bethe ansatz equations",
                                        [&] { return std::pair<bool, double>{s.residual <= p.tol, s.residual}; }));
  }
  return o;
}

Roots<Complex> need_roots(const ProblemSpec& p) {
  if (!p.has_roots) fail(ErrorKind::SchemaError, "this command needs roots");
  return p.roots;
}

Output bethe_verify(const ProblemSpec& p) {
  auto prob = to_bethe(p);
  auto t = need_roots(p);
  EigenpairOptions opt;
  opt.u_samples = complex_samples(p);
  opt.residual_tol = p.tol;
  Output o;
  o.checks.checks.push_back(residual_check("Bethe equations", p.tol, [&] { return bae_residual<Complex>(prob, t); }));
  o.checks.append(verify_eigenpair(prob, t, opt));
  o.checks.checks.push_back(real_eigenvalue_check(prob, t, real_samples(p, p.samples)));
  return o;
}

Output gaudin_verify(const ProblemSpec& p) {
  auto prob = to_gaudin(p);
  auto t = need_roots(p);
  GaudinEigenOptions opt;
  opt.u_samples = complex_samples(p);
  opt.residual_tol = p.tol;
  Output o;
  o.checks.checks.push_back(residual_check("Bethe equations", p.tol, [&] { return gaudin_bae_residual<Complex>(prob, t); }));
  o.checks.append(verify_gaudin_eigenpair(prob, t, opt));
  o.checks.checks.push_back(real_eigenvalue_check(prob, t, real_samples(p, p.samples)));
  return o;
}

Output limit_check(const ProblemSpec& p) {
  Output o;
  o.checks = limit_suite(to_limit(p));
  return o;
}

bool contravariant(const GlModule& m, const M& s) {
  for (int a = 0; a < m.N; ++a)
    for (int b = 0; b < m.N; ++b)
      if (!(m.e(a, b).transpose() * s == s * m.e(b, a))) return false;
  return true;
}

std::pair<bool, double> exact(bool ok) { return {ok, ok ? 0.0 : 1.0}; }

Output forms_check(const ProblemSpec& p) {
  Output o;
  auto& out = o.checks.checks;
  auto c = Chain<Rational>::from_modules(p.modules, p.z);
  for (std::size_t i = 0; i < p.modules.size(); ++i) {
    const auto& m = p.modules[i];
    out.push_back(run_check("Shapovalov form of site " + std::to_string(i), "symmetric, normalized, e_ab adjoint to e_ba", [&] {
      M s = shapovalov_gram(m);
      return exact(s == s.transpose() && s(m.hwv, m.hwv) == 1 && contravariant(m, s));
    }));
  }
  M g = tensor_shapovalov(p.modules);
  bool symmetric_twist = p.twist == p.twist.transpose();
  if (p.model == "gaudin") {
    out.push_back(run_check("Gaudin transfer adjoint", "G_k(u; K)ᵀ·S = S·G_k(u; Kᵀ) for the tensor Shapovalov form", [&] {
      auto A = gaudin_transfer_all(c, p.twist, p.u), B = gaudin_transfer_all(c, M(p.twist.transpose()), p.u);
      bool ok = true;
      for (int k = 1; k <= p.N; ++k) ok = ok && A[k].transpose() * g == g * B[k];
      return exact(ok);
    }));
    return o;
  }
  out.push_back(run_check("transfer adjoint is reversed chain", "T_k(u; Q)ᵀ·S = S·(T_k(u; Qᵀ) on the reversed chain)", [&] {
    std::vector<GlModule> rm(p.modules.rbegin(), p.modules.rend());
    std::vector<Rational> rz(p.z.rbegin(), p.z.rend());
    auto rc = Chain<Rational>::from_modules(rm, rz);
    std::vector<std::size_t> perm;
    for (std::size_t i = p.modules.size(); i-- > 0;) perm.push_back(i);
    M P = factor_permutation<Rational>(module_dims(p.modules), perm);
    bool ok = true;
    for (int k = 1; k <= p.N; ++k) {
      M t = transfer_matrix(c, p.twist, k, p.u);
      M tr = transfer_matrix(rc, M(p.twist.transpose()), k, p.u);
      ok = ok && t.transpose() * g == g * P.transpose() * tr * P;
    }
    return exact(ok);
  }));
  M d = deformed_form(p.modules, p.z);
  out.push_back(run_check("deformed form symmetric", "the deformed form is a symmetric bilinear form", [&] {
    return exact(d == d.transpose());
  }));
  if (symmetric_twist)
    out.push_back(run_check("transfer symmetric for deformed form", "T_k(u) is symmetric when Q = Qᵀ", [&] {
      bool ok = true;
      for (int k = 1; k <= p.N; ++k) {
        M t = transfer_matrix(c, p.twist, k, p.u);
        ok = ok && t.transpose() * d == d * t;
      }
      return exact(ok);
    }));
  bool separated = true;
  for (std::size_t i = 0; i < p.modules.size(); ++i)
    for (std::size_t j = i + 1; j < p.modules.size(); ++j) {
      const auto& li = p.modules[i].highest_weight();
      const auto& lj = p.modules[j].highest_weight();
      if (!(p.z[i] - p.z[j] > li[0] - lambda_prime(lj))) separated = false;
    }
  if (separated)
    out.push_back(run_check("deformed form positive", "leading minors positive when z_i − z_j > Λ¹_i − Λ'_j for i < j", [&] {
      bool ok = true;
      for (const auto& m : leading_minors(d)) ok = ok && m > 0;
      return exact(ok);
    }));
  o.extra["positivity_hypothesis"] = separated;
  return o;
}

const std::map<std::string, std::function<Output(const ProblemSpec&)>>& table() {
  static const std::map<std::string, std::function<Output(const ProblemSpec&)>> t{
      {"check-identities", check_identities},
      {"transfer-eval", transfer_eval},
      {"bethe-solve", [](const ProblemSpec& p) { return solve(p, false); }},
      {"bethe-verify", bethe_verify},
      {"gaudin-solve", [](const ProblemSpec& p) { return solve(p, true); }},
      {"gaudin-verify", gaudin_verify},
      {"limit-check", limit_check},
      {"forms-check", forms_check},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check-identities", "transfer-eval", "bethe-solve",  "bethe-verify",
                                              "gaudin-solve",     "gaudin-verify", "limit-check", "forms-check"};
  return names;
}

RunResult run_command(const std::string& command, const json& problem, const Overrides& ov) {
  RunResult r;
  r.report["command"] = command;
  try {
    auto it = table().find(command);
    if (it == table().end()) fail(ErrorKind::SchemaError, "unknown command '" + command + "'");
    json j = problem;
    if (!j.is_object()) fail(ErrorKind::SchemaError, "problem must be a JSON object");
    if (ov.seed) j["seed"] = *ov.seed;
    if (ov.tol) j["tol"] = *ov.tol;
    if (ov.samples) j["samples"] = *ov.samples;
    ProblemSpec p = parse_problem(j);
    r.report["inputs"] = problem_echo(p);
    Output o = it->second(p);
    r.report["checks"] = checks_to_json(o.checks);
    for (auto& [k, v] : o.extra.items()) r.report[k] = v;
    bool pass = o.checks.all_pass();
    r.report["status"] = pass ? "pass" : "fail";
    r.exit_code = pass ? 0 : 1;
  } catch (const Error& e) {
    r.report["status"] = "error";
    r.report["error"] = {{"kind", kind_name(e.kind())}, {"message", e.what()}};
    r.exit_code = 2;
  } catch (const json::exception& e) {
    r.report["status"] = "error";
    r.report["error"] = {{"kind", "SchemaError"}, {"message", e.what()}};
    r.exit_code = 2;
  }
  return r;
}

}  // namespace bethe::app
