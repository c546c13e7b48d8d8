#include "problem_io.hpp"

namespace bethe::app {

namespace {

Rational read_rational(const json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail(ErrorKind::SchemaError, where + ": expected a rational string or an integer");
}

std::vector<Rational> read_rationals(const json& j, const std::string& where) {
  if (!j.is_array()) fail(ErrorKind::SchemaError, where + ": expected an array");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(read_rational(x, where));
  return out;
}

double read_real(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  return read_rational(j, where).get_d();
}

// Returns the module and its normalized descriptor.
std::pair<GlModule, json> read_module(const json& j, int N) {
  std::string kind = j.is_string() ? j.get<std::string>() : "";
  if (j.is_object()) {
    if (!j.contains("kind")) fail(ErrorKind::SchemaError, "module: expected {\"kind\": ...}");
    kind = j.at("kind").get<std::string>();
  }
  if (kind == "vector") return {vector_rep(N), json{{"kind", "vector"}}};
  if (kind == "wedge" && j.is_object()) {
    int k = j.at("k").get<int>();
    return {wedge_rep(N, k), json{{"kind", "wedge"}, {"k", k}}};
  }
  if (kind == "irrep" && j.is_object()) {
    auto w = j.at("weight").get<GlWeight>();
    return {irrep_from_partition(N, w), json{{"kind", "irrep"}, {"weight", w}}};
  }
  fail(ErrorKind::SchemaError, "module: expected \"vector\", {\"kind\": \"wedge\", \"k\"} or {\"kind\": \"irrep\", \"weight\"}");
}

}  // namespace

std::vector<Rational> ProblemSpec::twist_diagonal() const {
  if (!diagonal_twist()) fail(ErrorKind::SchemaError, "this command needs a diagonal twist");
  std::vector<Rational> d;
  for (int a = 0; a < N; ++a) d.push_back(twist(a, a));
  return d;
}

ProblemSpec parse_problem(const json& j) {
  try {
    if (!j.is_object()) fail(ErrorKind::SchemaError, "problem must be a JSON object");
    ProblemSpec p;
    p.N = j.at("N").get<int>();
    if (p.N < 1) fail(ErrorKind::InvalidRank, "N must be positive");
    for (const auto& m : j.at("modules")) {
      auto [mod, desc] = read_module(m, p.N);
      p.modules.push_back(std::move(mod));
      p.module_specs.push_back(std::move(desc));
    }
    for (const auto& z : j.at("z")) {
      if (z.is_array()) fail(ErrorKind::SchemaError, "z: only rational evaluation points are supported");
      p.z.push_back(read_rational(z, "z"));
    }
    if (p.z.size() != p.modules.size()) fail(ErrorKind::SchemaError, "z: one evaluation point per module");

    p.twist = Matrix<Rational>::identity(p.N);
    if (j.contains("twist")) {
      const auto& t = j.at("twist");
      p.model = t.value("model", "xxx");
      if (p.model != "xxx" && p.model != "gaudin") fail(ErrorKind::SchemaError, "twist.model must be xxx or gaudin");
      if (t.contains("diag") == t.contains("full")) fail(ErrorKind::SchemaError, "twist needs exactly one of diag, full");
      if (t.contains("diag")) {
        auto d = read_rationals(t.at("diag"), "twist.diag");
        if (static_cast<int>(d.size()) != p.N) fail(ErrorKind::MismatchedN, "twist.diag must have N entries");
        p.twist = Matrix<Rational>(p.N, p.N);
        for (int a = 0; a < p.N; ++a) p.twist(a, a) = d[a];
      } else {
        const auto& rows = t.at("full");
        if (!rows.is_array() || static_cast<int>(rows.size()) != p.N) fail(ErrorKind::MismatchedN, "twist.full must be N×N");
        p.twist = Matrix<Rational>(p.N, p.N);
        for (int a = 0; a < p.N; ++a) {
          auto r = read_rationals(rows[a], "twist.full");
          if (static_cast<int>(r.size()) != p.N) fail(ErrorKind::MismatchedN, "twist.full must be N×N");
          for (int b = 0; b < p.N; ++b) p.twist(a, b) = r[b];
        }
      }
    } else if (j.contains("model")) {
      p.model = j.at("model").get<std::string>();
    }
    if (p.model == "gaudin" && !j.contains("twist")) p.twist = Matrix<Rational>(p.N, p.N);

    p.xi = j.value("xi", std::vector<int>(p.N - 1, 0));
    if (static_cast<int>(p.xi.size()) != p.N - 1) fail(ErrorKind::MismatchedN, "xi must have N−1 entries");
    for (int x : p.xi)
      if (x < 0) fail(ErrorKind::SchemaError, "xi entries must be non-negative");

    if (j.contains("roots")) {
      p.has_roots = true;
      p.exact_roots = true;
      const auto& r = j.at("roots");
      if (!r.is_array() || r.size() != p.xi.size()) fail(ErrorKind::SchemaError, "roots: one array per level");
      for (std::size_t a = 0; a < r.size(); ++a) {
        std::vector<Complex> lv;
        std::vector<Rational> lr;
        for (const auto& x : r[a]) {
          if (x.is_array()) {
            if (x.size() != 2) fail(ErrorKind::SchemaError, "roots: complex roots are [re, im]");
            lv.emplace_back(read_real(x[0], "roots"), read_real(x[1], "roots"));
            p.exact_roots = false;
          } else {
            Rational q = read_rational(x, "roots");
            lv.emplace_back(q.get_d(), 0.0);
            lr.push_back(q);
          }
        }
        if (static_cast<int>(lv.size()) != p.xi[a]) fail(ErrorKind::SchemaError, "roots: level sizes must match xi");
        p.roots.push_back(lv);
        p.rational_roots.push_back(lr);
      }
    }
    if (j.contains("u")) p.u = read_rational(j.at("u"), "u");
    p.seed = j.value("seed", p.seed);
    p.tol = j.value("tol", p.tol);
    p.samples = j.value("samples", p.samples);
    if (p.samples < 1) fail(ErrorKind::SchemaError, "samples must be positive");
    if (!(p.tol > 0)) fail(ErrorKind::SchemaError, "tol must be positive");
    return p;
  } catch (const json::exception& e) {
    fail(ErrorKind::SchemaError, e.what());
  }
}

json problem_echo(const ProblemSpec& p) {
  json j;
  j["N"] = p.N;
  j["modules"] = p.module_specs;
  j["z"] = json::array();
  for (const auto& z : p.z) j["z"].push_back(to_string(z));
  j["twist"] = {{"model", p.model}};
  if (p.diagonal_twist()) {
    json d = json::array();
    for (int a = 0; a < p.N; ++a) d.push_back(to_string(p.twist(a, a)));
    j["twist"]["diag"] = d;
  } else {
    j["twist"]["full"] = matrix_to_json(p.twist);
  }
  j["xi"] = p.xi;
  if (p.has_roots) {
    if (p.exact_roots) {
      json r = json::array();
      for (const auto& lv : p.rational_roots) {
        json l = json::array();
        for (const auto& x : lv) l.push_back(to_string(x));
        r.push_back(l);
      }
      j["roots"] = r;
    } else {
      j["roots"] = complex_roots_to_json(p.roots);
    }
  }
  j["u"] = to_string(p.u);
  j["seed"] = p.seed;
  j["tol"] = p.tol;
  j["samples"] = p.samples;
  return j;
}

BetheProblem to_bethe(const ProblemSpec& p) { return BetheProblem{p.N, p.modules, p.z, p.twist_diagonal(), p.xi}; }

GaudinProblem to_gaudin(const ProblemSpec& p) { return GaudinProblem{p.N, p.modules, p.z, p.twist_diagonal(), p.xi}; }

LimitProblem to_limit(const ProblemSpec& p) {
  LimitProblem l;
  l.modules = p.modules;
  l.z = p.z;
  l.K = p.twist;
  l.xi = p.xi;
  if (p.has_roots) {
    if (!p.exact_roots) fail(ErrorKind::SchemaError, "limit checks need rational roots");
    l.t = p.rational_roots;
  }
  l.u = p.u;
  l.seed = p.seed;
  return l;
}

ChainSpec to_chain(const ProblemSpec& p) { return ChainSpec{p.modules, p.z, p.twist}; }

json check_to_json(const CheckResult& c) {
  json j{{"name", c.name},
         {"anchor", c.anchor},
         {"status", c.pass ? "pass" : "fail"},
         {"max_abs_error", c.max_abs_error},
         {"runtime_ms", c.runtime_ms}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

json checks_to_json(const CheckList& l) {
  json a = json::array();
  for (const auto& c : l.checks) a.push_back(check_to_json(c));
  return a;
}

json complex_roots_to_json(const Roots<Complex>& t) {
  json r = json::array();
  for (const auto& lv : t) {
    json l = json::array();
    for (const auto& x : lv) l.push_back({x.real(), x.imag()});
    r.push_back(l);
  }
  return r;
}

json matrix_to_json(const Matrix<Rational>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(to_string(m(i, k)));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace bethe::app
