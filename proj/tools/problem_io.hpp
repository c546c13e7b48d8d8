#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "bethe/limits.hpp"
#include "bethe/suites.hpp"

namespace bethe::app {

using json = nlohmann::json;

// Parsed problem file. Rationals are read from strings ("3/4") or integers;
// complex roots from [re, im] pairs.
struct ProblemSpec {
  int N = 0;
  std::vector<GlModule> modules;
  json module_specs = json::array();  // normalized descriptors, for the echo
  std::vector<Rational> z;
  std::string model = "xxx";  // "xxx" or "gaudin"
  Matrix<Rational> twist;
  std::vector<int> xi;
  bool has_roots = false;
  Roots<Complex> roots;
  bool exact_roots = false;  // every root given as a rational
  Roots<Rational> rational_roots;
  Rational u = Rational(7, 5);
  std::uint64_t seed = 1;
  double tol = 1e-10;
  int samples = 10;

  bool diagonal_twist() const { return twist.is_diagonal(); }
  std::vector<Rational> twist_diagonal() const;
};

ProblemSpec parse_problem(const json& j);
json problem_echo(const ProblemSpec& p);

BetheProblem to_bethe(const ProblemSpec& p);
GaudinProblem to_gaudin(const ProblemSpec& p);
LimitProblem to_limit(const ProblemSpec& p);
ChainSpec to_chain(const ProblemSpec& p);

json check_to_json(const CheckResult& c);
json checks_to_json(const CheckList& l);
json complex_roots_to_json(const Roots<Complex>& t);
json matrix_to_json(const Matrix<Rational>& m);

}  // namespace bethe::app
