#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "bethe/bethe_xxx.hpp"
#include "bethe/gaudin.hpp"

namespace bethe {

struct SolveOptions {
  int starts = 20;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  int max_iter = 50;
  double cluster_radius = 1e-6;
  double offdiag_tol = 1e-8;
};

struct SolvedRoots {
  Roots<Complex> t;
  double residual = 0;  // max |BAE residual|
  bool offdiagonal = true;
  int hits = 0;         // starts that landed here
  int first_start = 0;
};

struct StartOutcome {
  int iterations = 0;
  bool converged = false;
  int root = -1;  // index into SolveReport::roots
  std::string note;
};

struct SolveReport {
  std::vector<SolvedRoots> roots;
  std::vector<StartOutcome> starts;
  int duplicates_merged = 0;
  bool success() const { return !roots.empty(); }
  std::string diagnostics;
};

using AnyProblem = std::variant<BetheProblem, GaudinProblem>;

// Residuals in (level, index) order with their Jacobian, from the
// XXX equations in product form or the Gaudin equations with their
// denominators cleared (the pole form has a spurious zero at infinity).
struct BaeSystem {
  virtual ~BaeSystem() = default;
  virtual int size() const = 0;
  virtual void eval(const std::vector<Complex>& x, std::vector<Complex>& F,
                    std::vector<std::vector<Complex>>* J) const = 0;
};

std::unique_ptr<BaeSystem> make_bae_system(const AnyProblem& p);

// Canonical order: levels kept apart, each level sorted by real then imaginary part.
Roots<Complex> canonical_roots(Roots<Complex> t);

// Max distance between two configurations after matching roots level by level.
double roots_distance(const Roots<Complex>& a, const Roots<Complex>& b);

// Damped Newton from seeded starts, merged by clustering. Starts are drawn from
// the midpoint of the z_i, shifted by −a/2 on level a, plus a uniform complex
// perturbation whose box half-width is 1 + spread(z)/2 + max Λ¹.
SolveReport solve_bae(const AnyProblem& p, const SolveOptions& opt);

}  // namespace bethe
