#pragma once

#include <cstdint>
#include <vector>

#include "bethe/bethe_xxx.hpp"
#include "bethe/gaudin.hpp"
#include "bethe/report.hpp"

namespace bethe {

// A chain with a (possibly full) twist, the input of the exact identity suites.
struct ChainSpec {
  std::vector<GlModule> modules;
  std::vector<Rational> z;
  Matrix<Rational> Q;

  int N() const { return static_cast<int>(Q.rows()); }
};

// R-matrix identities over `draws` random rational parameters.
CheckList rmatrix_suite(int N, std::uint64_t seed, int draws);

// RTT, fused RTT, transfer commutativity, qdet centrality, trace formulas,
// pencil identities and the modified-transfer generating identity on `c`.
CheckList yangian_suite(const ChainSpec& c, std::uint64_t seed, int draws);

// Bethe vector constructions: trace vs recursion, worked examples, symmetry
// within a level, polynomiality of the weight function.
CheckList bethe_construction_suite(std::uint64_t seed);

// Gaudin weight function sum vs recursion, commuting G_k, both antisymmetrizer
// forms of the differential operator.
CheckList gaudin_identity_suite(std::uint64_t seed);

// Shapovalov forms, symmetry of transfer matrices, positivity, exterior-power intertwiner.
CheckList forms_suite(std::uint64_t seed);

// Expansions of the twisted generating functions at u → ∞ against the
// dynamical Hamiltonians, and the residues of G_2.
CheckList dynamical_suite(std::uint64_t seed);

// Im of the predicted eigenvalues at real sample points, for real data.
CheckResult real_eigenvalue_check(const BetheProblem& p, const Roots<Complex>& t, const std::vector<double>& us,
                                  double tol = 1e-8);
CheckResult real_eigenvalue_check(const GaudinProblem& p, const Roots<Complex>& t, const std::vector<double>& us,
                                  double tol = 1e-8);

// Problems with closed-form roots: XXX t = 1 and Gaudin t = 1/2.
BetheProblem desk_xxx_problem();
GaudinProblem desk_gaudin_problem();

}  // namespace bethe
