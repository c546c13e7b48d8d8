#pragma once

#include <cstdint>
#include <vector>

#include "bethe/bethe_xxx.hpp"
#include "bethe/gaudin.hpp"
#include "bethe/poly.hpp"
#include "bethe/report.hpp"

namespace bethe {

// Sample points in ε for a function whose numerator, after multiplying by
// `den`, has degree ≤ bound: bound + 1 points plus `held_out` extra.
std::vector<Rational> eps_points(const Poly& den, int bound, std::uint64_t seed, int held_out = 2);

// Taylor coefficients ε^0..ε^{order−1} of f(ε) = p(ε)/den(ε) from samples of f.
template <class V>
std::vector<V> eps_expand(const std::vector<Rational>& pts, const std::vector<V>& vals, const Poly& den, int bound,
                          std::size_t order, const V& zero) {
  auto num = interpolate_values(pts, vals, den, bound);
  return series_divide(num, den, order, zero);
}

// Data for the XXX → Gaudin scaling checks. Bethe-side checks (weight
// function, Bethe equations, master operator) need a diagonal K and roots.
struct LimitProblem {
  std::vector<GlModule> modules;
  std::vector<Rational> z;
  Matrix<Rational> K;
  std::vector<int> xi;
  Roots<Rational> t;
  Rational u = Rational(7, 5);
  std::uint64_t seed = 1;

  int N() const { return modules.empty() ? static_cast<int>(K.rows()) : modules[0].N; }
  bool diagonal_twist() const;
  Matrix<Rational> Q(const Rational& eps) const;  // 1 + εK
};

// T_ab(u/ε; z/ε) = δ_ab + ε L_ab(u; z) + O(ε²)
CheckResult check_monodromy_limit(const LimitProblem& p);
// S_{k,1+εK}(u/ε; z/ε) = ε^k G_{k,K}(u; z) + O(ε^{k+1}), every k
CheckResult check_transfer_limit(const LimitProblem& p);
// 𝔇_{N,1+εK}(u/ε, ε∂; z/ε) = ε^N 𝒟_K(u, ∂; z) + O(ε^{N+1})
CheckResult check_difference_operator_limit(const LimitProblem& p);
// rescaled universal weight function = ε^{|ξ|} 𝔽_ξ + O(ε^{|ξ|+1})
CheckResult check_weight_function_limit(const LimitProblem& p);
// XXX Bethe ratio = 1 + ε·(Gaudin Bethe expression) + O(ε²)
CheckResult check_bethe_equation_limit(const LimitProblem& p);
// scaled fundamental difference operator = ε^N·(master operator) at leading order
CheckResult check_master_operator_limit(const LimitProblem& p);
// S^{z/ε} → ⊗S; floating comparison at ε = eps
CheckResult check_form_limit(const LimitProblem& p, const Rational& eps = Rational(1, 10000), double tol = 1e-8);

CheckList limit_suite(const LimitProblem& p);

}  // namespace bethe
