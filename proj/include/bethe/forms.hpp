#pragma once

#include <vector>

#include "bethe/reps.hpp"

namespace bethe {

// Gram matrix of the Shapovalov form in the module basis.
Matrix<Rational> shapovalov_gram(const GlModule& m);

// ⊗ of the Shapovalov Gram matrices.
Matrix<Rational> tensor_shapovalov(const std::vector<GlModule>& mods);

// Where R_{LM}(u) is known to blow up (pole) or lose rank (degenerate value).
struct IntertwinerSingularities {
  int pole;        // Λ'_L − Λ¹_M
  int degenerate;  // Λ¹_L − Λ'_M
};
IntertwinerSingularities intertwiner_singularities(const GlModule& L, const GlModule& M);

// The rational R-matrix R_{LM}(u) on L ⊗ M, solved exactly weight block by
// weight block. DegenerateAt when the system has no or several solutions.
Matrix<Rational> intertwiner_R(const GlModule& L, const GlModule& M, const Rational& u);

// →∏_{i<j} R^{(ij)}_{M_i M_j}(z_i − z_j)
Matrix<Rational> chain_R(const std::vector<GlModule>& mods, const std::vector<Rational>& z);

// ←∏_{i<j} R^{(ji)}_{M_j M_i}(z_j − z_i), the inverse of chain_R
Matrix<Rational> chain_R_reversed(const std::vector<GlModule>& mods, const std::vector<Rational>& z);

// Gram matrix of S^z(w₁, w₂) = ⊗S(w₁, R(z) w₂).
Matrix<Rational> deformed_form(const std::vector<GlModule>& mods, const std::vector<Rational>& z);

// S(A w₁, w₂) = S(w₁, A w₂) for the bilinear form with Gram matrix g.
template <class S>
bool symmetric_wrt(const Matrix<S>& g, const Matrix<S>& a) {
  return a.transpose() * g == g * a;
}

template <class S>
double symmetry_defect(const Matrix<S>& g, const Matrix<S>& a) {
  return max_abs_diff(Matrix<S>(a.transpose() * g), Matrix<S>(g * a));
}

}  // namespace bethe
