#pragma once

#include <string>
#include <vector>

#include "bethe/combinatorics.hpp"
#include "bethe/matrix.hpp"

namespace bethe {

using GlWeight = std::vector<int>;

// A finite-dimensional gl_N module as explicit matrices. Indices are 0-based:
// e(a, b) is the action of e_{a+1, b+1}.
struct GlModule {
  int N = 0;
  int dim = 0;
  std::vector<Matrix<Rational>> gens;
  std::vector<GlWeight> weights;
  int hwv = 0;
  std::string label;

  const Matrix<Rational>& e(int a, int b) const { return gens[a * N + b]; }
  const GlWeight& highest_weight() const { return weights[hwv]; }
};

GlModule vector_rep(int N);
GlModule wedge_rep(int N, int k);
GlModule irrep_from_partition(int N, const GlWeight& lambda);

// Columns are Σ_σ sgn σ v_{J∘σ} for sorted J; rows of the projection pick the
// sorted coordinate, so projection·inclusion = Id.
template <class S>
Matrix<S> wedge_inclusion(int N, int k) {
  auto subs = subsets(N, k);
  std::size_t full = 1;
  for (int i = 0; i < k; ++i) full *= N;
  Matrix<S> inc(full, subs.size());
  auto perms = signed_permutations(k);
  for (std::size_t j = 0; j < subs.size(); ++j)
    for (const auto& sp : perms) {
      std::vector<int> t(k);
      for (int i = 0; i < k; ++i) t[i] = subs[j][sp.p[i]];
      inc(tuple_index(t, N), j) = S(sp.sign);
    }
  return inc;
}

template <class S>
Matrix<S> wedge_projection(int N, int k) {
  auto subs = subsets(N, k);
  std::size_t full = 1;
  for (int i = 0; i < k; ++i) full *= N;
  Matrix<S> proj(subs.size(), full);
  for (std::size_t j = 0; j < subs.size(); ++j) proj(j, tuple_index(subs[j], N)) = S(1);
  return proj;
}

// Σ_i 1⊗…⊗e_ab⊗…⊗1 on the full tensor space.
Matrix<Rational> tensor_generator(const std::vector<GlModule>& modules, int a, int b);
std::vector<std::size_t> module_dims(const std::vector<GlModule>& modules);
// Weight of each basis vector of the tensor product.
std::vector<GlWeight> tensor_weights(const std::vector<GlModule>& modules);
// Tensor product of the highest weight vectors.
Vec<Rational> tensor_hwv(const std::vector<GlModule>& modules);
std::vector<Vec<Rational>> singular_space(const std::vector<GlModule>& modules, const GlWeight& weight);

long weyl_dimension(const GlWeight& lambda);
bool is_polynomial_dominant(const GlWeight& lambda);
// Commutation relations, diagonal Cartan with the recorded weights, and hwv
// annihilated by the raising generators.
bool module_invariants_hold(const GlModule& m);

// Λ' = Λ^N + 1 − max{a | Λ^a > Λ^N} (1-based a); an empty max counts as 0.
int lambda_prime(const GlWeight& lambda);

}  // namespace bethe
