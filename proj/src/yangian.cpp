#include "bethe/yangian.hpp"

namespace bethe {

std::vector<Matrix<Rational>> trig_dynamical_hamiltonians(const std::vector<GlModule>& mods,
                                                          const std::vector<Rational>& z, const std::vector<Rational>& K) {
  if (mods.size() != z.size()) fail(ErrorKind::SchemaError, "one evaluation point per site");
  int N = mods.empty() ? static_cast<int>(K.size()) : mods[0].N;
  if (static_cast<int>(K.size()) != N) fail(ErrorKind::MismatchedN, "twist length differs from N");
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      if (K[a] == K[b]) fail(ErrorKind::DegenerateTwist, "twist entries must be distinct");
  auto c = Chain<Rational>::from_modules(mods, z);
  std::size_t n = mods.size();
  std::vector<Matrix<Rational>> out;
  for (int a = 0; a < N; ++a) {
    Matrix<Rational> eaa = c.generator(a, a);
    Matrix<Rational> x = eaa * eaa * Rational(-1, 2);
    for (std::size_t i = 0; i < n; ++i) x.axpy(z[i], c.site_generator(i, a, a));
    for (int b = 0; b < N; ++b) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) x += c.site_generator(i, a, b) * c.site_generator(j, b, a);
      if (b != a) x.axpy(K[b] / (K[a] - K[b]), c.generator(a, b) * c.generator(b, a) - eaa);
    }
    out.push_back(std::move(x));
  }
  return out;
}

DynamicalExpansion xxx_dynamical_expansion(const std::vector<GlModule>& mods, const std::vector<Rational>& z,
                                           const std::vector<Rational>& K, const Rational& x, std::uint64_t seed) {
  int N = mods.empty() ? static_cast<int>(K.size()) : mods[0].N;
  if (static_cast<int>(K.size()) != N) fail(ErrorKind::MismatchedN, "twist length differs from N");
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      if (K[a] == K[b]) fail(ErrorKind::DegenerateTwist, "twist entries must be distinct");
  Rational px = 1;
  for (const auto& k : K) {
    if (x == k) fail(ErrorKind::PoleAtEvaluationPoint, "x coincides with a twist entry");
    px *= x - k;
  }
  auto chain = Chain<Rational>::from_modules(mods, z);
  Matrix<Rational> q(N, N);
  for (int a = 0; a < N; ++a) q(a, a) = K[a];
  std::size_t D = chain.dim();
  int n = static_cast<int>(mods.size());

  DynamicalExpansion out{Matrix<Rational>(D, D), Matrix<Rational>(D, D), Matrix<Rational>(D, D)};
  for (int k = 0; k <= N; ++k) {
    // In w = 1/u, T_k has the denominator ∏_i ∏_{j<k} (1 − (j + z_i) w) and a
    // numerator of degree ≤ n·k.
    Poly den{Rational(1)};
    std::vector<Rational> excluded{Rational(0)};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) {
        Rational c = j + z[i];
        den = poly_mul(den, Poly{Rational(1), -c});
        if (sgn(c) != 0) excluded.push_back(1 / c);
      }
    int bound = n * k;
    auto ws = sample_points(seed + 101 * k, bound + 2, excluded);
    std::vector<Matrix<Rational>> vals;
    for (const auto& w : ws) vals.push_back(transfer_matrix(chain, q, k, Rational(1 / w)));
    auto num = interpolate_values(ws, vals, den, bound);
    auto ser = series_divide(num, den, 3, Matrix<Rational>(D, D));
    Rational coef = (k % 2 ? -1 : 1) / px;
    for (int p = 0; p < N - k; ++p) coef *= x;
    out.order0.axpy(coef, ser[0]);
    out.order1.axpy(coef, ser[1]);
    out.order2.axpy(coef, ser[2]);
  }
  return out;
}

}  // namespace bethe
