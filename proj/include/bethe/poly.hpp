#pragma once

#include <string>
#include <vector>

#include "bethe/error.hpp"
#include "bethe/matrix.hpp"
#include "bethe/scalar.hpp"

namespace bethe {

// Coefficients, lowest degree first.
using Poly = std::vector<Rational>;

Rational poly_eval(const Poly& p, const Rational& x);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& s);
Poly poly_trim(Poly p);
// ∏ (x − r)
Poly poly_from_roots(const std::vector<Rational>& roots);
// ∏ (c0 + c1 x) for linear factors given as {c0, c1}
Poly poly_from_linear(const std::vector<std::pair<Rational, Rational>>& factors);
std::string poly_to_string(const Poly& p, const std::string& var = "u");

// Weights W with p_j = Σ_i W[j][i] y_i for the degree < n interpolant through
// (x_i, y_i), i < n.
std::vector<std::vector<Rational>> interpolation_weights(const std::vector<Rational>& xs);

struct RationalFunctionSample {
  std::vector<Rational> points;
  std::vector<Rational> values;
  Poly denominator;
  int numerator_degree_bound = 0;
};

// Numerator p with values[i]·denominator(points[i]) = p(points[i]). The
// points beyond the first bound+1 are held out and must agree.
Poly interpolate_with_known_denominator(const RationalFunctionSample& s);

// Same, for values living in any space with `+` and scaling by a Rational
// (matrices, vectors). Returns the coefficient list of the numerator.
template <class V>
std::vector<V> interpolate_values(const std::vector<Rational>& points, const std::vector<V>& values,
                                  const Poly& denominator, int degree_bound) {
  std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
  if (points.size() < need || points.size() != values.size())
    fail(ErrorKind::DegreeBoundExceeded, "not enough sample points for the degree bound");
  std::vector<V> scaled;
  scaled.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    Rational d = poly_eval(denominator, points[i]);
    scaled.push_back(values[i] * d);
  }
  std::vector<Rational> xs(points.begin(), points.begin() + need);
  auto w = interpolation_weights(xs);
  std::vector<V> coeffs;
  for (std::size_t j = 0; j < need; ++j) {
    V acc = scaled[0] * w[j][0];
    for (std::size_t i = 1; i < need; ++i) acc = acc + scaled[i] * w[j][i];
    coeffs.push_back(std::move(acc));
  }
  for (std::size_t i = need; i < points.size(); ++i) {
    V acc = coeffs[0];
    Rational xp = 1;
    for (std::size_t j = 1; j < need; ++j) {
      xp *= points[i];
      acc = acc + coeffs[j] * xp;
    }
    if (!(acc == scaled[i]))
      fail(ErrorKind::DegreeBoundExceeded, "held-out sample at " + to_string(points[i]) + " disagrees");
  }
  return coeffs;
}

// Power series of P/D to `order` terms (D[0] != 0).
template <class V>
std::vector<V> series_divide(const std::vector<V>& num, const Poly& den, std::size_t order, const V& zero) {
  if (den.empty() || sgn(den[0]) == 0) fail(ErrorKind::PoleAtSample, "series_divide: denominator vanishes at 0");
  Rational inv0 = Rational(1) / den[0];
  std::vector<V> f;
  for (std::size_t k = 0; k < order; ++k) {
    V acc = k < num.size() ? num[k] : zero;
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) {
      if (sgn(den[j]) == 0) continue;
      acc = acc - f[k - j] * den[j];
    }
    f.push_back(acc * inv0);
  }
  return f;
}

}  // namespace bethe
