#include "bethe/poly.hpp"

#include <sstream>

namespace bethe {

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly poly_trim(Poly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Poly poly_scale(const Poly& a, const Rational& s) {
  Poly out(a);
  for (auto& x : out) x *= s;
  return out;
}

Poly poly_from_roots(const std::vector<Rational>& roots) {
  Poly p{Rational(1)};
  for (const auto& r : roots) p = poly_mul(p, Poly{-r, Rational(1)});
  return p;
}

Poly poly_from_linear(const std::vector<std::pair<Rational, Rational>>& factors) {
  Poly p{Rational(1)};
  for (const auto& [c0, c1] : factors) p = poly_mul(p, Poly{c0, c1});
  return p;
}

std::string poly_to_string(const Poly& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(p[i]);
    if (i == 1) os << "*" << var;
    if (i > 1) os << "*" << var << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<std::vector<Rational>> interpolation_weights(const std::vector<Rational>& xs) {
  // Row j of the inverse Vandermonde matrix, assembled from the Lagrange basis
  // polynomials ℓ_i(x) = ∏_{k≠i} (x − x_k)/(x_i − x_k).
  std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      if (xs[i] == xs[k]) fail(ErrorKind::PoleAtSample, "interpolation nodes must be distinct");
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    Poly l{Rational(1)};
    Rational denom = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      l = poly_mul(l, Poly{-xs[k], Rational(1)});
      denom *= xs[i] - xs[k];
    }
    for (std::size_t j = 0; j < n; ++j) w[j][i] = l[j] / denom;
  }
  return w;
}

Poly interpolate_with_known_denominator(const RationalFunctionSample& s) {
  return interpolate_values<Rational>(s.points, s.values, s.denominator, s.numerator_degree_bound);
}

}  // namespace bethe
