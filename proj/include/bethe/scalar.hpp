#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace bethe {

using Rational = mpq_class;
using Complex = std::complex<double>;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational from(const Rational& q) { return q; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex from(const Rational& q) { return Complex(q.get_d(), 0.0); }
  static bool is_zero(const Complex& x) { return x.real() == 0.0 && x.imag() == 0.0; }
  static double magnitude(const Complex& x) { return std::abs(x); }
};

template <class S>
S from_rational(const Rational& q) {
  return ScalarTraits<S>::from(q);
}
template <class S>
S from_int(long v) {
  return ScalarTraits<S>::from(Rational(v));
}
template <class S>
bool is_zero(const S& x) {
  return ScalarTraits<S>::is_zero(x);
}
template <class S>
double magnitude(const S& x) {
  return ScalarTraits<S>::magnitude(x);
}

// canonical p/q
Rational rat(long p, long q = 1);
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

long factorial(int n);
long binomial(int n, int k);

// Random rationals with |numerator| and denominator bounded by 1000.
// The raw mt19937_64 stream is fixed by the standard, and we reduce it by
// plain modulo, so draws are the same on every platform.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : gen_(seed) {}
  Rational next();
  Rational next_nonzero();
  long next_int(long lo, long hi);

 private:
  std::mt19937_64 gen_;
};

// Pairwise distinct draws, none in `excluded`.
std::vector<Rational> sample_points(std::uint64_t seed, int count, const std::vector<Rational>& excluded = {});

}  // namespace bethe
