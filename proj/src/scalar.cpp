#include "bethe/scalar.hpp"

#include <algorithm>

#include "bethe/error.hpp"

namespace bethe {

Rational rat(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (t.empty()) fail(ErrorKind::SchemaError, "empty rational");
  Rational r;
  if (r.set_str(t, 10) != 0) fail(ErrorKind::SchemaError, "bad rational '" + s + "'");
  if (sgn(r.get_den()) == 0) fail(ErrorKind::SchemaError, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long RationalSource::next_int(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(gen_() % span);
}

Rational RationalSource::next() { return rat(next_int(-1000, 1000), next_int(1, 1000)); }

Rational RationalSource::next_nonzero() {
  for (;;) {
    Rational r = next();
    if (sgn(r) != 0) return r;
  }
}

std::vector<Rational> sample_points(std::uint64_t seed, int count, const std::vector<Rational>& excluded) {
  RationalSource src(seed);
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    Rational r = src.next();
    if (std::find(excluded.begin(), excluded.end(), r) != excluded.end()) continue;
    if (std::find(out.begin(), out.end(), r) != out.end()) continue;
    out.push_back(r);
  }
  return out;
}

}  // namespace bethe
