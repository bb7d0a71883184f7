#include "laurmon/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace laurmon {

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator*(const Rational& c, const Interval& a) {
  if (c >= 0) return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

namespace {

Rational rpow(const Rational& x, unsigned n) {
  Rational r(1);
  Rational b = x;
  while (n > 0) {
    if (n & 1U) r *= b;
    n >>= 1U;
    if (n > 0) b *= b;
  }
  return r;
}

}  // namespace

Interval pow(const Interval& a, int n) {
  if (n == 0) return {Rational(1), Rational(1)};
  if (n < 0) {
    if (a.lo <= 0) throw std::domain_error("negative power of an interval touching zero");
    return pow(Interval{1 / a.hi, 1 / a.lo}, -n);
  }
  const auto k = static_cast<unsigned>(n);
  if (a.lo >= 0) return {rpow(a.lo, k), rpow(a.hi, k)};
  if (a.hi <= 0) {
    Rational x = rpow(a.lo, k), y = rpow(a.hi, k);
    return k % 2 == 0 ? Interval{y, x} : Interval{x, y};
  }
  Rational x = rpow(a.lo, k), y = rpow(a.hi, k);
  if (k % 2 == 0) return {Rational(0), std::max(x, y)};
  return {x, y};
}

Interval eval(const QPoly& f, const Interval& a) {
  Interval acc{Rational(0), Rational(0)};
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * a;
    acc.lo += f.coeff(i);
    acc.hi += f.coeff(i);
  }
  return acc;
}

}  // namespace laurmon
