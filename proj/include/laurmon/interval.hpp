#pragma once

#include "laurmon/qpoly.hpp"
#include "laurmon/rational.hpp"

namespace laurmon {

/// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator*(const Rational& c, const Interval& a);
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Enclosure of x^n for x in a (a.lo > 0 required when n < 0).
Interval pow(const Interval& a, int n);

/// Horner enclosure of f over a.
Interval eval(const QPoly& f, const Interval& a);

}  // namespace laurmon
