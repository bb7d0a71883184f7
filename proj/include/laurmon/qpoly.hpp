#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "laurmon/rational.hpp"

namespace laurmon {

/// Dense univariate polynomial over Q. Index i holds the coefficient of x^i;
/// the highest stored coefficient is nonzero, so the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coefficients);
  QPoly(std::initializer_list<Rational> coefficients)
      : QPoly(std::vector<Rational>(coefficients)) {}

  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  /// Zero outside the stored range.
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;

  QPoly derivative() const;
  QPoly monic() const;
  /// x^deg · f(1/x).
  QPoly reversed() const;

  QPoly& operator+=(const QPoly& g);
  QPoly& operator-=(const QPoly& g);
  QPoly& operator*=(const Rational& c);

  friend QPoly operator+(QPoly f, const QPoly& g) { return f += g; }
  friend QPoly operator-(QPoly f, const QPoly& g) { return f -= g; }
  friend QPoly operator-(const QPoly& f);
  friend QPoly operator*(const QPoly& f, const QPoly& g);
  friend QPoly operator*(QPoly f, const Rational& c) { return f *= c; }
  friend QPoly operator*(const Rational& c, QPoly f) { return f *= c; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: f = g·quotient + remainder with deg remainder < deg g.
/// Throws std::domain_error when g is the zero polynomial.
std::pair<QPoly, QPoly> poly_divrem(const QPoly& f, const QPoly& g);
QPoly poly_rem(const QPoly& f, const QPoly& g);

/// Monic gcd; gcd(0, 0) = 0.
QPoly poly_gcd(QPoly f, QPoly g);

/// Least common multiple of the coefficient denominators (1 for zero).
Integer denominator_lcm(const QPoly& f);

/// Integer polynomial c·f with content 1 and positive leading coefficient.
std::vector<Integer> primitive_part(const QPoly& f);
QPoly from_integers(const std::vector<Integer>& coefficients);

std::string to_string(const QPoly& f);
std::ostream& operator<<(std::ostream& os, const QPoly& f);

}  // namespace laurmon
