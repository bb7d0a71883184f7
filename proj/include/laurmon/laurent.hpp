#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "laurmon/qpoly.hpp"
#include "laurmon/rational.hpp"

namespace laurmon {

/// Laurent polynomial in Z[x, x^-1] stored as an exponent offset plus a dense
/// slice. Index j holds the coefficient of x^(min_exponent + j). The first and
/// last stored coefficients are nonzero; zero is the empty slice.
class IntLaurentPoly {
 public:
  IntLaurentPoly() = default;
  IntLaurentPoly(int min_exponent, std::vector<Integer> coefficients);
  IntLaurentPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  IntLaurentPoly(long constant) : IntLaurentPoly(Integer(constant)) {}  // NOLINT

  static IntLaurentPoly monomial(const Integer& c, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  /// Only meaningful for nonzero polynomials.
  int min_exponent() const { return min_exp_; }
  int max_exponent() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& coeff(int exponent) const;
  std::vector<int> support() const;
  std::size_t term_count() const;

  bool is_nonnegative() const;
  /// x^k · f.
  IntLaurentPoly shifted(int k) const;

  IntLaurentPoly& operator+=(const IntLaurentPoly& g);
  IntLaurentPoly& operator-=(const IntLaurentPoly& g);

  friend IntLaurentPoly operator+(IntLaurentPoly f, const IntLaurentPoly& g) { return f += g; }
  friend IntLaurentPoly operator-(IntLaurentPoly f, const IntLaurentPoly& g) { return f -= g; }
  friend IntLaurentPoly operator-(const IntLaurentPoly& f);
  friend IntLaurentPoly operator*(const IntLaurentPoly& f, const IntLaurentPoly& g);
  friend IntLaurentPoly operator*(const Integer& c, const IntLaurentPoly& f);

  friend bool operator==(const IntLaurentPoly& a, const IntLaurentPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.coeffs_.empty() || a.min_exp_ == b.min_exp_);
  }
  /// Lexicographic over ascending exponents; a missing term counts as 0.
  friend std::strong_ordering operator<=>(const IntLaurentPoly& a, const IntLaurentPoly& b);

 private:
  void trim();
  int min_exp_ = 0;
  std::vector<Integer> coeffs_;
};

/// Element of N0[x, x^-1]: an IntLaurentPoly whose coefficients are all >= 0.
/// Construction from a polynomial with a negative coefficient throws
/// std::invalid_argument.
class NatLaurentPoly {
 public:
  NatLaurentPoly() = default;
  explicit NatLaurentPoly(IntLaurentPoly poly);
  NatLaurentPoly(int min_exponent, std::vector<Integer> coefficients)
      : NatLaurentPoly(IntLaurentPoly(min_exponent, std::move(coefficients))) {}

  static NatLaurentPoly monomial(const Integer& c, int exponent) {
    return NatLaurentPoly(IntLaurentPoly::monomial(c, exponent));
  }

  const IntLaurentPoly& as_int() const { return poly_; }
  operator const IntLaurentPoly&() const { return poly_; }  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return poly_.is_zero(); }
  int min_exponent() const { return poly_.min_exponent(); }
  int max_exponent() const { return poly_.max_exponent(); }
  const std::vector<Integer>& coefficients() const { return poly_.coefficients(); }
  const Integer& coeff(int exponent) const { return poly_.coeff(exponent); }
  std::vector<int> support() const { return poly_.support(); }
  NatLaurentPoly shifted(int k) const { return NatLaurentPoly(poly_.shifted(k), Trusted{}); }

  /// x^e monomial with coefficient 1.
  bool is_monic_monomial() const;

  friend NatLaurentPoly operator+(const NatLaurentPoly& f, const NatLaurentPoly& g) {
    return NatLaurentPoly(f.poly_ + g.poly_, Trusted{});
  }
  friend NatLaurentPoly operator*(const NatLaurentPoly& f, const NatLaurentPoly& g) {
    return NatLaurentPoly(f.poly_ * g.poly_, Trusted{});
  }
  friend bool operator==(const NatLaurentPoly&, const NatLaurentPoly&) = default;
  friend std::strong_ordering operator<=>(const NatLaurentPoly& a, const NatLaurentPoly& b) {
    return a.poly_ <=> b.poly_;
  }

 private:
  struct Trusted {};
  NatLaurentPoly(IntLaurentPoly poly, Trusted) : poly_(std::move(poly)) {}
  IntLaurentPoly poly_;
};

/// Splits f into its positive and negative parts: pos - neg = f, disjoint supports.
std::pair<NatLaurentPoly, NatLaurentPoly> laurent_split(const IntLaurentPoly& f);

/// Coefficient sum f(1); for a factorization this is its length.
Integer eval_at_one(const NatLaurentPoly& f);

IntLaurentPoly laurent_mul(const IntLaurentPoly& f, const IntLaurentPoly& g);

NatLaurentPoly power(const NatLaurentPoly& f, unsigned n);

/// Returns (x^k · f as a polynomial, k) with k = max(0, -min_exponent).
std::pair<QPoly, int> clear_negative_exponents(const IntLaurentPoly& f);

/// Integer polynomial as a Laurent polynomial; throws if a coefficient is not integral.
IntLaurentPoly to_laurent(const QPoly& f);

std::string to_string(const IntLaurentPoly& f);
inline std::string to_string(const NatLaurentPoly& f) { return to_string(f.as_int()); }
std::ostream& operator<<(std::ostream& os, const IntLaurentPoly& f);
std::ostream& operator<<(std::ostream& os, const NatLaurentPoly& f);

}  // namespace laurmon
