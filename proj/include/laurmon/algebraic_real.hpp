#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "laurmon/interval.hpp"
#include "laurmon/laurent.hpp"
#include "laurmon/qpoly.hpp"
#include "laurmon/rational.hpp"

namespace laurmon {

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// A positive real algebraic number: its monic irreducible minimal polynomial
/// over Q together with an isolating interval (lo, hi). The polynomial has
/// exactly one root in (lo, hi), neither endpoint is a root, and the root is > 0.
class AlgebraicReal {
 public:
  /// Validates every invariant (monic, irreducible, one root, positive).
  /// Throws std::invalid_argument otherwise.
  static AlgebraicReal make(QPoly min_poly, Rational lo, Rational hi);
  /// c > 0, with minimal polynomial x - c.
  static AlgebraicReal from_rational(const Rational& c);

  const QPoly& min_poly() const { return min_poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Interval interval() const { return {lo_, hi_}; }
  int degree() const { return min_poly_.degree(); }

  bool is_rational() const { return degree() == 1; }
  /// The exact value; requires is_rational().
  Rational rational_value() const;

 private:
  friend AlgebraicReal make_trusted(QPoly, Rational, Rational);
  AlgebraicReal(QPoly min_poly, Rational lo, Rational hi)
      : min_poly_(std::move(min_poly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

  QPoly min_poly_;
  Rational lo_;
  Rational hi_;
};

/// ell·m = p - q with p, q in N0[x], disjoint supports and ell the least
/// positive integer making ell·m integral. p carries the positive part
/// (and therefore the leading term).
struct MinimalPair {
  NatLaurentPoly p;
  NatLaurentPoly q;
  Integer ell;

  friend bool operator==(const MinimalPair&, const MinimalPair&) = default;
};

// Sturm machinery, exposed for certification and tests.
std::vector<QPoly> sturm_sequence(const QPoly& f);
int sign_variations(const std::vector<QPoly>& sturm, const Rational& x);
/// Distinct roots of the squarefree head of `sturm` in (a, b]; a, b must not be roots.
int count_roots(const std::vector<QPoly>& sturm, const Rational& a, const Rational& b);

/// Squarefree part m / gcd(m, m').
QPoly squarefree_part(const QPoly& m);

/// Every real root > 0 of m, ascending, each tagged with the irreducible
/// factor of m it belongs to. Intervals are pairwise disjoint and have
/// power-of-two denominators. Throws std::domain_error for m = 0.
std::vector<AlgebraicReal> isolate_positive_roots(const QPoly& m);

/// Bisects until hi - lo <= width. Throws std::invalid_argument if width <= 0.
AlgebraicReal refine(const AlgebraicReal& a, const Rational& width);

/// Refines until lo > 0 so that negative powers have finite enclosures.
AlgebraicReal with_positive_lower_bound(const AlgebraicReal& a);

/// A monic factor of m with 1 <= degree < deg m, or nullopt when m is
/// irreducible over Q. Complete: rational-root test, then a bounded search
/// over integer factors whose coefficients obey the Mignotte bound.
std::optional<QPoly> find_factor(const QPoly& m);
bool irreducible_over_Q(const QPoly& m);
/// Monic irreducible factors of the squarefree part of m, without multiplicity.
std::vector<QPoly> irreducible_factors(const QPoly& m);

/// Throws std::invalid_argument for non-monic or reducible m.
MinimalPair minimal_pair(const QPoly& m);

Sign sign_at(const QPoly& f, const AlgebraicReal& a);
Sign sign_at(const IntLaurentPoly& f, const AlgebraicReal& a);
std::strong_ordering compare_to_rational(const AlgebraicReal& a, const Rational& c);

/// 1/a, with the reversed (monic) minimal polynomial.
AlgebraicReal reciprocal(const AlgebraicReal& a);

/// True when a and b denote the same number.
bool same_number(const AlgebraicReal& a, const AlgebraicReal& b);

}  // namespace laurmon
