#pragma once

#include <stdexcept>
#include <vector>

#include "laurmon/monoid.hpp"

namespace laurmon {

/// Multiplicity of each atom alpha^i, keyed by exponent i.
struct Factorization {
  NatLaurentPoly multiplicities;
  Integer length;

  explicit Factorization(NatLaurentPoly g);

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.multiplicities == b.multiplicities;
  }
  friend auto operator<=>(const Factorization& a, const Factorization& b) {
    return a.multiplicities <=> b.multiplicities;
  }
};

struct FactorizationSet {
  MonoidElement element;
  /// Sorted ascending, pairwise distinct.
  std::vector<Factorization> factorizations;
  /// True only when the enumeration is provably the whole of Z(beta).
  bool complete = false;
  bool budget_exhausted = false;
};

/// Thrown when alpha's minimal polynomial is not a quadratic whose roots
/// satisfy 0 < root < 1 < other root.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Region of the plane (value at alpha, value at its conjugate) that holds
/// every factorization of beta, reduced to an exponent window and per-exponent
/// coefficient caps.
struct EmbeddingBox {
  Interval v1;  ///< encloses beta evaluated at alpha
  Interval v2;  ///< encloses beta evaluated at the other root
  int min_exponent = 0;
  int max_exponent = 0;
  /// Indexed by exponent - min_exponent.
  std::vector<Integer> caps;

  const Integer& cap(int exponent) const;
  friend bool operator==(const EmbeddingBox&, const EmbeddingBox&) = default;
};

/// alpha may be either root of its quadratic minimal polynomial. The window is
/// symmetric, [-m, m], with m the largest |n| such that the atom alpha^n fits
/// inside the box at both roots. Caps take the tighter of the two root bounds.
/// Throws HypothesisError when the roots do not straddle 1.
EmbeddingBox embedding_box(const MonoidElement& beta, const AlgebraicReal& alpha);

/// Every factorization of beta (complete = true). Throws std::invalid_argument
/// for beta = 0, HypothesisError as embedding_box.
FactorizationSet enumerate_factorizations_quadratic(const MonoidElement& beta, const AlgebraicReal& alpha);

/// brute_force_factorizations stops after this many and sets budget_exhausted.
inline constexpr std::size_t kMaxListedFactorizations = 100000;

/// Factorizations of beta with support in [-D, D] and coefficients <= coeff_bound
/// (complete = false). Throws std::invalid_argument for beta = 0.
FactorizationSet brute_force_factorizations(const MonoidElement& beta, const AlgebraicReal& alpha,
                                            const SearchBudget& budget);

/// Distinct lengths, ascending.
std::vector<Integer> length_set(const FactorizationSet& fs);

struct ElementElasticity {
  Rational value;
  /// False when fs is incomplete: value is then only a lower bound.
  bool exact = false;
};

/// max L / min L. Throws std::invalid_argument on an empty set.
ElementElasticity elasticity_of_element(const FactorizationSet& fs);

}  // namespace laurmon
