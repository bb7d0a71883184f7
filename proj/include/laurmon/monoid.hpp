#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "laurmon/algebraic_real.hpp"
#include "laurmon/laurent.hpp"
#include "laurmon/qpoly.hpp"

namespace laurmon {

/// Bounds for the semi-decision searches: exponents in [-exponent_window,
/// exponent_window], per-exponent coefficients <= coeff_bound, and at most
/// node_limit search nodes.
struct SearchBudget {
  int exponent_window = 8;
  Integer coeff_bound = 10000;
  std::uint64_t node_limit = 10'000'000;

  /// Throws std::invalid_argument unless every field is >= 1.
  void validate() const;
  friend bool operator==(const SearchBudget&, const SearchBudget&) = default;
};

/// The unique polynomial c of degree < deg(min_poly) with c(alpha) = f(alpha).
QPoly canonical_form(const IntLaurentPoly& f, const AlgebraicReal& alpha);

/// Canonical form of x^-1, i.e. of 1/alpha.
QPoly inverse_of_x(const QPoly& min_poly);

/// An element f(alpha) of M_alpha together with its canonical form.
class MonoidElement {
 public:
  MonoidElement(NatLaurentPoly repr, const AlgebraicReal& alpha)
      : repr_(std::move(repr)), canonical_(canonical_form(repr_, alpha)) {}

  const NatLaurentPoly& repr() const { return repr_; }
  const QPoly& canonical() const { return canonical_; }

  /// Equality of values; only meaningful for elements over the same alpha.
  friend bool operator==(const MonoidElement& a, const MonoidElement& b) {
    return a.canonical_ == b.canonical_;
  }

 private:
  NatLaurentPoly repr_;
  QPoly canonical_;
};

bool elements_equal(const NatLaurentPoly& f, const NatLaurentPoly& g, const AlgebraicReal& alpha);

enum class SearchStatus {
  found,
  /// Every candidate inside the window was examined: a certificate of absence there.
  window_exhausted,
  /// The node limit ran out first.
  budget_exhausted,
};

struct SearchResult {
  SearchStatus status = SearchStatus::window_exhausted;
  std::optional<NatLaurentPoly> witness;
  std::uint64_t nodes = 0;
  /// Largest window fully or partially searched.
  int window_reached = 0;
};

/// Looks for g in N0[x, x^-1] with support in [-D, D] \ {0} and g(alpha) = 1.
/// A hit certifies 1 is not an atom, hence M_alpha is not atomic. Windows are
/// deepened from 1 to D, so the first witness found uses the smallest window.
/// Throws std::invalid_argument for alpha = 1.
SearchResult find_unit_representation(const AlgebraicReal& alpha, const SearchBudget& budget);

/// Looks for g with canonical_form(g) = c, support in [-D, D] and at least
/// min_length atoms.
SearchResult member(const QPoly& c, const AlgebraicReal& alpha, const SearchBudget& budget,
                    const Integer& min_length = 0);

struct RepresentationQuery {
  QPoly target;  ///< canonical form of the element
  int min_exponent = 0;
  int max_exponent = 0;
  Integer coeff_bound = 1;
  bool exclude_zero_exponent = false;
  std::uint64_t node_limit = 1;
};

/// Return false to stop the enumeration.
using RepresentationVisitor = std::function<bool(const NatLaurentPoly&)>;

struct EnumerationStats {
  SearchStatus status = SearchStatus::window_exhausted;
  std::uint64_t nodes = 0;
};

/// Enumerates every g in N0[x, x^-1] inside the query window and coefficient
/// bound with canonical_form(g) = target. Search is depth-first over exponents
/// by decreasing alpha^e, pruned with certified enclosures at every positive
/// real conjugate of alpha; the last deg(min_poly) exponents are solved for
/// exactly instead of enumerated. Visiting order is deterministic.
EnumerationStats enumerate_representations(const AlgebraicReal& alpha, const RepresentationQuery& query,
                                           const RepresentationVisitor& visit);

}  // namespace laurmon
