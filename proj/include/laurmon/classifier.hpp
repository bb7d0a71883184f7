#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "laurmon/factorization.hpp"
#include "laurmon/monoid.hpp"

namespace laurmon {

enum class VerdictStatus { proven, refuted, unknown };
enum class AlphaKind { one, rational, quadratic_surd, quadratic_general, algebraic_general, transcendental };
enum class ElasticityClass { one, infinite, unknown };

/// Marker for a number declared transcendental by the caller. Nothing numeric
/// can certify transcendence, so this is taken on trust.
struct Transcendental {};

/// g(alpha) = 1 with 0 outside the support of g.
struct UnitWitness {
  NatLaurentPoly g;
};

/// other(alpha) = alpha^exponent, read off a minimal pair in which one
/// component is the monic monomial x^exponent.
struct MonomialRelation {
  int exponent = 0;
  NatLaurentPoly other;
  bool p_is_monomial = true;

  /// The relation divided by alpha^exponent: a UnitWitness.
  UnitWitness unit() const { return {other.shifted(-exponent)}; }
};

/// p - Q q has nonnegative coefficients for the minimal pair (p, q) of
/// min(alpha, 1/alpha).
struct AccpObstruction {
  MinimalPair pair;
  NatLaurentPoly Q;
  NatLaurentPoly residue;
  /// True when the pair belongs to 1/alpha rather than alpha.
  bool on_reciprocal = false;
};

using Witness = std::variant<UnitWitness, MonomialRelation, AccpObstruction>;

struct Verdict {
  VerdictStatus status = VerdictStatus::unknown;
  /// Short statement of the rule or search that settled the verdict.
  std::string rule;
  std::optional<Witness> witness;
  /// Set for unknown verdicts decided by searches that ran out.
  std::optional<SearchBudget> budget_used;
  std::uint64_t nodes = 0;
};

/// a_n = Q(alpha)^n q(alpha) and b_n = Q(alpha)^n r(alpha) with r = p - Q q.
/// Then a_n = a_{n+1} + b_n, so (a_n + M) is strictly ascending.
struct AccpChainWitness {
  NatLaurentPoly Q;
  NatLaurentPoly r;
  /// (canonical a_n, canonical b_n) for n = 1..k.
  std::vector<std::pair<QPoly, QPoly>> chain_terms;
};

struct ElasticityWitness {
  unsigned n = 0;
  /// Canonical form of p(alpha)^n.
  QPoly element;
  Integer p_length;  ///< p(1)^n
  Integer q_length;  ///< q(1)^n
};

struct ObstructionSearch {
  std::optional<NatLaurentPoly> Q;
  std::optional<NatLaurentPoly> residue;
  /// True when every candidate Q was inside the window, so an empty result
  /// proves no obstruction exists for this pair.
  bool exhaustive = true;
};

struct ClassificationReport {
  AlphaKind kind = AlphaKind::one;
  std::optional<MinimalPair> pair;
  bool monic_monomial_checked = false;
  std::optional<MonomialRelation> monic_monomial;
  Verdict atomic, accp, bfm, ffm, ufm, hfm, lfm;
  ElasticityClass elasticity = ElasticityClass::unknown;
  std::string elasticity_rule;
  std::optional<AccpChainWitness> accp_chain;
  std::optional<std::pair<Factorization, Factorization>> lfm_pair;
  std::vector<ElasticityWitness> elasticity_witnesses;
};

ClassificationReport classify(const AlgebraicReal& alpha, const SearchBudget& budget = {});
ClassificationReport classify(const Rational& alpha, const SearchBudget& budget = {});
ClassificationReport classify(Transcendental, const SearchBudget& budget = {});

AlphaKind kind_of(const AlgebraicReal& alpha);

std::optional<MonomialRelation> monic_monomial_check(const MinimalPair& pair);

/// Smallest monomial Q = x^j with p - Q q >= 0 coefficientwise and |j| <= D.
/// A nonnegative Q works if and only if one of its monomials does, so the
/// search is complete for all Q whose support fits the window.
ObstructionSearch accp_obstruction_search(const MinimalPair& pair, const SearchBudget& budget = {});

/// Throws std::invalid_argument if r = p - Q q is zero or has a negative
/// coefficient, or if (p, q) is not a pair for alpha; std::logic_error if an
/// identity fails to verify.
AccpChainWitness accp_chain_witness(const MinimalPair& pair, const NatLaurentPoly& Q, const AlgebraicReal& alpha,
                                    unsigned k);

/// z1 = x p + q and z2 = x q + p: two distinct factorizations of one element
/// with the same length. Throws std::invalid_argument unless p != q and
/// p(alpha) = q(alpha).
std::pair<Factorization, Factorization> lfm_counterexample(const NatLaurentPoly& p, const NatLaurentPoly& q,
                                                           const AlgebraicReal& alpha);

/// Throws std::invalid_argument for n_max = 0 or a pair that does not match alpha.
std::vector<ElasticityWitness> elasticity_witnesses(const MinimalPair& pair, const AlgebraicReal& alpha,
                                                    unsigned n_max);

/// Human-readable descriptions of every violated implication between the
/// verdicts; empty for a consistent report.
std::vector<std::string> hierarchy_violations(const ClassificationReport& report);

std::string to_string(VerdictStatus s);
std::string to_string(AlphaKind k);
std::string to_string(ElasticityClass e);

}  // namespace laurmon
