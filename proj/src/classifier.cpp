#include "laurmon/classifier.hpp"

#include <stdexcept>

namespace laurmon {

namespace {

Verdict settled(VerdictStatus s, std::string rule, std::optional<Witness> w = std::nullopt) {
  Verdict v;
  v.status = s;
  v.rule = std::move(rule);
  v.witness = std::move(w);
  return v;
}

Verdict unknown(std::string rule, const SearchBudget& budget, std::uint64_t nodes = 0) {
  Verdict v;
  v.rule = std::move(rule);
  v.budget_used = budget;
  v.nodes = nodes;
  return v;
}

void set_all(ClassificationReport& r, const Verdict& v) {
  for (Verdict* p : {&r.atomic, &r.accp, &r.bfm, &r.ffm, &r.ufm, &r.hfm, &r.lfm}) *p = v;
}

// Pushes settled verdicts along the implications between the properties.
void propagate(ClassificationReport& r, const SearchBudget& budget) {
  using enum VerdictStatus;
  auto refute = [](Verdict& v, const std::string& why) {
    if (v.status == unknown) v = settled(refuted, why);
  };
  auto prove = [](Verdict& v, const std::string& why) {
    if (v.status == unknown) v = settled(proven, why);
  };
  if (r.atomic.status == refuted)
    for (Verdict* p : {&r.accp, &r.bfm, &r.ffm, &r.ufm, &r.hfm, &r.lfm}) refute(*p, "implies atomicity, which fails");
  if (r.accp.status == refuted) {
    refute(r.bfm, "implies the ACCP, which fails");
    refute(r.ffm, "implies the ACCP, which fails");
  }
  if (r.accp.status == proven || r.bfm.status == proven || r.ffm.status == proven)
    prove(r.atomic, "implied by the ACCP");
  for (Verdict* p : {&r.atomic, &r.accp, &r.bfm, &r.ffm, &r.ufm, &r.hfm, &r.lfm})
    if (p->status == unknown && !p->budget_used) *p = ::laurmon::unknown("not settled by any rule or search", budget);
}

bool alpha_below_one(const AlgebraicReal& alpha) {
  return compare_to_rational(alpha, Rational(1)) == std::strong_ordering::less;
}

void fill_algebraic_extras(ClassificationReport& r, const AlgebraicReal& alpha) {
  const MinimalPair& pair = *r.pair;
  r.lfm_pair = lfm_counterexample(pair.p, pair.q, alpha);
  r.elasticity_witnesses = elasticity_witnesses(pair, alpha, 3);
}

const char* kNoUnique =
    "algebraic alpha != 1: the minimal pair gives two factorizations of equal length of one element";
const char* kInfinite = "algebraic alpha != 1: powers of the minimal pair give length ratios (q(1)/p(1))^n";

// ACCP refutation through an obstruction on the pair of min(alpha, 1/alpha).
void try_obstruction(ClassificationReport& r, const AlgebraicReal& alpha, const SearchBudget& budget) {
  const bool below = alpha_below_one(alpha);
  const AlgebraicReal small = below ? alpha : reciprocal(alpha);
  const MinimalPair pair = below ? *r.pair : minimal_pair(small.min_poly());
  ObstructionSearch s = accp_obstruction_search(pair, budget);
  if (!s.Q) {
    r.accp = unknown(s.exhaustive ? "no obstruction p - Q q >= 0 exists for the minimal pair; the ACCP stays open"
                                  : "no obstruction p - Q q >= 0 within the exponent window",
                     budget);
    return;
  }
  r.accp = settled(VerdictStatus::refuted, "p - Q q >= 0 for the minimal pair of min(alpha, 1/alpha) gives a "
                                           "strictly ascending chain of principal ideals",
                   AccpObstruction{pair, *s.Q, *s.residue, !below});
  r.accp_chain = accp_chain_witness(pair, *s.Q, small, 3);
}

ClassificationReport classify_rational(const AlgebraicReal& alpha, const SearchBudget& budget) {
  ClassificationReport r;
  const Rational c = alpha.rational_value();
  if (c == 1) {
    r.kind = AlphaKind::one;
    set_all(r, settled(VerdictStatus::proven, "alpha = 1: the monoid is N0"));
    r.elasticity = ElasticityClass::one;
    r.elasticity_rule = "every element has a single factorization";
    return r;
  }
  r.kind = AlphaKind::rational;
  r.pair = minimal_pair(alpha.min_poly());
  r.monic_monomial_checked = true;
  r.monic_monomial = monic_monomial_check(*r.pair);
  const Integer a = c.get_num(), b = c.get_den();
  if (a == 1 || b == 1) {
    // 1 = b·(1/b) or 1 = a·(1/a).
    NatLaurentPoly g = b == 1 ? NatLaurentPoly::monomial(a, -1) : NatLaurentPoly::monomial(b, 1);
    r.atomic = settled(VerdictStatus::refuted, "alpha = a or 1/a: 1 is a sum of copies of a smaller power",
                       UnitWitness{g});
  } else {
    r.atomic = settled(VerdictStatus::proven, "rational a/b with a, b > 1: every element factors into powers");
    try_obstruction(r, alpha, budget);
  }
  r.ufm = r.hfm = r.lfm = settled(VerdictStatus::refuted, kNoUnique);
  r.elasticity = ElasticityClass::infinite;
  r.elasticity_rule = kInfinite;
  propagate(r, budget);
  fill_algebraic_extras(r, alpha);
  return r;
}

bool is_surd(const QPoly& m) { return m.degree() == 2 && m.coeff(1) == 0; }

bool straddles_one(const QPoly& m) { return m.degree() == 2 && m.coeff(0) > 0 && m(Rational(1)) < 0; }

}  // namespace

AlphaKind kind_of(const AlgebraicReal& alpha) {
  const QPoly& m = alpha.min_poly();
  if (m.degree() == 1) return alpha.rational_value() == 1 ? AlphaKind::one : AlphaKind::rational;
  if (m.degree() == 2) return is_surd(m) ? AlphaKind::quadratic_surd : AlphaKind::quadratic_general;
  return AlphaKind::algebraic_general;
}

ClassificationReport classify(const AlgebraicReal& alpha, const SearchBudget& budget) {
  budget.validate();
  if (alpha.is_rational()) return classify_rational(alpha, budget);

  ClassificationReport r;
  const QPoly& m = alpha.min_poly();
  r.kind = kind_of(alpha);
  r.pair = minimal_pair(m);
  r.monic_monomial_checked = true;
  r.monic_monomial = monic_monomial_check(*r.pair);
  r.ufm = r.hfm = r.lfm = settled(VerdictStatus::refuted, kNoUnique);
  r.elasticity = ElasticityClass::infinite;
  r.elasticity_rule = kInfinite;

  if (is_surd(m) && m.coeff(0).get_num() < -1 && m.coeff(0).get_den() > 1) {
    r.atomic = settled(VerdictStatus::proven,
                       "alpha^2 = a/b with a, b > 1: the rational powers are atomic and carry every element");
    try_obstruction(r, alpha, budget);
  } else if (straddles_one(m)) {
    const char* rule = "quadratic with roots 0 < alpha1 < 1 < alpha2: every element has finitely many divisors "
                       "under the conjugate embedding";
    r.atomic = r.accp = r.bfm = r.ffm = settled(VerdictStatus::proven, rule);
  } else if (r.monic_monomial) {
    r.atomic = settled(VerdictStatus::refuted, "a minimal-pair component is a monic monomial", *r.monic_monomial);
  } else {
    SearchResult s = find_unit_representation(alpha, budget);
    if (s.status == SearchStatus::found) {
      r.atomic = settled(VerdictStatus::refuted, "1 is a sum of at least one nonconstant power", UnitWitness{*s.witness});
      r.atomic.nodes = s.nodes;
    } else {
      r.atomic = unknown(s.status == SearchStatus::window_exhausted
                             ? "no representation of 1 within the exponent window and coefficient bound"
                             : "node limit reached while searching for a representation of 1",
                         budget, s.nodes);
    }
    if (r.atomic.status != VerdictStatus::refuted) try_obstruction(r, alpha, budget);
  }
  propagate(r, budget);
  fill_algebraic_extras(r, alpha);
  return r;
}

ClassificationReport classify(const Rational& alpha, const SearchBudget& budget) {
  if (alpha <= 0) throw std::invalid_argument("classify: alpha must be positive, got " + to_string(alpha));
  return classify(AlgebraicReal::from_rational(alpha), budget);
}

ClassificationReport classify(Transcendental, const SearchBudget& budget) {
  budget.validate();
  ClassificationReport r;
  r.kind = AlphaKind::transcendental;
  set_all(r, settled(VerdictStatus::proven,
                     "declared transcendental: the powers of alpha are free, so the monoid is free"));
  r.elasticity = ElasticityClass::one;
  r.elasticity_rule = "every element has a single factorization";
  return r;
}

std::optional<MonomialRelation> monic_monomial_check(const MinimalPair& pair) {
  if (pair.p.is_monic_monomial()) return MonomialRelation{pair.p.min_exponent(), pair.q, true};
  if (pair.q.is_monic_monomial()) return MonomialRelation{pair.q.min_exponent(), pair.p, false};
  return std::nullopt;
}

ObstructionSearch accp_obstruction_search(const MinimalPair& pair, const SearchBudget& budget) {
  budget.validate();
  ObstructionSearch out;
  if (pair.p.is_zero() || pair.q.is_zero()) return out;
  // x^j q <= p needs the support of x^j q inside the support of p.
  const int lo = pair.p.min_exponent() - pair.q.min_exponent();
  const int hi = pair.p.max_exponent() - pair.q.max_exponent();
  for (int j = lo; j <= hi; ++j) {
    if (j < -budget.exponent_window || j > budget.exponent_window) {
      out.exhaustive = false;
      continue;
    }
    IntLaurentPoly r = pair.p.as_int() - pair.q.as_int().shifted(j);
    if (!r.is_nonnegative()) continue;
    out.Q = NatLaurentPoly::monomial(1, j);
    out.residue = NatLaurentPoly(r);
    return out;
  }
  return out;
}

AccpChainWitness accp_chain_witness(const MinimalPair& pair, const NatLaurentPoly& Q, const AlgebraicReal& alpha,
                                    unsigned k) {
  if (k == 0) throw std::invalid_argument("accp_chain_witness: k must be positive");
  if (Q.is_zero()) throw std::invalid_argument("accp_chain_witness: Q = 0");
  if (!elements_equal(pair.p, pair.q, alpha))
    throw std::invalid_argument("accp_chain_witness: p(alpha) != q(alpha)");
  const IntLaurentPoly r = pair.p.as_int() - Q.as_int() * pair.q.as_int();
  if (r.is_zero()) throw std::invalid_argument("accp_chain_witness: p - Q q = 0");
  if (!r.is_nonnegative()) throw std::invalid_argument("accp_chain_witness: p - Q q has a negative coefficient");

  AccpChainWitness w{Q, NatLaurentPoly(r), {}};
  NatLaurentPoly Qn = Q;  // Q^n
  auto a_of = [&](const NatLaurentPoly& qn) { return canonical_form(qn.as_int() * pair.q.as_int(), alpha); };
  QPoly a_n = a_of(Qn);
  for (unsigned n = 1; n <= k; ++n) {
    QPoly b_n = canonical_form(Qn.as_int() * r, alpha);
    NatLaurentPoly next = Qn * Q;
    QPoly a_next = a_of(next);
    if (a_n != a_next + b_n) throw std::logic_error("accp_chain_witness: a_n != a_{n+1} + b_n at n = " + std::to_string(n));
    if (b_n.is_zero()) throw std::logic_error("accp_chain_witness: b_n = 0");
    w.chain_terms.emplace_back(a_n, b_n);
    a_n = std::move(a_next);
    Qn = std::move(next);
  }
  return w;
}

std::pair<Factorization, Factorization> lfm_counterexample(const NatLaurentPoly& p, const NatLaurentPoly& q,
                                                           const AlgebraicReal& alpha) {
  if (p == q) throw std::invalid_argument("lfm_counterexample: the two factorizations coincide");
  if (!elements_equal(p, q, alpha)) throw std::invalid_argument("lfm_counterexample: p(alpha) != q(alpha)");
  const NatLaurentPoly x = NatLaurentPoly::monomial(1, 1);
  Factorization z1(x * p + q), z2(x * q + p);
  if (z1 == z2 || z1.length != z2.length || !elements_equal(z1.multiplicities, z2.multiplicities, alpha))
    throw std::logic_error("lfm_counterexample: output failed verification");
  return {std::move(z1), std::move(z2)};
}

std::vector<ElasticityWitness> elasticity_witnesses(const MinimalPair& pair, const AlgebraicReal& alpha,
                                                    unsigned n_max) {
  if (n_max == 0) throw std::invalid_argument("elasticity_witnesses: n_max must be positive");
  if (!elements_equal(pair.p, pair.q, alpha))
    throw std::invalid_argument("elasticity_witnesses: p(alpha) != q(alpha)");
  std::vector<ElasticityWitness> out;
  NatLaurentPoly pn = pair.p, qn = pair.q;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (!elements_equal(pn, qn, alpha)) throw std::logic_error("elasticity_witnesses: p^n(alpha) != q^n(alpha)");
    out.push_back({n, canonical_form(pn, alpha), eval_at_one(pn), eval_at_one(qn)});
    pn = pn * pair.p;
    qn = qn * pair.q;
  }
  return out;
}

std::vector<std::string> hierarchy_violations(const ClassificationReport& r) {
  using enum VerdictStatus;
  std::vector<std::string> v;
  auto need = [&](bool ok, const char* what) {
    if (!ok) v.emplace_back(what);
  };
  const Verdict* all[] = {&r.atomic, &r.accp, &r.bfm, &r.ffm, &r.ufm, &r.hfm, &r.lfm};
  need(r.ufm.status != proven || (r.ffm.status == proven && r.hfm.status == proven), "ufm proven without ffm and hfm");
  need((r.ffm.status == proven) == (r.bfm.status == proven) && (r.bfm.status == proven) == (r.accp.status == proven),
       "ffm, bfm and accp disagree on proven");
  need(r.accp.status != refuted || (r.bfm.status == refuted && r.ffm.status == refuted),
       "accp refuted but bfm or ffm not refuted");
  if (r.atomic.status == refuted)
    for (const Verdict* p : all) need(p->status == refuted, "atomic refuted but a stronger property is not");
  for (const Verdict* p : all) {
    if (p->status == proven) need(r.atomic.status == proven, "a property is proven while atomicity is not");
    if (p->status != unknown) need(!p->rule.empty(), "settled verdict without a rule");
    else need(p->budget_used.has_value(), "unknown verdict without a budget");
  }
  need(r.ufm.status == r.hfm.status && r.hfm.status == r.lfm.status, "ufm, hfm and lfm disagree");
  need((r.elasticity == ElasticityClass::one) == (r.hfm.status == proven), "elasticity one must match hfm proven");
  if (r.kind != AlphaKind::one && r.kind != AlphaKind::transcendental) {
    need(r.ufm.status != proven && r.hfm.status != proven && r.lfm.status != proven,
         "algebraic alpha != 1 with ufm, hfm or lfm proven");
    need(r.elasticity != ElasticityClass::one, "algebraic alpha != 1 with elasticity one");
  }
  return v;
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::proven: return "Proven";
    case VerdictStatus::refuted: return "Refuted";
    case VerdictStatus::unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(AlphaKind k) {
  switch (k) {
    case AlphaKind::one: return "one";
    case AlphaKind::rational: return "rational";
    case AlphaKind::quadratic_surd: return "quadratic_surd";
    case AlphaKind::quadratic_general: return "quadratic_general";
    case AlphaKind::algebraic_general: return "algebraic_general";
    case AlphaKind::transcendental: return "transcendental";
  }
  return "?";
}

std::string to_string(ElasticityClass e) {
  switch (e) {
    case ElasticityClass::one: return "One";
    case ElasticityClass::infinite: return "Infinite";
    case ElasticityClass::unknown: return "Unknown";
  }
  return "?";
}

}  // namespace laurmon
