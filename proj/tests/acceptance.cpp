// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "laurmon/classifier.hpp"
#include "oracle.hpp"

using namespace laurmon;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

AlgebraicReal root(const QPoly& m, std::size_t i = 0) { return isolate_positive_roots(m).at(i); }

const QPoly m33{-7, 3, -2, 1};
const QPoly m43{Rational(-2, 3), 0, 1};
const QPoly m49{Rational(1, 2), -2, 1};

bool valid_unit(const NatLaurentPoly& g, const QPoly& m) {
  return !g.is_zero() && g.coeff(0) == 0 && oracle::same_value(g.as_int(), IntLaurentPoly::monomial(1, 0), m);
}

std::vector<VerdictStatus> statuses(const ClassificationReport& r) {
  return {r.atomic.status, r.accp.status, r.bfm.status, r.ffm.status, r.ufm.status, r.hfm.status, r.lfm.status};
}

// p - q = ell m with the remainder oracle's dense arithmetic.
bool reconstructs(const MinimalPair& pair, const QPoly& m) {
  oracle::Dense lhs = oracle::cleared_difference(pair.p.as_int(), pair.q.as_int());
  oracle::Dense rhs = oracle::dense(m);
  for (auto& c : rhs) c *= Rational(pair.ell);
  oracle::trim(rhs);
  return lhs == rhs;
}

void criterion1() {
  auto a = minimal_pair(m33);
  require(a.p == NatLaurentPoly(0, {0, 3, 0, 1}) && a.q == NatLaurentPoly(0, {7, 0, 2}) && a.ell == 1,
          "cubic pair");
  auto b = minimal_pair(m43);
  require(b.p == NatLaurentPoly::monomial(3, 2) && b.q == NatLaurentPoly::monomial(2, 0) && b.ell == 3,
          "surd pair");
  auto c = minimal_pair(m49);
  require(c.p == NatLaurentPoly(0, {1, 0, 2}) && c.q == NatLaurentPoly::monomial(4, 1) && c.ell == 2,
          "quadratic pair");
  for (auto& [pair, m] : {std::pair{a, m33}, std::pair{b, m43}, std::pair{c, m49}})
    require(reconstructs(pair, m), "reconstruction p - q = ell m");
}

void criterion2() {
  auto r = classify(root(m33));
  require(r.atomic.status == VerdictStatus::refuted, "atomic not refuted");
  require(r.atomic.witness.has_value(), "no witness");
  const auto* w = std::get_if<UnitWitness>(&*r.atomic.witness);
  require(w != nullptr, "witness is not a unit representation");
  require(valid_unit(w->g, m33), "witness does not evaluate to 1");
  require(w->g.min_exponent() >= -4 && w->g.max_exponent() < 0, "support outside [-4, 0)");
  for (int e : w->g.support()) require(w->g.coeff(e) <= 14, "coefficient above 14");
  // x^4 g(x) = x^2 + x + 14 as Laurent polynomials.
  require(w->g.shifted(4) == NatLaurentPoly(0, {14, 1, 1}), "identity is not x^4 = x^2 + x + 14");
  require(oracle::represents(QPoly{14, 1, 1}, IntLaurentPoly::monomial(1, 4), m33), "oracle: x^4 != x^2 + x + 14");
  require(r.monic_monomial_checked && !r.monic_monomial, "monic monomial check returned something");
}

void criterion3() {
  const auto alpha = root(m43);
  auto r = classify(alpha);
  require(r.atomic.status == VerdictStatus::proven, "atomic not proven");
  for (auto* v : {&r.accp, &r.bfm, &r.ffm}) require(v->status == VerdictStatus::refuted, "accp/bfm/ffm not refuted");
  require(r.accp.witness.has_value(), "no obstruction");
  const auto* ob = std::get_if<AccpObstruction>(&*r.accp.witness);
  require(ob != nullptr, "witness is not an obstruction");
  require(ob->Q == NatLaurentPoly::monomial(1, 2), "Q != x^2");
  require(ob->residue == NatLaurentPoly::monomial(1, 2), "residue != x^2");
  require(r.accp_chain.has_value() && r.accp_chain->chain_terms.size() == 3, "chain witness missing");
  const auto& t = r.accp_chain->chain_terms;
  // a_n = (alpha^2)^n * 2 = 2 (2/3)^n, b_n = (alpha^2)^n alpha^2 = (2/3)^(n+1), checked independently.
  Rational pw = Rational(2, 3);
  for (std::size_t n = 0; n < 3; ++n) {
    require(t[n].first == QPoly{2 * pw}, "a_n value");
    require(t[n].second == QPoly{pw * Rational(2, 3)}, "b_n value");
    if (n + 1 < 3) require(t[n].first == t[n + 1].first + t[n].second, "a_n != a_{n+1} + b_n");
    pw *= Rational(2, 3);
  }
}

void criterion4() {
  for (std::size_t i : {0u, 1u}) {
    const auto alpha = root(m49, i);
    auto r = classify(alpha);
    using V = VerdictStatus;
    require(statuses(r) == std::vector<V>{V::proven, V::proven, V::proven, V::proven, V::refuted, V::refuted,
                                          V::refuted},
            "verdicts");
    require(r.elasticity == ElasticityClass::infinite, "elasticity");
    MonoidElement beta(NatLaurentPoly::monomial(4, 1), alpha);
    auto fs = enumerate_factorizations_quadratic(beta, alpha);
    require(fs.complete, "not complete");
    std::vector<NatLaurentPoly> got;
    for (auto& f : fs.factorizations) got.push_back(f.multiplicities);
    require(std::set<NatLaurentPoly>(got.begin(), got.end()) ==
                std::set<NatLaurentPoly>{NatLaurentPoly(0, {1, 0, 2}), NatLaurentPoly::monomial(4, 1)} &&
                got.size() == 2,
            "factorization set");
    auto box = embedding_box(beta, alpha);
    Integer cap = 0;
    for (auto& c : box.caps) cap = std::max(cap, c);
    auto brute = brute_force_factorizations(beta, alpha, {box.max_exponent + 1, cap + 1, 100'000'000});
    require(!brute.budget_exhausted, "oracle budget exhausted");
    require(brute.factorizations == fs.factorizations, "oracle disagrees");
    std::vector<NatLaurentPoly> odometer =
        oracle::enumerate_all(beta.repr().as_int(), m49, box.min_exponent, box.max_exponent, 5);
    std::sort(odometer.begin(), odometer.end());
    require(odometer == got, "odometer oracle disagrees");
    require(length_set(fs) == std::vector<Integer>{3, 4}, "length set");
    auto rho = elasticity_of_element(fs);
    require(rho.exact && rho.value == Rational(4, 3), "rho(4 alpha)");
  }
}

void criterion5() {
  const auto alpha = root(m49, 0);
  auto ws = elasticity_witnesses(minimal_pair(m49), alpha, 3);
  require(ws.size() == 3, "three witnesses");
  const std::vector<std::pair<int, int>> want{{3, 4}, {9, 16}, {27, 64}};
  for (std::size_t i = 0; i < 3; ++i) {
    require(ws[i].p_length == want[i].first && ws[i].q_length == want[i].second, "length pair");
    // p(alpha)^n as both p^n and q^n, by the remainder oracle.
    auto pair = minimal_pair(m49);
    require(oracle::same_value(power(pair.p, static_cast<unsigned>(i + 1)).as_int(),
                               power(pair.q, static_cast<unsigned>(i + 1)).as_int(), m49),
            "p^n != q^n");
  }
  require(Rational(ws[2].q_length, ws[2].p_length) == Rational(64, 27), "ratio (4/3)^3");
  auto s = elasticity_witnesses(minimal_pair(m43), root(m43), 6);
  Integer three = 1, two = 1;
  for (auto& w : s) {
    three *= 3;
    two *= 2;
    require(w.p_length == three && w.q_length == two, "surd length pair");
  }
}

void criterion6() {
  const auto alpha = root(m49, 0);
  auto pair = minimal_pair(m49);
  auto [z1, z2] = lfm_counterexample(pair.p, pair.q, alpha);
  require(z1.multiplicities == NatLaurentPoly(1, {5, 0, 2}), "z1 != 2x^3 + 5x");
  require(z2.multiplicities == NatLaurentPoly(0, {1, 0, 6}), "z2 != 6x^2 + 1");
  require(elements_equal(z1.multiplicities, z2.multiplicities, alpha), "not equal as elements");
  require(oracle::same_value(z1.multiplicities.as_int(), z2.multiplicities.as_int(), m49), "oracle: not equal");
  require(z1.length == 7 && z2.length == 7, "lengths");
  require(z1.multiplicities != z2.multiplicities, "not distinct");
}

void criterion7() {
  using V = VerdictStatus;
  for (const auto& r : {classify(Rational(1)), classify(Transcendental{})}) {
    require(statuses(r) == std::vector<V>(7, V::proven), "trivial pole not all proven");
    require(r.elasticity == ElasticityClass::one, "trivial pole elasticity");
  }
  auto unit_of = [](const ClassificationReport& r) -> NatLaurentPoly {
    require(r.atomic.status == V::refuted && r.atomic.witness.has_value(), "atomic not refuted");
    if (auto* u = std::get_if<UnitWitness>(&*r.atomic.witness)) return u->g;
    if (auto* m = std::get_if<MonomialRelation>(&*r.atomic.witness)) return m->unit().g;
    throw Failure{"unexpected witness"};
  };
  require(unit_of(classify(Rational(2))) == NatLaurentPoly::monomial(2, -1), "alpha = 2 witness");
  require(unit_of(classify(Rational(1, 3))) == NatLaurentPoly::monomial(3, 1), "alpha = 1/3 witness");
  require(valid_unit(NatLaurentPoly::monomial(2, -1), QPoly{-2, 1}), "oracle: 2/2 != 1");
  require(valid_unit(NatLaurentPoly::monomial(3, 1), QPoly{Rational(-1, 3), 1}), "oracle: 3/3 != 1");
}

void criterion8() {
  const auto alpha = root(m49, 0);
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 25; ++t) {
    MonoidElement beta(oracle::random_nat(rng, -2, 3, 5), alpha);
    auto box = embedding_box(beta, alpha);
    auto fs = enumerate_factorizations_quadratic(beta, alpha);
    Integer cap = 0;
    for (auto& c : box.caps) cap = std::max(cap, c);
    auto brute = brute_force_factorizations(beta, alpha, {box.max_exponent + 1, cap + 1, 500'000'000});
    require(!brute.budget_exhausted, "oracle budget exhausted");
    require(brute.factorizations == fs.factorizations, "enumerator != oracle");
    for (auto& f : fs.factorizations) {
      require(elements_equal(f.multiplicities, beta.repr(), alpha), "factorization not equal to beta");
      require(oracle::same_value(f.multiplicities.as_int(), beta.repr().as_int(), m49), "oracle: value differs");
      for (int e : f.multiplicities.support())
        require(e >= box.min_exponent && e <= box.max_exponent && f.multiplicities.coeff(e) <= box.cap(e),
                "outside the box");
    }
  }
}

void criterion9() {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> coef(-9, 9);
  int done = 0;
  // Default budget; Unknown verdicts are allowed, contradictions are not.
  const SearchBudget budget{};
  while (done < 50) {
    const int deg = 1 + static_cast<int>(rng() % 3);
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.emplace_back(coef(rng));
    c.emplace_back(1);
    QPoly m(c);
    if (!irreducible_over_Q(m)) continue;
    auto roots = isolate_positive_roots(m);
    if (roots.empty()) continue;
    const auto& alpha = roots[rng() % roots.size()];
    const bool one = alpha.is_rational() && alpha.rational_value() == 1;
    auto r = classify(alpha, budget);
    std::ostringstream name;
    name << "alpha root of " << to_string(m);
    require(hierarchy_violations(r).empty(), "hierarchy violated for " + name.str());
    // Implications checked directly as well.
    auto P = VerdictStatus::proven, R = VerdictStatus::refuted;
    const std::vector<std::pair<const Verdict*, const Verdict*>> edges{
        {&r.ufm, &r.hfm}, {&r.ufm, &r.ffm}, {&r.ufm, &r.lfm}, {&r.hfm, &r.bfm},
        {&r.ffm, &r.bfm}, {&r.bfm, &r.accp}, {&r.accp, &r.atomic}};
    for (auto& [a, b] : edges) require(!(a->status == P && b->status == R), "implication broken for " + name.str());
    if (!one) {
      for (auto* v : {&r.ufm, &r.hfm, &r.lfm}) require(v->status != P, "ufm/hfm/lfm proven for " + name.str());
      require(r.elasticity != ElasticityClass::one, "elasticity One for " + name.str());
    }
    ++done;
  }
}

void criterion10() {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long> small(1, 9);
  int done = 0;
  while (done < 20) {
    QPoly m{1};
    // Known positive roots: exact (lo == hi) or a tight bracket.
    struct Known {
      Rational lo, hi;
    };
    std::vector<Known> known;
    const int factors = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < factors; ++i) {
      if (rng() % 2) {
        Rational r(static_cast<long>(rng() % 21) - 10, small(rng));
        r.canonicalize();
        m = m * QPoly{-r, 1};
        if (r > 0) known.push_back({r, r});
      } else {
        // x^2 - s x + p with a non-square discriminant: irrational or no real roots.
        long s = static_cast<long>(rng() % 11) - 2, p = static_cast<long>(rng() % 13) - 4;
        long disc = s * s - 4 * p;
        long sq = 0;
        while ((sq + 1) * (sq + 1) <= disc) ++sq;
        if (disc >= 0 && sq * sq == disc) continue;
        m = m * QPoly{Rational(p), Rational(-s), 1};
        if (disc > 0) {
          // Roots (s -+ sqrt(disc)) / 2 with sq < sqrt(disc) < sq + 1. The product
          // is p and the sum s, which settles the signs exactly.
          const bool small_pos = p > 0 && s > 0, large_pos = p < 0 || small_pos;
          auto q = [&](const Rational& x) -> Rational { return x * x - Rational(s) * x + Rational(p); };
          for (int sign : {-1, 1}) {
            if ((sign < 0 && !small_pos) || (sign > 0 && !large_pos)) continue;
            Rational lo = sign < 0 ? Rational(s - sq - 1, 2) : Rational(s + sq, 2);
            Rational hi = lo + Rational(1, 2);
            if (lo < 0) lo = 0;
            for (int k = 0; k < 30; ++k) {
              Rational mid = (lo + hi) / 2;
              if ((q(lo) < 0) == (q(mid) < 0)) lo = mid;
              else hi = mid;
            }
            known.push_back({lo, hi});
          }
        }
      }
    }
    if (m.degree() < 1) continue;
    // Repeated factors give identical entries.
    std::sort(known.begin(), known.end(), [](const Known& a, const Known& b) { return a.lo < b.lo; });
    std::vector<Known> distinct;
    for (auto& k : known)
      if (distinct.empty() || distinct.back().lo != k.lo || distinct.back().hi != k.hi) distinct.push_back(k);
    auto roots = isolate_positive_roots(m);
    require(roots.size() == distinct.size(), "positive root count for " + to_string(m));
    for (std::size_t i = 0; i < roots.size(); ++i) {
      require(poly_rem(m, roots[i].min_poly()).is_zero(), "root min poly does not divide");
      if (i > 0) require(roots[i - 1].hi() <= roots[i].lo(), "roots out of order");
      // Refine to the oracle bracket's scale and check containment overlap.
      auto fine = refine(roots[i], Rational(1, 1024));
      if (distinct[i].lo == distinct[i].hi)
        require(fine.interval().contains(distinct[i].lo) || (fine.is_rational() && fine.rational_value() == distinct[i].lo),
                "rational root not enclosed");
      else
        require(fine.hi() >= distinct[i].lo && fine.lo() <= distinct[i].hi, "irrational root outside bracket");
    }
    ++done;
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<void()> body;
  };
  const std::vector<Criterion> all{
      {1, "minimal pairs", 1, criterion1},
      {2, "cubic example classification", 5, criterion2},
      {3, "square root of 2/3 classification and chain", 1, criterion3},
      {4, "x^2 - 2x + 1/2 suite", 10, criterion4},
      {5, "elasticity growth", 0, criterion5},
      {6, "equal-length factorization pair", 0, criterion6},
      {7, "trivial poles of the hierarchy", 0, criterion7},
      {8, "quadratic enumerator vs brute force", 60, criterion8},
      {9, "hierarchy-consistency fuzz", 30, criterion9},
      {10, "root isolation regression", 10, criterion10},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.limit_s > 0 && secs > c.limit_s) {
      ok = false;
      detail = "over the time limit";
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << secs << " s";
    if (c.limit_s > 0) line << ", limit " << c.limit_s << " s";
    line << ")";
    if (!ok) line << " - " << detail;
    std::cout << line.str() << std::endl;
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
