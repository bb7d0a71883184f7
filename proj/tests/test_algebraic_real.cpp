#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "laurmon/algebraic_real.hpp"
#include "oracle.hpp"

using namespace laurmon;

namespace {

double approx(const Rational& r) { return r.get_d(); }

// Pair reconstruction oracle: ell*m = p - q, disjoint supports, nonnegative,
// and no smaller positive integer clears the denominators of m.
void check_pair(const QPoly& m, const MinimalPair& pair) {
  IntLaurentPoly lm = pair.p.as_int() - pair.q.as_int();
  auto [cleared, k] = clear_negative_exponents(lm);
  CHECK(k == 0);
  CHECK(cleared == m * Rational(pair.ell));
  for (int e : pair.p.support()) CHECK(pair.q.coeff(e) == 0);
  for (Integer l = 1; l < pair.ell; ++l) {
    bool integral = true;
    for (const auto& c : m.coefficients()) integral = integral && Rational(c * l).get_den() == 1;
    CHECK(!integral);
  }
}

}  // namespace

TEST_CASE("minimal pairs of the worked examples") {
  QPoly m33{-7, 3, -2, 1};
  auto p33 = minimal_pair(m33);
  CHECK(p33.p == NatLaurentPoly(0, {0, 3, 0, 1}));
  CHECK(p33.q == NatLaurentPoly(0, {7, 0, 2}));
  CHECK(p33.ell == 1);
  check_pair(m33, p33);

  QPoly m43{Rational(-2, 3), 0, 1};
  auto p43 = minimal_pair(m43);
  CHECK(p43.p == NatLaurentPoly::monomial(3, 2));
  CHECK(p43.q == NatLaurentPoly::monomial(2, 0));
  CHECK(p43.ell == 3);
  check_pair(m43, p43);

  QPoly m49{Rational(1, 2), -2, 1};
  auto p49 = minimal_pair(m49);
  CHECK(p49.p == NatLaurentPoly(0, {1, 0, 2}));
  CHECK(p49.q == NatLaurentPoly::monomial(4, 1));
  CHECK(p49.ell == 2);
  check_pair(m49, p49);
}

TEST_CASE("minimal_pair rejects reducible or non-monic input") {
  CHECK_THROWS_AS(minimal_pair(QPoly{-1, 0, 1}), std::invalid_argument);  // (x-1)(x+1)
  CHECK_THROWS_AS(minimal_pair(QPoly{-1, 2}), std::invalid_argument);
}

TEST_CASE("property: minimal pair reconstruction on random irreducible polynomials") {
  std::mt19937_64 rng(21);
  int checked = 0;
  while (checked < 60) {
    QPoly m = oracle::random_qpoly(rng, 1 + static_cast<int>(rng() % 3), 9, 5);
    if (m.degree() < 1) continue;
    m = m.monic();
    if (!irreducible_over_Q(m)) continue;
    check_pair(m, minimal_pair(m));
    ++checked;
  }
}

TEST_CASE("irreducibility") {
  CHECK(irreducible_over_Q(QPoly{-2, 0, 1}));
  CHECK(irreducible_over_Q(QPoly{-7, 3, -2, 1}));
  CHECK(irreducible_over_Q(QPoly{1, 0, 0, 0, 1}));  // x^4 + 1
  CHECK(!irreducible_over_Q(QPoly{4, 0, 0, 0, 1}));  // x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
  CHECK(!irreducible_over_Q(QPoly{-4, 0, 1}));
  CHECK(!irreducible_over_Q(QPoly{1, 2, 1}));
  CHECK(!irreducible_over_Q(QPoly{0, 0, 1}));
  CHECK(irreducible_over_Q(QPoly{Rational(1, 2), -2, 1}));
  auto f = find_factor(QPoly{4, 0, 0, 0, 1});
  REQUIRE(f.has_value());
  CHECK(f->degree() == 2);
  CHECK(poly_rem(QPoly{4, 0, 0, 0, 1}, *f).is_zero());
}

TEST_CASE("property: products of two factors are found reducible with a true divisor") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    QPoly a = oracle::random_qpoly(rng, 1 + static_cast<int>(rng() % 3), 6, 3);
    QPoly b = oracle::random_qpoly(rng, 1 + static_cast<int>(rng() % 3), 6, 3);
    if (a.degree() < 1 || b.degree() < 1) continue;
    QPoly m = (a * b).monic();
    auto f = find_factor(m);
    REQUIRE(f.has_value());
    CHECK(f->degree() >= 1);
    CHECK(f->degree() < m.degree());
    CHECK(poly_rem(m, *f).is_zero());
  }
}

TEST_CASE("root isolation basics") {
  auto roots = isolate_positive_roots(QPoly{-7, 3, -2, 1});
  REQUIRE(roots.size() == 1);
  auto r33 = refine(roots[0], Rational(1, 8));
  CHECK(r33.lo() >= 2);
  CHECK(r33.hi() <= 3);
  auto r49 = isolate_positive_roots(QPoly{Rational(1, 2), -2, 1});
  REQUIRE(r49.size() == 2);
  CHECK(r49[0].hi() <= r49[1].lo());
  CHECK(refine(r49[0], Rational(1, 8)).hi() < 1);
  CHECK(refine(r49[1], Rational(1, 8)).lo() > 1);
  CHECK(isolate_positive_roots(QPoly{1, 0, 1}).empty());
  CHECK_THROWS_AS(isolate_positive_roots(QPoly{}), std::domain_error);
}

TEST_CASE("property: isolated roots match constructed products") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> small(1, 9);
  for (int t = 0; t < 40; ++t) {
    QPoly m{1};
    std::vector<double> expected;
    const int factors = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < factors; ++i) {
      if (rng() % 2) {
        Rational r(static_cast<long>(rng() % 19) - 9, small(rng));
        r.canonicalize();
        m = m * QPoly{-r, 1};
        if (r > 0) expected.push_back(approx(r));
      } else {
        // x^2 - b x + c with b^2 - 4c > 0 not a square, or no real roots.
        long b = static_cast<long>(rng() % 13) - 6, c = small(rng) - 3;
        long disc = b * b - 4 * c;
        long sq = static_cast<long>(std::lround(std::sqrt(static_cast<double>(std::max(0L, disc)))));
        if (disc >= 0 && sq * sq == disc) continue;
        m = m * QPoly{Rational(c), Rational(-b), 1};
        if (disc > 0) {
          for (double r : {(b - std::sqrt(double(disc))) / 2, (b + std::sqrt(double(disc))) / 2})
            if (r > 0) expected.push_back(r);
        }
      }
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end(),
                               [](double x, double y) { return std::abs(x - y) < 1e-12; }),
                   expected.end());
    auto roots = isolate_positive_roots(m);
    REQUIRE(roots.size() == expected.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(approx(roots[i].lo()) <= expected[i] + 1e-9);
      CHECK(approx(roots[i].hi()) >= expected[i] - 1e-9);
      CHECK(poly_rem(m, roots[i].min_poly()).is_zero());
      if (i > 0) CHECK(roots[i - 1].hi() <= roots[i].lo());
    }
  }
}

TEST_CASE("AlgebraicReal validation and refinement") {
  CHECK_THROWS_AS(AlgebraicReal::make(QPoly{-2, 0, 1}, 0, 1), std::invalid_argument);    // no root
  CHECK_THROWS_AS(AlgebraicReal::make(QPoly{-2, 0, 2}, 1, 2), std::invalid_argument);    // not monic
  CHECK_THROWS_AS(AlgebraicReal::make(QPoly{-4, 0, 1}, 1, 3), std::invalid_argument);    // reducible
  CHECK_THROWS_AS(AlgebraicReal::make(QPoly{-2, 0, 1}, -2, 2), std::invalid_argument);   // negative end
  CHECK_THROWS_AS(AlgebraicReal::make(QPoly{-2, 0, 1}, 2, 1), std::invalid_argument);
  auto s2 = AlgebraicReal::make(QPoly{-2, 0, 1}, 1, 2);
  auto fine = refine(s2, Rational(1, 1000000));
  CHECK(fine.interval().width() <= Rational(1, 1000000));
  CHECK(std::abs(approx(fine.lo()) - std::sqrt(2.0)) < 1e-6);
  CHECK_THROWS_AS(refine(s2, 0), std::invalid_argument);
  auto half = AlgebraicReal::from_rational(Rational(1, 2));
  CHECK(half.is_rational());
  CHECK(half.rational_value() == Rational(1, 2));
  CHECK(refine(half, Rational(1, 64)).interval().contains(Rational(1, 2)));
}

TEST_CASE("signs, comparisons, reciprocals") {
  auto s2 = AlgebraicReal::make(QPoly{-2, 0, 1}, 1, 2);
  CHECK(sign_at(QPoly{Rational(-7, 5), 1}, s2) == Sign::positive);   // sqrt2 - 1.4
  CHECK(sign_at(QPoly{Rational(-3, 2), 1}, s2) == Sign::negative);
  CHECK(sign_at(QPoly{-2, 0, 1}, s2) == Sign::zero);
  CHECK(sign_at(IntLaurentPoly(-1, {2, 0, -1}), s2) == Sign::zero);  // 2/x - x
  CHECK(compare_to_rational(s2, Rational(1)) == std::strong_ordering::greater);
  CHECK(compare_to_rational(s2, Rational(3, 2)) == std::strong_ordering::less);
  auto inv = reciprocal(s2);
  CHECK(inv.min_poly() == QPoly{Rational(-1, 2), 0, 1});
  CHECK(compare_to_rational(inv, Rational(1)) == std::strong_ordering::less);
  auto roots = isolate_positive_roots(QPoly{Rational(-1, 2), 0, 1});
  REQUIRE(roots.size() == 1);
  CHECK(same_number(inv, roots[0]));
  CHECK(!same_number(s2, roots[0]));
}
