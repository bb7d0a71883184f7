#include "laurmon/algebraic_real.hpp"

#include <algorithm>
#include <stdexcept>

namespace laurmon {

AlgebraicReal make_trusted(QPoly min_poly, Rational lo, Rational hi) {
  return AlgebraicReal(std::move(min_poly), std::move(lo), std::move(hi));
}

namespace {

int sign_of_value(const QPoly& f, const Rational& x) { return sgn(f(x)); }

// Smallest power of two strictly above every root modulus (Cauchy bound).
Rational root_bound(const QPoly& f) {
  Rational m(0);
  const Rational lead = abs(f.leading());
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rational(abs(f.coeff(i)) / lead));
  Rational bound = m + 1;
  Rational p(1);
  while (p <= bound) p *= 2;
  return p;
}

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> divs{1};
  if (n == 0) return divs;
  auto take = [&](const Integer& p, int mult) {
    const std::size_t base = divs.size();
    Integer pk(1);
    for (int e = 1; e <= mult; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  };
  for (Integer p = 2; p * p <= n; ++p) {
    int mult = 0;
    while (n % p == 0) {
      n /= p;
      ++mult;
    }
    if (mult > 0) take(p, mult);
  }
  if (n > 1) take(n, 1);
  std::sort(divs.begin(), divs.end());
  return divs;
}

// F(num/den) · den^n for an integer polynomial F of degree n.
Integer homogeneous_eval(const std::vector<Integer>& F, const Integer& num, const Integer& den) {
  const std::size_t n = F.size() - 1;
  Integer acc(0), den_pow(1);
  std::vector<Integer> den_powers(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    den_powers[i] = den_pow;
    den_pow *= den;
  }
  Integer num_pow(1);
  for (std::size_t i = 0; i <= n; ++i) {
    acc += F[i] * num_pow * den_powers[n - i];
    num_pow *= num;
  }
  return acc;
}

Integer int_eval(const std::vector<Integer>& F, const Integer& x) {
  Integer acc(0);
  for (auto it = F.rbegin(); it != F.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer ceil_sqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) ++r;
  return r;
}

// Kronecker's method: a degree-k factor G of F is fixed by its values at k+1
// integer points, and each value divides the value of F there. Points with
// few divisors are picked first; candidates are also held to the Mignotte
// bound on the coefficients of a factor.
std::optional<QPoly> search_factor_of_degree(const std::vector<Integer>& F, int k) {
  const int n = static_cast<int>(F.size()) - 1;
  Integer norm2(0);
  for (const auto& c : F) norm2 += c * c;
  const Integer norm = ceil_sqrt(norm2);

  struct Point {
    Integer x;
    std::vector<Integer> values;  // signed divisors of F(x)
  };
  std::vector<Point> points;
  for (long x = -(4L * n + 16); x <= 4L * n + 16; ++x) {
    Integer v = int_eval(F, Integer(x));
    if (v == 0) continue;
    Point p{Integer(x), {}};
    for (const auto& d : positive_divisors(v)) {
      p.values.push_back(d);
      p.values.push_back(-d);
    }
    points.push_back(std::move(p));
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const Point& a, const Point& b) { return a.values.size() < b.values.size(); });
  if (static_cast<int>(points.size()) < k + 1) return std::nullopt;
  points.resize(static_cast<std::size_t>(k) + 1);
  // G and -G are the same factor: fix the sign at the first point.
  std::erase_if(points[0].values, [](const Integer& v) { return v < 0; });

  const QPoly f = from_integers(F);
  std::vector<std::size_t> pick(points.size(), 0);
  std::vector<Rational> dd(points.size());
  for (;;) {
    // Newton divided differences, then expand to monomial coefficients.
    for (std::size_t i = 0; i < points.size(); ++i) dd[i] = Rational(points[i].values[pick[i]]);
    for (std::size_t level = 1; level < points.size(); ++level)
      for (std::size_t i = points.size() - 1; i >= level; --i)
        dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].x - points[i - level].x);
    QPoly g = QPoly::constant(dd.back());
    for (std::size_t i = points.size() - 1; i-- > 0;) g = g * QPoly{Rational(-points[i].x), Rational(1)} + QPoly::constant(dd[i]);
    bool ok = g.degree() == k;
    for (int j = 0; ok && j <= k; ++j) {
      const Rational& c = g.coeff(j);
      ok = c.get_den() == 1 && abs(c.get_num()) <= binomial(k, j) * norm;
    }
    ok = ok && g.coeff(0) != 0 && F[static_cast<std::size_t>(n)] % g.leading().get_num() == 0 &&
         F[0] % g.coeff(0).get_num() == 0;
    if (ok && poly_rem(f, g).is_zero()) return g.monic();

    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == points[i].values.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return std::nullopt;
}

// Positive roots of a squarefree polynomial f with f(0) != 0, by Sturm bisection.
std::vector<AlgebraicReal> isolate_squarefree(const QPoly& f) {
  std::vector<AlgebraicReal> out;
  const auto sturm = sturm_sequence(f);
  const Rational bound = root_bound(f);
  struct Cell {
    Rational a, b;
    int count;
  };
  std::vector<Cell> stack{{Rational(0), bound, count_roots(sturm, Rational(0), bound)}};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    if (c.count == 0) continue;
    if (c.count == 1) {
      out.push_back(make_trusted(f, c.a, c.b));
      continue;
    }
    Rational mid = (c.a + c.b) / 2;
    // Callers pass irreducible factors: a linear one never needs bisection and
    // the others have no rational roots.
    if (f(mid) == 0) throw std::logic_error("isolate_squarefree: midpoint is a root");
    int left = count_roots(sturm, c.a, mid);
    // Push right first so the ascending cell is processed first.
    stack.push_back({mid, c.b, c.count - left});
    stack.push_back({c.a, mid, left});
  }
  return out;
}

bool intervals_overlap(const AlgebraicReal& a, const AlgebraicReal& b) {
  return a.lo() < b.hi() && b.lo() < a.hi();
}

}  // namespace

Rational AlgebraicReal::rational_value() const {
  if (!is_rational()) throw std::logic_error("rational_value on an irrational algebraic number");
  return -min_poly_.coeff(0);
}

AlgebraicReal AlgebraicReal::make(QPoly min_poly, Rational lo, Rational hi) {
  if (min_poly.degree() < 1 || !min_poly.is_monic())
    throw std::invalid_argument("AlgebraicReal: minimal polynomial must be monic of degree >= 1");
  if (!(lo < hi)) throw std::invalid_argument("AlgebraicReal: empty interval");
  if (lo < 0) throw std::invalid_argument("AlgebraicReal: interval must lie in [0, inf)");
  if (min_poly(lo) == 0 || min_poly(hi) == 0)
    throw std::invalid_argument("AlgebraicReal: interval endpoint is a root");
  if (!irreducible_over_Q(min_poly)) throw std::invalid_argument("AlgebraicReal: reducible minimal polynomial");
  if (count_roots(sturm_sequence(min_poly), lo, hi) != 1)
    throw std::invalid_argument("AlgebraicReal: interval does not isolate exactly one root");
  return AlgebraicReal(std::move(min_poly), std::move(lo), std::move(hi));
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& c) {
  if (c <= 0) throw std::invalid_argument("AlgebraicReal::from_rational: value must be positive");
  QPoly m{-c, Rational(1)};
  return isolate_squarefree(m).front();
}

std::vector<QPoly> sturm_sequence(const QPoly& f) {
  std::vector<QPoly> seq;
  if (f.is_zero()) return seq;
  seq.push_back(f * Rational(1 / abs(f.leading())));
  QPoly d = f.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d * Rational(1 / abs(d.leading())));
  while (true) {
    QPoly r = -poly_rem(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(r * Rational(1 / abs(r.leading())));
  }
  return seq;
}

int sign_variations(const std::vector<QPoly>& sturm, const Rational& x) {
  int variations = 0, last = 0;
  for (const auto& s : sturm) {
    int v = sign_of_value(s, x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++variations;
    last = v;
  }
  return variations;
}

int count_roots(const std::vector<QPoly>& sturm, const Rational& a, const Rational& b) {
  return sign_variations(sturm, a) - sign_variations(sturm, b);
}

QPoly squarefree_part(const QPoly& m) {
  if (m.degree() < 1) return m.monic();
  QPoly g = poly_gcd(m, m.derivative());
  return poly_divrem(m, g).first.monic();
}

std::optional<QPoly> find_factor(const QPoly& m) {
  const int n = m.degree();
  if (n <= 1) return std::nullopt;
  const std::vector<Integer> F = primitive_part(m);
  if (F[0] == 0) return QPoly{Rational(0), Rational(1)};

  QPoly g = poly_gcd(m, m.derivative());
  if (g.degree() >= 1) return g;

  const auto nums = positive_divisors(F[0]);
  const auto dens = positive_divisors(F[static_cast<std::size_t>(n)]);
  for (const auto& den : dens) {
    for (const auto& num : nums) {
      if (gcd(num, den) != 1) continue;
      for (int s : {1, -1}) {
        Integer signed_num = num * s;
        if (homogeneous_eval(F, signed_num, den) == 0)
          return QPoly{-make_rational(signed_num, den), Rational(1)};
      }
    }
  }
  for (int k = 2; 2 * k <= n; ++k) {
    if (auto factor = search_factor_of_degree(F, k)) return factor;
  }
  return std::nullopt;
}

bool irreducible_over_Q(const QPoly& m) {
  if (m.degree() < 1) return false;
  return !find_factor(m).has_value();
}

std::vector<QPoly> irreducible_factors(const QPoly& m) {
  std::vector<QPoly> out;
  if (m.degree() < 1) return out;
  std::vector<QPoly> pending{squarefree_part(m)};
  while (!pending.empty()) {
    QPoly f = pending.back();
    pending.pop_back();
    if (f.degree() < 1) continue;
    if (auto g = find_factor(f)) {
      QPoly h = poly_divrem(f, *g).first.monic();
      pending.push_back(*g);
      pending.push_back(h);
    } else {
      out.push_back(f.monic());
    }
  }
  std::sort(out.begin(), out.end(), [](const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
  });
  return out;
}

std::vector<AlgebraicReal> isolate_positive_roots(const QPoly& m) {
  if (m.is_zero()) throw std::domain_error("isolate_positive_roots: zero polynomial");
  std::vector<AlgebraicReal> roots;
  for (const auto& f : irreducible_factors(m)) {
    if (f.coeff(0) == 0) continue;  // f = x
    auto r = isolate_squarefree(f);
    roots.insert(roots.end(), r.begin(), r.end());
  }
  auto by_lo = [](const AlgebraicReal& a, const AlgebraicReal& b) { return a.lo() < b.lo(); };
  std::sort(roots.begin(), roots.end(), by_lo);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      if (intervals_overlap(roots[i], roots[i + 1])) {
        roots[i] = refine(roots[i], (roots[i].hi() - roots[i].lo()) / 2);
        roots[i + 1] = refine(roots[i + 1], (roots[i + 1].hi() - roots[i + 1].lo()) / 2);
        changed = true;
      }
    }
    if (changed) std::sort(roots.begin(), roots.end(), by_lo);
  }
  return roots;
}

AlgebraicReal refine(const AlgebraicReal& a, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("refine: width must be positive");
  const QPoly& f = a.min_poly();
  Rational lo = a.lo(), hi = a.hi();
  const int sign_lo = sign_of_value(f, lo);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int s = sign_of_value(f, mid);
    if (s == 0) {
      lo = (lo + mid) / 2;
      hi = (mid + hi) / 2;
    } else if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return make_trusted(f, lo, hi);
}

AlgebraicReal with_positive_lower_bound(const AlgebraicReal& a) {
  AlgebraicReal r = a;
  while (r.lo() <= 0) r = refine(r, (r.hi() - r.lo()) / 2);
  return r;
}

MinimalPair minimal_pair(const QPoly& m) {
  if (!m.is_monic()) throw std::invalid_argument("minimal_pair: polynomial is not monic: " + to_string(m));
  if (auto factor = find_factor(m))
    throw std::invalid_argument("minimal_pair: " + to_string(m) + " is reducible (factor " + to_string(*factor) + ")");
  const Integer ell = denominator_lcm(m);
  auto [p, q] = laurent_split(to_laurent(m * Rational(ell)));
  return {std::move(p), std::move(q), ell};
}

Sign sign_at(const QPoly& f, const AlgebraicReal& a) {
  const QPoly r = poly_rem(f, a.min_poly());
  if (r.is_zero()) return Sign::zero;
  if (r.degree() == 0) return r.coeff(0) > 0 ? Sign::positive : Sign::negative;
  AlgebraicReal cur = a;
  while (true) {
    Interval v = eval(r, cur.interval());
    if (v.lo > 0) return Sign::positive;
    if (v.hi < 0) return Sign::negative;
    cur = refine(cur, cur.interval().width() / 2);
  }
}

Sign sign_at(const IntLaurentPoly& f, const AlgebraicReal& a) {
  return sign_at(clear_negative_exponents(f).first, a);
}

std::strong_ordering compare_to_rational(const AlgebraicReal& a, const Rational& c) {
  switch (sign_at(QPoly{-c, Rational(1)}, a)) {
    case Sign::negative: return std::strong_ordering::less;
    case Sign::zero: return std::strong_ordering::equal;
    case Sign::positive: return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

AlgebraicReal reciprocal(const AlgebraicReal& a) {
  AlgebraicReal pos = with_positive_lower_bound(a);
  return make_trusted(a.min_poly().reversed().monic(), 1 / pos.hi(), 1 / pos.lo());
}

bool same_number(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.min_poly() != b.min_poly()) return false;
  Rational lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
  if (!(lo < hi)) return false;
  return count_roots(sturm_sequence(a.min_poly()), lo, hi) == 1;
}

}  // namespace laurmon
