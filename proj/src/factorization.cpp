#include "laurmon/factorization.hpp"

#include <algorithm>
#include <array>

namespace laurmon {

Factorization::Factorization(NatLaurentPoly g) : multiplicities(std::move(g)), length(eval_at_one(multiplicities)) {}

const Integer& EmbeddingBox::cap(int exponent) const {
  static const Integer zero(0);
  if (exponent < min_exponent || exponent > max_exponent) return zero;
  return caps[static_cast<std::size_t>(exponent - min_exponent)];
}

namespace {

struct Roots {
  AlgebraicReal self;
  AlgebraicReal other;
};

Roots straddling_roots(const AlgebraicReal& alpha) {
  const QPoly& m = alpha.min_poly();
  if (m.degree() != 2) throw HypothesisError("minimal polynomial " + to_string(m) + " is not quadratic");
  auto roots = isolate_positive_roots(m);
  if (roots.size() != 2)
    throw HypothesisError("minimal polynomial " + to_string(m) + " does not have two positive roots");
  // Ascending order: roots[0] < roots[1].
  if (compare_to_rational(roots[0], Rational(1)) != std::strong_ordering::less ||
      compare_to_rational(roots[1], Rational(1)) != std::strong_ordering::greater)
    throw HypothesisError("roots of " + to_string(m) + " do not straddle 1");
  if (same_number(roots[0], alpha)) return {roots[0], roots[1]};
  return {roots[1], roots[0]};
}

// Both enclosures on the correct side of 1 with positive lower ends.
std::pair<Interval, Interval> separated(const Roots& r, const Rational& width) {
  AlgebraicReal a = with_positive_lower_bound(refine(r.self, width));
  AlgebraicReal b = with_positive_lower_bound(refine(r.other, width));
  auto side_ok = [](const Interval& i) { return i.hi < 1 || i.lo > 1; };
  while (!side_ok(a.interval())) a = refine(a, a.interval().width() / 2);
  while (!side_ok(b.interval())) b = refine(b, b.interval().width() / 2);
  return {a.interval(), b.interval()};
}

EmbeddingBox box_at(const QPoly& canonical, const Interval& a, const Interval& b) {
  EmbeddingBox box;
  box.v1 = eval(canonical, a);
  box.v2 = eval(canonical, b);
  auto fits = [&](int n) { return pow(a, n).lo <= box.v1.hi && pow(b, n).lo <= box.v2.hi; };
  // The root above 1 bounds positive exponents, the one below 1 negative ones.
  const Interval& up = a.lo > 1 ? a : b;
  const Interval& down = a.lo > 1 ? b : a;
  const Rational& v_up = a.lo > 1 ? box.v1.hi : box.v2.hi;
  const Rational& v_down = a.lo > 1 ? box.v2.hi : box.v1.hi;
  int hi = 0;
  while (pow(up, hi + 1).lo <= v_up) ++hi;
  int lo = 0;
  while (pow(down, lo - 1).lo <= v_down) --lo;
  int m = 0;
  for (int n = lo; n <= hi; ++n)
    if (fits(n)) m = std::max(m, std::abs(n));
  box.min_exponent = -m;
  box.max_exponent = m;
  for (int e = -m; e <= m; ++e) {
    Integer c1 = floor_of(box.v1.hi / pow(a, e).lo);
    Integer c2 = floor_of(box.v2.hi / pow(b, e).lo);
    box.caps.push_back(std::max(Integer(0), std::min(c1, c2)));
  }
  return box;
}

std::pair<EmbeddingBox, std::pair<Interval, Interval>> stable_box(const MonoidElement& beta,
                                                                   const AlgebraicReal& alpha) {
  const Roots roots = straddling_roots(alpha);
  Rational width = pow2(-16);
  auto iv = separated(roots, width);
  EmbeddingBox box = box_at(beta.canonical(), iv.first, iv.second);
  for (int round = 0; round < 64; ++round) {
    width /= 2;
    auto iv2 = separated(roots, width);
    EmbeddingBox next = box_at(beta.canonical(), iv2.first, iv2.second);
    const bool stable = next.min_exponent == box.min_exponent && next.caps == box.caps;
    box = std::move(next);
    iv = std::move(iv2);
    if (stable) break;
  }
  return {box, iv};
}

using Vec2 = std::array<Rational, 2>;

Vec2 coords(const QPoly& p) { return {p.coeff(0), p.coeff(1)}; }

// Depth-first walk over exponents in ascending order; the last two are solved
// from the residual in the canonical basis.
class BoxWalk {
 public:
  BoxWalk(const MonoidElement& beta, const AlgebraicReal& alpha, const EmbeddingBox& box, const Interval& a,
          const Interval& b)
      : box_(box) {
    for (int e = box.min_exponent; e <= box.max_exponent; ++e) {
      if (box.cap(e) < 1) continue;
      Term t;
      t.exponent = e;
      t.cap = box.cap(e);
      t.canon = coords(canonical_form(IntLaurentPoly::monomial(1, e), alpha));
      t.at_a = pow(a, e);
      t.at_b = pow(b, e);
      t.ratio = pow(Interval{b.lo / a.hi, b.hi / a.lo}, e);
      terms_.push_back(std::move(t));
    }
    residual_ = coords(beta.canonical());
    solved_ = std::min<std::size_t>(2, terms_.size());
    walked_ = terms_.size() - solved_;
    // Ratio range over terms[i..].
    ratio_lo_.resize(terms_.size() + 1);
    ratio_hi_.resize(terms_.size() + 1);
    for (std::size_t i = terms_.size(); i-- > 0;) {
      const bool last = i + 1 == terms_.size();
      ratio_lo_[i] = last ? terms_[i].ratio.lo : std::min(terms_[i].ratio.lo, ratio_lo_[i + 1]);
      ratio_hi_[i] = last ? terms_[i].ratio.hi : std::max(terms_[i].ratio.hi, ratio_hi_[i + 1]);
    }
    counts_.assign(terms_.size(), Integer(0));
  }

  std::vector<Factorization> run() {
    if (!terms_.empty()) walk(0, Interval{0, 0}, Interval{0, 0});
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  struct Term {
    int exponent;
    Integer cap;
    Vec2 canon;
    Interval at_a, at_b, ratio;
  };

  // The unassigned part must satisfy (rest at b) = ratio * (rest at a) for
  // some ratio in the range spanned by the remaining terms.
  bool consistent(std::size_t next, const Interval& pa, const Interval& pb) const {
    const Rational a_lo = box_.v1.lo - pa.hi, a_hi = box_.v1.hi - pa.lo;
    const Rational b_lo = box_.v2.lo - pb.hi, b_hi = box_.v2.hi - pb.lo;
    if (a_hi < 0 || b_hi < 0) return false;
    if (a_lo > 0 && b_hi < ratio_lo_[next] * a_lo) return false;
    if (b_lo > 0 && b_lo > ratio_hi_[next] * a_hi) return false;
    return true;
  }

  void walk(std::size_t i, const Interval& pa, const Interval& pb) {
    if (i == walked_) {
      solve();
      return;
    }
    const Term& t = terms_[i];
    Interval qa = pa, qb = pb;
    for (Integer c = 0; c <= t.cap; ++c) {
      if (c > 0) {
        qa = qa + t.at_a;
        qb = qb + t.at_b;
        if (qa.lo > box_.v1.hi || qb.lo > box_.v2.hi) break;
        residual_[0] -= t.canon[0];
        residual_[1] -= t.canon[1];
      }
      counts_[i] = c;
      if (consistent(i + 1, qa, qb)) walk(i + 1, qa, qb);
    }
    residual_[0] += counts_[i] * t.canon[0];
    residual_[1] += counts_[i] * t.canon[1];
    counts_[i] = 0;
  }

  bool admissible(std::size_t i, const Rational& c) const {
    return c.get_den() == 1 && c >= 0 && c <= Rational(terms_[i].cap);
  }

  void solve() {
    const std::size_t n = terms_.size();
    if (solved_ == 2) {
      const Vec2& u = terms_[n - 2].canon;
      const Vec2& v = terms_[n - 1].canon;
      const Rational det = u[0] * v[1] - u[1] * v[0];
      const Rational s = (residual_[0] * v[1] - residual_[1] * v[0]) / det;
      const Rational t = (u[0] * residual_[1] - u[1] * residual_[0]) / det;
      if (!admissible(n - 2, s) || !admissible(n - 1, t)) return;
      counts_[n - 2] = s.get_num();
      counts_[n - 1] = t.get_num();
    } else if (solved_ == 1) {
      const Vec2& u = terms_[n - 1].canon;
      const std::size_t k = u[0] != 0 ? 0 : 1;
      const Rational s = residual_[k] / u[k];
      if (!admissible(n - 1, s) || residual_[1 - k] != s * u[1 - k]) return;
      counts_[n - 1] = s.get_num();
    }
    std::vector<Integer> mult(static_cast<std::size_t>(box_.max_exponent - box_.min_exponent + 1));
    for (std::size_t i = 0; i < n; ++i) mult[static_cast<std::size_t>(terms_[i].exponent - box_.min_exponent)] = counts_[i];
    for (std::size_t i = walked_; i < n; ++i) counts_[i] = 0;
    found_.emplace_back(NatLaurentPoly(box_.min_exponent, std::move(mult)));
  }

  const EmbeddingBox& box_;
  std::vector<Term> terms_;
  std::size_t solved_ = 0;
  std::size_t walked_ = 0;
  std::vector<Rational> ratio_lo_, ratio_hi_;
  Vec2 residual_;
  std::vector<Integer> counts_;
  std::vector<Factorization> found_;
};

void require_nonzero(const MonoidElement& beta) {
  if (beta.repr().is_zero()) throw std::invalid_argument("factorizations of 0 are not enumerated");
}

}  // namespace

EmbeddingBox embedding_box(const MonoidElement& beta, const AlgebraicReal& alpha) {
  return stable_box(beta, alpha).first;
}

FactorizationSet enumerate_factorizations_quadratic(const MonoidElement& beta, const AlgebraicReal& alpha) {
  require_nonzero(beta);
  auto [box, iv] = stable_box(beta, alpha);
  BoxWalk walk(beta, alpha, box, iv.first, iv.second);
  FactorizationSet fs{beta, walk.run(), true, false};
  for (const auto& f : fs.factorizations)
    if (!elements_equal(f.multiplicities, beta.repr(), alpha))
      throw std::logic_error("enumerate_factorizations_quadratic: unsound factorization " +
                             to_string(f.multiplicities));
  return fs;
}

FactorizationSet brute_force_factorizations(const MonoidElement& beta, const AlgebraicReal& alpha,
                                            const SearchBudget& budget) {
  require_nonzero(beta);
  budget.validate();
  RepresentationQuery q;
  q.target = beta.canonical();
  q.min_exponent = -budget.exponent_window;
  q.max_exponent = budget.exponent_window;
  q.coeff_bound = budget.coeff_bound;
  q.node_limit = budget.node_limit;
  FactorizationSet fs{beta, {}, false, false};
  auto stats = enumerate_representations(alpha, q, [&](const NatLaurentPoly& g) {
    fs.factorizations.emplace_back(g);
    return fs.factorizations.size() < kMaxListedFactorizations;
  });
  fs.budget_exhausted = stats.status != SearchStatus::window_exhausted;
  std::sort(fs.factorizations.begin(), fs.factorizations.end());
  return fs;
}

std::vector<Integer> length_set(const FactorizationSet& fs) {
  std::vector<Integer> lengths;
  for (const auto& f : fs.factorizations) lengths.push_back(f.length);
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  return lengths;
}

ElementElasticity elasticity_of_element(const FactorizationSet& fs) {
  auto lengths = length_set(fs);
  if (lengths.empty()) throw std::invalid_argument("elasticity_of_element: empty factorization set");
  return {make_rational(lengths.back(), lengths.front()), fs.complete};
}

}  // namespace laurmon
