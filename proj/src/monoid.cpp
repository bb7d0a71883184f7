#include "laurmon/monoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace laurmon {

void SearchBudget::validate() const {
  if (exponent_window < 1 || coeff_bound < 1 || node_limit < 1)
    throw std::invalid_argument("search budget fields must all be >= 1");
}

QPoly inverse_of_x(const QPoly& min_poly) {
  // m = x·h + m(0)  =>  x·h ≡ -m(0)  =>  1/x ≡ -h / m(0).
  const Rational m0 = min_poly.coeff(0);
  if (m0 == 0) throw std::domain_error("inverse_of_x: x divides the minimal polynomial");
  std::vector<Rational> h(min_poly.coefficients().begin() + 1, min_poly.coefficients().end());
  return QPoly(std::move(h)) * Rational(-1 / m0);
}

QPoly canonical_form(const IntLaurentPoly& f, const AlgebraicReal& alpha) {
  const QPoly& m = alpha.min_poly();
  auto [g, k] = clear_negative_exponents(f);
  QPoly r = poly_rem(g, m);
  if (k > 0 && !r.is_zero()) {
    const QPoly inv = inverse_of_x(m);
    for (int i = 0; i < k; ++i) r = poly_rem(r * inv, m);
  }
  return r;
}

bool elements_equal(const NatLaurentPoly& f, const NatLaurentPoly& g, const AlgebraicReal& alpha) {
  return canonical_form(f.as_int() - g.as_int(), alpha).is_zero();
}

namespace {

constexpr long kScaleBits = 64;

using Vec = std::vector<Rational>;
using IntVec = std::vector<Integer>;

// Incremental echelon basis used to pick linearly independent vectors.
class EchelonBasis {
 public:
  bool add_if_independent(Vec v) {
    for (const auto& [col, row] : rows_) {
      if (v[col] == 0) continue;
      Rational f = v[col] / row[col];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * row[i];
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) {
        rows_.emplace_back(i, std::move(v));
        return true;
      }
    }
    return false;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::pair<std::size_t, Vec>> rows_;
};

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("invert: singular pivot block");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational s = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

class Engine {
 public:
  Engine(const AlgebraicReal& alpha, const RepresentationQuery& q, const RepresentationVisitor& visit)
      : q_(q), visit_(visit), d_(alpha.degree()) {
    setup(alpha);
  }

  EnumerationStats run() {
    if (!infeasible_) {
      if (q_.target.is_zero()) {
        ++nodes_;
        if (!visit_(NatLaurentPoly{})) stopped_ = true;
      } else {
        dfs(0);
      }
    }
    EnumerationStats s;
    s.nodes = nodes_;
    s.status = aborted_ ? SearchStatus::budget_exhausted
                        : (stopped_ ? SearchStatus::found : SearchStatus::window_exhausted);
    return s;
  }

 private:
  // All real quantities are integers scaled by 2^K: lower bounds floored,
  // upper bounds ceiled. Conjugate 0 is alpha itself.
  struct Slot {
    int exponent;
    Integer cap;
    IntVec vec;  // canonical form of x^exponent, scaled by the common denominator
    std::vector<Integer> low, high;            // conj_j^e
    std::vector<Integer> ratio_lo, ratio_hi;   // (conj_j / alpha)^e
  };

  void setup(const AlgebraicReal& alpha) {
    const QPoly& m = alpha.min_poly();
    const int lo = q_.min_exponent, hi = q_.max_exponent;
    if (lo > hi) throw std::invalid_argument("enumerate_representations: empty exponent window");

    std::vector<QPoly> table(static_cast<std::size_t>(hi - lo + 1));
    auto store = [&](int e, const QPoly& p) {
      if (e >= lo && e <= hi) table[static_cast<std::size_t>(e - lo)] = p;
    };
    QPoly cur = poly_rem(QPoly::constant(1), m);
    store(0, cur);
    const QPoly x = QPoly::monomial(1, 1);
    for (int e = 1; e <= hi; ++e) store(e, cur = poly_rem(cur * x, m));
    if (lo < 0) {
      const QPoly inv = inverse_of_x(m);
      cur = poly_rem(QPoly::constant(1), m);
      for (int e = -1; e >= lo; --e) store(e, cur = poly_rem(cur * inv, m));
    }

    Integer scale(1);
    for (const auto& p : table) scale = lcm(scale, denominator_lcm(p));
    scale = lcm(scale, denominator_lcm(q_.target));
    auto scaled = [&](const QPoly& p) {
      IntVec v(static_cast<std::size_t>(d_));
      for (int i = 0; i < d_; ++i) v[static_cast<std::size_t>(i)] = Rational(p.coeff(i) * scale).get_num();
      return v;
    };
    residual_ = scaled(q_.target);

    std::vector<Interval> conj;
    const Rational width = pow2(-(kScaleBits + 8));
    conj.push_back(with_positive_lower_bound(refine(alpha, width)).interval());
    for (const auto& c : isolate_positive_roots(m)) {
      if (same_number(c, alpha)) continue;
      conj.push_back(with_positive_lower_bound(refine(c, width)).interval());
    }
    nconj_ = conj.size();
    const Rational two_k = pow2(kScaleBits);
    for (const auto& iv : conj) {
      Interval t = eval(q_.target, iv);
      target_lo_.push_back(floor_of(t.lo * two_k));
      target_hi_.push_back(ceil_of(t.hi * two_k));
      if (target_hi_.back() < 0) infeasible_ = true;
    }
    partial_low_.assign(nconj_, Integer(0));
    partial_high_.assign(nconj_, Integer(0));

    const bool alpha_above_one = compare_to_rational(alpha, Rational(1)) == std::strong_ordering::greater;
    std::vector<Slot> slots;
    for (int e = lo; e <= hi; ++e) {
      if (q_.exclude_zero_exponent && e == 0) continue;
      Slot s;
      s.exponent = e;
      s.cap = q_.coeff_bound;
      s.vec = scaled(table[static_cast<std::size_t>(e - lo)]);
      for (std::size_t j = 0; j < nconj_; ++j) {
        Interval p = pow(conj[j], e);
        s.low.push_back(floor_of(p.lo * two_k));
        s.high.push_back(ceil_of(p.hi * two_k));
        if (s.low.back() > 0) s.cap = std::min(s.cap, Integer(std::max(Integer(0), target_hi_[j]) / s.low.back()));
        Interval ratio = pow(Interval{conj[j].lo / conj[0].hi, conj[j].hi / conj[0].lo}, e);
        s.ratio_lo.push_back(floor_of(ratio.lo * two_k));
        s.ratio_hi.push_back(ceil_of(ratio.hi * two_k));
      }
      if (s.cap >= 1) slots.push_back(std::move(s));
    }
    std::sort(slots.begin(), slots.end(), [&](const Slot& a, const Slot& b) {
      return alpha_above_one ? a.exponent > b.exponent : a.exponent < b.exponent;
    });

    // Pivots: as many independent columns as possible, taken from the small end.
    EchelonBasis basis;
    std::vector<bool> is_pivot(slots.size(), false);
    for (std::size_t i = slots.size(); i-- > 0 && basis.size() < static_cast<std::size_t>(d_);) {
      Vec v(slots[i].vec.begin(), slots[i].vec.end());
      if (basis.add_if_independent(std::move(v))) is_pivot[i] = true;
    }
    for (std::size_t i = 0; i < slots.size(); ++i)
      (is_pivot[i] ? pivots_ : free_).push_back(std::move(slots[i]));
    std::sort(pivots_.begin(), pivots_.end(), [](const Slot& a, const Slot& b) { return a.exponent < b.exponent; });

    setup_pivot_solver();

    // Suffix bounds over everything not yet assigned at a given level.
    const std::size_t n = free_.size();
    remaining_high_.assign(n + 1, Integer(0));
    suffix_ratio_lo_.assign(n + 1, {});
    suffix_ratio_hi_.assign(n + 1, {});
    for (const auto& p : pivots_) {
      remaining_high_[n] += p.cap * p.high[0];
      merge_ratio(n, p);
    }
    for (std::size_t i = n; i-- > 0;) {
      remaining_high_[i] = remaining_high_[i + 1] + free_[i].cap * free_[i].high[0];
      suffix_ratio_lo_[i] = suffix_ratio_lo_[i + 1];
      suffix_ratio_hi_[i] = suffix_ratio_hi_[i + 1];
      merge_ratio(i, free_[i]);
    }
    counts_.assign(n, Integer(0));
  }

  void merge_ratio(std::size_t level, const Slot& s) {
    auto& lo = suffix_ratio_lo_[level];
    auto& hi = suffix_ratio_hi_[level];
    if (lo.empty()) {
      lo = s.ratio_lo;
      hi = s.ratio_hi;
      return;
    }
    for (std::size_t j = 0; j < nconj_; ++j) {
      lo[j] = std::min(lo[j], s.ratio_lo[j]);
      hi[j] = std::max(hi[j], s.ratio_hi[j]);
    }
  }

  void setup_pivot_solver() {
    const std::size_t k = pivots_.size();
    if (k == 0) return;
    EchelonBasis rows;
    for (std::size_t i = 0; i < static_cast<std::size_t>(d_) && solve_rows_.size() < k; ++i) {
      Vec row(k);
      for (std::size_t t = 0; t < k; ++t) row[t] = Rational(pivots_[t].vec[i]);
      if (rows.add_if_independent(row)) solve_rows_.push_back(i);
    }
    std::vector<std::vector<Rational>> block(k, std::vector<Rational>(k));
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t t = 0; t < k; ++t) block[s][t] = Rational(pivots_[t].vec[solve_rows_[s]]);
    auto inv = invert(block);
    denom_ = 1;
    for (const auto& row : inv)
      for (const auto& c : row) denom_ = lcm(denom_, c.get_den());
    adj_.assign(k, IntVec(k));
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t s = 0; s < k; ++s) adj_[t][s] = Rational(inv[t][s] * denom_).get_num();
  }

  bool tick() {
    if (++nodes_ > q_.node_limit) {
      aborted_ = true;
      return false;
    }
    return true;
  }

  // What is still missing at conjugate j must be what is missing at alpha
  // times a ratio (conj_j / alpha)^e for the unassigned exponents e.
  bool rest_consistent(std::size_t level) const {
    if (suffix_ratio_lo_[level].empty()) return true;
    const Integer rest0_lo = target_lo_[0] - partial_high_[0];
    const Integer rest0_hi = target_hi_[0] - partial_low_[0];
    if (rest0_hi < 0) return false;
    if (remaining_high_[level] < rest0_lo) return false;
    for (std::size_t j = 1; j < nconj_; ++j) {
      const Integer restj_lo = target_lo_[j] - partial_high_[j];
      const Integer restj_hi = target_hi_[j] - partial_low_[j];
      if (rest0_lo > 0 && (restj_hi << kScaleBits) < suffix_ratio_lo_[level][j] * rest0_lo) return false;
      if (restj_lo > 0 && (restj_lo << kScaleBits) > suffix_ratio_hi_[level][j] * rest0_hi) return false;
    }
    return true;
  }

  void leaf() {
    const std::size_t k = pivots_.size();
    std::vector<Integer> x(k);
    for (std::size_t t = 0; t < k; ++t) {
      Integer num(0);
      for (std::size_t s = 0; s < k; ++s) num += adj_[t][s] * residual_[solve_rows_[s]];
      if (!mpz_divisible_p(num.get_mpz_t(), denom_.get_mpz_t())) return;
      x[t] = num / denom_;
      if (x[t] < 0 || x[t] > pivots_[t].cap) return;
    }
    for (std::size_t i = 0; i < static_cast<std::size_t>(d_); ++i) {
      Integer acc(0);
      for (std::size_t t = 0; t < k; ++t) acc += pivots_[t].vec[i] * x[t];
      if (acc != residual_[i]) return;
    }
    std::vector<Integer> coeffs(static_cast<std::size_t>(q_.max_exponent - q_.min_exponent + 1));
    for (std::size_t i = 0; i < free_.size(); ++i)
      coeffs[static_cast<std::size_t>(free_[i].exponent - q_.min_exponent)] = counts_[i];
    for (std::size_t t = 0; t < k; ++t)
      coeffs[static_cast<std::size_t>(pivots_[t].exponent - q_.min_exponent)] = x[t];
    if (!visit_(NatLaurentPoly(q_.min_exponent, std::move(coeffs)))) stopped_ = true;
  }

  void apply(const Slot& s, const Integer& times) {
    for (std::size_t j = 0; j < nconj_; ++j) {
      partial_low_[j] += times * s.low[j];
      partial_high_[j] += times * s.high[j];
    }
    for (std::size_t i = 0; i < residual_.size(); ++i) residual_[i] -= times * s.vec[i];
  }

  void dfs(std::size_t level) {
    if (!tick()) return;
    if (level == free_.size()) {
      leaf();
      return;
    }
    const Slot& s = free_[level];
    Integer& c = counts_[level];
    Integer applied(0);
    for (c = 0; c <= s.cap; ++c) {
      if (c > 0) {
        apply(s, Integer(1));
        ++applied;
        bool fits = true;
        for (std::size_t j = 0; j < nconj_; ++j)
          if (partial_low_[j] > target_hi_[j]) fits = false;
        if (!fits) break;
      }
      if (!rest_consistent(level + 1)) continue;
      dfs(level + 1);
      if (aborted_ || stopped_) break;
    }
    apply(s, Integer(-applied));
    c = 0;
  }

  const RepresentationQuery& q_;
  const RepresentationVisitor& visit_;
  int d_;
  std::size_t nconj_ = 0;
  bool infeasible_ = false;
  bool aborted_ = false;
  bool stopped_ = false;
  std::uint64_t nodes_ = 0;

  std::vector<Slot> free_;
  std::vector<Slot> pivots_;
  std::vector<std::size_t> solve_rows_;
  std::vector<IntVec> adj_;
  Integer denom_{1};

  IntVec residual_;
  std::vector<Integer> counts_;
  std::vector<Integer> target_lo_, target_hi_;
  std::vector<Integer> partial_low_, partial_high_;
  std::vector<Integer> remaining_high_;
  std::vector<std::vector<Integer>> suffix_ratio_lo_, suffix_ratio_hi_;
};

SearchResult deepening_search(const AlgebraicReal& alpha, const QPoly& target, const SearchBudget& budget,
                              bool exclude_zero, const Integer& min_length) {
  budget.validate();
  SearchResult result;
  std::uint64_t used = 0;
  for (int w = 1; w <= budget.exponent_window; ++w) {
    RepresentationQuery q;
    q.target = target;
    q.min_exponent = -w;
    q.max_exponent = w;
    q.coeff_bound = budget.coeff_bound;
    q.exclude_zero_exponent = exclude_zero;
    q.node_limit = budget.node_limit - used;
    std::optional<NatLaurentPoly> hit;
    auto stats = enumerate_representations(alpha, q, [&](const NatLaurentPoly& g) {
      if (eval_at_one(g) < min_length) return true;
      hit = g;
      return false;
    });
    used += stats.nodes;
    result.nodes = used;
    result.window_reached = w;
    if (stats.status == SearchStatus::found) {
      result.status = SearchStatus::found;
      result.witness = std::move(hit);
      return result;
    }
    if (stats.status == SearchStatus::budget_exhausted || used >= budget.node_limit) {
      result.status = SearchStatus::budget_exhausted;
      return result;
    }
  }
  result.status = SearchStatus::window_exhausted;
  return result;
}

}  // namespace

EnumerationStats enumerate_representations(const AlgebraicReal& alpha, const RepresentationQuery& query,
                                           const RepresentationVisitor& visit) {
  Engine engine(alpha, query, visit);
  return engine.run();
}

SearchResult find_unit_representation(const AlgebraicReal& alpha, const SearchBudget& budget) {
  if (alpha.is_rational() && alpha.rational_value() == 1)
    throw std::invalid_argument("find_unit_representation: alpha = 1");
  SearchResult r = deepening_search(alpha, QPoly::constant(1), budget, /*exclude_zero=*/true, Integer(1));
  if (r.witness && !elements_equal(*r.witness, NatLaurentPoly::monomial(1, 0), alpha))
    throw std::logic_error("find_unit_representation: witness failed verification");
  return r;
}

SearchResult member(const QPoly& c, const AlgebraicReal& alpha, const SearchBudget& budget,
                    const Integer& min_length) {
  if (c.degree() >= alpha.degree()) throw std::invalid_argument("member: target is not a canonical form");
  return deepening_search(alpha, c, budget, /*exclude_zero=*/false, min_length);
}

}  // namespace laurmon
