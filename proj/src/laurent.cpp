#include "laurmon/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "laurmon/detail/format_terms.hpp"

namespace laurmon {

namespace {
const Integer kZero(0);
}

IntLaurentPoly::IntLaurentPoly(int min_exponent, std::vector<Integer> coefficients)
    : min_exp_(min_exponent), coeffs_(std::move(coefficients)) {
  trim();
}

IntLaurentPoly::IntLaurentPoly(const Integer& constant) : IntLaurentPoly(0, {constant}) {}

IntLaurentPoly IntLaurentPoly::monomial(const Integer& c, int exponent) {
  return IntLaurentPoly(exponent, {c});
}

void IntLaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_exp_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) min_exp_ = 0;
}

const Integer& IntLaurentPoly::coeff(int exponent) const {
  if (coeffs_.empty() || exponent < min_exp_ || exponent > max_exponent()) return kZero;
  return coeffs_[static_cast<std::size_t>(exponent - min_exp_)];
}

std::vector<int> IntLaurentPoly::support() const {
  std::vector<int> s;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) s.push_back(min_exp_ + static_cast<int>(j));
  return s;
}

std::size_t IntLaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

bool IntLaurentPoly::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

IntLaurentPoly IntLaurentPoly::shifted(int k) const {
  IntLaurentPoly r = *this;
  if (!r.is_zero()) r.min_exp_ += k;
  return r;
}

IntLaurentPoly& IntLaurentPoly::operator+=(const IntLaurentPoly& g) {
  if (g.is_zero()) return *this;
  if (is_zero()) return *this = g;
  const int lo = std::min(min_exp_, g.min_exp_);
  const int hi = std::max(max_exponent(), g.max_exponent());
  std::vector<Integer> r(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) r[static_cast<std::size_t>(min_exp_ - lo) + j] += coeffs_[j];
  for (std::size_t j = 0; j < g.coeffs_.size(); ++j) r[static_cast<std::size_t>(g.min_exp_ - lo) + j] += g.coeffs_[j];
  min_exp_ = lo;
  coeffs_ = std::move(r);
  trim();
  return *this;
}

IntLaurentPoly& IntLaurentPoly::operator-=(const IntLaurentPoly& g) { return *this += -g; }

IntLaurentPoly operator-(const IntLaurentPoly& f) {
  IntLaurentPoly r = f;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntLaurentPoly operator*(const IntLaurentPoly& f, const IntLaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Integer> r(f.coeffs_.size() + g.coeffs_.size() - 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) r[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return IntLaurentPoly(f.min_exp_ + g.min_exp_, std::move(r));
}

IntLaurentPoly operator*(const Integer& c, const IntLaurentPoly& f) {
  if (c == 0) return {};
  IntLaurentPoly r = f;
  for (auto& a : r.coeffs_) a *= c;
  return r;
}

std::strong_ordering operator<=>(const IntLaurentPoly& a, const IntLaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return std::strong_ordering::equal;
  int lo = a.is_zero() ? b.min_exp_ : (b.is_zero() ? a.min_exp_ : std::min(a.min_exp_, b.min_exp_));
  int hi = a.is_zero() ? b.max_exponent()
                       : (b.is_zero() ? a.max_exponent() : std::max(a.max_exponent(), b.max_exponent()));
  for (int e = lo; e <= hi; ++e) {
    int c = cmp(a.coeff(e), b.coeff(e));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

NatLaurentPoly::NatLaurentPoly(IntLaurentPoly poly) : poly_(std::move(poly)) {
  if (!poly_.is_nonnegative())
    throw std::invalid_argument("NatLaurentPoly: negative coefficient in " + to_string(poly_));
}

bool NatLaurentPoly::is_monic_monomial() const {
  return poly_.coefficients().size() == 1 && poly_.coefficients().front() == 1;
}

std::pair<NatLaurentPoly, NatLaurentPoly> laurent_split(const IntLaurentPoly& f) {
  if (f.is_zero()) return {};
  std::vector<Integer> pos(f.coefficients().size()), neg(f.coefficients().size());
  for (std::size_t j = 0; j < f.coefficients().size(); ++j) {
    const Integer& c = f.coefficients()[j];
    if (c > 0) pos[j] = c;
    else if (c < 0) neg[j] = -c;
  }
  return {NatLaurentPoly(f.min_exponent(), std::move(pos)), NatLaurentPoly(f.min_exponent(), std::move(neg))};
}

Integer eval_at_one(const NatLaurentPoly& f) {
  Integer s(0);
  for (const auto& c : f.coefficients()) s += c;
  return s;
}

IntLaurentPoly laurent_mul(const IntLaurentPoly& f, const IntLaurentPoly& g) { return f * g; }

NatLaurentPoly power(const NatLaurentPoly& f, unsigned n) {
  NatLaurentPoly r = NatLaurentPoly::monomial(1, 0);
  NatLaurentPoly base = f;
  while (n > 0) {
    if (n & 1U) r = r * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return r;
}

std::pair<QPoly, int> clear_negative_exponents(const IntLaurentPoly& f) {
  if (f.is_zero()) return {QPoly{}, 0};
  const int k = std::max(0, -f.min_exponent());
  const int lo = f.min_exponent() + k;
  std::vector<Rational> c(static_cast<std::size_t>(f.max_exponent() + k) + 1);
  for (std::size_t j = 0; j < f.coefficients().size(); ++j)
    c[static_cast<std::size_t>(lo) + j] = Rational(f.coefficients()[j]);
  return {QPoly(std::move(c)), k};
}

IntLaurentPoly to_laurent(const QPoly& f) {
  std::vector<Integer> c;
  c.reserve(f.coefficients().size());
  for (const auto& a : f.coefficients()) {
    if (a.get_den() != 1) throw std::invalid_argument("to_laurent: non-integral coefficient in " + to_string(f));
    c.push_back(a.get_num());
  }
  return IntLaurentPoly(0, std::move(c));
}

std::string to_string(const IntLaurentPoly& f) {
  std::vector<std::pair<int, Rational>> terms;
  if (!f.is_zero())
    for (int e = f.max_exponent(); e >= f.min_exponent(); --e) terms.emplace_back(e, Rational(f.coeff(e)));
  return detail::format_terms(terms);
}

std::ostream& operator<<(std::ostream& os, const IntLaurentPoly& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const NatLaurentPoly& f) { return os << to_string(f); }

}  // namespace laurmon
