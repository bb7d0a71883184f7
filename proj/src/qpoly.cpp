#include "laurmon/qpoly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "laurmon/detail/format_terms.hpp"

namespace laurmon {

namespace {
const Rational kZero(0);
}

QPoly::QPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return QPoly(std::move(coeffs));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& QPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& QPoly::leading() const {
  if (is_zero()) return kZero;
  return coeffs_.back();
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  QPoly r = *this;
  Rational inv = 1 / leading();
  return r *= inv;
}

QPoly QPoly::reversed() const {
  std::vector<Rational> r(coeffs_.rbegin(), coeffs_.rend());
  return QPoly(std::move(r));
}

QPoly& QPoly::operator+=(const QPoly& g) {
  if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& g) {
  if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

QPoly operator-(const QPoly& f) {
  QPoly r = f;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

QPoly operator*(const QPoly& f, const QPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Rational> r(f.coeffs_.size() + g.coeffs_.size() - 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) r[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> poly_divrem(const QPoly& f, const QPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero polynomial");
  const int dg = g.degree();
  std::vector<Rational> rem = f.coefficients();
  if (f.degree() < dg) return {QPoly{}, f};
  std::vector<Rational> quot(static_cast<std::size_t>(f.degree() - dg) + 1);
  const Rational inv_lead = 1 / g.leading();
  for (int k = f.degree(); k >= dg; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
    quot[static_cast<std::size_t>(k - dg)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(k - dg + j)] -= c * g.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(dg));
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly poly_rem(const QPoly& f, const QPoly& g) { return poly_divrem(f, g).second; }

QPoly poly_gcd(QPoly f, QPoly g) {
  while (!g.is_zero()) {
    QPoly r = poly_rem(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

Integer denominator_lcm(const QPoly& f) {
  Integer l(1);
  for (const auto& c : f.coefficients()) l = lcm(l, c.get_den());
  return l;
}

std::vector<Integer> primitive_part(const QPoly& f) {
  if (f.is_zero()) return {};
  const Integer l = denominator_lcm(f);
  std::vector<Integer> out;
  out.reserve(f.coefficients().size());
  Integer content(0);
  for (const auto& c : f.coefficients()) {
    Rational scaled = c * l;
    out.push_back(scaled.get_num());
    content = gcd(content, out.back());
  }
  if (f.leading() < 0) content = -content;
  for (auto& c : out) c /= content;
  return out;
}

QPoly from_integers(const std::vector<Integer>& coefficients) {
  std::vector<Rational> r;
  r.reserve(coefficients.size());
  for (const auto& c : coefficients) r.emplace_back(c);
  return QPoly(std::move(r));
}

std::string to_string(const QPoly& f) {
  std::vector<std::pair<int, Rational>> terms;
  for (int i = f.degree(); i >= 0; --i) terms.emplace_back(i, f.coeff(i));
  return detail::format_terms(terms);
}

std::ostream& operator<<(std::ostream& os, const QPoly& f) { return os << to_string(f); }

}  // namespace laurmon
