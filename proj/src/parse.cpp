#include "laurmon/parse.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace laurmon {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  std::map<int, Rational> run() {
    std::map<int, Rational> acc;
    skip();
    int sign = 1;
    if (peek('+') || peek('-')) sign = s_[pos_++] == '-' ? -1 : 1;
    for (;;) {
      auto [e, c] = term();
      acc[e] += sign * c;
      skip();
      if (pos_ == s_.size()) break;
      if (!peek('+') && !peek('-')) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
      sign = s_[pos_++] == '-' ? -1 : 1;
    }
    return acc;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool peek_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  Integer digits() {
    if (!peek_digit()) throw ParseError("expected a digit", pos_);
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::pair<int, Rational> term() {
    skip();
    const std::size_t start = pos_;
    Rational coef(1);
    bool have_coef = false;
    if (peek_digit()) {
      have_coef = true;
      Integer num = digits();
      Integer den(1);
      if (peek('/')) {
        const std::size_t at = pos_++;
        den = digits();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      coef = make_rational(num, den);
    }
    bool star = false;
    if (peek('*')) {
      if (!have_coef) throw ParseError("'*' without a coefficient", pos_);
      star = true;
      ++pos_;
    }
    if (!peek('x')) {
      if (star) throw ParseError("expected x after '*'", pos_);
      if (!have_coef) throw ParseError("expected a term", start);
      return {0, coef};
    }
    ++pos_;
    int exponent = 1;
    if (peek('^')) {
      ++pos_;
      bool negative = false;
      if (peek('-') || peek('+')) negative = s_[pos_++] == '-';
      skip();
      const std::size_t at = pos_;
      Integer e = digits();
      if (!e.fits_sint_p() || e > 1'000'000) throw ParseError("exponent out of range", at);
      exponent = static_cast<int>(e.get_si());
      if (negative) exponent = -exponent;
    }
    return {exponent, coef};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyExpr parse_poly(std::string_view text) {
  PolyExpr out;
  out.source = std::string(text);
  for (auto& [e, c] : Parser(text).run())
    if (c != 0) out.terms.emplace_back(e, c);
  return out;
}

QPoly PolyExpr::to_qpoly() const {
  if (terms.empty()) return {};
  if (terms.front().first < 0) throw std::invalid_argument("negative exponent in polynomial: " + source);
  std::vector<Rational> c(static_cast<std::size_t>(terms.back().first) + 1);
  for (const auto& [e, a] : terms) c[static_cast<std::size_t>(e)] = a;
  return QPoly(std::move(c));
}

IntLaurentPoly PolyExpr::to_laurent() const {
  if (terms.empty()) return {};
  const int lo = terms.front().first;
  std::vector<Integer> c(static_cast<std::size_t>(terms.back().first - lo) + 1);
  for (const auto& [e, a] : terms) {
    if (a.get_den() != 1) throw std::invalid_argument("non-integral coefficient in " + source);
    c[static_cast<std::size_t>(e - lo)] = a.get_num();
  }
  return IntLaurentPoly(lo, std::move(c));
}

NatLaurentPoly PolyExpr::to_nat_laurent() const { return NatLaurentPoly(to_laurent()); }

}  // namespace laurmon
