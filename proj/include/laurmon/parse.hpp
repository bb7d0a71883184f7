#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "laurmon/laurent.hpp"
#include "laurmon/qpoly.hpp"

namespace laurmon {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A parsed polynomial expression in x with rational coefficients and
/// possibly negative exponents.
struct PolyExpr {
  std::string source;
  /// Nonzero (exponent, coefficient) pairs, ascending by exponent.
  std::vector<std::pair<int, Rational>> terms;

  /// Throws std::invalid_argument on a negative exponent.
  QPoly to_qpoly() const;
  /// Throws std::invalid_argument on a non-integral coefficient.
  IntLaurentPoly to_laurent() const;
  /// Throws std::invalid_argument on a negative or non-integral coefficient.
  NatLaurentPoly to_nat_laurent() const;
};

/// Terms `[coef][*][x[^exp]]` joined by + or -, with coef a decimal integer or
/// a/b and exp a possibly negative integer. Whitespace is ignored and repeated
/// exponents are summed. Throws ParseError (with position) on malformed input,
/// including a zero denominator.
PolyExpr parse_poly(std::string_view text);

}  // namespace laurmon
