#pragma once

#include <string>
#include <utility>
#include <vector>

#include "laurmon/rational.hpp"

namespace laurmon::detail {

// Renders (exponent, coefficient) pairs, highest exponent first, in the
// same grammar parse_poly accepts: "x^3 - 2*x^2 + 1/2", "2*x^-1".
inline std::string format_terms(const std::vector<std::pair<int, Rational>>& terms) {
  std::string out;
  for (const auto& [exp, coef] : terms) {
    if (coef == 0) continue;
    Rational mag = abs(coef);
    if (out.empty()) {
      if (coef < 0) out += "-";
    } else {
      out += coef < 0 ? " - " : " + ";
    }
    if (exp == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "x";
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out.empty() ? "0" : out;
}

}  // namespace laurmon::detail
