#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace laurmon {

using Integer = mpz_class;

/// Exact rational in lowest terms with positive denominator (GMP mpq).
/// Every arithmetic result is canonical, so `==` is mathematical equality.
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a", "-a" or "a/b" (decimal). Throws std::invalid_argument on
/// malformed text and std::domain_error on a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);

/// "7/2", "-14", "0": the denominator is omitted when it is 1.
std::string to_string(const Rational& value);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

inline int sign_of(const Rational& value) { return sgn(value); }
inline int sign_of(const Integer& value) { return sgn(value); }

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

/// 2^k as a rational, k may be negative.
Rational pow2(long k);

}  // namespace laurmon
