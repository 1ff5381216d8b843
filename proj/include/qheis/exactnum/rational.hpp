#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qheis {

// GMP keeps mpq_class canonical (gcd-reduced, positive denominator, 0 == 0/1)
// after every arithmetic operation.
using BigInt = mpz_class;
using Rational = mpq_class;

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Parses "a" or "a/b" with optional leading '-'. Throws std::invalid_argument
/// on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace qheis
