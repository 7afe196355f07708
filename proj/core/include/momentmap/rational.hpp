#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace momentmap {

/// Exact rational scalar used throughout the library.
using Rat = mpq_class;
/// Exact integer scalar.
using Int = mpz_class;

/// Parses "p" or "p/q" (optional sign, nonzero q) into an exact rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rational(std::string_view text);

/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);

/// Parses a comma-separated coefficient list, constant term first.
std::vector<Rat> parse_coefficients(std::string_view csv);

/// 2^exponent as an exact rational; exponent may be negative.
Rat pow2(long exponent);

/// base^exponent for nonnegative integer exponents.
Rat rat_pow(const Rat& base, unsigned long exponent);

}  // namespace momentmap
