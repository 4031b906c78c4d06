#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace curvforge {

/// Exact rational scalar. mpq_class keeps values canonical after every
/// arithmetic operation; constructors from two integers go through
/// make_rational so the invariant holds there too.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "p/q" or "-p/q". Throws InputError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

int sign(const Rational& value);

}  // namespace curvforge
