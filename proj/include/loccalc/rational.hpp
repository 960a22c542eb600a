#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace loccalc {

/// Exact rational scalar. GMP keeps it canonical: positive denominator, reduced.
using Rational = mpq_class;
using Integer = mpz_class;

/// Renders as "p" or "p/q".
std::string toString(const Rational& value);

/// Parses "p" or "p/q" (optional leading '-'). Throws PreconditionError.
Rational parseRational(std::string_view text);

inline bool isInteger(const Rational& value) { return value.get_den() == 1; }

}  // namespace loccalc
