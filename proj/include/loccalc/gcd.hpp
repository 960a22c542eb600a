#pragma once

#include <optional>

#include "loccalc/polynomial.hpp"

namespace loccalc {

/// Scales p to integer coefficients with unit content and positive leading
/// coefficient. Returns the zero polynomial unchanged.
Poly primitivePart(const Poly& p);

/// Exact quotient a / b over Q, or nullopt when b does not divide a.
std::optional<Poly> divideExact(const Poly& a, const Poly& b);

/// Greatest common divisor, normalized as a primitive integer polynomial
/// with positive graded-lex leading coefficient. Throws PreconditionError
/// when both arguments are zero.
Poly polyGcd(const Poly& p, const Poly& q);

}  // namespace loccalc
