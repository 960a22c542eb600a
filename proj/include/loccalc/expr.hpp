#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loccalc/polynomial.hpp"

namespace loccalc {

/// Polynomial expression syntax tree.
///
/// Grammar (whitespace is insignificant):
///   sum     := product (('+' | '-') product)*
///   product := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' exponent)?
///   exponent:= INT ('^' exponent)?          right-associative, folded
///   primary := INT | INT '/' INT | VAR | '(' sum ')'
///   VAR     := ('u' | 'y' | 'a' | 'c') DIGITS
struct Expr {
  enum class Kind { Integer, Rational, Variable, Add, Sub, Neg, Mul, Pow };

  Kind kind = Kind::Integer;
  Rational value;              // Integer, Rational
  char prefix = 0;             // Variable
  std::size_t index = 0;       // Variable, 1-based
  std::uint32_t exponent = 0;  // Pow
  std::vector<Expr> operands;
  std::size_t position = 0;    // byte offset of the node in the source
};

/// Structural rendering, e.g. "Sub(Mul(Pow(y1,2),y2),Mul(3,y3))".
std::string toString(const Expr& e);

/// The common variable prefix, or nullopt for a constant expression.
std::optional<char> variablePrefix(const Expr& e);

/// Throws ParseError with a byte offset and the set of expected tokens.
Expr parseExpr(std::string_view src);

/// Expands into the ring (ringSize, prefix). Throws ParseError when a
/// variable index exceeds ringSize or the prefix differs.
Poly lowerToPoly(const Expr& e, std::size_t ringSize, char prefix);

/// parseExpr followed by lowerToPoly; the prefix defaults to the
/// expression's own (or 'u' for constants).
Poly parsePoly(std::string_view src, std::size_t ringSize, std::optional<char> prefix = std::nullopt);

}  // namespace loccalc
