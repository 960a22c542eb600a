#pragma once

#include <span>
#include <string>

#include "loccalc/polynomial.hpp"

namespace loccalc {

/// Reduced fraction num/den of polynomials. Canonical form: gcd(num, den) is
/// a unit and den is monic under graded-lex, so equal fractions compare
/// structurally equal. Zero is 0/1.
class RatFun {
 public:
  explicit RatFun(Ring ring);

  /// Reduces and normalizes. Throws PreconditionError when den is zero.
  static RatFun make(const Poly& num, const Poly& den);
  static RatFun fromPoly(const Poly& p);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  const Ring& ring() const noexcept { return num_.ring(); }
  bool isZero() const noexcept { return num_.isZero(); }
  bool isPolynomial() const noexcept { return den_.isConstant(); }

  friend bool operator==(const RatFun&, const RatFun&) = default;

 private:
  RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  // num/den already coprime; only rescales den to be monic.
  static RatFun normalized(const Poly& num, const Poly& den);
  friend RatFun ratAdd(const RatFun& r, const RatFun& s);
  Poly num_;
  Poly den_;
};

RatFun ratAdd(const RatFun& r, const RatFun& s);
RatFun ratNeg(const RatFun& r);
RatFun ratMul(const RatFun& r, const RatFun& s);

/// The numerator when the reduced denominator is 1; otherwise throws
/// PreconditionError("not a polynomial").
Poly ratAsPoly(const RatFun& r);

/// Exact value at a point; throws PreconditionError when the denominator vanishes.
Rational evalAt(const RatFun& r, std::span<const Rational> point);

/// "num" when polynomial, else "(num)/(den)".
std::string render(const RatFun& r);

}  // namespace loccalc
