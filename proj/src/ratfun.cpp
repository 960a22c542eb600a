#include "loccalc/ratfun.hpp"

#include "loccalc/error.hpp"
#include "loccalc/gcd.hpp"

namespace loccalc {

namespace {

Poly quotientOrThrow(const Poly& a, const Poly& b) {
  auto q = divideExact(a, b);
  if (!q) throw InvariantViolation("rational function reduction: gcd does not divide operand");
  return std::move(*q);
}

}  // namespace

RatFun::RatFun(Ring ring) : num_(ring), den_(Poly::constant(ring, Rational(1))) {}

RatFun RatFun::make(const Poly& num, const Poly& den) {
  requireSameRing(num.ring(), den.ring());
  if (den.isZero()) throw PreconditionError("rational function with zero denominator");
  if (num.isZero()) return RatFun(num.ring());
  Poly n = num;
  Poly d = den;
  if (!d.isConstant()) {
    Poly g = polyGcd(n, d);
    if (!g.isConstant()) {
      n = quotientOrThrow(n, g);
      d = quotientOrThrow(d, g);
    }
  }
  return normalized(n, d);
}

RatFun RatFun::normalized(const Poly& num, const Poly& den) {
  Rational scale = Rational(1) / den.leading().coeff;
  return RatFun(num * scale, den * scale);
}

RatFun RatFun::fromPoly(const Poly& p) {
  return RatFun(p, Poly::constant(p.ring(), Rational(1)));
}

RatFun ratAdd(const RatFun& r, const RatFun& s) {
  requireSameRing(r.ring(), s.ring());
  if (r.isZero()) return s;
  if (s.isZero()) return r;
  if (r.den() == s.den()) return RatFun::make(r.num() + s.num(), r.den());
  // Henrici: with g = gcd(b, d), b = g b', d = g d', the sum is
  // (a d' + c b') / (g b' d') and only g can share factors with the numerator.
  Poly g = polyGcd(r.den(), s.den());
  Poly bq = quotientOrThrow(r.den(), g);
  Poly dq = quotientOrThrow(s.den(), g);
  Poly t = r.num() * dq + s.num() * bq;
  if (t.isZero()) return RatFun(r.ring());
  Poly g2 = polyGcd(t, g);
  if (!g2.isConstant()) {
    t = quotientOrThrow(t, g2);
    g = quotientOrThrow(g, g2);
  }
  return RatFun::normalized(t, g * bq * dq);
}

RatFun ratNeg(const RatFun& r) { return RatFun::make(-r.num(), r.den()); }

RatFun ratMul(const RatFun& r, const RatFun& s) {
  requireSameRing(r.ring(), s.ring());
  return RatFun::make(r.num() * s.num(), r.den() * s.den());
}

Poly ratAsPoly(const RatFun& r) {
  if (!r.isPolynomial()) {
    throw PreconditionError("not a polynomial: denominator " + render(r.den()));
  }
  return r.num();
}

Rational evalAt(const RatFun& r, std::span<const Rational> point) {
  Rational d = evalAt(r.den(), point);
  if (d == 0) throw PreconditionError("denominator vanishes at evaluation point");
  return evalAt(r.num(), point) / d;
}

std::string render(const RatFun& r) {
  if (r.isPolynomial()) return render(r.num());
  return "(" + render(r.num()) + ")/(" + render(r.den()) + ")";
}

}  // namespace loccalc
