#include "loccalc/gysin.hpp"

#include "loccalc/error.hpp"
#include "loccalc/gcd.hpp"
#include "loccalc/localize.hpp"
#include "loccalc/weyl.hpp"

namespace loccalc {

FiberClass::FiberClass(int rank_, Poly poly_) : rank(rank_), poly(std::move(poly_)) {
  if (rank < 1) throw PreconditionError("flag bundle rank must be at least 1");
  if (rank > 9) throw PreconditionError("unsupported flag bundle rank " + std::to_string(rank) + " (at most 9)");
  requireSameRing(poly.ring(), Ring{static_cast<std::size_t>(rank), 'a'});
}

Poly vandermonde(Ring ring) {
  Poly v = Poly::constant(ring, Rational(1));
  for (std::size_t i = 1; i <= ring.nvars; ++i) {
    for (std::size_t j = i + 1; j <= ring.nvars; ++j) v = v * (Poly::variable(ring, i) - Poly::variable(ring, j));
  }
  return v;
}

Poly antisymmetrize(const Poly& p) {
  const Ring ring = p.ring();
  if (ring.nvars < 2) return p;
  std::vector<Term> terms;
  RootSystem sn = buildRootSystem(RootType::A, static_cast<int>(ring.nvars) - 1);
  forEachWeylElement(sn, [&](const WeylElement& w) {
    Poly image = actOnPoly(w, p);
    bool odd = w.permutationSign() < 0;
    for (const auto& t : image.terms()) terms.push_back({t.monomial, odd ? Rational(-t.coeff) : t.coeff});
  });
  return Poly::fromTerms(ring, std::move(terms));
}

PushforwardResult flagPushforward(const FiberClass& b, const GysinOptions& options) {
  const Ring ring = b.poly.ring();
  Poly alternating = antisymmetrize(b.poly);
  auto quotient = divideExact(alternating, vandermonde(ring));
  if (!quotient) throw InvariantViolation("antisymmetrization is not divisible by the Vandermonde product");
  Poly symmetric = std::move(*quotient);

  Poly toConvert = symmetric;
  if (options.dualRoots) {
    const WeylElement id = WeylElement::identity(ring.nvars);
    WeylElement flip({id.permutation().begin(), id.permutation().end()}, std::vector<int>(ring.nvars, -1));
    toConvert = actOnPoly(flip, symmetric);
  }
  return {symmetric, toElementaryBasis(toConvert)};
}

Poly flagPushforwardWeylSum(const FiberClass& b, unsigned threads) {
  const Ring ring = b.poly.ring();
  const Poly v = vandermonde(ring);
  if (ring.nvars < 2) return b.poly;
  RootSystem sn = buildRootSystem(RootType::A, static_cast<int>(ring.nvars) - 1);
  const auto elements = weylElements(sn);
  const RatFun base = RatFun::make(b.poly, v);
  RatFun total = localizationSum(
      elements.size(), [&](std::size_t i) { return actOnRatFun(elements[i], base); }, ring, threads);
  if (!total.isPolynomial()) {
    throw InvariantViolation("flag bundle symmetrizer did not reduce to a polynomial: " + render(total));
  }
  return total.num();
}

ProjectionCheck projectionFormulaCheck(const Poly& c, const FiberClass& b) {
  requireSameRing(c.ring(), b.poly.ring());
  requireSymmetric(c);
  ProjectionCheck check;
  check.lhs = flagPushforward(FiberClass(b.rank, c * b.poly)).symmetricPoly;
  check.rhs = c * flagPushforward(b).symmetricPoly;
  check.holds = check.lhs == check.rhs;
  return check;
}

}  // namespace loccalc
