#include "loccalc/gcd.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>

#include "loccalc/error.hpp"

// Multivariate GCD over Z (and hence Q by Gauss's lemma).
//
// Strategy, cheapest first:
//   1. constants and monomial content,
//   2. exact trial division in both directions,
//   3. mod-p univariate images per variable give an upper bound on the
//      degree of the gcd in that variable; all-zero bounds prove coprimality,
//   4. a variable with bound zero cannot occur in the gcd, so recurse on the
//      contents with respect to that variable,
//   5. otherwise a primitive PRS in the variable with the smallest bound.

namespace loccalc {

namespace {

using Coeffs = std::vector<Poly>;  // coefficients in one variable, index = degree

constexpr std::array<std::uint64_t, 4> kPrimes = {2147483647ULL, 2147483629ULL, 2147483587ULL,
                                                  2147483579ULL};

std::uint64_t mulMod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powMod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (e > 0) {
    if (e & 1U) r = mulMod(r, base, p);
    base = mulMod(base, base, p);
    e >>= 1U;
  }
  return r;
}

using UPoly = std::vector<std::uint64_t>;

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Degree of gcd(f, g) over Z/p; -1 only if both are zero.
int univariateGcdDegree(UPoly f, UPoly g, std::uint64_t p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    if (f.size() < g.size()) {
      std::swap(f, g);
      continue;
    }
    std::uint64_t inv = powMod(g.back(), p - 2, p);
    while (f.size() >= g.size() && !f.empty()) {
      std::uint64_t factor = mulMod(f.back(), inv, p);
      std::size_t shift = f.size() - g.size();
      for (std::size_t i = 0; i < g.size(); ++i) {
        f[shift + i] = (f[shift + i] + p - mulMod(factor, g[i], p)) % p;
      }
      trim(f);
    }
    std::swap(f, g);
  }
  return static_cast<int>(f.size()) - 1;
}

std::uint64_t residue(const Rational& c, std::uint64_t p) {
  // Coefficients are integers on this path.
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

UPoly imageIn(const Poly& f, std::size_t var, std::span<const std::uint64_t> point,
              std::uint64_t p) {
  UPoly out(static_cast<std::size_t>(f.degreeIn(var)) + 1, 0);
  for (const auto& t : f.terms()) {
    std::uint64_t v = residue(t.coeff, p);
    for (std::size_t j = 0; j < point.size(); ++j) {
      if (j != var && t.monomial[j] > 0) v = mulMod(v, powMod(point[j], t.monomial[j], p), p);
    }
    auto& slot = out[t.monomial[var]];
    slot = (slot + v) % p;
  }
  return out;
}

// Upper bound on deg_var gcd(a, b) from a random univariate image.
int degreeBound(const Poly& a, const Poly& b, std::size_t var, std::mt19937_64& rng) {
  int da = a.degreeIn(var);
  int db = b.degreeIn(var);
  if (da == 0 || db == 0) return 0;
  std::size_t n = a.ring().nvars;
  for (std::size_t attempt = 0; attempt < 8; ++attempt) {
    std::uint64_t p = kPrimes[attempt % kPrimes.size()];
    std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
    std::vector<std::uint64_t> point(n);
    for (auto& x : point) x = dist(rng);
    UPoly fa = imageIn(a, var, point, p);
    UPoly fb = imageIn(b, var, point, p);
    if (fa.back() == 0 || fb.back() == 0) continue;  // leading coefficient vanished
    return univariateGcdDegree(std::move(fa), std::move(fb), p);
  }
  return std::min(da, db);
}

Monomial monomialContent(const Poly& p) {
  Monomial m = p.terms().front().monomial;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (t.monomial[i] < m[i]) m.set(i, t.monomial[i]);
    }
  }
  return m;
}

Poly divideByMonomial(const Poly& p, const Monomial& m) {
  if (m.isOne()) return p;
  std::vector<Term> out;
  out.reserve(p.termCount());
  for (const auto& t : p.terms()) out.push_back({t.monomial.quotient(m), t.coeff});
  return Poly::fromSortedUnchecked(p.ring(), std::move(out));
}

Poly one(Ring ring) { return Poly::constant(ring, Rational(1)); }

Poly exactOrThrow(const Poly& a, const Poly& b) {
  auto q = divideExact(a, b);
  if (!q) throw InvariantViolation("gcd: expected exact division failed");
  return std::move(*q);
}

Coeffs coefficientsIn(const Poly& p, std::size_t var) {
  Coeffs out(static_cast<std::size_t>(std::max(p.degreeIn(var), 0)) + 1, Poly(p.ring()));
  std::vector<std::vector<Term>> buckets(out.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    auto e = m[var];
    m.set(var, 0);
    buckets[e].push_back({std::move(m), t.coeff});
  }
  for (std::size_t e = 0; e < out.size(); ++e) {
    // Removing one variable's exponent keeps the relative grlex order only
    // within a fixed exponent of that variable, up to degree shifts; resort.
    out[e] = Poly::fromTerms(p.ring(), std::move(buckets[e]));
  }
  return out;
}

Poly assemble(const Coeffs& coeffs, std::size_t var, Ring ring) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    for (const auto& t : coeffs[e].terms()) {
      Monomial m = t.monomial;
      m.set(var, static_cast<std::uint32_t>(e));
      terms.push_back({std::move(m), t.coeff});
    }
  }
  return Poly::fromTerms(ring, std::move(terms));
}

Poly gcdPrimitive(const Poly& a, const Poly& b);

// gcd of a list of polynomials (none involving the split variable).
Poly gcdOfList(Coeffs list) {
  std::erase_if(list, [](const Poly& p) { return p.isZero(); });
  std::sort(list.begin(), list.end(),
            [](const Poly& x, const Poly& y) { return x.termCount() < y.termCount(); });
  Poly g = primitivePart(list.front());
  for (std::size_t i = 1; i < list.size() && !g.isConstant(); ++i) {
    g = gcdPrimitive(g, primitivePart(list[i]));
  }
  return g.isConstant() ? one(g.ring()) : g;
}

Poly contentIn(const Poly& p, std::size_t var) {
  if (p.degreeIn(var) <= 0) return primitivePart(p);
  return gcdOfList(coefficientsIn(p, var));
}

void trimCoeffs(Coeffs& c) {
  while (!c.empty() && c.back().isZero()) c.pop_back();
}

Coeffs pseudoRemainder(Coeffs r, const Coeffs& divisor) {
  const std::size_t d = divisor.size() - 1;
  const Poly& lead = divisor.back();
  trimCoeffs(r);
  while (!r.empty() && r.size() - 1 >= d) {
    std::size_t k = r.size() - 1;
    Poly top = r.back();
    for (auto& c : r) c = c * lead;
    for (std::size_t i = 0; i <= d; ++i) r[k - d + i] -= top * divisor[i];
    trimCoeffs(r);
  }
  return r;
}

// Primitive polynomial remainder sequence in `var`. Inputs primitive, nonzero.
Poly prsGcd(const Poly& a, const Poly& b, std::size_t var) {
  Ring ring = a.ring();
  Coeffs A = coefficientsIn(a, var);
  Coeffs B = coefficientsIn(b, var);
  if (A.size() < B.size()) std::swap(A, B);
  Poly ca = gcdOfList(A);
  Poly cb = gcdOfList(B);
  Poly content = gcdPrimitive(ca, cb);
  for (auto& c : A) c = exactOrThrow(c, ca);
  for (auto& c : B) c = exactOrThrow(c, cb);

  while (true) {
    Coeffs R = pseudoRemainder(A, B);
    if (R.empty()) break;
    if (R.size() == 1) {
      B = Coeffs{one(ring)};
      break;
    }
    Poly cr = gcdOfList(R);
    for (auto& c : R) c = exactOrThrow(c, cr);
    A = std::move(B);
    B = std::move(R);
  }
  Poly g = primitivePart(assemble(B, var, ring));
  return primitivePart(content * g);
}

// a, b primitive integer polynomials, both nonzero.
Poly gcdPrimitive(const Poly& a0, const Poly& b0) {
  Ring ring = a0.ring();
  if (a0.isConstant() || b0.isConstant()) return one(ring);
  if (a0 == b0) return a0;

  Monomial ma = monomialContent(a0);
  Monomial mb = monomialContent(b0);
  Monomial mg(ring.nvars);
  for (std::size_t i = 0; i < ring.nvars; ++i) mg.set(i, std::min(ma[i], mb[i]));
  Poly monoFactor = Poly::monomial(ring, mg, Rational(1));
  Poly a = divideByMonomial(a0, ma);
  Poly b = divideByMonomial(b0, mb);
  if (a.isConstant() || b.isConstant()) return monoFactor;
  if (a == b) return monoFactor * a;

  if (auto q = divideExact(a, b)) return monoFactor * b;
  if (auto q = divideExact(b, a)) return monoFactor * a;

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (a.termCount() * 131 + b.termCount()));
  std::vector<int> bounds(ring.nvars);
  bool allZero = true;
  for (std::size_t v = 0; v < ring.nvars; ++v) {
    bounds[v] = degreeBound(a, b, v, rng);
    allZero = allZero && bounds[v] == 0;
  }
  if (allZero) return monoFactor;

  for (std::size_t v = 0; v < ring.nvars; ++v) {
    if (bounds[v] == 0 && (a.degreeIn(v) > 0 || b.degreeIn(v) > 0)) {
      // The gcd does not involve x_v, so it divides every coefficient in x_v.
      Poly g = gcdPrimitive(contentIn(a, v), contentIn(b, v));
      return monoFactor * g;
    }
  }

  // Every variable still in play has a positive bound here.
  std::size_t best = ring.nvars;
  auto key = [&](std::size_t x) { return std::pair(bounds[x], std::max(a.degreeIn(x), b.degreeIn(x))); };
  for (std::size_t v = 0; v < ring.nvars; ++v) {
    if (bounds[v] > 0 && (best == ring.nvars || key(v) < key(best))) best = v;
  }
  return monoFactor * prsGcd(a, b, best);
}

}  // namespace

Poly primitivePart(const Poly& p) {
  if (p.isZero()) return p;
  Integer denLcm = 1;
  for (const auto& t : p.terms()) mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  Integer numGcd = 0;
  for (const auto& t : p.terms()) {
    Integer scaled = t.coeff.get_num() * (denLcm / t.coeff.get_den());
    mpz_gcd(numGcd.get_mpz_t(), numGcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(denLcm, numGcd);
  scale.canonicalize();
  if (p.leading().coeff < 0) scale = -scale;
  return p * scale;
}

std::optional<Poly> divideExact(const Poly& a, const Poly& b) {
  requireSameRing(a.ring(), b.ring());
  if (b.isZero()) throw PreconditionError("division by zero polynomial");
  if (a.isZero()) return a;
  if (b.isConstant()) return a * (Rational(1) / b.leading().coeff);
  if (a.totalDegree() < b.totalDegree()) return std::nullopt;
  if (!b.leading().monomial.divides(a.leading().monomial)) return std::nullopt;
  if (!b.terms().back().monomial.divides(a.terms().back().monomial)) return std::nullopt;
  for (std::size_t i = 0; i < a.ring().nvars; ++i) {
    if (b.degreeIn(i) > a.degreeIn(i)) return std::nullopt;
  }

  const Term& lb = b.leading();
  std::vector<Term> quotient;
  Poly r = a;
  while (!r.isZero()) {
    const Term& lr = r.leading();
    if (!lb.monomial.divides(lr.monomial)) return std::nullopt;
    Term qt{lr.monomial.quotient(lb.monomial), lr.coeff / lb.coeff};
    std::vector<Term> scaled;
    scaled.reserve(b.termCount());
    for (const auto& t : b.terms()) scaled.push_back({t.monomial * qt.monomial, t.coeff * qt.coeff});
    r -= Poly::fromSortedUnchecked(a.ring(), std::move(scaled));
    quotient.push_back(std::move(qt));
  }
  return Poly::fromSortedUnchecked(a.ring(), std::move(quotient));
}

Poly polyGcd(const Poly& p, const Poly& q) {
  requireSameRing(p.ring(), q.ring());
  if (p.isZero() && q.isZero()) throw PreconditionError("gcd of two zero polynomials is undefined");
  if (p.isZero()) return primitivePart(q);
  if (q.isZero()) return primitivePart(p);
  return gcdPrimitive(primitivePart(p), primitivePart(q));
}

}  // namespace loccalc
