#include "loccalc/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "loccalc/error.hpp"

namespace loccalc {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  out.degree_ += other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= divisor.exps_[i];
  out.degree_ -= divisor.degree_;
  return out;
}

int grlexCompare(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ > b.degree_ ? 1 : -1;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i] ? 1 : -1;
  }
  return 0;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : exps_) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// -------------------------------------------------------------------- Poly

namespace {

bool termGreater(const Term& a, const Term& b) {
  return grlexCompare(a.monomial, b.monomial) > 0;
}

}  // namespace

void requireSameRing(const Ring& a, const Ring& b) {
  if (!(a == b)) {
    throw PreconditionError("incompatible rings: " + std::to_string(a.nvars) + " variables '" +
                            std::string(1, a.prefix) + "' vs " + std::to_string(b.nvars) +
                            " variables '" + std::string(1, b.prefix) + "'");
  }
}

Poly Poly::fromSortedUnchecked(Ring ring, std::vector<Term> terms) {
  Poly p(ring);
  p.terms_ = std::move(terms);
  return p;
}

Poly Poly::constant(Ring ring, const Rational& c) {
  return monomial(ring, Monomial(ring.nvars), c);
}

Poly Poly::variable(Ring ring, std::size_t index) {
  if (index == 0 || index > ring.nvars) {
    throw PreconditionError("variable index " + std::to_string(index) + " out of range 1.." +
                            std::to_string(ring.nvars));
  }
  return monomial(ring, Monomial::variable(ring.nvars, index - 1), Rational(1));
}

Poly Poly::monomial(Ring ring, Monomial m, const Rational& c) {
  if (m.size() != ring.nvars) throw PreconditionError("monomial length does not match ring");
  Poly p(ring);
  Rational v = c;
  v.canonicalize();
  if (v != 0) p.terms_.push_back({std::move(m), std::move(v)});
  return p;
}

Poly Poly::linear(Ring ring, std::span<const int> coeffs) {
  if (coeffs.size() != ring.nvars) throw PreconditionError("linear form length does not match ring");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) terms.push_back({Monomial::variable(ring.nvars, i), Rational(coeffs[i])});
  }
  // Variables are already in decreasing grlex order (u1 > u2 > ...).
  return fromSortedUnchecked(ring, std::move(terms));
}

Poly Poly::fromTerms(Ring ring, std::vector<Term> terms) {
  for (auto& t : terms) {
    if (t.monomial.size() != ring.nvars) {
      throw PreconditionError("monomial length does not match ring");
    }
    t.coeff.canonicalize();
  }
  std::sort(terms.begin(), terms.end(), termGreater);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  return fromSortedUnchecked(ring, std::move(merged));
}

bool Poly::isConstant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.isOne());
}

Rational Poly::constantTerm() const {
  if (!terms_.empty() && terms_.back().monomial.isOne()) return terms_.back().coeff;
  return Rational(0);
}

int Poly::totalDegree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.totalDegree());
}

bool Poly::isHomogeneous() const noexcept {
  return terms_.empty() ||
         terms_.front().monomial.totalDegree() == terms_.back().monomial.totalDegree();
}

int Poly::degreeIn(std::size_t index) const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial[index]));
  return d;
}

Poly Poly::withPrefix(char prefix) const {
  Poly p(*this);
  p.ring_.prefix = prefix;
  return p;
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly Poly::operator+(const Poly& other) const {
  requireSameRing(ring_, other.ring_);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    int cmp = grlexCompare(a->monomial, b->monomial);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, terms_.end());
  out.insert(out.end(), b, other.terms_.end());
  return fromSortedUnchecked(ring_, std::move(out));
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Rational& c) const {
  if (c == 0) return Poly(ring_);
  Poly p(*this);
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::operator*(const Poly& other) const {
  requireSameRing(ring_, other.ring_);
  if (isZero() || other.isZero()) return Poly(ring_);
  if (other.isConstant()) return *this * other.terms_.front().coeff;
  if (isConstant()) return other * terms_.front().coeff;
  if (terms_.size() == 1 || other.terms_.size() == 1) {
    // Monomial times polynomial preserves order.
    const Poly& single = terms_.size() == 1 ? *this : other;
    const Poly& many = terms_.size() == 1 ? other : *this;
    const Term& s = single.terms_.front();
    std::vector<Term> out;
    out.reserve(many.terms_.size());
    for (const auto& t : many.terms_) out.push_back({t.monomial * s.monomial, t.coeff * s.coeff});
    return fromSortedUnchecked(ring_, std::move(out));
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      Monomial m = a.monomial * b.monomial;
      auto [it, inserted] = acc.try_emplace(std::move(m));
      it->second += a.coeff * b.coeff;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, std::move(c)});
  }
  std::sort(out.begin(), out.end(), termGreater);
  return fromSortedUnchecked(ring_, std::move(out));
}

Poly Poly::pow(std::uint32_t e) const {
  Poly result = constant(ring_, Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::substitute(std::span<const Poly> images, Ring target) const {
  if (images.size() != ring_.nvars) throw PreconditionError("substitution arity does not match ring");
  for (const auto& img : images) requireSameRing(img.ring(), target);
  // Cache powers per variable.
  std::vector<std::vector<Poly>> powers(ring_.nvars);
  auto power = [&](std::size_t var, std::uint32_t e) -> const Poly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  Poly result(target);
  for (const auto& t : terms_) {
    Poly term = constant(target, t.coeff);
    for (std::size_t i = 0; i < ring_.nvars; ++i) {
      if (t.monomial[i] > 0) term = term * power(i, t.monomial[i]);
    }
    result += term;
  }
  return result;
}

Poly Poly::permuteSigned(std::span<const std::size_t> perm, std::span<const int> signs) const {
  if (perm.size() != ring_.nvars || signs.size() != ring_.nvars) {
    throw PreconditionError("incompatible rings: permutation length does not match ring");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> exps(ring_.nvars, 0);
    bool negate = false;
    for (std::size_t i = 0; i < ring_.nvars; ++i) {
      exps[perm[i]] = t.monomial[i];
      if (signs[i] < 0 && (t.monomial[i] & 1U)) negate = !negate;
    }
    out.push_back({Monomial(std::move(exps)), negate ? Rational(-t.coeff) : t.coeff});
  }
  std::sort(out.begin(), out.end(), termGreater);
  return fromSortedUnchecked(ring_, std::move(out));
}

Poly polyAdd(const Poly& p, const Poly& q) { return p + q; }
Poly polyMul(const Poly& p, const Poly& q) { return p * q; }

Rational evalAt(const Poly& p, std::span<const Rational> point) {
  if (point.size() != p.ring().nvars) {
    throw PreconditionError("evaluation point has " + std::to_string(point.size()) +
                            " coordinates, ring has " + std::to_string(p.ring().nvars));
  }
  std::vector<std::vector<Rational>> powers(point.size());
  auto power = [&](std::size_t var, std::uint32_t e) -> const Rational& {
    auto& cache = powers[var];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * point[var]);
    return cache[e];
  };
  Rational sum(0);
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.monomial[i] > 0) v *= power(i, t.monomial[i]);
    }
    sum += v;
  }
  return sum;
}

std::string render(const Poly& p) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = t.coeff < 0;
    Rational mag = abs(t.coeff);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      auto e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.ring().prefix;
      mono += std::to_string(i + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += toString(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += toString(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace loccalc
