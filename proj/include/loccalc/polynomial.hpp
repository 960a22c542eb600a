#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "loccalc/rational.hpp"

namespace loccalc {

/// Polynomial ring Q[<prefix>1, ..., <prefix>n]. Two rings are compatible
/// only when both the variable count and the display prefix agree.
struct Ring {
  std::size_t nvars = 0;
  char prefix = 'u';

  friend bool operator==(const Ring&, const Ring&) = default;
};

/// Exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t totalDegree() const noexcept { return degree_; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }
  bool isOne() const noexcept { return degree_ == 0; }

  void set(std::size_t i, std::uint32_t e);

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other).
  Monomial quotient(const Monomial& divisor) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  /// Graded lexicographic comparison: -1, 0, +1.
  friend int grlexCompare(const Monomial& a, const Monomial& b);

  std::size_t hash() const noexcept;

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q. Terms are stored in strictly
/// decreasing graded-lex order with no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Ring ring) : ring_(ring) {}

  static Poly constant(Ring ring, const Rational& c);
  static Poly variable(Ring ring, std::size_t index);  // 1-based
  static Poly monomial(Ring ring, Monomial m, const Rational& c);
  /// Linear form sum_i coeffs[i] * x_{i+1}.
  static Poly linear(Ring ring, std::span<const int> coeffs);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Poly fromTerms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t termCount() const noexcept { return terms_.size(); }

  bool isZero() const noexcept { return terms_.empty(); }
  bool isConstant() const noexcept;
  /// Constant term (zero when absent).
  Rational constantTerm() const;
  /// Leading term under graded-lex. Requires !isZero().
  const Term& leading() const { return terms_.front(); }
  /// Total degree; -1 for the zero polynomial.
  int totalDegree() const noexcept;
  bool isHomogeneous() const noexcept;
  /// Degree in variable `index` (0-based); -1 for zero.
  int degreeIn(std::size_t index) const noexcept;

  /// Same polynomial viewed in a ring with a different display prefix.
  Poly withPrefix(char prefix) const;

  Poly operator-() const;
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator*(const Rational& c) const;
  Poly pow(std::uint32_t e) const;

  Poly& operator+=(const Poly& other) { return *this = *this + other; }
  Poly& operator-=(const Poly& other) { return *this = *this - other; }
  Poly& operator*=(const Poly& other) { return *this = *this * other; }

  /// Substitutes x_i -> images[i] (all in a common target ring).
  Poly substitute(std::span<const Poly> images, Ring target) const;
  /// x_i -> signs[i] * x_{perm[i]} (0-based perm). Cheaper than substitute.
  Poly permuteSigned(std::span<const std::size_t> perm, std::span<const int> signs) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
          a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    }
    return true;
  }

  // Internal: takes ownership of terms already sorted and pruned.
  static Poly fromSortedUnchecked(Ring ring, std::vector<Term> terms);

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

void requireSameRing(const Ring& a, const Ring& b);

Poly polyAdd(const Poly& p, const Poly& q);
Poly polyMul(const Poly& p, const Poly& q);

/// Exact substitution of a point; point.size() must equal nvars.
Rational evalAt(const Poly& p, std::span<const Rational> point);

/// Canonical text rendering, e.g. "5*u1^2*u2 - 1/2*u3".
std::string render(const Poly& p);

}  // namespace loccalc
