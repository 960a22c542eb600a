#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "loccalc/polynomial.hpp"

namespace loccalc {

/// Integer partition, parts weakly decreasing with trailing zeros trimmed.
class Partition {
 public:
  Partition() = default;
  /// Throws PreconditionError on negative or increasing parts.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int weight() const noexcept;
  /// Part i (0-based), zero past the end.
  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  bool fitsInBox(int rows, int cols) const noexcept;
  /// The full rows x cols rectangle.
  static Partition box(int rows, int cols);

  /// "[2,1]"; the empty partition is "[]".
  std::string toString() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// e_r over the given 1-based variable indices. e_0 = 1 and e_r = 0 for
/// r > |vars|; r < 0 throws.
Poly elementarySymmetric(int r, std::span<const std::size_t> vars, Ring ring);
/// e_r over all variables of the ring.
Poly elementarySymmetric(int r, Ring ring);
/// h_r (complete homogeneous) over all variables of the ring.
Poly completeSymmetric(int r, Ring ring);
/// p_r = sum_i x_i^r over all variables of the ring.
Poly powerSum(int r, Ring ring);

/// Polynomial in e_1..e_n; stored as a Poly over the ring (n, 'e').
class EBasisPoly {
 public:
  EBasisPoly() = default;
  explicit EBasisPoly(Poly coeffs);

  const Poly& coeffs() const noexcept { return coeffs_; }
  /// Substitutes e_i -> e_i(x_1..x_n) in `target` (which must have n variables).
  Poly expand(Ring target) const;
  std::string render() const { return loccalc::render(coeffs_); }

  friend bool operator==(const EBasisPoly&, const EBasisPoly&) = default;

 private:
  Poly coeffs_;
};

/// Throws PreconditionError("not symmetric: ...") naming a witness
/// transposition when some swap of adjacent variables changes p.
void requireSymmetric(const Poly& p);
bool isSymmetric(const Poly& p);

/// Rewrites a symmetric polynomial in the elementary basis by repeated
/// subtraction of the lex-leading term.
EBasisPoly toElementaryBasis(const Poly& p);

// ---------------------------------------------------------------- Schubert

/// Formal Z-combination of Schubert classes sigma_lambda.
using SchubertExpr = std::map<Partition, Rational>;

/// sigma_lambda * sigma_r: add a horizontal strip of r boxes, staying
/// inside the rows x cols box. Sorted, each with multiplicity one.
std::vector<Partition> pieriProduct(const Partition& lambda, int r, int rows, int cols);
/// sigma_lambda * sigma_{1^r}: add a vertical strip of r boxes.
std::vector<Partition> dualPieriProduct(const Partition& lambda, int r, int rows, int cols);

SchubertExpr multiplyBySpecial(const SchubertExpr& expr, int r, bool vertical, int rows, int cols);

/// Coefficient of the full box: the degree of the class on G(rows, rows+cols).
Rational schubertIntegral(const SchubertExpr& expr, int rows, int cols);

/// Integral of prod_r c_r(S)^{m_r} over G(k, C^n) for the tautological
/// subbundle S, using c_r(S) = (-1)^r sigma_{1^r} and the dual Pieri rule.
Rational chernMonomialIntegral(std::span<const int> exponents, int n, int k);

}  // namespace loccalc
