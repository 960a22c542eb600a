#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "loccalc/polynomial.hpp"
#include "loccalc/ratfun.hpp"
#include "loccalc/weyl.hpp"

namespace loccalc {

/// Which half of the roots is treated as positive in the Euler class.
enum class RootConvention { Standard, Negated };

struct LocalizationOptions {
  unsigned threads = 1;
  RootConvention convention = RootConvention::Standard;
};

/// Integral of f(y_1..y_n) over G/T. The integrand lives in the ring (n, 'y')
/// with n = rootSystem.nvars.
struct FlagIntegralProblem {
  RootSystem rootSystem;
  Poly integrand;

  FlagIntegralProblem(RootSystem rs, Poly f);
  /// Complex dimension of G/T, i.e. the number of positive roots.
  std::size_t dimension() const noexcept { return rootSystem.positiveRoots.size(); }
};

/// Integral of prod_r c_r(S)^{m_r} over the Grassmannian G(k, C^n).
struct GrassmannProblem {
  int n = 0;
  int k = 0;
  std::vector<int> exponents;  // m_1..m_k

  GrassmannProblem(int n, int k, std::vector<int> exponents);
  /// sum_r r * m_r.
  int weightedDegree() const noexcept;
  int dimension() const noexcept { return k * (n - k); }
};

/// A k-subset of {1..n} and its complement, both increasing and 1-based.
struct Subset {
  std::vector<std::size_t> indices;
  std::vector<std::size_t> complement;
};

/// All k-subsets of {1..n} in lexicographic order.
std::vector<Subset> subsets(int n, int k);

/// Result of a fixed-point sum, as a polynomial in u_1..u_n.
struct LocalizationResult {
  Poly polynomial;
  std::size_t fixedPoints = 0;

  bool isConstant() const noexcept { return polynomial.isConstant(); }
  /// Requires isConstant().
  Rational value() const;
};

/// y_i -> w . u_i: the restriction of the equivariant extension of p to the
/// fixed point w. Result lives in (n, 'u').
Poly restrictAtFixedPoint(const WeylElement& w, const Poly& p);

/// w . prod_{alpha > 0} alpha, a product of |positive roots| linear forms.
Poly eulerClassAtFixedPoint(const WeylElement& w, const RootSystem& rs,
                            RootConvention convention = RootConvention::Standard);

/// Sum over the Weyl group of (w . f(u)) / (w . prod alpha), reduced to a
/// polynomial. Zero below top degree, a constant at top degree, and the
/// equivariant pushforward polynomial above it.
LocalizationResult flagIntegral(const FlagIntegralProblem& problem, const LocalizationOptions& options = {});

/// The scalar fixed-point sum at a point where no root vanishes.
Rational flagIntegralAt(const FlagIntegralProblem& problem, std::span<const Rational> point,
                        RootConvention convention = RootConvention::Standard);

/// sum_I prod_r e_r(u_I)^{m_r} / prod_{i in I, j in J} (u_i - u_j). At exact
/// degree the value is asserted to be an integer.
LocalizationResult grassmannianChernNumber(const GrassmannProblem& problem,
                                           const LocalizationOptions& options = {});

Rational grassmannianChernNumberAt(const GrassmannProblem& problem, std::span<const Rational> point);

/// Random point with distinct positive coordinates; no root of any classical
/// type vanishes there.
std::vector<Rational> genericPoint(std::size_t nvars, std::uint64_t seed);

/// `count` generic points drawn deterministically from `seed`.
std::vector<std::vector<Rational>> crossCheckPoints(std::size_t nvars, std::uint64_t seed, int count);

/// Evaluation path for constant-valued problems: sums scalar summands at
/// `points` independent generic points and requires them to agree. Throws
/// PreconditionError above top degree and InvariantViolation when the
/// points disagree.
Rational flagIntegralByEvaluation(const FlagIntegralProblem& problem, std::uint64_t seed, int points = 3,
                                  RootConvention convention = RootConvention::Standard);
Rational grassmannianByEvaluation(const GrassmannProblem& problem, std::uint64_t seed, int points = 3);

enum class EulerMethod { Symbolic, Evaluation };

/// |W| computed from the closed-form order and as the integral of the top
/// class prod_alpha y_alpha; throws InvariantViolation if they differ.
std::uint64_t eulerCharacteristicGT(RootType type, int rank, EulerMethod method = EulerMethod::Symbolic,
                                    const LocalizationOptions& options = {});

/// prod_{alpha > 0} alpha(y) in the ring (n, 'y').
Poly topClass(const RootSystem& rs);

/// Deterministic sum of count summands, split into contiguous chunks across
/// threads and combined in chunk order.
RatFun localizationSum(std::size_t count, const std::function<RatFun(std::size_t)>& summand, Ring ring,
                       unsigned threads);

}  // namespace loccalc
