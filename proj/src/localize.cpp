#include "loccalc/localize.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <set>

#include "loccalc/error.hpp"
#include "loccalc/symfun.hpp"

namespace loccalc {

namespace {

constexpr int kMaxGrassmannN = 12;

// Polynomial with denominators cleared, evaluated with integer arithmetic
// at integer points.
class IntegerEvaluator {
 public:
  explicit IntegerEvaluator(const Poly& p) : nvars_(p.ring().nvars) {
    Integer denLcm = 1;
    for (const auto& t : p.terms()) mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    scale_ = denLcm;
    for (const auto& t : p.terms()) {
      Integer c = t.coeff.get_num() * (denLcm / t.coeff.get_den());
      std::vector<std::uint32_t> exps(t.monomial.exponents().begin(), t.monomial.exponents().end());
      terms_.push_back({std::move(exps), std::move(c)});
    }
  }

  Rational operator()(std::span<const Integer> point) const {
    std::vector<std::vector<Integer>> powers(nvars_);
    Integer sum = 0;
    Integer v;
    for (const auto& [exps, coeff] : terms_) {
      v = coeff;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (exps[i] == 0) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.emplace_back(1);
        while (cache.size() <= exps[i]) cache.push_back(cache.back() * point[i]);
        v *= cache[exps[i]];
      }
      sum += v;
    }
    Rational out(sum, scale_);
    out.canonicalize();
    return out;
  }

 private:
  std::size_t nvars_;
  Integer scale_;
  std::vector<std::pair<std::vector<std::uint32_t>, Integer>> terms_;
};

std::vector<Integer> toIntegers(std::span<const Rational> point) {
  std::vector<Integer> out;
  out.reserve(point.size());
  for (const auto& x : point) {
    if (!isInteger(x)) throw PreconditionError("evaluation path expects an integer point");
    out.push_back(x.get_num());
  }
  return out;
}

// Coordinates of w applied to the point: y_i = s_i * x_{perm(i)}.
std::vector<Integer> transformPoint(const WeylElement& w, std::span<const Integer> x) {
  std::vector<Integer> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = x[w.permutation()[i]];
    if (w.signs()[i] < 0) y[i] = -y[i];
  }
  return y;
}

Integer rootProductAt(const RootSystem& rs, std::span<const Integer> y, RootConvention convention) {
  Integer product = 1;
  for (const auto& root : rs.positiveRoots) {
    Integer v = 0;
    for (std::size_t i = 0; i < root.size(); ++i) {
      if (root[i] != 0) v += root[i] * y[i];
    }
    product *= v;
  }
  if (convention == RootConvention::Negated && rs.positiveRoots.size() % 2 == 1) product = -product;
  return product;
}

Poly requirePolynomial(const RatFun& total, const char* what) {
  if (!total.isPolynomial()) {
    throw InvariantViolation(std::string(what) + ": fixed-point sum did not reduce to a polynomial: " +
                             render(total));
  }
  return total.num();
}

}  // namespace

// ----------------------------------------------------------------- problems

FlagIntegralProblem::FlagIntegralProblem(RootSystem rs, Poly f) : rootSystem(std::move(rs)), integrand(std::move(f)) {
  requireSameRing(integrand.ring(), Ring{rootSystem.nvars, 'y'});
}

GrassmannProblem::GrassmannProblem(int n_, int k_, std::vector<int> exps) : n(n_), k(k_), exponents(std::move(exps)) {
  if (k < 1 || k >= n) {
    throw PreconditionError("invalid Grassmannian G(" + std::to_string(k) + ", " + std::to_string(n) +
                            "): require 1 <= k < n");
  }
  if (n > kMaxGrassmannN) throw PreconditionError("unsupported n > " + std::to_string(kMaxGrassmannN));
  if (exponents.size() != static_cast<std::size_t>(k)) {
    throw PreconditionError("expected " + std::to_string(k) + " exponents, got " + std::to_string(exponents.size()));
  }
  for (int m : exponents) {
    if (m < 0) throw PreconditionError("exponents must be non-negative");
  }
}

int GrassmannProblem::weightedDegree() const noexcept {
  int d = 0;
  for (std::size_t r = 0; r < exponents.size(); ++r) d += static_cast<int>(r + 1) * exponents[r];
  return d;
}

std::vector<Subset> subsets(int n, int k) {
  if (k < 0 || k > n) throw PreconditionError("subset size out of range");
  std::vector<Subset> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i + 1);
  while (true) {
    Subset s;
    s.indices = idx;
    for (std::size_t v = 1; v <= static_cast<std::size_t>(n); ++v) {
      if (!std::binary_search(idx.begin(), idx.end(), v)) s.complement.push_back(v);
    }
    out.push_back(std::move(s));
    // Advance to the next combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<std::size_t>(n - k + i + 1)) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

Rational LocalizationResult::value() const {
  if (!isConstant()) throw PreconditionError("localization result is not a constant: " + render(polynomial));
  return polynomial.constantTerm();
}

// --------------------------------------------------------- fixed-point data

Poly restrictAtFixedPoint(const WeylElement& w, const Poly& p) {
  return actOnPoly(w, p.withPrefix('u'));
}

Poly eulerClassAtFixedPoint(const WeylElement& w, const RootSystem& rs, RootConvention convention) {
  if (!belongsTo(w, rs)) {
    throw PreconditionError("Weyl element " + w.toString() + " does not belong to " + toChar(rs.type) +
                            std::to_string(rs.rank));
  }
  const Ring ring = rs.ring();
  const int sign = convention == RootConvention::Negated ? -1 : 1;
  Poly product = Poly::constant(ring, Rational(1));
  for (const auto& root : rs.positiveRoots) {
    Root image = actOnRoot(w, root);
    for (auto& c : image) c *= sign;
    product = product * rootLinearForm(image, ring);
  }
  return product;
}

Poly topClass(const RootSystem& rs) {
  const Ring ring{rs.nvars, 'y'};
  Poly product = Poly::constant(ring, Rational(1));
  for (const auto& root : rs.positiveRoots) product = product * rootLinearForm(root, ring);
  return product;
}

RatFun localizationSum(std::size_t count, const std::function<RatFun(std::size_t)>& summand, Ring ring,
                       unsigned threads) {
  auto sumRange = [&](std::size_t begin, std::size_t end) {
    RatFun acc(ring);
    for (std::size_t i = begin; i < end; ++i) acc = ratAdd(acc, summand(i));
    return acc;
  };
  std::size_t chunks = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (chunks == 1) return sumRange(0, count);
  std::vector<std::future<RatFun>> parts;
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t begin = c * count / chunks;
    std::size_t end = (c + 1) * count / chunks;
    parts.push_back(std::async(std::launch::async, sumRange, begin, end));
  }
  RatFun total(ring);
  for (auto& part : parts) total = ratAdd(total, part.get());
  return total;
}

// ------------------------------------------------------------ flag integral

LocalizationResult flagIntegral(const FlagIntegralProblem& problem, const LocalizationOptions& options) {
  const RootSystem& rs = problem.rootSystem;
  const Ring ring = rs.ring();
  const auto elements = weylElements(rs);

  // w . (product of roots), computed once and permuted per fixed point.
  Poly base = Poly::constant(ring, Rational(1));
  for (const auto& root : rs.positiveRoots) base = base * rootLinearForm(root, ring);
  if (options.convention == RootConvention::Negated && rs.positiveRoots.size() % 2 == 1) base = -base;

  const Poly f = problem.integrand.withPrefix('u');
  RatFun total = localizationSum(
      elements.size(),
      [&](std::size_t i) { return RatFun::make(actOnPoly(elements[i], f), actOnPoly(elements[i], base)); }, ring,
      options.threads);

  LocalizationResult result{requirePolynomial(total, "flag integral"), elements.size()};
  const int dim = static_cast<int>(problem.dimension());
  const Poly& f0 = problem.integrand;
  if (f0.isHomogeneous() && f0.totalDegree() < dim && !result.polynomial.isZero()) {
    throw InvariantViolation("flag integral of a below-top-degree class is nonzero");
  }
  if (f0.totalDegree() <= dim && !result.isConstant()) {
    throw InvariantViolation("flag integral of a top-degree class is not constant");
  }
  return result;
}

Rational flagIntegralAt(const FlagIntegralProblem& problem, std::span<const Rational> point,
                        RootConvention convention) {
  const RootSystem& rs = problem.rootSystem;
  if (point.size() != rs.nvars) throw PreconditionError("evaluation point has wrong length");
  const bool integral = std::all_of(point.begin(), point.end(), [](const Rational& v) { return isInteger(v); });
  if (!integral) {
    Rational sum(0);
    forEachWeylElement(rs, [&](const WeylElement& w) {
      std::vector<Rational> y(point.size());
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = w.signs()[i] * point[w.permutation()[i]];
      Rational den(convention == RootConvention::Negated && rs.positiveRoots.size() % 2 == 1 ? -1 : 1);
      for (const auto& root : rs.positiveRoots) {
        Rational v(0);
        for (std::size_t i = 0; i < root.size(); ++i) v += root[i] * y[i];
        den *= v;
      }
      if (den == 0) throw PreconditionError("a root vanishes at the evaluation point");
      sum += evalAt(problem.integrand, y) / den;
    });
    return sum;
  }
  const auto x = toIntegers(point);
  IntegerEvaluator f(problem.integrand);
  Rational sum(0);
  forEachWeylElement(rs, [&](const WeylElement& w) {
    auto y = transformPoint(w, x);
    Integer den = rootProductAt(rs, y, convention);
    if (den == 0) throw PreconditionError("a root vanishes at the evaluation point");
    sum += f(y) / Rational(den);
  });
  return sum;
}

// ------------------------------------------------------------- Grassmannian

LocalizationResult grassmannianChernNumber(const GrassmannProblem& problem, const LocalizationOptions& options) {
  const Ring ring{static_cast<std::size_t>(problem.n), 'u'};
  const auto subs = subsets(problem.n, problem.k);

  auto summand = [&](std::size_t s) {
    const Subset& sub = subs[s];
    Poly num = Poly::constant(ring, Rational(1));
    for (int r = 1; r <= problem.k; ++r) {
      int m = problem.exponents[static_cast<std::size_t>(r - 1)];
      if (m > 0) num = num * elementarySymmetric(r, sub.indices, ring).pow(static_cast<std::uint32_t>(m));
    }
    Poly den = Poly::constant(ring, Rational(1));
    for (auto i : sub.indices) {
      for (auto j : sub.complement) den = den * (Poly::variable(ring, i) - Poly::variable(ring, j));
    }
    return RatFun::make(num, den);
  };
  RatFun total = localizationSum(subs.size(), summand, ring, options.threads);

  LocalizationResult result{requirePolynomial(total, "Grassmannian Chern number"), subs.size()};
  const int degree = problem.weightedDegree();
  if (degree < problem.dimension() && !result.polynomial.isZero()) {
    throw InvariantViolation("Chern number below top degree is nonzero");
  }
  if (degree == problem.dimension()) {
    if (!result.isConstant() || !isInteger(result.value())) {
      throw InvariantViolation("Chern number at top degree is not an integer: " + render(result.polynomial));
    }
  }
  return result;
}

Rational grassmannianChernNumberAt(const GrassmannProblem& problem, std::span<const Rational> point) {
  if (point.size() != static_cast<std::size_t>(problem.n)) throw PreconditionError("evaluation point has wrong length");
  Rational sum(0);
  for (const auto& sub : subsets(problem.n, problem.k)) {
    // e_0..e_k of the chosen coordinates.
    std::vector<Rational> e(static_cast<std::size_t>(problem.k) + 1, Rational(0));
    e[0] = 1;
    for (auto i : sub.indices) {
      for (std::size_t r = e.size() - 1; r >= 1; --r) e[r] += e[r - 1] * point[i - 1];
    }
    Rational num(1);
    for (int r = 1; r <= problem.k; ++r) {
      for (int m = 0; m < problem.exponents[static_cast<std::size_t>(r - 1)]; ++m) num *= e[static_cast<std::size_t>(r)];
    }
    Rational den(1);
    for (auto i : sub.indices) {
      for (auto j : sub.complement) den *= point[i - 1] - point[j - 1];
    }
    if (den == 0) throw PreconditionError("evaluation point has repeated coordinates");
    sum += num / den;
  }
  return sum;
}

// ----------------------------------------------------------- evaluation path

std::vector<Rational> genericPoint(std::size_t nvars, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 1L << 20);
  std::set<long> used;
  std::vector<Rational> point;
  while (point.size() < nvars) {
    long v = dist(rng);
    if (used.insert(v).second) point.emplace_back(v);
  }
  return point;
}

std::vector<std::vector<Rational>> crossCheckPoints(std::size_t nvars, std::uint64_t seed, int count) {
  std::mt19937_64 seeds(seed);
  std::vector<std::vector<Rational>> out;
  for (int i = 0; i < count; ++i) out.push_back(genericPoint(nvars, seeds()));
  return out;
}

namespace {

template <class Eval>
Rational confirmAtPoints(std::size_t nvars, std::uint64_t seed, int points, Eval&& eval) {
  if (points < 1) throw PreconditionError("evaluation path needs at least one point");
  std::optional<Rational> agreed;
  for (const auto& x : crossCheckPoints(nvars, seed, points)) {
    Rational v = eval(x);
    if (agreed && *agreed != v) {
      throw InvariantViolation("evaluation path: values disagree across points (" + toString(*agreed) + " vs " +
                               toString(v) + ")");
    }
    agreed = v;
  }
  return *agreed;
}

}  // namespace

Rational flagIntegralByEvaluation(const FlagIntegralProblem& problem, std::uint64_t seed, int points,
                                  RootConvention convention) {
  if (problem.integrand.totalDegree() > static_cast<int>(problem.dimension())) {
    throw PreconditionError("evaluation path requires integrand degree <= " + std::to_string(problem.dimension()));
  }
  return confirmAtPoints(problem.rootSystem.nvars, seed, points,
                         [&](const std::vector<Rational>& x) { return flagIntegralAt(problem, x, convention); });
}

Rational grassmannianByEvaluation(const GrassmannProblem& problem, std::uint64_t seed, int points) {
  if (problem.weightedDegree() > problem.dimension()) {
    throw PreconditionError("evaluation path requires weighted degree <= " + std::to_string(problem.dimension()));
  }
  return confirmAtPoints(static_cast<std::size_t>(problem.n), seed, points,
                         [&](const std::vector<Rational>& x) { return grassmannianChernNumberAt(problem, x); });
}

std::uint64_t eulerCharacteristicGT(RootType type, int rank, EulerMethod method, const LocalizationOptions& options) {
  RootSystem rs = buildRootSystem(type, rank);
  const std::uint64_t order = weylGroupOrder(type, rank);
  FlagIntegralProblem problem(rs, topClass(rs));
  Rational viaIntegral = method == EulerMethod::Symbolic ? flagIntegral(problem, options).value()
                                                         : flagIntegralByEvaluation(problem, 1);
  if (viaIntegral != Rational(Integer(std::to_string(order), 10))) {
    throw InvariantViolation("Euler characteristic mismatch: |W| = " + std::to_string(order) +
                             ", integral of top class = " + toString(viaIntegral));
  }
  return order;
}

}  // namespace loccalc
