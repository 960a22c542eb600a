#include "loccalc/symfun.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "loccalc/error.hpp"

namespace loccalc {

// --------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw PreconditionError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionError("partition parts must be non-increasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::fitsInBox(int rows, int cols) const noexcept {
  return static_cast<int>(parts_.size()) <= rows && (parts_.empty() || parts_.front() <= cols);
}

Partition Partition::box(int rows, int cols) {
  return Partition(std::vector<int>(static_cast<std::size_t>(std::max(rows, 0)), cols));
}

std::string Partition::toString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

// ------------------------------------------------------ symmetric functions

Poly elementarySymmetric(int r, std::span<const std::size_t> vars, Ring ring) {
  if (r < 0) throw PreconditionError("elementary symmetric degree must be non-negative");
  for (auto v : vars) {
    if (v == 0 || v > ring.nvars) throw PreconditionError("variable index out of range");
  }
  if (static_cast<std::size_t>(r) > vars.size()) return Poly(ring);
  std::vector<Term> terms;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (pick.size() == static_cast<std::size_t>(r)) {
      Monomial m(ring.nvars);
      for (auto v : pick) m.set(v - 1, m[v - 1] + 1);
      terms.push_back({std::move(m), Rational(1)});
      return;
    }
    for (std::size_t i = start; i < vars.size(); ++i) {
      pick.push_back(vars[i]);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return Poly::fromTerms(ring, std::move(terms));
}

namespace {

std::vector<std::size_t> allVariables(Ring ring) {
  std::vector<std::size_t> vars(ring.nvars);
  std::iota(vars.begin(), vars.end(), std::size_t{1});
  return vars;
}

}  // namespace

Poly elementarySymmetric(int r, Ring ring) {
  auto vars = allVariables(ring);
  return elementarySymmetric(r, vars, ring);
}

Poly completeSymmetric(int r, Ring ring) {
  if (r < 0) throw PreconditionError("complete symmetric degree must be non-negative");
  std::vector<Term> terms;
  Monomial m(ring.nvars);
  std::function<void(std::size_t, int)> fill = [&](std::size_t var, int left) {
    if (var + 1 == ring.nvars || ring.nvars == 0) {
      if (ring.nvars == 0) {
        if (left == 0) terms.push_back({m, Rational(1)});
        return;
      }
      m.set(var, static_cast<std::uint32_t>(left));
      terms.push_back({m, Rational(1)});
      m.set(var, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(var, static_cast<std::uint32_t>(e));
      fill(var + 1, left - e);
    }
    m.set(var, 0);
  };
  fill(0, r);
  return Poly::fromTerms(ring, std::move(terms));
}

Poly powerSum(int r, Ring ring) {
  if (r < 0) throw PreconditionError("power sum degree must be non-negative");
  Poly out(ring);
  for (std::size_t i = 0; i < ring.nvars; ++i) {
    out += Poly::monomial(ring, Monomial::variable(ring.nvars, i, static_cast<std::uint32_t>(r)),
                          Rational(1));
  }
  return out;
}

// -------------------------------------------------------------- EBasisPoly

EBasisPoly::EBasisPoly(Poly coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.ring().prefix != 'e') coeffs_ = coeffs_.withPrefix('e');
}

Poly EBasisPoly::expand(Ring target) const {
  if (target.nvars != coeffs_.ring().nvars) {
    throw PreconditionError("incompatible rings: e-basis has " + std::to_string(coeffs_.ring().nvars) +
                            " generators, target ring " + std::to_string(target.nvars) + " variables");
  }
  std::vector<Poly> images;
  images.reserve(target.nvars);
  for (std::size_t i = 1; i <= target.nvars; ++i) images.push_back(elementarySymmetric(static_cast<int>(i), target));
  return coeffs_.substitute(images, target);
}

namespace {

// Index of the first adjacent transposition (i, i+1) that changes p, or -1.
int asymmetryWitness(const Poly& p) {
  std::size_t n = p.ring().nvars;
  std::vector<std::size_t> perm(n);
  std::vector<int> signs(n, 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::swap(perm[i], perm[i + 1]);
    if (!(p.permuteSigned(perm, signs) == p)) return static_cast<int>(i);
  }
  return -1;
}

bool lexGreater(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

}  // namespace

bool isSymmetric(const Poly& p) { return asymmetryWitness(p) < 0; }

void requireSymmetric(const Poly& p) {
  int w = asymmetryWitness(p);
  if (w >= 0) {
    throw PreconditionError("not symmetric: transposition (" + std::to_string(w + 1) + " " +
                            std::to_string(w + 2) + ") changes " + render(p));
  }
}

EBasisPoly toElementaryBasis(const Poly& p) {
  requireSymmetric(p);
  const Ring ring = p.ring();
  const std::size_t n = ring.nvars;
  const Ring eRing{n, 'e'};

  // powers[i][k] = e_{i+1}^k expanded in the original ring.
  std::vector<std::vector<Poly>> powers(n);
  auto ePower = [&](std::size_t i, std::uint32_t k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(ring, Rational(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * elementarySymmetric(static_cast<int>(i + 1), ring));
    return cache[k];
  };

  std::vector<Term> result;
  Poly rest = p;
  while (!rest.isZero()) {
    const Term* lead = &rest.terms().front();
    for (const auto& t : rest.terms()) {
      if (lexGreater(t.monomial, lead->monomial)) lead = &t;
    }
    Monomial eExps(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t next = i + 1 < n ? lead->monomial[i + 1] : 0;
      if (lead->monomial[i] < next) throw InvariantViolation("symmetric reduction: leading exponents not decreasing");
      eExps.set(i, lead->monomial[i] - next);
    }
    Rational c = lead->coeff;
    Poly product = Poly::constant(ring, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (eExps[i] > 0) product = product * ePower(i, eExps[i]);
    }
    result.push_back({std::move(eExps), c});
    rest -= product;
  }
  return EBasisPoly(Poly::fromTerms(eRing, std::move(result)));
}

// ---------------------------------------------------------------- Schubert

namespace {

void requireBox(const Partition& lambda, int rows, int cols) {
  if (rows < 0 || cols < 0) throw PreconditionError("box dimensions must be non-negative");
  if (!lambda.fitsInBox(rows, cols)) {
    throw PreconditionError("partition " + lambda.toString() + " does not fit in " + std::to_string(rows) +
                            "x" + std::to_string(cols) + " box");
  }
}

}  // namespace

std::vector<Partition> pieriProduct(const Partition& lambda, int r, int rows, int cols) {
  requireBox(lambda, rows, cols);
  if (r < 0 || r > cols) throw PreconditionError("Pieri degree must lie in 0.." + std::to_string(cols));
  std::vector<Partition> out;
  std::vector<int> mu(static_cast<std::size_t>(rows), 0);
  // Horizontal strip: lambda_i <= mu_i <= lambda_{i-1}, with lambda_0 = cols.
  std::function<void(std::size_t, int)> place = [&](std::size_t i, int left) {
    if (i == static_cast<std::size_t>(rows)) {
      if (left == 0) out.emplace_back(mu);
      return;
    }
    int lo = lambda.part(i);
    int hi = i == 0 ? cols : lambda.part(i - 1);
    for (int v = std::min(hi, lo + left); v >= lo; --v) {
      mu[i] = v;
      place(i + 1, left - (v - lo));
    }
  };
  place(0, r);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Partition> dualPieriProduct(const Partition& lambda, int r, int rows, int cols) {
  requireBox(lambda, rows, cols);
  if (r < 0 || r > rows) throw PreconditionError("dual Pieri degree must lie in 0.." + std::to_string(rows));
  std::vector<Partition> out;
  std::vector<int> mu(static_cast<std::size_t>(rows), 0);
  // Vertical strip: mu_i - lambda_i in {0, 1}, mu a partition inside the box.
  std::function<void(std::size_t, int)> place = [&](std::size_t i, int left) {
    if (i == static_cast<std::size_t>(rows)) {
      if (left == 0) out.emplace_back(mu);
      return;
    }
    for (int add = 1; add >= 0; --add) {
      int v = lambda.part(i) + add;
      if (add > left || v > cols) continue;
      if (i > 0 && v > mu[i - 1]) continue;
      mu[i] = v;
      place(i + 1, left - add);
    }
  };
  place(0, r);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

SchubertExpr multiplyBySpecial(const SchubertExpr& expr, int r, bool vertical, int rows, int cols) {
  SchubertExpr out;
  for (const auto& [lambda, coeff] : expr) {
    auto products = vertical ? dualPieriProduct(lambda, r, rows, cols) : pieriProduct(lambda, r, rows, cols);
    for (auto& mu : products) out[mu] += coeff;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Rational schubertIntegral(const SchubertExpr& expr, int rows, int cols) {
  for (const auto& [lambda, coeff] : expr) requireBox(lambda, rows, cols);
  auto it = expr.find(Partition::box(rows, cols));
  return it == expr.end() ? Rational(0) : it->second;
}

Rational chernMonomialIntegral(std::span<const int> exponents, int n, int k) {
  if (k < 1 || k >= n) throw PreconditionError("Grassmannian requires 1 <= k < n");
  if (exponents.size() != static_cast<std::size_t>(k)) {
    throw PreconditionError("expected " + std::to_string(k) + " exponents");
  }
  const int rows = k;
  const int cols = n - k;
  SchubertExpr expr{{Partition{}, Rational(1)}};
  int sign = 1;
  for (int r = 1; r <= k; ++r) {
    int m = exponents[static_cast<std::size_t>(r - 1)];
    if (m < 0) throw PreconditionError("exponents must be non-negative");
    for (int i = 0; i < m; ++i) {
      expr = multiplyBySpecial(expr, r, true, rows, cols);
      if (r % 2 == 1) sign = -sign;
    }
  }
  return schubertIntegral(expr, rows, cols) * sign;
}

}  // namespace loccalc
