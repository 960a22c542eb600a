#include <doctest.h>

#include <set>

#include "loccalc/error.hpp"
#include "loccalc/expr.hpp"
#include "loccalc/localize.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace loccalc;

namespace {

Poly Y(const char* s, std::size_t n) { return parsePoly(s, n, 'y'); }

Rational constantOf(const FlagIntegralProblem& p) {
  auto r = flagIntegral(p);
  REQUIRE(r.isConstant());
  return r.value();
}

Poly negateVariables(const Poly& p) {
  std::vector<std::size_t> perm(p.ring().nvars);
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<int> signs(perm.size(), -1);
  return p.permuteSigned(perm, signs);
}

}  // namespace

TEST_CASE("flag integral examples") {
  RootSystem a1 = buildRootSystem(RootType::A, 1);
  CHECK(constantOf(FlagIntegralProblem(a1, Y("y1", 2))) == 1);
  CHECK(constantOf(FlagIntegralProblem(a1, Y("1", 2))) == 0);
  RootSystem a2 = buildRootSystem(RootType::A, 2);
  CHECK(constantOf(FlagIntegralProblem(a2, Y("(y1-y2)*(y1-y3)*(y2-y3)", 3))) == 6);
  CHECK(constantOf(FlagIntegralProblem(a2, Y("y1^2*y2", 3))) == 1);
  CHECK(flagIntegral(FlagIntegralProblem(a2, Y("y1^2*y2", 3))).fixedPoints == 6);
}

TEST_CASE("flag integral input validation") {
  RootSystem a2 = buildRootSystem(RootType::A, 2);
  CHECK_THROWS_AS(FlagIntegralProblem(a2, parsePoly("u1", 3, 'u')), PreconditionError);
  CHECK_THROWS_AS(FlagIntegralProblem(a2, Y("y1", 2)), PreconditionError);
}

TEST_CASE("over-degree integrand gives the equivariant pushforward") {
  RootSystem a1 = buildRootSystem(RootType::A, 1);
  auto r = flagIntegral(FlagIntegralProblem(a1, Y("y1^2", 2)));
  CHECK(r.polynomial == parsePoly("u1 + u2", 2, 'u'));
}

TEST_CASE("polynomiality and degree law") {
  std::mt19937_64 rng(23);
  const std::vector<std::pair<RootType, int>> systems{{RootType::A, 1}, {RootType::A, 2}, {RootType::A, 3},
                                                      {RootType::B, 2}, {RootType::C, 2}, {RootType::D, 2},
                                                      {RootType::D, 3}, {RootType::B, 3}};
  for (auto [type, rank] : systems) {
    RootSystem rs = buildRootSystem(type, rank);
    const int top = static_cast<int>(rs.positiveRoots.size());
    const Ring ring{rs.nvars, 'y'};
    for (int trial = 0; trial < 6; ++trial) {
      const int degree = trial % (top + 3);
      FlagIntegralProblem problem(rs, testing::randomHomogeneous(rng, ring, degree, 3));
      auto r = flagIntegral(problem);
      CAPTURE(toChar(type));
      CAPTURE(rank);
      CAPTURE(render(problem.integrand));
      if (degree < top) CHECK(r.polynomial.isZero());
      if (degree == top) CHECK(r.isConstant());
      if (!r.polynomial.isZero()) CHECK(r.polynomial.totalDegree() == degree - top);
      for (const auto& x : crossCheckPoints(rs.nvars, 5, 2)) {
        CHECK(flagIntegralAt(problem, x) == evalAt(r.polynomial, x));
      }
    }
  }
}

TEST_CASE("root convention") {
  std::mt19937_64 rng(29);
  for (int rank = 1; rank <= 3; ++rank) {
    RootSystem rs = buildRootSystem(RootType::A, rank);
    const Ring ring{rs.nvars, 'y'};
    const int top = static_cast<int>(rs.positiveRoots.size());
    const Rational sign = top % 2 == 0 ? 1 : -1;
    for (int trial = 0; trial < 5; ++trial) {
      Poly f = testing::randomPoly(rng, ring, top + 1, 4);
      FlagIntegralProblem problem(rs, f);
      Poly standard = flagIntegral(problem).polynomial;
      Poly negated = flagIntegral(problem, {1, RootConvention::Negated}).polynomial;
      // Flipping every root only rescales each Euler class by (-1)^{|roots|}.
      CHECK(negated == standard * sign);
      // Flipping the roots together with the characters u -> -u is a symmetry.
      Poly both = flagIntegral(FlagIntegralProblem(rs, negateVariables(f)), {1, RootConvention::Negated}).polynomial;
      CHECK(both == negateVariables(standard));
    }
  }
}

TEST_CASE("thread count does not change results") {
  std::mt19937_64 rng(31);
  RootSystem rs = buildRootSystem(RootType::B, 2);
  for (int trial = 0; trial < 5; ++trial) {
    FlagIntegralProblem problem(rs, testing::randomHomogeneous(rng, Ring{2, 'y'}, 5));
    CHECK(flagIntegral(problem, {1}).polynomial == flagIntegral(problem, {3}).polynomial);
  }
  GrassmannProblem g(5, 2, {2, 2});
  CHECK(grassmannianChernNumber(g, {1}).polynomial == grassmannianChernNumber(g, {4}).polynomial);
}

TEST_CASE("Euler characteristic") {
  CHECK(eulerCharacteristicGT(RootType::A, 2) == 6);
  CHECK(eulerCharacteristicGT(RootType::B, 2) == 8);
  CHECK(eulerCharacteristicGT(RootType::D, 3, EulerMethod::Evaluation) == 24);
  CHECK(eulerCharacteristicGT(RootType::C, 3, EulerMethod::Evaluation) == 48);
  RootSystem a1 = buildRootSystem(RootType::A, 1);
  CHECK(topClass(a1) == Y("y1 - y2", 2));
}

TEST_CASE("Grassmannian subsets") {
  auto s = subsets(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s[0].indices == std::vector<std::size_t>{1, 2});
  CHECK(s[0].complement == std::vector<std::size_t>{3, 4});
  CHECK(s[5].indices == std::vector<std::size_t>{3, 4});
}

TEST_CASE("Grassmannian problem validation") {
  CHECK_THROWS_AS(GrassmannProblem(3, 0, {}), PreconditionError);
  CHECK_THROWS_AS(GrassmannProblem(3, 3, {1, 1, 1}), PreconditionError);
  CHECK_THROWS_AS(GrassmannProblem(4, 2, {1}), PreconditionError);
  CHECK_THROWS_AS(GrassmannProblem(4, 2, {1, -1}), PreconditionError);
  CHECK(GrassmannProblem(5, 2, {2, 1}).weightedDegree() == 4);
}

TEST_CASE("CP^2 golden value") {
  auto r = grassmannianChernNumber(GrassmannProblem(3, 1, {2}));
  REQUIRE(r.isConstant());
  CHECK(r.value() == 1);
  CHECK(r.fixedPoints == 3);
}

TEST_CASE("Grassmannian fixed-point sums match the residue oracle") {
  // The fixed-point sum carries the orientation sign (-1)^{k(n-k)}.
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 1}}) {
    const Rational sign = (k * (n - k)) % 2 == 0 ? 1 : -1;
    for (const auto& m : oracle::exactDegreeExponents(n, k)) {
      GrassmannProblem g(n, k, m);
      auto r = grassmannianChernNumber(g);
      CAPTURE(n);
      CAPTURE(k);
      REQUIRE(r.isConstant());
      CHECK(r.value() == sign * oracle::chernNumber(m, n, k));
      CHECK(grassmannianByEvaluation(g, 9) == r.value());
    }
  }
}

TEST_CASE("Grassmannian under-degree is zero") {
  CHECK(grassmannianChernNumber(GrassmannProblem(4, 2, {1, 0})).polynomial.isZero());
  CHECK(grassmannianChernNumber(GrassmannProblem(5, 2, {1, 2})).polynomial.isZero());
  CHECK(grassmannianByEvaluation(GrassmannProblem(4, 2, {1, 0}), 1) == 0);
  CHECK_THROWS_AS(grassmannianByEvaluation(GrassmannProblem(4, 2, {3, 1}), 1), PreconditionError);
}

TEST_CASE("generic points") {
  auto x = genericPoint(6, 42);
  CHECK(x == genericPoint(6, 42));
  std::set<Rational> distinct(x.begin(), x.end());
  CHECK(distinct.size() == 6);
  for (const auto& v : x) CHECK(v > 0);
}
