#pragma once

#include <random>
#include <string>
#include <vector>

#include "loccalc/polynomial.hpp"

namespace loccalc::testing {

inline Rational randomCoeff(std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 3);
  int n = 0;
  while (n == 0) n = num(rng);
  Rational q(n, den(rng));
  q.canonicalize();
  return q;
}

inline Monomial randomMonomial(std::mt19937_64& rng, std::size_t nvars, int degree) {
  std::vector<std::uint32_t> e(nvars, 0);
  std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
  for (int i = 0; i < degree; ++i) ++e[pick(rng)];
  return Monomial(std::move(e));
}

/// Homogeneous of the given degree with up to `terms` terms (nonzero).
inline Poly randomHomogeneous(std::mt19937_64& rng, Ring ring, int degree, int terms = 4) {
  std::vector<Term> out;
  for (int i = 0; i < terms; ++i) out.push_back({randomMonomial(rng, ring.nvars, degree), randomCoeff(rng)});
  Poly p = Poly::fromTerms(ring, std::move(out));
  if (p.isZero()) return Poly::monomial(ring, randomMonomial(rng, ring.nvars, degree), Rational(1));
  return p;
}

/// Arbitrary polynomial of total degree at most maxDegree.
inline Poly randomPoly(std::mt19937_64& rng, Ring ring, int maxDegree, int terms = 4) {
  std::uniform_int_distribution<int> deg(0, maxDegree);
  std::vector<Term> out;
  for (int i = 0; i < terms; ++i) out.push_back({randomMonomial(rng, ring.nvars, deg(rng)), randomCoeff(rng)});
  return Poly::fromTerms(ring, std::move(out));
}

/// Random well-formed expression text over one variable prefix.
inline std::string randomExprText(std::mt19937_64& rng, char prefix, std::size_t nvars, int depth = 4) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 8);
  auto leaf = [&]() -> std::string {
    switch (rng() % 3) {
      case 0: return std::to_string(rng() % 20);
      case 1: return std::to_string(rng() % 9 + 1) + "/" + std::to_string(rng() % 7 + 1);
      default: return std::string(1, prefix) + std::to_string(rng() % nvars + 1);
    }
  };
  switch (pick(rng)) {
    case 0:
    case 1:
    case 2: return leaf();
    case 3: return randomExprText(rng, prefix, nvars, depth - 1) + " + " + randomExprText(rng, prefix, nvars, depth - 1);
    case 4: return randomExprText(rng, prefix, nvars, depth - 1) + "-" + randomExprText(rng, prefix, nvars, depth - 1);
    case 5: return randomExprText(rng, prefix, nvars, depth - 1) + "*" + randomExprText(rng, prefix, nvars, depth - 1);
    case 6: return "-" + randomExprText(rng, prefix, nvars, depth - 1);
    case 7: return "(" + randomExprText(rng, prefix, nvars, depth - 1) + ")^" + std::to_string(rng() % 3);
    default: return "(" + randomExprText(rng, prefix, nvars, depth - 1) + ")";
  }
}

/// Byte strings for fuzzing: raw bytes, token soup, and mutated valid input.
inline std::string fuzzInput(std::mt19937_64& rng) {
  static const std::string alphabet = "uyacx0123456789+-*/^()  .\t";
  std::string s;
  switch (rng() % 4) {
    case 0: {
      std::size_t len = rng() % 24;
      for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<char>(rng() % 256));
      break;
    }
    case 1: {
      std::size_t len = rng() % 40;
      for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[rng() % alphabet.size()]);
      break;
    }
    case 2: {
      s = randomExprText(rng, "uyac"[rng() % 4], 4);
      std::size_t edits = rng() % 4 + 1;
      for (std::size_t i = 0; i < edits && !s.empty(); ++i) {
        std::size_t at = rng() % s.size();
        switch (rng() % 3) {
          case 0: s.erase(at, 1); break;
          case 1: s.insert(at, 1, alphabet[rng() % alphabet.size()]); break;
          default: s[at] = static_cast<char>(rng() % 256);
        }
      }
      break;
    }
    default: {
      std::size_t depth = rng() % 400;
      s = std::string(depth, '(') + "y1" + std::string(rng() % (depth + 1), ')');
      if (rng() % 2) s += "^" + std::to_string(rng() % 5000) + "^" + std::to_string(rng() % 5);
    }
  }
  return s;
}

}  // namespace loccalc::testing
