#pragma once

// Independent reference values for Grassmannian Chern numbers.
//
// With x_1..x_k the Chern roots of the dual tautological bundle,
//   int_{G(k,n)} phi(x) = (1/k!) [x_1^{n-1} ... x_k^{n-1}] phi(x) prod_{i != j} (x_i - x_j),
// and c_r(S) = (-1)^r e_r(x). Only polynomial multiplication and coefficient
// extraction are involved, so this shares nothing with either the Pieri code
// or the fixed-point sums.

#include <vector>

#include "loccalc/polynomial.hpp"
#include "loccalc/symfun.hpp"

namespace loccalc::oracle {

inline Rational chernNumber(const std::vector<int>& exponents, int n, int k) {
  const Ring ring{static_cast<std::size_t>(k), 'x'};
  Poly phi = Poly::constant(ring, 1);
  for (std::size_t r = 1; r <= exponents.size(); ++r) {
    Poly c = elementarySymmetric(static_cast<int>(r), ring);
    if (r % 2 == 1) c = -c;
    phi *= c.pow(static_cast<std::uint32_t>(exponents[r - 1]));
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (i != j) phi *= Poly::variable(ring, i) - Poly::variable(ring, j);
    }
  }
  Monomial target(std::vector<std::uint32_t>(k, static_cast<std::uint32_t>(n - 1)));
  Rational coeff = 0;
  for (const auto& t : phi.terms()) {
    if (t.monomial == target) coeff = t.coeff;
  }
  Rational factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return coeff / factorial;
}

/// All (m_1..m_k) with sum_r r * m_r = k(n-k).
inline std::vector<std::vector<int>> exactDegreeExponents(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> m(k, 0);
  const int target = k * (n - k);
  auto rec = [&](auto&& self, int r, int remaining) -> void {
    if (r == 0) {
      if (remaining == 0) out.push_back(m);
      return;
    }
    for (int e = remaining / r; e >= 0; --e) {
      m[r - 1] = e;
      self(self, r - 1, remaining - r * e);
    }
    m[r - 1] = 0;
  };
  rec(rec, k, target);
  return out;
}

}  // namespace loccalc::oracle
