#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loccalc/polynomial.hpp"
#include "loccalc/ratfun.hpp"

namespace loccalc {

enum class RootType { A, B, C, D };

RootType parseRootType(std::string_view text);
char toChar(RootType type);

/// Integer coefficients of a root in the basis u_1..u_n.
using Root = std::vector<int>;

/// Classical root system. Type A of rank r uses n = r + 1 variables (the
/// U(n) convention); types B, C, D of rank r use r variables.
struct RootSystem {
  RootType type = RootType::A;
  int rank = 0;
  std::size_t nvars = 0;
  std::vector<Root> positiveRoots;

  /// Ring of the equivariant parameters u_1..u_n.
  Ring ring() const { return Ring{nvars, 'u'}; }
};

RootSystem buildRootSystem(RootType type, int rank);

/// Closed-form order of the Weyl group.
std::uint64_t weylGroupOrder(RootType type, int rank);

/// Signed permutation acting by u_i -> signs[i] * u_{perm[i]} (0-based).
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(std::vector<std::size_t> perm, std::vector<int> signs);
  static WeylElement identity(std::size_t n);
  /// The transposition swapping 1-based indices i and j.
  static WeylElement transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const noexcept { return perm_.size(); }
  std::span<const std::size_t> permutation() const noexcept { return perm_; }
  std::span<const int> signs() const noexcept { return signs_; }
  bool isIdentity() const noexcept;
  /// Sign of the underlying permutation (ignores sign flips).
  int permutationSign() const;
  int negativeCount() const noexcept;

  /// Composition: (a * b) acts as a after b.
  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;

  /// One-line notation with signs, e.g. "[2-,1+,3+]".
  std::string toString() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<std::size_t> perm_;
  std::vector<int> signs_;
};

bool belongsTo(const WeylElement& w, const RootSystem& rs);

/// Every element exactly once: permutations in lexicographic order, and for
/// each permutation the admissible sign vectors in binary counting order.
std::vector<WeylElement> weylElements(const RootSystem& rs);
void forEachWeylElement(const RootSystem& rs, const std::function<void(const WeylElement&)>& visit);

Poly actOnPoly(const WeylElement& w, const Poly& p);
RatFun actOnRatFun(const WeylElement& w, const RatFun& r);
Root actOnRoot(const WeylElement& w, std::span<const int> root);

/// The linear form sum_i root[i] * u_{i+1} in `ring`.
Poly rootLinearForm(std::span<const int> root, Ring ring);

}  // namespace loccalc
