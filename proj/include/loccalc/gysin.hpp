#pragma once

#include "loccalc/polynomial.hpp"
#include "loccalc/symfun.hpp"

namespace loccalc {

/// A class b(a_1..a_n) on the complete flag bundle of a rank-n bundle,
/// written in the pulled-back generators a_i (ring (n, 'a')).
struct FiberClass {
  int rank = 0;
  Poly poly;

  FiberClass(int rank, Poly poly);
};

struct PushforwardResult {
  /// f^* f_* b: an S_n-invariant polynomial in a_1..a_n.
  Poly symmetricPoly;
  /// The same class in e_1..e_n, read as Chern classes of the bundle.
  EBasisPoly chernForm;
};

struct GysinOptions {
  /// Convert symmetricPoly(-a) instead of symmetricPoly(a) to the e-basis.
  bool dualRoots = false;
};

/// prod_{i<j} (x_i - x_j) in `ring`.
Poly vandermonde(Ring ring);

/// sum_{w in S_n} sgn(w) w.p.
Poly antisymmetrize(const Poly& p);

/// Gysin pushforward along the complete flag bundle, computed as the
/// antisymmetrization of b divided exactly by the Vandermonde product.
PushforwardResult flagPushforward(const FiberClass& b, const GysinOptions& options = {});

/// The literal symmetrizer sum_{w in S_n} w.(b / prod_{i<j}(a_i - a_j)) as a
/// rational-function sum. Same value as flagPushforward(b).symmetricPoly.
Poly flagPushforwardWeylSum(const FiberClass& b, unsigned threads = 1);

struct ProjectionCheck {
  Poly lhs;  // f_*(c * b)
  Poly rhs;  // c * f_*(b)
  bool holds = false;
};

/// Checks f_*(f^*c * b) = c * f_*(b) for a symmetric class c.
ProjectionCheck projectionFormulaCheck(const Poly& c, const FiberClass& b);

}  // namespace loccalc
