#include "loccalc/weyl.hpp"

#include <algorithm>
#include <numeric>

#include "loccalc/error.hpp"

namespace loccalc {

namespace {

constexpr int kMaxVariables = 12;

}  // namespace

RootType parseRootType(std::string_view text) {
  if (text == "A" || text == "a") return RootType::A;
  if (text == "B" || text == "b") return RootType::B;
  if (text == "C" || text == "c") return RootType::C;
  if (text == "D" || text == "d") return RootType::D;
  throw PreconditionError("unsupported root system type '" + std::string(text) + "' (expected A, B, C or D)");
}

char toChar(RootType type) {
  switch (type) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
  }
  return '?';
}

RootSystem buildRootSystem(RootType type, int rank) {
  // D_1 is degenerate; D_2 is accepted and equals A_1 x A_1.
  int minRank = type == RootType::D ? 2 : 1;
  if (rank < minRank) {
    throw PreconditionError(std::string("unsupported rank ") + std::to_string(rank) + " for type " +
                            toChar(type) + " (minimum " + std::to_string(minRank) + ")");
  }
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.nvars = static_cast<std::size_t>(type == RootType::A ? rank + 1 : rank);
  if (rs.nvars > static_cast<std::size_t>(kMaxVariables)) {
    throw PreconditionError("unsupported rank " + std::to_string(rank) + ": at most " +
                            std::to_string(kMaxVariables) + " variables");
  }
  const std::size_t n = rs.nvars;
  auto unit = [n](std::size_t i, int c) {
    Root r(n, 0);
    r[i] = c;
    return r;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Root minus(n, 0);
      minus[i] = 1;
      minus[j] = -1;
      rs.positiveRoots.push_back(minus);
      if (type != RootType::A) {
        Root plus(n, 0);
        plus[i] = 1;
        plus[j] = 1;
        rs.positiveRoots.push_back(plus);
      }
    }
  }
  if (type == RootType::B || type == RootType::C) {
    for (std::size_t i = 0; i < n; ++i) rs.positiveRoots.push_back(unit(i, type == RootType::B ? 1 : 2));
  }
  return rs;
}

std::uint64_t weylGroupOrder(RootType type, int rank) {
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  switch (type) {
    case RootType::A: return factorial(rank + 1);
    case RootType::B:
    case RootType::C: return (std::uint64_t{1} << rank) * factorial(rank);
    case RootType::D: return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
  }
  return 0;
}

// ------------------------------------------------------------- WeylElement

WeylElement::WeylElement(std::vector<std::size_t> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) throw PreconditionError("permutation and sign vector lengths differ");
  std::vector<bool> seen(perm_.size(), false);
  for (auto p : perm_) {
    if (p >= perm_.size() || seen[p]) throw PreconditionError("not a permutation");
    seen[p] = true;
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw PreconditionError("signs must be +1 or -1");
  }
}

WeylElement WeylElement::identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return WeylElement(std::move(perm), std::vector<int>(n, 1));
}

WeylElement WeylElement::transposition(std::size_t n, std::size_t i, std::size_t j) {
  if (i == 0 || j == 0 || i > n || j > n) throw PreconditionError("transposition index out of range");
  WeylElement w = identity(n);
  std::swap(w.perm_[i - 1], w.perm_[j - 1]);
  return w;
}

bool WeylElement::isIdentity() const noexcept {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i || signs_[i] != 1) return false;
  }
  return true;
}

int WeylElement::permutationSign() const {
  std::vector<bool> seen(perm_.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

int WeylElement::negativeCount() const noexcept {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  if (size() != other.size()) throw PreconditionError("composing Weyl elements of different sizes");
  // other sends u_i to s'_i u_{p'(i)}; then this sends that to s'_i s_{p'(i)} u_{p(p'(i))}.
  std::vector<std::size_t> perm(size());
  std::vector<int> signs(size());
  for (std::size_t i = 0; i < size(); ++i) {
    perm[i] = perm_[other.perm_[i]];
    signs[i] = other.signs_[i] * signs_[other.perm_[i]];
  }
  return WeylElement(std::move(perm), std::move(signs));
}

WeylElement WeylElement::inverse() const {
  std::vector<std::size_t> perm(size());
  std::vector<int> signs(size());
  for (std::size_t i = 0; i < size(); ++i) {
    perm[perm_[i]] = i;
    signs[perm_[i]] = signs_[i];
  }
  return WeylElement(std::move(perm), std::move(signs));
}

std::string WeylElement::toString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(perm_[i] + 1);
    out += signs_[i] < 0 ? '-' : '+';
  }
  return out + "]";
}

bool belongsTo(const WeylElement& w, const RootSystem& rs) {
  if (w.size() != rs.nvars) return false;
  switch (rs.type) {
    case RootType::A: return w.negativeCount() == 0;
    case RootType::B:
    case RootType::C: return true;
    case RootType::D: return w.negativeCount() % 2 == 0;
  }
  return false;
}

void forEachWeylElement(const RootSystem& rs, const std::function<void(const WeylElement&)>& visit) {
  const std::size_t n = rs.nvars;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  const bool signed_ = rs.type != RootType::A;
  const std::uint64_t signPatterns = signed_ ? (std::uint64_t{1} << n) : 1;
  do {
    for (std::uint64_t mask = 0; mask < signPatterns; ++mask) {
      if (rs.type == RootType::D && __builtin_popcountll(mask) % 2 != 0) continue;
      std::vector<int> signs(n, 1);
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) signs[i] = -1;
      }
      visit(WeylElement(perm, std::move(signs)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<WeylElement> weylElements(const RootSystem& rs) {
  std::vector<WeylElement> out;
  out.reserve(weylGroupOrder(rs.type, rs.rank));
  forEachWeylElement(rs, [&](const WeylElement& w) { out.push_back(w); });
  return out;
}

Poly actOnPoly(const WeylElement& w, const Poly& p) {
  if (w.size() != p.ring().nvars) {
    throw PreconditionError("incompatible rings: Weyl element on " + std::to_string(w.size()) +
                            " letters, polynomial in " + std::to_string(p.ring().nvars) + " variables");
  }
  return p.permuteSigned(w.permutation(), w.signs());
}

RatFun actOnRatFun(const WeylElement& w, const RatFun& r) {
  return RatFun::make(actOnPoly(w, r.num()), actOnPoly(w, r.den()));
}

Root actOnRoot(const WeylElement& w, std::span<const int> root) {
  if (root.size() != w.size()) throw PreconditionError("root length does not match Weyl element");
  Root out(root.size(), 0);
  for (std::size_t i = 0; i < root.size(); ++i) out[w.permutation()[i]] = w.signs()[i] * root[i];
  return out;
}

Poly rootLinearForm(std::span<const int> root, Ring ring) { return Poly::linear(ring, root); }

}  // namespace loccalc
