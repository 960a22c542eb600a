#include "loccalc/expr.hpp"

#include <cctype>

#include "loccalc/error.hpp"

namespace loccalc {

namespace {

constexpr std::size_t kMaxDepth = 200;
constexpr std::uint64_t kMaxExponent = 1000;
constexpr std::size_t kMaxIndex = 1000;

bool isVariablePrefix(char c) { return c == 'u' || c == 'y' || c == 'a' || c == 'c'; }

bool isDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    Expr e = parseSum();
    skipSpace();
    if (pos_ < src_.size()) {
      fail("unexpected character '" + printable(src_[pos_]) + "'", {"'+'", "'-'", "'*'", "'^'", "end of input"});
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected = {}) const {
    failAt(pos_, message, std::move(expected));
  }

  [[noreturn]] void failAt(std::size_t at, const std::string& message, std::vector<std::string> expected = {}) const {
    std::string full = message + " at offset " + std::to_string(at);
    if (!expected.empty()) {
      full += "; expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) full += (i ? ", " : "") + expected[i];
    }
    throw ParseError(full, at, std::move(expected));
  }

  static std::string printable(char c) {
    if (std::isprint(static_cast<unsigned char>(c))) return std::string(1, c);
    static const char* hex = "0123456789abcdef";
    unsigned char u = static_cast<unsigned char>(c);
    return std::string("\\x") + hex[u >> 4] + hex[u & 15];
  }

  void skipSpace() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth) p.fail("expression nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
  };

  Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, std::size_t at) {
    Expr e;
    e.kind = kind;
    e.position = at;
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
  }

  Expr parseSum() {
    DepthGuard guard(*this);
    Expr lhs = parseProduct();
    while (true) {
      skipSpace();
      std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(Expr::Kind::Add, std::move(lhs), parseProduct(), at);
      } else if (accept('-')) {
        lhs = binary(Expr::Kind::Sub, std::move(lhs), parseProduct(), at);
      } else {
        return lhs;
      }
    }
  }

  Expr parseProduct() {
    Expr lhs = parseUnary();
    while (true) {
      skipSpace();
      std::size_t at = pos_;
      if (!accept('*')) return lhs;
      lhs = binary(Expr::Kind::Mul, std::move(lhs), parseUnary(), at);
    }
  }

  Expr parseUnary() {
    DepthGuard guard(*this);
    skipSpace();
    std::size_t at = pos_;
    if (accept('-')) {
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.position = at;
      e.operands.push_back(parseUnary());
      return e;
    }
    return parsePower();
  }

  Expr parsePower() {
    Expr base = parsePrimary();
    skipSpace();
    std::size_t at = pos_;
    if (!accept('^')) return base;
    Expr e;
    e.kind = Expr::Kind::Pow;
    e.position = at;
    e.exponent = parseExponent();
    e.operands.push_back(std::move(base));
    return e;
  }

  std::uint32_t parseExponent() {
    DepthGuard guard(*this);
    skipSpace();
    if (pos_ < src_.size() && src_[pos_] == '-') fail("negative exponent", {"non-negative integer literal"});
    if (pos_ >= src_.size() || !isDigit(src_[pos_])) {
      fail("exponent must be integer literal", {"non-negative integer literal"});
    }
    std::size_t at = pos_;
    std::uint64_t base = readSmallInteger(kMaxExponent, "exponent too large");
    skipSpace();
    if (pos_ < src_.size() && src_[pos_] == '/') failAt(at, "exponent must be integer literal", {"non-negative integer literal"});
    if (!accept('^')) return static_cast<std::uint32_t>(base);
    std::uint64_t power = parseExponent();
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < power; ++i) {
      result *= base;
      if (result > kMaxExponent) failAt(at, "exponent too large");
      if (base <= 1) break;
    }
    if (power == 0) result = 1;
    return static_cast<std::uint32_t>(result);
  }

  std::uint64_t readSmallInteger(std::uint64_t limit, const char* tooLarge) {
    std::size_t at = pos_;
    std::uint64_t v = 0;
    while (pos_ < src_.size() && isDigit(src_[pos_])) {
      v = v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
      ++pos_;
      if (v > limit) failAt(at, tooLarge);
    }
    return v;
  }

  std::string readDigits() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && isDigit(src_[pos_])) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Expr parsePrimary() {
    static const std::vector<std::string> kPrimary = {"integer", "rational", "variable", "'('", "'-'"};
    skipSpace();
    if (pos_ >= src_.size()) fail("unexpected end of input", kPrimary);
    const std::size_t at = pos_;
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = parseSum();
      if (!accept(')')) fail("unbalanced parenthesis", {"')'"});
      return inner;
    }
    if (isDigit(c)) {
      Expr e;
      e.position = at;
      Integer num(readDigits(), 10);
      skipSpace();
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        skipSpace();
        if (pos_ >= src_.size() || !isDigit(src_[pos_])) fail("rational literal needs a denominator", {"integer"});
        std::size_t denAt = pos_;
        Integer den(readDigits(), 10);
        if (den == 0) failAt(denAt, "zero denominator");
        e.kind = Expr::Kind::Rational;
        e.value = Rational(num, den);
        e.value.canonicalize();
      } else {
        e.kind = Expr::Kind::Integer;
        e.value = Rational(num);
      }
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (!isVariablePrefix(c)) fail("unknown variable prefix '" + printable(c) + "'", {"u", "y", "a", "c"});
      ++pos_;
      if (pos_ >= src_.size() || !isDigit(src_[pos_])) fail("variable needs an index", {"digits"});
      std::size_t indexAt = pos_;
      std::uint64_t index = readSmallInteger(kMaxIndex, "variable index too large");
      if (index == 0) failAt(indexAt, "variable index must be positive");
      if (prefix_ && *prefix_ != c) {
        failAt(at, std::string("mixed variable prefixes '") + *prefix_ + "' and '" + c + "'");
      }
      prefix_ = c;
      Expr e;
      e.kind = Expr::Kind::Variable;
      e.position = at;
      e.prefix = c;
      e.index = static_cast<std::size_t>(index);
      return e;
    }
    fail("unexpected character '" + printable(c) + "'", kPrimary);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  std::optional<char> prefix_;
};

void collectPrefix(const Expr& e, std::optional<char>& out) {
  if (e.kind == Expr::Kind::Variable && !out) out = e.prefix;
  for (const auto& op : e.operands) collectPrefix(op, out);
}

}  // namespace

std::string toString(const Expr& e) {
  auto join = [&](const char* name) {
    std::string s = std::string(name) + "(";
    for (std::size_t i = 0; i < e.operands.size(); ++i) s += (i ? "," : "") + toString(e.operands[i]);
    return s + ")";
  };
  switch (e.kind) {
    case Expr::Kind::Integer:
    case Expr::Kind::Rational: return loccalc::toString(e.value);
    case Expr::Kind::Variable: return std::string(1, e.prefix) + std::to_string(e.index);
    case Expr::Kind::Add: return join("Add");
    case Expr::Kind::Sub: return join("Sub");
    case Expr::Kind::Neg: return join("Neg");
    case Expr::Kind::Mul: return join("Mul");
    case Expr::Kind::Pow: return "Pow(" + toString(e.operands.front()) + "," + std::to_string(e.exponent) + ")";
  }
  return "?";
}

std::optional<char> variablePrefix(const Expr& e) {
  std::optional<char> out;
  collectPrefix(e, out);
  return out;
}

Expr parseExpr(std::string_view src) { return Parser(src).parse(); }

Poly lowerToPoly(const Expr& e, std::size_t ringSize, char prefix) {
  const Ring ring{ringSize, prefix};
  switch (e.kind) {
    case Expr::Kind::Integer:
    case Expr::Kind::Rational: return Poly::constant(ring, e.value);
    case Expr::Kind::Variable:
      if (e.prefix != prefix) {
        throw ParseError(std::string("expected variables '") + prefix + "', found '" + e.prefix + "'", e.position);
      }
      if (e.index > ringSize) {
        throw ParseError("variable " + std::string(1, e.prefix) + std::to_string(e.index) + " out of range 1.." +
                             std::to_string(ringSize),
                         e.position);
      }
      return Poly::variable(ring, e.index);
    case Expr::Kind::Add: return lowerToPoly(e.operands[0], ringSize, prefix) + lowerToPoly(e.operands[1], ringSize, prefix);
    case Expr::Kind::Sub: return lowerToPoly(e.operands[0], ringSize, prefix) - lowerToPoly(e.operands[1], ringSize, prefix);
    case Expr::Kind::Neg: return -lowerToPoly(e.operands[0], ringSize, prefix);
    case Expr::Kind::Mul: return lowerToPoly(e.operands[0], ringSize, prefix) * lowerToPoly(e.operands[1], ringSize, prefix);
    case Expr::Kind::Pow: return lowerToPoly(e.operands[0], ringSize, prefix).pow(e.exponent);
  }
  throw InvariantViolation("unknown expression node");
}

Poly parsePoly(std::string_view src, std::size_t ringSize, std::optional<char> prefix) {
  Expr e = parseExpr(src);
  char p = prefix ? *prefix : variablePrefix(e).value_or('u');
  return lowerToPoly(e, ringSize, p);
}

}  // namespace loccalc
