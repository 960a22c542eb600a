#include "loccalc/rational.hpp"

#include <cctype>

#include "loccalc/error.hpp"

namespace loccalc {

std::string toString(const Rational& value) { return value.get_str(); }

Rational parseRational(std::string_view text) {
  auto isDigits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view numText = body.substr(0, slash);
  std::string_view denText = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!isDigits(numText) || !isDigits(denText)) {
    throw PreconditionError("malformed rational '" + std::string(text) + "'");
  }
  Integer num(std::string(numText), 10);
  Integer den(std::string(denText), 10);
  if (den == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  Rational value(negative ? Integer(-num) : num, den);
  value.canonicalize();
  return value;
}

}  // namespace loccalc
