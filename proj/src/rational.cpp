#include "ehk/rational.hpp"

#include <cctype>
#include <cstddef>

#include "ehk/errors.hpp"

namespace ehk {

namespace {

bool valid_integer_token(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  const std::size_t slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!valid_integer_token(num))
    throw ParseError("invalid rational literal: '" + text + "'");
  Int n(num, 10);
  Int d(1);
  if (slash != std::string::npos) {
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(den) || den.find('-') != std::string::npos ||
        den.find('+') != std::string::npos)
      throw ParseError("invalid rational literal: '" + text + "'");
    d = Int(den, 10);
    if (d == 0) throw ParseError("zero denominator: '" + text + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace ehk
