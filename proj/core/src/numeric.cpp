#include "latticeforge/numeric.hpp"

#include <cctype>

namespace latticeforge {

namespace {

// Strict base-10 parse. cpp_int's string constructor follows C++ literal
// rules (leading 0 switches to octal), which is wrong for "0.25" -> "025".
Int parse_base10(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
  require_domain(i < text.size(), "bad integer literal: '" + text + "'");
  Int v = 0;
  for (; i < text.size(); ++i) {
    require_domain(std::isdigit(static_cast<unsigned char>(text[i])) != 0,
                   "bad integer literal: '" + text + "'");
    v = v * 10 + (text[i] - '0');
  }
  return neg ? Int(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  require_domain(!text.empty(), "empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Int num = parse_base10(text.substr(0, slash));
    Int den = parse_base10(text.substr(slash + 1));
    require_domain(den != 0, "rational literal with zero denominator: " + text);
    return Rational(num) / Rational(den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_base10(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  Int num = parse_base10(digits);
  return Rational(num) / Rational(int_pow(10, static_cast<unsigned>(text.size() - dot - 1)));
}

}  // namespace latticeforge
