#include "formality/rational.hpp"

#include <cctype>

namespace formality {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& token) {
  std::string num = token;
  std::string den = "1";
  auto slash = token.find('/');
  if (slash != std::string::npos) {
    num = token.substr(0, slash);
    den = token.substr(slash + 1);
    if (!all_digits(den))
      throw std::invalid_argument("malformed rational '" + token +
                                  "': denominator must be a positive integer");
  }
  std::string digits = num;
  if (!digits.empty() && digits[0] == '-') digits.erase(0, 1);
  if (!all_digits(digits))
    throw std::invalid_argument("malformed rational '" + token + "'");
  Int q(den);
  if (q == 0)
    throw std::invalid_argument("malformed rational '" + token +
                                "': zero denominator");
  return Rational(Int(num), q);
}

std::string to_string(const Rational& value) { return value.str(); }

}  // namespace formality
