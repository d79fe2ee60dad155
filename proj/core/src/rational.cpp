#include "dunkl/rational.hpp"

#include <cctype>
#include <string>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

Rational pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw InvalidInput("empty rational literal");

  if (s.find('/') != std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw InvalidInput("malformed rational: " + s);
    q.canonicalize();
    return q;
  }

  // Decimal with optional exponent, converted exactly.
  size_t epos = s.find_first_of("eE");
  std::string mantissa = s.substr(0, epos);
  long exponent = 0;
  if (epos != std::string::npos) {
    try {
      size_t used = 0;
      exponent = std::stol(s.substr(epos + 1), &used);
      if (used != s.size() - epos - 1) throw InvalidInput("malformed exponent: " + s);
    } catch (const std::logic_error&) {
      throw InvalidInput("malformed exponent: " + s);
    }
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.erase(0, 1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_dot) throw InvalidInput("malformed decimal: " + s);
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_dot) ++frac_digits;
    } else {
      throw InvalidInput("malformed decimal: " + s);
    }
  }
  if (digits.empty()) throw InvalidInput("malformed decimal: " + s);
  Rational q{mpz_class(digits, 10)};
  q *= pow10(exponent - frac_digits);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

}  // namespace dunkl
