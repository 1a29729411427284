#include "giambelli/numeric.hpp"

#include <cctype>
#include <cstdlib>

namespace giambelli {

namespace {

// GMP's string constructor with the default base misreads leading zeros as
// octal and rejects a leading '+', so integers go through here.
Integer parse_integer(std::string s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad integer: " + s);
  Integer v(s, 10);
  return neg ? Integer(-v) : v;
}

// "0.25" -> 1/4 exactly; "-3" -> -3; "5/8" -> 5/8.
Rational parse_plain(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    return Rational(parse_integer(s));
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  if (frac_len == 0) return Rational(parse_integer(s.substr(0, dot)));
  bool neg = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    neg = digits[0] == '-';
    digits = digits.substr(1);
  }
  if (digits.empty()) throw std::invalid_argument("bad number: " + s);
  Integer num = parse_integer(digits);
  Integer den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  Rational q(neg ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  try {
    return parse_plain(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: '" + s + "'");
  }
}

bool looks_complex(const std::string& s) {
  return s.find('i') != std::string::npos || s.find('I') != std::string::npos;
}

Complex parse_complex(const std::string& s) {
  if (!looks_complex(s)) {
    Rational q = parse_rational(s);
    return Complex(q.get_d(), 0.0);
  }
  // Split "a+bi" / "a-bi" / "bi" at the last +/- that is not leading and not
  // part of an exponent (exponents are not supported in exact inputs anyway).
  std::string t = s;
  size_t ipos = t.find_first_of("iI");
  if (ipos != t.size() - 1)
    throw std::invalid_argument("cannot parse complex: '" + s + "'");
  t.pop_back();
  size_t split = std::string::npos;
  for (size_t k = t.size(); k-- > 1;) {
    if (t[k] == '+' || t[k] == '-') { split = k; break; }
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    re_part = "0";
    im_part = t;
  } else {
    re_part = t.substr(0, split);
    im_part = t.substr(split);  // keeps the sign
  }
  if (im_part.empty() || im_part == "+" || im_part == "-") im_part += "1";
  return Complex(parse_rational(re_part).get_d(), parse_rational(im_part).get_d());
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

std::string half_to_string(int twice) {
  return std::to_string(twice) + "/2";
}

int parse_half(const std::string& s) {
  std::string t = s;
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    if (t.substr(slash + 1) != "2")
      throw std::invalid_argument("half-integer must have denominator 2: " + s);
    t = t.substr(0, slash);
    int num = std::stoi(t);
    if (num % 2 == 0)
      throw std::invalid_argument("not a half-integer: " + s);
    return num;
  }
  // Also accept decimal "-2.5" style.
  double v = std::stod(t);
  int twice = static_cast<int>(std::lround(2 * v));
  if (std::abs(2 * v - twice) > 1e-9 || twice % 2 == 0)
    throw std::invalid_argument("not a half-integer: " + s);
  return twice;
}

}  // namespace giambelli
