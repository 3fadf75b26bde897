#include "figeight/number.hpp"

#include <cctype>
#include <stdexcept>

namespace figeight {

Integer floor(const Rational& x) {
  const Integer n = num(x);
  const Integer d = den(x);
  Integer q = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

Integer ceil(const Rational& x) {
  return -floor(-x);
}

Rational ratio(const Integer& p, const Integer& q) {
  if (q == 0) throw std::domain_error("division by zero");
  return q < 0 ? Rational(Integer(-p), Integer(-q)) : Rational(p, q);
}

Bezout extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_x = 1, x = 0;
  Integer old_y = 0, y = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const Integer p = parse_integer(text.substr(0, slash), text);
  const auto rest = text.substr(slash + 1);
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    throw std::invalid_argument("malformed number '" + std::string(text) +
                                "': sign belongs on the numerator");
  }
  const Integer q = parse_integer(rest, text);
  if (q == 0) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "': zero denominator");
  }
  return Rational(p, q);
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (den(x) == 1) return num(x).str();
  return num(x).str() + "/" + den(x).str();
}

}  // namespace figeight
