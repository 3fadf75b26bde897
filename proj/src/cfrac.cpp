#include "figeight/cfrac.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace figeight {

namespace {

bool satisfies(const std::vector<Integer>& c, CfracForm form) {
  const std::size_t n = c.size() - 1;
  for (std::size_t i = 0; i <= n; ++i) {
    const bool relaxed = form == CfracForm::standard ? i == 0 : i == n;
    if (c[i] > (relaxed ? -1 : -2)) return false;
  }
  return true;
}

}  // namespace

NegContinuedFraction::NegContinuedFraction(std::vector<Integer> coefficients, CfracForm form)
    : coefficients_(std::move(coefficients)), form_(form) {
  if (coefficients_.empty()) throw std::invalid_argument("continued fraction needs a coefficient");
  if (!satisfies(coefficients_, form_)) {
    throw std::invalid_argument("coefficients " + str() + " violate the normal form");
  }
}

std::string NegContinuedFraction::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i) os << ',';
    os << coefficients_[i];
  }
  os << "]:" << (form_ == CfracForm::standard ? "std" : "st");
  return os.str();
}

NegContinuedFraction NegContinuedFraction::parse(std::string_view text) {
  const auto close = text.find(']');
  if (text.empty() || text.front() != '[' || close == std::string_view::npos) {
    throw std::invalid_argument("malformed continued fraction '" + std::string(text) + "'");
  }
  const auto suffix = text.substr(close + 1);
  CfracForm form;
  if (suffix == ":std") {
    form = CfracForm::standard;
  } else if (suffix == ":st") {
    form = CfracForm::solid_torus;
  } else {
    throw std::invalid_argument("continued fraction needs a :std or :st suffix");
  }
  std::vector<Integer> coefficients;
  auto body = text.substr(1, close - 1);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto item = body.substr(0, comma);
    const Rational v = parse_rational(item);
    if (!is_integer(v)) throw std::invalid_argument("coefficients must be integers");
    coefficients.push_back(num(v));
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  return {std::move(coefficients), form};
}

NegContinuedFraction neg_cfrac(const Rational& x, CfracForm form) {
  if (form == CfracForm::standard && x >= 0) {
    throw std::domain_error("standard expansion needs x < 0, got " + to_string(x));
  }
  if (form == CfracForm::solid_torus && x > -1) {
    throw std::domain_error("solid-torus expansion needs x <= -1, got " + to_string(x));
  }
  std::vector<Integer> out;
  Rational rest = x;
  for (;;) {
    const Integer head = floor(rest);
    out.push_back(head);
    if (rest == head) break;
    // rest = head - 1/tail with tail < -1
    rest = Rational(1) / (Rational(head) - rest);
  }
  return {std::move(out), form};
}

Rational eval_cfrac(const NegContinuedFraction& c) {
  const auto& r = c.coefficients();
  Rational value = r.back();
  for (std::size_t i = r.size() - 1; i-- > 0;) value = Rational(r[i]) - Rational(1) / value;
  return value;
}

NegContinuedFraction reverse_cfrac(const NegContinuedFraction& c) {
  if (c.form() != CfracForm::standard) {
    throw std::domain_error("reverse_cfrac expects a standard-form expansion");
  }
  std::vector<Integer> r = c.coefficients();
  std::reverse(r.begin(), r.end());
  return {std::move(r), CfracForm::solid_torus};
}

Integer phi_product(const NegContinuedFraction& c) {
  const auto& r = c.coefficients();
  Integer out = r[0];
  for (std::size_t i = 1; i < r.size(); ++i) out *= r[i] + 1;
  return abs(out);
}

Integer honda_product(const NegContinuedFraction& c) {
  const auto& r = c.coefficients();
  Integer out = r.back();
  for (std::size_t i = 0; i + 1 < r.size(); ++i) out *= r[i] + 1;
  return abs(out);
}

CountValue phi(const Rational& r) {
  // representative in (0, 1]
  const Rational rep = r - Rational(ceil(r)) + 1;
  const Rational x = ratio(-den(rep), num(rep));
  return {phi_product(neg_cfrac(x, CfracForm::standard)), CountKind::phi};
}

CountValue psi(const Rational& r) {
  if (r >= -3) return {Integer(0), CountKind::psi};
  return {phi(Rational(-1) / (r + 3)).value, CountKind::psi};
}

}  // namespace figeight
