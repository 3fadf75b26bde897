#include "figeight/slope.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/integer/common_factor.hpp>

namespace figeight {

Slope::Slope(const Integer& p, const Integer& q) {
  if (p == 0 && q == 0) {
    throw std::invalid_argument("slope 0/0 is undefined");
  }
  if (q == 0) {
    p_ = 1;
    q_ = 0;
    return;
  }
  const Integer g = boost::multiprecision::gcd(abs(p), abs(q));
  p_ = p / g;
  q_ = q / g;
  if (q_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
}

Slope::Slope(const Rational& value) : Slope(num(value), den(value)) {}

Slope Slope::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinity();
  return Slope(parse_rational(text));
}

Rational Slope::value() const {
  if (is_infinite()) throw std::domain_error("slope inf has no finite value");
  return Rational(p_, q_);
}

std::string Slope::str() const {
  if (is_infinite()) return "inf";
  if (q_ == 1) return p_.str();
  return p_.str() + "/" + q_.str();
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

Slope reduce(const Integer& p, const Integer& q) { return Slope(p, q); }

Integer determinant(const Slope& a, const Slope& b) {
  return a.numerator() * b.denominator() - a.denominator() * b.numerator();
}

bool is_farey_adjacent(const Slope& a, const Slope& b) { return abs(determinant(a, b)) == 1; }

namespace {

// Strict order along the counter-clockwise sweep that starts at ∞: ∞ first,
// then finite slopes by decreasing value. On normalized vectors this is the
// angle order in [0, π), decided by a single cross product.
bool sweep_before(const Slope& a, const Slope& b) {
  if (a == b) return false;
  if (a.is_infinite()) return true;
  if (b.is_infinite()) return false;
  return determinant(a, b) > 0;
}

}  // namespace

bool counterclockwise(const Slope& a, const Slope& b, const Slope& c) {
  if (a == b || b == c || a == c) return false;
  const bool ab = sweep_before(a, b);
  const bool bc = sweep_before(b, c);
  const bool ca = sweep_before(c, a);
  // Exactly one of the three cyclic rotations is increasing.
  return (ab && bc) || (bc && ca) || (ca && ab);
}

SlopeArc::SlopeArc(Slope from_, Slope to_, Direction direction_, Openness openness_)
    : from(std::move(from_)), to(std::move(to_)), direction(direction_), openness(openness_) {
  if (from == to) throw std::invalid_argument("arc endpoints coincide: " + from.str());
}

bool in_arc(const Slope& x, const SlopeArc& arc) {
  if (x == arc.from) return arc.openness == Openness::closed;
  if (x == arc.to) return arc.openness != Openness::open;
  return arc.direction == Direction::clockwise ? clockwise(arc.from, x, arc.to)
                                               : counterclockwise(arc.from, x, arc.to);
}

std::vector<Slope> neighbors_in_arc(const Slope& s, const SlopeArc& arc,
                                    const Integer& max_denominator) {
  if (max_denominator < 1) throw std::invalid_argument("max_denominator must be positive");
  std::vector<Slope> out;
  const auto consider = [&](const Slope& x) {
    if (in_arc(x, arc) && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  };
  const Integer& p = s.numerator();
  const Integer& q = s.denominator();
  if (q == 0) {
    for (Integer n = -max_denominator; n <= max_denominator; ++n) consider(Slope(n, Integer(1)));
  } else {
    // a/b is a neighbour iff p b - q a = ±1, so for each b at most two a.
    for (Integer b = 0; b <= max_denominator; ++b) {
      for (int e : {-1, 1}) {
        const Integer t = p * b - e;
        if (t % q == 0) {
          const Integer a = t / q;
          if (a == 0 && b == 0) continue;
          consider(Slope(a, b));
        }
      }
    }
  }
  const Slope& origin = arc.from;
  const bool cw = arc.direction == Direction::clockwise;
  std::sort(out.begin(), out.end(), [&](const Slope& x, const Slope& y) {
    if (x == y) return false;
    if (x == origin) return true;
    if (y == origin) return false;
    return cw ? clockwise(origin, x, y) : counterclockwise(origin, x, y);
  });
  return out;
}

Slope furthest_neighbor_toward(const Slope& s, const Slope& target, Direction direction) {
  if (s == target) throw std::invalid_argument("step target equals the current slope " + s.str());
  if (is_farey_adjacent(s, target)) return target;
  const Integer& p = s.numerator();
  const Integer& q = s.denominator();
  // u with det(s, u) = 1; the neighbours of s are u + k s.
  const Bezout e = extended_gcd(p, q);
  const Integer ua = -e.y, ub = e.x;
  // target = alpha u + beta s as vectors (u unnormalized)
  const Integer alpha = determinant(s, target);
  const Integer beta = ub * target.numerator() - ua * target.denominator();
  const Integer k = floor(ratio(beta, alpha));
  const SlopeArc arc(s, target, direction);
  for (const Integer& j : {k, Integer(k + 1)}) {
    Slope candidate(ua + j * p, ub + j * q);
    if (in_arc(candidate, arc)) return candidate;
  }
  throw std::logic_error("no neighbour of " + s.str() + " found towards " + target.str());
}

UnimodularMatrix::UnimodularMatrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (abs(det()) != 1) {
    throw std::invalid_argument("matrix is not unimodular (det = " + det().str() + ")");
  }
}

UnimodularMatrix UnimodularMatrix::inverse() const {
  const Integer e = det();
  return {d_ * e, -b_ * e, -c_ * e, a_ * e};
}

UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
          x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m) {
  return os << "[[" << m.a() << "," << m.b() << "],[" << m.c() << "," << m.d() << "]]";
}

Slope apply_unimodular(const UnimodularMatrix& m, const Slope& s) {
  const Integer& p = s.numerator();
  const Integer& q = s.denominator();
  return Slope(m.a() * p + m.b() * q, m.c() * p + m.d() * q);
}

}  // namespace figeight
