#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <unordered_map>
#include <vector>

#include "figeight/cfrac.hpp"
#include "figeight/classification.hpp"
#include "figeight/slope.hpp"

namespace figeight::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261014);
  return gen;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rational random_rational(long max_num, long max_den) {
  const long q = uniform(1, max_den);
  const long p = uniform(-max_num, max_num);
  return Rational(p, q);
}

inline Slope random_slope(long max_num, long max_den, double inf_rate = 0.05) {
  if (std::uniform_real_distribution<double>(0, 1)(rng()) < inf_rate) return Slope::infinity();
  return Slope(random_rational(max_num, max_den));
}

inline Rational random_in_range(long max_num, long max_den) {
  for (;;) {
    const Rational r = random_rational(max_num, max_den);
    if (r != 0 && in_classified_range(Slope(r))) return r;
  }
}

/// Random rational strictly between lo and hi with denominator at most
/// max_den (assumes one exists).
inline Rational random_between(const Rational& lo, const Rational& hi, long max_den) {
  for (;;) {
    const long q = uniform(2, max_den);
    const Integer a = floor(lo * q) + 1;
    const Integer b = ceil(hi * q) - 1;
    if (a > b) continue;
    const long span = (b - a).convert_to<long>();
    const Rational r(Integer(a + uniform(0, span)), Integer(q));
    if (r > lo && r < hi && !is_integer(r)) return r;
  }
}

// Angle of the projective class in [0, π): ∞ sits at 0 and finite slopes
// increase in angle as their value decreases. Only used on small denominators.
inline double angle(const Slope& s) {
  const double p = s.numerator().convert_to<double>();
  const double q = s.denominator().convert_to<double>();
  if (q == 0) return 0.0;
  return std::atan2(q, p);
}

inline bool ccw_by_angle(const Slope& a, const Slope& b, const Slope& c) {
  const double x = angle(a), y = angle(b), z = angle(c);
  return (x < y && y < z) || (y < z && z < x) || (z < x && x < y);
}

/// Neighbours of s with denominator <= bound (integers |n| <= bound for ∞),
/// found by solving p b − q a = ±1 directly.
inline std::vector<Slope> brute_neighbors(const Slope& s, long bound) {
  std::vector<Slope> out;
  const Integer& p = s.numerator();
  const Integer& q = s.denominator();
  if (q == 0) {
    for (long n = -bound; n <= bound; ++n) out.emplace_back(Integer(n), Integer(1));
    return out;
  }
  for (long b = 0; b <= bound; ++b) {
    for (int e : {-1, 1}) {
      const Integer t = p * b - e;
      if (t % q != 0) continue;
      const Slope x(Integer(t / q), Integer(b));
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
  }
  return out;
}

/// The bypass clause read literally: r itself if adjacent, otherwise the
/// neighbour in the open arc (s → r) with no other neighbour between it and r.
inline Slope brute_bypass(const Slope& s, const Slope& r, Direction dir, long bound) {
  if (is_farey_adjacent(s, r)) return r;
  const SlopeArc arc(s, r, dir);
  std::vector<Slope> inside;
  for (const auto& x : brute_neighbors(s, bound)) {
    if (in_arc(x, arc)) inside.push_back(x);
  }
  for (const auto& c : inside) {
    bool furthest = true;
    for (const auto& x : inside) {
      if (!(x == c) && in_arc(x, SlopeArc(c, r, dir))) furthest = false;
    }
    if (furthest) return c;
  }
  throw std::runtime_error("brute force found no neighbour");
}

/// Breadth-first distance in the Farey graph restricted to denominators
/// <= bound and to the slopes accepted by keep.
inline long farey_distance(const Slope& from, const Slope& to, long bound,
                           const std::function<bool(const Slope&)>& keep = {}) {
  std::unordered_map<Slope, long> dist{{from, 0}};
  std::queue<Slope> todo;
  todo.push(from);
  while (!todo.empty()) {
    const Slope v = todo.front();
    todo.pop();
    if (v == to) return dist[v];
    for (const auto& w : brute_neighbors(v, bound)) {
      if (keep && !keep(w)) continue;
      if (dist.emplace(w, dist[v] + 1).second) todo.push(w);
    }
  }
  return -1;
}

/// Standard expansion of −a/b (a >= b > 0) by integer division, checked
/// against eval_cfrac.
inline std::vector<Integer> expansion_by_division(Integer a, Integer b) {
  std::vector<Integer> out;
  for (;;) {
    const Integer c = (a + b - 1) / b;  // ceil(a/b)
    out.push_back(-c);
    const Integer rest = b * c - a;
    if (rest == 0) break;
    a = b;
    b = rest;
  }
  return out;
}

/// Φ straight from its definition: representative in (0, 1], expansion of
/// −q/p, absolute product. Only eval_cfrac is borrowed from the library.
inline Integer phi_oracle(const Rational& r) {
  Rational rep = r - Rational(floor(r));
  if (rep == 0) rep = 1;
  const Integer p = num(rep), q = den(rep);
  const auto c = expansion_by_division(q, p);
  if (eval_cfrac(NegContinuedFraction(c, CfracForm::standard)) != ratio(-q, p)) {
    throw std::logic_error("oracle expansion does not evaluate back");
  }
  Integer out = c[0];
  for (std::size_t i = 1; i < c.size(); ++i) out *= c[i] + 1;
  return out < 0 ? Integer(-out) : out;
}

inline Integer psi_oracle(const Rational& r) {
  if (r >= -3) return 0;
  return phi_oracle(Rational(-1) / (r + 3));
}

}  // namespace figeight::testing
