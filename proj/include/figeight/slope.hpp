#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "figeight/number.hpp"

namespace figeight {

/// A reduced slope p/q in Q ∪ {∞}, written in the (meridian, longitude)
/// basis of a torus. The denominator is never negative and ∞ is stored as 1/0.
class Slope {
 public:
  /// Reduces p/q. Throws std::invalid_argument for (0, 0).
  Slope(const Integer& p, const Integer& q);
  explicit Slope(const Rational& value);
  Slope(long long n) : Slope(Integer(n), Integer(1)) {}  // NOLINT(google-explicit-constructor)

  static Slope infinity() { return Slope(Integer(1), Integer(0)); }
  /// Accepts `p/q`, `n` and `inf`.
  static Slope parse(std::string_view text);

  const Integer& numerator() const { return p_; }
  const Integer& denominator() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  bool is_integer() const { return q_ == 1; }
  /// The finite value. Throws std::domain_error for ∞.
  Rational value() const;

  std::string str() const;

  friend bool operator==(const Slope& a, const Slope& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

 private:
  Integer p_;
  Integer q_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

Slope reduce(const Integer& p, const Integer& q);

/// p_a q_b - q_a p_b.
Integer determinant(const Slope& a, const Slope& b);

bool is_farey_adjacent(const Slope& a, const Slope& b);

/// True when a, b, c are pairwise distinct and appear in this cyclic order
/// going counter-clockwise around the Farey circle (0, -1, 1 is
/// counter-clockwise; equivalently, decreasing value wrapping through ∞).
bool counterclockwise(const Slope& a, const Slope& b, const Slope& c);
inline bool clockwise(const Slope& a, const Slope& b, const Slope& c) {
  return counterclockwise(c, b, a);
}

enum class Direction { clockwise, counterclockwise };
enum class Openness { open, half_open_at_to, closed };

struct SlopeArc {
  SlopeArc(Slope from, Slope to, Direction direction, Openness openness = Openness::open);

  Slope from;
  Slope to;
  Direction direction;
  Openness openness;
};

bool in_arc(const Slope& x, const SlopeArc& arc);

/// Farey neighbours of `s` inside `arc` with denominator at most
/// `max_denominator`, ordered from `arc.from` towards `arc.to`. Neighbours of ∞
/// are the integers; for s = ∞ their magnitude is bounded by `max_denominator`
/// as well.
std::vector<Slope> neighbors_in_arc(const Slope& s, const SlopeArc& arc,
                                    const Integer& max_denominator);

/// The Farey neighbour of `s` inside the open arc from `s` to `target` in
/// `direction` that lies furthest along, or `target` itself when it is a
/// neighbour. Throws std::invalid_argument when s = target.
Slope furthest_neighbor_toward(const Slope& s, const Slope& target, Direction direction);

class UnimodularMatrix {
 public:
  /// Throws std::invalid_argument unless |ad - bc| = 1.
  UnimodularMatrix(Integer a, Integer b, Integer c, Integer d);
  static UnimodularMatrix identity() { return {1, 0, 0, 1}; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }
  Integer det() const { return a_ * d_ - b_ * c_; }

  UnimodularMatrix inverse() const;

  friend UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y);
  friend bool operator==(const UnimodularMatrix& x, const UnimodularMatrix& y) = default;

 private:
  Integer a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m);

/// reduce(a p + b q, c p + d q).
Slope apply_unimodular(const UnimodularMatrix& m, const Slope& s);

}  // namespace figeight

template <>
struct std::hash<figeight::Slope> {
  std::size_t operator()(const figeight::Slope& s) const noexcept {
    return boost::multiprecision::hash_value(s.numerator()) * 1000003u ^
           boost::multiprecision::hash_value(s.denominator());
  }
};
