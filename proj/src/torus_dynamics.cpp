#include "figeight/torus_dynamics.hpp"

#include <stdexcept>

namespace figeight {

Slope bypass_step(const Slope& s, const BypassMove& move) {
  const Direction dir = move.attach_side == AttachSide::front ? Direction::clockwise
                                                              : Direction::counterclockwise;
  return furthest_neighbor_toward(s, move.arc_slope, dir);
}

bool in_excluded_bypass_set(const Slope& s) {
  if (s.is_infinite()) return false;
  const Integer& p = s.numerator();
  const Integer& q = s.denominator();
  if (p < 0) return -p == 4 * q - 1;
  return p == 1 || p == 4 * q + 1;
}

bool has_boundary_parallel_bypass(const Slope& s) {
  if (s.is_infinite() || s.numerator() == 0) {
    throw std::domain_error("boundary-parallel bypass question is undefined for slope " + s.str());
  }
  return !in_excluded_bypass_set(s);
}

ThickeningPath thicken_path(const Slope& s) {
  if (s.is_infinite() || s.numerator() == 0) {
    throw std::domain_error("thicken_path needs a start slope other than 0 and inf, got " +
                            s.str());
  }
  const Slope minus_three(-3);
  const Slope zero(0);
  ThickeningPath path{s, {s}};
  const Integer budget = abs(s.numerator()) + s.denominator();
  Integer taken = 0;
  for (;;) {
    const Slope cur = path.slopes.back();
    if (cur == minus_three) path.reached_minus_three = true;
    if (cur.is_infinite()) {
      path.reached_infinity = true;
      break;
    }
    Slope next = cur.numerator() == -1 ? Slope::infinity() : bypass_step(cur, {});
    if (next == zero) {
      throw std::domain_error("thickening from " + s.str() + " runs into slope 0 at " + cur.str());
    }
    if (++taken > budget) {
      throw std::runtime_error("thickening from " + s.str() + " exceeded its step budget of " +
                               budget.str());
    }
    path.slopes.push_back(std::move(next));
  }
  return path;
}

Slope thickening_start(const Slope& s, const Slope& r) {
  if (s.numerator() != 0 || s.is_infinite()) return s;
  if (r.is_infinite() || r.numerator() != -1) {
    throw std::domain_error("slope 0 only occurs in the window of some -1/n, not " + r.str());
  }
  return Slope(Integer(-1), r.denominator() + 1);
}

std::vector<Slope> slopes_in_window(const SlopeWindow& w) {
  const Slope& r = w.surgery_coefficient;
  if (r.is_infinite() || r == Slope(0) || r == Slope(4) || r == Slope(-4)) {
    throw std::domain_error("no slope window for toroidal or infinite coefficient " + r.str());
  }
  const SlopeArc arc(r, Slope::infinity(), Direction::clockwise, Openness::half_open_at_to);
  return neighbors_in_arc(r, arc, w.denominator_bound);
}

}  // namespace figeight
