#pragma once

#include <vector>

#include "figeight/slope.hpp"

namespace figeight {

enum class AttachSide { front, back };

struct BypassMove {
  AttachSide attach_side = AttachSide::front;
  Slope arc_slope = Slope(0);
};

/// New dividing slope after attaching a bypass along an arc of slope
/// `move.arc_slope`. Front attachment moves clockwise, back attachment
/// counter-clockwise. Throws std::invalid_argument if s equals the arc slope.
Slope bypass_step(const Slope& s, const BypassMove& move);

/// −(4n−1)/n, 1/n or (4n+1)/n for some n >= 1.
bool in_excluded_bypass_set(const Slope& s);
/// Whether the figure-eight exterior with boundary slope s is known to carry a
/// boundary-parallel bypass. Throws std::domain_error for s = 0 and s = ∞.
bool has_boundary_parallel_bypass(const Slope& s);

struct ThickeningPath {
  Slope start;
  std::vector<Slope> slopes;  // includes start
  bool reached_minus_three = false;
  bool reached_infinity = false;

  std::size_t steps() const { return slopes.size() - 1; }
};

/// Repeated front bypasses of slope 0 starting from s. The walk stops after
/// appending ∞, which happens as soon as it sits on some −1/n (or on an
/// integer whose next step is ∞). −3 is flagged on the way but does not stop
/// it. Throws std::domain_error for s ∈ {0, ∞} and std::runtime_error if the
/// walk needs more than |p| + |q| steps.
ThickeningPath thicken_path(const Slope& s);

/// Start slope for the thickening of a window slope s of M(r): s itself,
/// except s = 0 with r = −1/n is replaced by −1/(n+1).
Slope thickening_start(const Slope& s, const Slope& r);

struct SlopeWindow {
  Slope surgery_coefficient;
  Integer denominator_bound;
};

/// Farey neighbours of r clockwise of r up to and including ∞, with
/// denominator at most the bound. Throws std::domain_error for r ∈ {0, ±4, ∞}.
std::vector<Slope> slopes_in_window(const SlopeWindow& w);

}  // namespace figeight
