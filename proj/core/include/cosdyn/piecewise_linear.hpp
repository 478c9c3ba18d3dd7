#pragma once

#include <span>
#include <vector>

namespace cosdyn {

struct Breakpoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Continuous piecewise-linear function with constant tails.
///
/// Equal to left_tail for t <= first x, right_tail for t >= last x, and the
/// linear interpolant in between. With no breakpoints the function is the
/// constant left_tail (which must then equal right_tail). Continuity is
/// enforced: the tails must match the first and last breakpoint values.
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::vector<Breakpoint> breakpoints, double left_tail,
                  double right_tail);

  static PiecewiseLinear constant(double c) { return PiecewiseLinear({}, c, c); }

  double operator()(double t) const noexcept;

  std::span<const Breakpoint> breakpoints() const noexcept { return breakpoints_; }
  double left_tail() const noexcept { return left_tail_; }
  double right_tail() const noexcept { return right_tail_; }

  /// Extrema are attained at nodes or tails.
  double max_value() const noexcept;
  double min_value() const noexcept;

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

 private:
  std::vector<Breakpoint> breakpoints_;
  double left_tail_;
  double right_tail_;
};

/// A strictly positive PiecewiseLinear, so both w and 1/w are bounded.
class WeightFunction {
 public:
  /// Throws ValidationError naming the first nonpositive value.
  WeightFunction(std::vector<Breakpoint> breakpoints, double left_tail,
                 double right_tail);
  explicit WeightFunction(PiecewiseLinear f);

  static WeightFunction constant(double c) { return WeightFunction({}, c, c); }

  double operator()(double t) const noexcept { return f_(t); }
  const PiecewiseLinear& shape() const noexcept { return f_; }

  double sup() const noexcept { return f_.max_value(); }
  double inf() const noexcept { return f_.min_value(); }

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  PiecewiseLinear f_;
};

}  // namespace cosdyn
