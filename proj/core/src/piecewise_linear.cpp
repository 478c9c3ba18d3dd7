#include "cosdyn/piecewise_linear.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cosdyn/errors.hpp"

namespace cosdyn {

PiecewiseLinear::PiecewiseLinear(std::vector<Breakpoint> breakpoints,
                                 double left_tail, double right_tail)
    : breakpoints_(std::move(breakpoints)), left_tail_(left_tail), right_tail_(right_tail) {
  if (!std::isfinite(left_tail_)) throw ValidationError("left_tail", "must be finite");
  if (!std::isfinite(right_tail_)) throw ValidationError("right_tail", "must be finite");
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const Breakpoint& b = breakpoints_[i];
    const std::string field = "breakpoints[" + std::to_string(i) + "]";
    if (!std::isfinite(b.x) || !std::isfinite(b.y)) {
      throw ValidationError(field, "must be finite");
    }
    if (i > 0 && !(breakpoints_[i - 1].x < b.x)) {
      throw ValidationError(field, "x values must be strictly increasing");
    }
  }
  if (breakpoints_.empty()) {
    if (left_tail_ != right_tail_) {
      throw ValidationError("right_tail",
                            "must equal left_tail when there are no breakpoints");
    }
  } else {
    if (left_tail_ != breakpoints_.front().y) {
      throw ValidationError("left_tail", "must equal the first breakpoint value (continuity)");
    }
    if (right_tail_ != breakpoints_.back().y) {
      throw ValidationError("right_tail", "must equal the last breakpoint value (continuity)");
    }
  }
}

double PiecewiseLinear::operator()(double t) const noexcept {
  if (breakpoints_.empty() || t <= breakpoints_.front().x) return left_tail_;
  if (t >= breakpoints_.back().x) return right_tail_;
  auto hi = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t,
                             [](double x, const Breakpoint& b) { return x < b.x; });
  auto lo = std::prev(hi);
  const double s = (t - lo->x) / (hi->x - lo->x);
  return lo->y + s * (hi->y - lo->y);
}

double PiecewiseLinear::max_value() const noexcept {
  double m = std::max(left_tail_, right_tail_);
  for (const Breakpoint& b : breakpoints_) m = std::max(m, b.y);
  return m;
}

double PiecewiseLinear::min_value() const noexcept {
  double m = std::min(left_tail_, right_tail_);
  for (const Breakpoint& b : breakpoints_) m = std::min(m, b.y);
  return m;
}

WeightFunction::WeightFunction(std::vector<Breakpoint> breakpoints, double left_tail,
                               double right_tail)
    : WeightFunction(PiecewiseLinear(std::move(breakpoints), left_tail, right_tail)) {}

WeightFunction::WeightFunction(PiecewiseLinear f) : f_(std::move(f)) {
  if (!(f_.left_tail() > 0.0)) throw ValidationError("left_tail", "weight must be positive");
  if (!(f_.right_tail() > 0.0)) throw ValidationError("right_tail", "weight must be positive");
  const auto bps = f_.breakpoints();
  for (std::size_t i = 0; i < bps.size(); ++i) {
    if (!(bps[i].y > 0.0)) {
      throw ValidationError("breakpoints[" + std::to_string(i) + "].y",
                            "weight must be positive");
    }
  }
}

}  // namespace cosdyn
