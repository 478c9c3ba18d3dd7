#pragma once

#include <span>
#include <vector>

#include "cosdyn/measure.hpp"

namespace cosdyn {

/// Half-open interval [lo, hi) of doubles; empty when lo >= hi.
struct HalfOpenInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool empty() const noexcept { return !(lo < hi); }
  bool contains(double t) const noexcept { return lo <= t && t < hi; }

  friend bool operator==(const HalfOpenInterval&, const HalfOpenInterval&) = default;
};

/// A Borel set given as a finite union of half-open intervals.
///
/// Sets are interpreted over the doubles, so the closed interval [a, b] is the
/// half-open [a, nextafter(b, +inf)). Stored canonically: sorted, pairwise
/// disjoint and non-adjacent, no empty pieces. Equality of canonical forms is
/// set equality.
class BorelSet {
 public:
  BorelSet() = default;
  explicit BorelSet(std::vector<HalfOpenInterval> pieces);

  static BorelSet interval(double lo, double hi) { return BorelSet({{lo, hi}}); }
  /// The closed interval [lo, hi].
  static BorelSet closed(double lo, double hi);
  static BorelSet window(const CompactWindow& w) { return closed(w.lo(), w.hi()); }

  std::span<const HalfOpenInterval> pieces() const noexcept { return pieces_; }
  bool empty() const noexcept { return pieces_.empty(); }
  bool contains(double t) const noexcept;

  /// Largest double in the piece, i.e. the closure's right end.
  static double last_point(const HalfOpenInterval& piece) noexcept;

  BorelSet unite(const BorelSet& other) const;
  BorelSet intersect(const BorelSet& other) const;
  /// this \ other
  BorelSet minus(const BorelSet& other) const;
  bool disjoint_from(const BorelSet& other) const { return intersect(other).empty(); }

  auto predicate() const {
    return [this](double t) { return contains(t); };
  }

  friend bool operator==(const BorelSet&, const BorelSet&) = default;

 private:
  std::vector<HalfOpenInterval> pieces_;
};

}  // namespace cosdyn
