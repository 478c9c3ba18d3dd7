#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

namespace cosdyn {

struct Atom {
  double position = 0.0;
  double mass = 0.0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Merge policy for atoms at (nearly) coincident positions. With the default
/// tolerance of 0 only bit-identical positions merge.
struct NormalizeOptions {
  /// Two sorted neighbours merge when their gap is at most
  /// merge_tolerance * max(1, |position|).
  double merge_tolerance = 0.0;
};

/// A finite signed combination of point masses on the real line.
///
/// Always held in canonical form: atoms sorted by position, positions
/// pairwise distinct, no zero masses. Two measures are equal as set functions
/// iff their canonical atom lists are equal.
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  explicit AtomicMeasure(std::vector<Atom> atoms, NormalizeOptions opts = {});

  static AtomicMeasure dirac(double position, double mass = 1.0) {
    return AtomicMeasure({{position, mass}});
  }

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }

  friend bool operator==(const AtomicMeasure&, const AtomicMeasure&) = default;

 private:
  std::vector<Atom> atoms_;
};

/// Canonical form of an arbitrary atom list.
std::vector<Atom> normalize(std::vector<Atom> atoms, NormalizeOptions opts = {});
AtomicMeasure normalize(const AtomicMeasure& m, NormalizeOptions opts);

double total_variation(const AtomicMeasure& m) noexcept;

/// |m|(B) for B given by a membership predicate on positions.
template <std::predicate<double> Pred>
double variation_on(const AtomicMeasure& m, Pred&& in_set) {
  double sum = 0.0;
  for (const Atom& a : m.atoms()) {
    if (in_set(a.position)) sum += a.mass < 0 ? -a.mass : a.mass;
  }
  return sum;
}

/// m restricted to B: B ↦ m(B ∩ ·).
template <std::predicate<double> Pred>
AtomicMeasure restrict(const AtomicMeasure& m, Pred&& in_set) {
  std::vector<Atom> kept;
  for (const Atom& a : m.atoms()) {
    if (in_set(a.position)) kept.push_back(a);
  }
  return AtomicMeasure(std::move(kept));
}

AtomicMeasure scale(double factor, const AtomicMeasure& m);

/// a*m1 + b*m2 in canonical form.
AtomicMeasure linear_combine(double a, const AtomicMeasure& m1, double b,
                             const AtomicMeasure& m2, NormalizeOptions opts = {});

/// Total-variation distance ‖m1 - m2‖.
double tv_distance(const AtomicMeasure& m1, const AtomicMeasure& m2,
                   NormalizeOptions opts = {});

/// A closed bounded interval [lo, hi] standing in for a compact set K.
class CompactWindow {
 public:
  CompactWindow(double lo, double hi);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  bool contains(double t) const noexcept { return lo_ <= t && t <= hi_; }
  bool contains(const CompactWindow& other) const noexcept {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }

  friend bool operator==(const CompactWindow&, const CompactWindow&) = default;

 private:
  double lo_;
  double hi_;
};

/// True when every atom of m lies in the window, i.e. |m|(K^c) = 0.
bool supported_in(const AtomicMeasure& m, const CompactWindow& window) noexcept;

}  // namespace cosdyn
