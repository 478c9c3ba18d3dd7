#pragma once

// Random generators and brute-force oracles shared by the unit and acceptance
// suites. The oracles iterate α one step at a time and multiply plain
// doubles; they never call the library's product or grid code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cosdyn/dynamics.hpp"
#include "cosdyn/measure.hpp"
#include "cosdyn/piecewise_linear.hpp"

namespace cosdyn::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 gen_;
};

/// Sorted distinct x values in [lo, hi].
inline std::vector<double> random_nodes(Rng& rng, int count, double lo, double hi) {
  std::vector<double> xs;
  while (static_cast<int>(xs.size()) < count) {
    xs.push_back(rng.uniform(lo, hi));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  }
  return xs;
}

inline WeightFunction random_weight(Rng& rng, double ymin = 0.5, double ymax = 2.0) {
  const int k = rng.integer(0, 5);
  if (k == 0) return WeightFunction::constant(rng.uniform(ymin, ymax));
  std::vector<Breakpoint> bps;
  for (double x : random_nodes(rng, k, -5.0, 5.0)) bps.push_back({x, rng.uniform(ymin, ymax)});
  const double left = bps.front().y;
  const double right = bps.back().y;
  return WeightFunction(std::move(bps), left, right);
}

/// Signed piecewise-linear test function standing in for C_0 elements.
inline PiecewiseLinear random_function(Rng& rng) {
  const int k = rng.integer(1, 6);
  std::vector<Breakpoint> bps;
  for (double x : random_nodes(rng, k, -12.0, 12.0)) bps.push_back({x, rng.uniform(-3.0, 3.0)});
  const double left = bps.front().y;
  const double right = bps.back().y;
  return PiecewiseLinear(std::move(bps), left, right);
}

inline Homeomorphism random_homeomorphism(Rng& rng) {
  switch (rng.integer(0, 2)) {
    case 0:
      return Homeomorphism::translation(rng.uniform(0.25, 2.0) * (rng.coin() ? 1 : -1));
    case 1:
      return Homeomorphism::affine(rng.coin() ? rng.uniform(0.6, 0.95) : rng.uniform(1.05, 1.6),
                                   rng.uniform(-1.0, 1.0));
    default:
      return Homeomorphism::affine(-rng.uniform(0.7, 1.4), rng.uniform(-1.0, 1.0));
  }
}

inline CosineSystem random_system(Rng& rng) {
  return {random_homeomorphism(rng), random_weight(rng)};
}

inline AtomicMeasure random_measure(Rng& rng, int max_atoms = 6, double lo = -5.0,
                                    double hi = 5.0, double mass_scale = 2.0) {
  const int k = rng.integer(1, max_atoms);
  std::vector<Atom> atoms;
  for (int i = 0; i < k; ++i) {
    double mass = rng.uniform(-mass_scale, mass_scale);
    if (mass == 0.0) mass = 1.0;
    atoms.push_back({rng.uniform(lo, hi), mass});
  }
  return AtomicMeasure(std::move(atoms));
}

/// Positions and masses on dyadic grids so sums and integer shifts are exact.
inline AtomicMeasure random_dyadic_measure(Rng& rng, int max_atoms = 6) {
  const int k = rng.integer(1, max_atoms);
  std::vector<Atom> atoms;
  for (int i = 0; i < k; ++i) {
    const double pos = std::ldexp(static_cast<double>(rng.integer(-5120, 5120)), -10);
    int units = rng.integer(-4096, 4096);
    if (units == 0) units = 1;
    atoms.push_back({pos, std::ldexp(static_cast<double>(units), -8)});
  }
  return AtomicMeasure(std::move(atoms));
}

/// ∏_{j<n} w(α^j t) by stepping α once per factor.
inline double oracle_forward_product(const CosineSystem& sys, double t, int n) {
  double p = 1.0;
  for (int j = 0; j < n; ++j) {
    p *= sys.weight(t);
    t = sys.alpha(t);
  }
  return p;
}

/// ∏_{j=1}^{n} 1/w(α^{-j} t) by stepping α^{-1} once per factor.
inline double oracle_backward_product(const CosineSystem& sys, double t, int n) {
  double p = 1.0;
  for (int j = 0; j < n; ++j) {
    t = sys.alpha.inverse(t);
    p /= sys.weight(t);
  }
  return p;
}

/// Dense uniform grid lo, lo + step, ..., hi (hi always included).
inline std::vector<double> dense_grid(double lo, double hi, double step) {
  std::vector<double> g;
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long k = 0; k <= count; ++k) g.push_back(lo + static_cast<double>(k) * step);
  if (g.back() < hi) g.push_back(hi);
  return g;
}

/// Brute-force sup curve: element n-1 is sup over a dense grid of the length-n
/// forward (or backward) product.
inline std::vector<double> oracle_sup_curve(const CosineSystem& sys, double lo, double hi,
                                            int max_n, bool forward, double step = 1e-4) {
  std::vector<double> sup(static_cast<std::size_t>(max_n), 0.0);
  for (double t0 : dense_grid(lo, hi, step)) {
    double p = 1.0;
    double t = t0;
    for (int k = 0; k < max_n; ++k) {
      if (forward) {
        p *= sys.weight(t);
        t = sys.alpha(t);
      } else {
        t = sys.alpha.inverse(t);
        p /= sys.weight(t);
      }
      sup[static_cast<std::size_t>(k)] = std::max(sup[static_cast<std::size_t>(k)], p);
    }
  }
  return sup;
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

/// ‖a - b‖ / ‖b‖ with near-coincident atoms merged.
inline double rel_tv_error(const AtomicMeasure& a, const AtomicMeasure& b,
                           double merge_tolerance = 1e-12) {
  const double diff = tv_distance(a, b, NormalizeOptions{merge_tolerance});
  const double ref = total_variation(b);
  return ref == 0.0 ? diff : diff / ref;
}

}  // namespace cosdyn::testing
