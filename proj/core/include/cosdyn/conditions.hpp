#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cosdyn/borel_set.hpp"
#include "cosdyn/dynamics.hpp"
#include "cosdyn/measure.hpp"

namespace cosdyn {

/// Sampling policy for suprema over windows and Borel sets.
///
/// A grid over [lo, hi] holds both endpoints, every weight breakpoint pulled
/// back through the iterates of α used by the product, every integer multiple
/// of `step` inside [lo, hi], and any `extra_points` that fall inside.
struct GridOptions {
  double step = 1e-3;
  std::vector<double> extra_points;
};

inline constexpr double kDefaultGridStep = 1e-3;

/// Deterministic sample grid for products of length up to max_length in the
/// given direction. Sorted, without duplicates.
std::vector<double> sample_grid(const CosineSystem& sys, double lo, double hi,
                                int max_length, Direction dir,
                                const GridOptions& grid = {});

/// A sampled supremum. Empty sample sets give 0, the empty-sup convention.
struct SupValue {
  ScaledReal sup = ScaledReal::zero();
  std::size_t sample_count = 0;

  double value() const noexcept { return sup.value(); }
  double log() const noexcept { return sup.log(); }
};

/// sup over the window grid of the forward (∏_{j<n} w∘α^j) or backward
/// (∏_{j=1}^{n} 1/(w∘α^{-j})) weight product.
SupValue sup_product_value(const CosineSystem& sys, const CompactWindow& window,
                           int n, Direction dir, const GridOptions& grid = {});

inline double sup_product(const CosineSystem& sys, const CompactWindow& window,
                          int n, Direction dir, const GridOptions& grid = {}) {
  return sup_product_value(sys, window, n, dir, grid).value();
}

/// sup_product for n = 1..max_n in one sweep. Every n is sampled on the grid
/// built for max_n, which is a superset of the single-n grid.
struct SupProductCurve {
  CompactWindow window;
  Direction direction;
  double grid_step;
  std::vector<SupValue> values;  // values[n - 1]

  const SupValue& at(int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
};

SupProductCurve sup_product_curve(const CosineSystem& sys,
                                  const CompactWindow& window, int max_n,
                                  Direction dir, const GridOptions& grid = {});

enum class Verdict { holds, fails, inconclusive };

std::string_view to_string(Verdict v) noexcept;

/// Finite-horizon proxy for "tends to zero".
///
/// holds: the last value is below tol and the last quarter is non-increasing.
/// fails: the last quarter is non-decreasing and stays at or above tol, so the
///   sequence shows no decay at all (this covers growth past 1/tol).
/// inconclusive: anything else.
/// Comparisons are done on logs with 1e-12 slack so constant sequences count
/// as both non-increasing and non-decreasing.
Verdict decide_limit(std::span<const double> log_values, double tol);

/// Evaluation of the three limit conditions of the n-step criterion:
///   (a) sup_K fwd(n) · sup_K bwd(n)
///   (b) sup_K fwd(2n)
///   (c) sup_K bwd(2n)
/// Overall: holds iff (a) holds and one of (b), (c) holds; fails iff (a) fails
/// or both (b) and (c) fail.
struct CorollaryReport {
  CompactWindow window;
  int horizon;
  double tol;
  double grid_step;
  std::vector<double> value_a, value_b, value_c;  // index n - 1
  Verdict verdict_a, verdict_b, verdict_c, overall;
};

/// Throws std::invalid_argument when tol <= 0 or horizon < 4.
CorollaryReport check_corollary(const CosineSystem& sys,
                                const CompactWindow& window, int horizon,
                                double tol, const GridOptions& grid = {});

/// The three Borel subsets A, D, E of a compact window K with D ∩ E = ∅ and
/// D ∪ E = K \ A.
struct PartitionScheme {
  BorelSet A, D, E;
  CompactWindow window;

  /// Throws ValidationError when a piece leaves K, D and E overlap, or D ∪ E
  /// differs from K \ A.
  void validate() const;

  /// A = E = ∅, D = K.
  static PartitionScheme d_equals_k(const CompactWindow& window);
  /// A = D = ∅, E = K.
  static PartitionScheme e_equals_k(const CompactWindow& window);
};

/// One index z of the family: the system (α_z, w_z), given as a power of a
/// base system.
struct FamilyMember {
  int index;
  IteratedSystem system;
};

/// Members (n, (α^n, w_n)) for n = 1..horizon.
std::vector<FamilyMember> power_family(const CosineSystem& sys, int horizon);

/// Everything evaluated for one index z. Suprema over empty sets are 0.
struct TheoremIndexReport {
  int index = 0;
  double mu_on_A = 0, nu_on_A = 0;
  double sup_w_on_rest = 0;      // sup_{A^c∩K} w_z
  double sup_inv_w_on_rest = 0;  // sup_{A^c∩K} (w_z∘α_z^{-1})^{-1}
  double sup_w_on_D = 0;
  double sup_inv_w_on_E = 0;
  double sup_two_step_on_D = 0;  // sup_D ∏_{j=0}^{1} w_z∘α_z^j
  double sup_two_step_on_E = 0;  // sup_E ∏_{j=1}^{2} (w_z∘α_z^{-j})^{-1}
  /// |μ|(A)<ε, |ν|(A)<ε, then the six sup inequalities in order.
  std::array<bool, 8> holds{};
  bool all_hold = false;
};

struct TheoremReport {
  double eps;
  double grid_step;
  std::vector<TheoremIndexReport> entries;
  /// Indices where all eight conditions hold.
  std::vector<int> F;
  /// Least index n0 such that every evaluated index >= n0 is in F, which is
  /// how the family of infinite subsets of ℕ is approximated on a horizon.
  std::optional<int> tail_start;
};

/// Checks the eight partition inequalities for every family member against
/// the matching scheme (schemes[i] belongs to family[i]).
/// Throws std::invalid_argument on size mismatch, eps <= 0, or measures with
/// atoms outside the window; ValidationError for an invalid scheme.
TheoremReport check_theorem_partition(std::span<const FamilyMember> family,
                                      const AtomicMeasure& mu,
                                      const AtomicMeasure& nu,
                                      const CompactWindow& window, double eps,
                                      std::span<const PartitionScheme> schemes,
                                      const GridOptions& grid = {});

/// The six sup factors for one member and scheme, exposed for witness
/// certification. Grids include grid.extra_points.
struct PartitionSups {
  ScaledReal w_on_rest, inv_w_on_rest, w_on_D, inv_w_on_E, two_step_on_D, two_step_on_E;
};

PartitionSups partition_sups(const IteratedSystem& sys, const PartitionScheme& scheme,
                             const GridOptions& grid = {});

/// Smallest n in 1..horizon with ∏_{j<n} w(α^j t) > threshold.
std::optional<int> check_forward_divergence(const CosineSystem& sys, double t,
                                            double threshold, int horizon);

}  // namespace cosdyn
