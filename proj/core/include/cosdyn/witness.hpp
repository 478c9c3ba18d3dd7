#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "cosdyn/conditions.hpp"
#include "cosdyn/dynamics.hpp"
#include "cosdyn/measure.hpp"

namespace cosdyn {

/// Open total-variation ball B(center, radius).
struct BallSpec {
  AtomicMeasure center;
  double radius;

  /// Strict inequality: balls are open.
  bool contains(const AtomicMeasure& m) const {
    return tv_distance(m, center) < radius;
  }
};

/// min{δ/4, δ²/(64‖μ‖‖ν‖), δ/(8‖ν‖)}. Throws std::invalid_argument unless all
/// inputs are positive.
double proof_epsilon(double delta, double mu_norm, double nu_norm);

/// Norms of the six images bounded in the construction.
struct WitnessNorms {
  double T_mu_rest = 0;    // ‖T*μ̃‖
  double S_mu_rest = 0;    // ‖S*μ̃‖
  double T_nu_D = 0;       // ‖T*ν̃‖
  double S_nu_E = 0;       // ‖S*ν̃̃‖
  double T2_nu_D = 0;      // ‖(T*)²ν̃‖
  double S2_nu_E = 0;      // ‖(S*)²ν̃̃‖
};

/// A constructed pair (φ, λ) for one index n together with the distances it
/// achieves and the quantities that enter the two distance estimates.
struct WitnessReport {
  int n = 0;
  double epsilon_used = 0;
  double mu_norm = 0, nu_norm = 0;
  AtomicMeasure phi;
  double lambda = 0;
  double dist_phi_to_mu = 0;
  double dist_scaled_cosine_to_nu = 0;
  WitnessNorms norms;
  /// ‖μ - μ̃‖ and ‖ν̃ + ν̃̃ - ν‖.
  double mu_rest_defect = 0;
  double nu_split_defect = 0;
  /// Right-hand sides of the two distance estimates.
  double phi_bound = 0;
  double target_bound = 0;
  bool success = false;
};

/// Builds φ = μ̃ + (2√a/√b)(T*ν̃ + S*ν̃̃) and λ = √b/√a, where
/// a = ‖T*μ̃‖ + ‖S*μ̃‖, b = ‖T*ν̃‖ + ‖S*ν̃̃‖, μ̃ = μ|_{A^c∩K}, ν̃ = ν|_D,
/// ν̃̃ = ν|_E and T*, S* are those of the n-step system (α^n, w_n).
///
/// ε is proof_epsilon(min radius, ‖μ‖, ‖ν‖); it is recorded, not enforced.
/// Success means φ ∈ ball_mu and λ·C_n*(φ) ∈ ball_nu.
///
/// Throws std::invalid_argument for zero measures, measures leaving the
/// window or n < 1, ValidationError for an invalid scheme, and
/// DegenerateWitness when a or b vanishes.
WitnessReport build_witness(const CosineSystem& sys, int n, const AtomicMeasure& mu,
                            const AtomicMeasure& nu, const CompactWindow& window,
                            const PartitionScheme& scheme, const BallSpec& ball_mu,
                            const BallSpec& ball_nu);

/// Same construction for an arbitrary member of a family.
WitnessReport build_witness(const IteratedSystem& sys, const AtomicMeasure& mu,
                            const AtomicMeasure& nu, const CompactWindow& window,
                            const PartitionScheme& scheme, const BallSpec& ball_mu,
                            const BallSpec& ball_nu);

/// Checks each recorded norm against its sup-based bound
/// (e.g. ‖T*μ̃‖ <= sup_{A^c∩K} w_n · ‖μ‖) with 1e-9 relative slack. The
/// suprema come from partition_sups with the measures' atoms added to the grid.
bool certify_proof_bounds(const WitnessReport& report, const CosineSystem& sys,
                          int n, const PartitionScheme& scheme,
                          const CompactWindow& window, const AtomicMeasure& mu,
                          const AtomicMeasure& nu,
                          double grid_step = kDefaultGridStep);

/// Checks dist(φ, μ) <= phi_bound and dist(λC*φ, ν) <= target_bound with
/// 1e-9 relative slack plus an absolute 1e-12·‖μ‖ (resp. ‖ν‖) for rounding in
/// the subtraction, which dominates once the bounds fall below ~1e-7.
bool check_distance_bookkeeping(const WitnessReport& report);

enum class WitnessCase { d_equals_k, e_equals_k, custom };

struct ScanEntry {
  int n = 0;
  /// Empty when the construction was degenerate for this n.
  std::optional<WitnessReport> report;

  bool success() const { return report && report->success; }
};

struct ScanResult {
  std::vector<ScanEntry> entries;  // ordered by n = 1..horizon
  /// Least N with success for every n in [N, horizon].
  std::optional<int> first_stable_n;
};

/// Runs build_witness for n = 1..horizon with the scheme of the chosen case.
/// For WitnessCase::custom, custom_schemes[n - 1] is used for n.
/// Throws std::invalid_argument for horizon < 1 or too few custom schemes.
ScanResult scan_witnesses(const CosineSystem& sys, const AtomicMeasure& mu,
                          const AtomicMeasure& nu, const CompactWindow& window,
                          const BallSpec& ball_mu, const BallSpec& ball_nu,
                          int horizon, WitnessCase which,
                          std::span<const PartitionScheme> custom_schemes = {});

}  // namespace cosdyn
