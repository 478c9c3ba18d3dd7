#include "cosdyn/witness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cosdyn/errors.hpp"

namespace cosdyn {
namespace {

// S*T*ν̃ must land back on ν̃; affine iterates may miss by an ulp, so the
// witness merges atoms that close before measuring distances.
constexpr NormalizeOptions kOrbitMerge{1e-12};

bool within(double value, double bound, double reference = 0.0) {
  return value <= bound * (1.0 + 1e-9) + 1e-12 * reference + 1e-300;
}

}  // namespace

double proof_epsilon(double delta, double mu_norm, double nu_norm) {
  if (!(delta > 0.0) || !(mu_norm > 0.0) || !(nu_norm > 0.0)) {
    throw std::invalid_argument("proof_epsilon requires positive inputs");
  }
  return std::min({delta / 4.0, delta * delta / (64.0 * mu_norm * nu_norm),
                   delta / (8.0 * nu_norm)});
}

WitnessReport build_witness(const IteratedSystem& sys, const AtomicMeasure& mu,
                            const AtomicMeasure& nu, const CompactWindow& window,
                            const PartitionScheme& scheme, const BallSpec& ball_mu,
                            const BallSpec& ball_nu) {
  if (mu.empty() || nu.empty()) throw std::invalid_argument("mu and nu must be nonzero");
  if (!supported_in(mu, window) || !supported_in(nu, window)) {
    throw std::invalid_argument("mu and nu must be supported in the window");
  }
  if (!(ball_mu.center == mu) || !(ball_nu.center == nu)) {
    throw std::invalid_argument("balls must be centred at mu and nu");
  }
  if (!(ball_mu.radius > 0.0) || !(ball_nu.radius > 0.0)) {
    throw std::invalid_argument("ball radii must be positive");
  }
  if (!(scheme.window == window)) {
    throw std::invalid_argument("scheme window differs from the witness window");
  }
  scheme.validate();

  const BorelSet rest = BorelSet::window(window).minus(scheme.A);
  const AtomicMeasure mu_rest = restrict(mu, rest.predicate());
  const AtomicMeasure nu_D = restrict(nu, scheme.D.predicate());
  const AtomicMeasure nu_E = restrict(nu, scheme.E.predicate());

  const AtomicMeasure T_mu = sys.T(mu_rest);
  const AtomicMeasure S_mu = sys.S(mu_rest);
  const AtomicMeasure T_nu = sys.T(nu_D);
  const AtomicMeasure S_nu = sys.S(nu_E);

  WitnessReport r;
  r.n = sys.power();
  r.mu_norm = total_variation(mu);
  r.nu_norm = total_variation(nu);
  r.epsilon_used = proof_epsilon(std::min(ball_mu.radius, ball_nu.radius), r.mu_norm, r.nu_norm);
  r.norms.T_mu_rest = total_variation(T_mu);
  r.norms.S_mu_rest = total_variation(S_mu);
  r.norms.T_nu_D = total_variation(T_nu);
  r.norms.S_nu_E = total_variation(S_nu);
  r.norms.T2_nu_D = total_variation(sys.T(nu_D, 2));
  r.norms.S2_nu_E = total_variation(sys.S(nu_E, 2));

  const double a = r.norms.T_mu_rest + r.norms.S_mu_rest;
  const double b = r.norms.T_nu_D + r.norms.S_nu_E;
  if (a == 0.0) throw DegenerateWitness("mu restricted to the complement of A is zero");
  if (b == 0.0) throw DegenerateWitness("nu restricted to D and E is zero");
  const double root_a = std::sqrt(a);
  const double root_b = std::sqrt(b);

  r.phi = linear_combine(1.0, mu_rest, 2.0 * root_a / root_b,
                         linear_combine(1.0, T_nu, 1.0, S_nu), kOrbitMerge);
  r.lambda = root_b / root_a;
  const AtomicMeasure image = scale(r.lambda, sys.C(r.phi));

  r.dist_phi_to_mu = tv_distance(r.phi, mu, kOrbitMerge);
  r.dist_scaled_cosine_to_nu = tv_distance(image, nu, kOrbitMerge);
  r.mu_rest_defect = tv_distance(mu, mu_rest);
  r.nu_split_defect = tv_distance(linear_combine(1.0, nu_D, 1.0, nu_E), nu);
  r.phi_bound = r.mu_rest_defect + 2.0 * root_a * root_b;
  r.target_bound = 0.5 * root_b * root_a + r.norms.T2_nu_D + r.norms.S2_nu_E +
                   r.nu_split_defect;
  r.success = r.dist_phi_to_mu < ball_mu.radius &&
              r.dist_scaled_cosine_to_nu < ball_nu.radius;
  return r;
}

WitnessReport build_witness(const CosineSystem& sys, int n, const AtomicMeasure& mu,
                            const AtomicMeasure& nu, const CompactWindow& window,
                            const PartitionScheme& scheme, const BallSpec& ball_mu,
                            const BallSpec& ball_nu) {
  if (n < 1) throw std::invalid_argument("witness index n must be >= 1");
  return build_witness(IteratedSystem(sys, n), mu, nu, window, scheme, ball_mu, ball_nu);
}

bool certify_proof_bounds(const WitnessReport& report, const CosineSystem& sys, int n,
                          const PartitionScheme& scheme, const CompactWindow& window,
                          const AtomicMeasure& mu, const AtomicMeasure& nu,
                          double grid_step) {
  if (!(scheme.window == window)) return false;
  GridOptions grid{grid_step, {}};
  for (const Atom& a : mu.atoms()) grid.extra_points.push_back(a.position);
  for (const Atom& a : nu.atoms()) grid.extra_points.push_back(a.position);

  const PartitionSups s = partition_sups(IteratedSystem(sys, n), scheme, grid);
  const double mu_norm = total_variation(mu);
  const double nu_norm = total_variation(nu);
  const WitnessNorms& k = report.norms;
  return within(k.T_mu_rest, s.w_on_rest.value() * mu_norm) &&
         within(k.S_mu_rest, s.inv_w_on_rest.value() * mu_norm) &&
         within(k.T_nu_D, s.w_on_D.value() * nu_norm) &&
         within(k.S_nu_E, s.inv_w_on_E.value() * nu_norm) &&
         within(k.T2_nu_D, s.two_step_on_D.value() * nu_norm) &&
         within(k.S2_nu_E, s.two_step_on_E.value() * nu_norm);
}

bool check_distance_bookkeeping(const WitnessReport& report) {
  return within(report.dist_phi_to_mu, report.phi_bound, report.mu_norm) &&
         within(report.dist_scaled_cosine_to_nu, report.target_bound, report.nu_norm);
}

ScanResult scan_witnesses(const CosineSystem& sys, const AtomicMeasure& mu,
                          const AtomicMeasure& nu, const CompactWindow& window,
                          const BallSpec& ball_mu, const BallSpec& ball_nu, int horizon,
                          WitnessCase which, std::span<const PartitionScheme> custom_schemes) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (which == WitnessCase::custom &&
      custom_schemes.size() < static_cast<std::size_t>(horizon)) {
    throw std::invalid_argument("custom case needs one scheme per index");
  }

  ScanResult result;
  result.entries.reserve(static_cast<std::size_t>(horizon));
  for (int n = 1; n <= horizon; ++n) {
    const PartitionScheme scheme =
        which == WitnessCase::d_equals_k   ? PartitionScheme::d_equals_k(window)
        : which == WitnessCase::e_equals_k ? PartitionScheme::e_equals_k(window)
                                           : custom_schemes[static_cast<std::size_t>(n - 1)];
    ScanEntry entry{n, std::nullopt};
    try {
      entry.report = build_witness(sys, n, mu, nu, window, scheme, ball_mu, ball_nu);
    } catch (const DegenerateWitness&) {
      // left without a report; counts as a failure at this n
    }
    result.entries.push_back(std::move(entry));
  }

  for (auto it = result.entries.rbegin(); it != result.entries.rend() && it->success(); ++it) {
    result.first_stable_n = it->n;
  }
  return result;
}

}  // namespace cosdyn
