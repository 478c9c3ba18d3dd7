#include "cosdyn/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cosdyn/errors.hpp"

namespace cosdyn {
namespace {

constexpr double kMaxGridPoints = 5e7;

void require_positive_length(int n) {
  if (n < 1) throw std::invalid_argument("product length must be >= 1");
}

// Product prefixes of length 1..max_n at t, in the same multiplication order
// as scaled_weight_product.
void product_prefixes(const CosineSystem& sys, double t, int max_n, Direction dir,
                      std::vector<ScaledReal>& out) {
  out.assign(static_cast<std::size_t>(max_n), ScaledReal::one());
  ScaledReal p = ScaledReal::one();
  for (int k = 0; k < max_n; ++k) {
    if (dir == Direction::forward) {
      p *= sys.weight(sys.alpha.iterate(t, k));
    } else {
      p /= sys.weight(sys.alpha.iterate(t, -(k + 1)));
    }
    out[static_cast<std::size_t>(k)] = p;
  }
}

void raise(SupValue& s, const ScaledReal& x) {
  if (s.sup < x) s.sup = x;
  ++s.sample_count;
}

// Suprema of the length-n and length-2n products over a Borel set.
struct SetSups {
  SupValue single;
  SupValue doubled;
};

SetSups sups_over_set(const CosineSystem& base, const BorelSet& set, int n,
                      Direction dir, const GridOptions& grid) {
  SetSups s;
  std::vector<ScaledReal> prefix;
  for (const HalfOpenInterval& piece : set.pieces()) {
    const double lo = piece.lo;
    const double hi = BorelSet::last_point(piece);
    for (double t : sample_grid(base, lo, hi, 2 * n, dir, grid)) {
      product_prefixes(base, t, 2 * n, dir, prefix);
      raise(s.single, prefix[static_cast<std::size_t>(n - 1)]);
      raise(s.doubled, prefix.back());
    }
  }
  return s;
}

bool is_nonincreasing(std::span<const double> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double slack = 1e-12 * std::max(1.0, std::abs(v[i - 1]));
    if (v[i] > v[i - 1] + slack) return false;
  }
  return true;
}

bool is_nondecreasing(std::span<const double> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double slack = 1e-12 * std::max(1.0, std::abs(v[i - 1]));
    if (v[i] < v[i - 1] - slack) return false;
  }
  return true;
}

}  // namespace

std::vector<double> sample_grid(const CosineSystem& sys, double lo, double hi,
                                int max_length, Direction dir, const GridOptions& grid) {
  if (!(grid.step > 0.0) || !std::isfinite(grid.step)) {
    throw std::invalid_argument("grid step must be positive and finite");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw std::invalid_argument("sample grid needs a finite interval lo <= hi");
  }
  if ((hi - lo) / grid.step > kMaxGridPoints) {
    throw std::invalid_argument("grid step too small for the interval");
  }

  std::vector<double> pts{lo, hi};
  for (const Breakpoint& b : sys.weight.shape().breakpoints()) {
    // Critical points of t ↦ w(α^{±j} t) are the breakpoints pulled back.
    const int first = dir == Direction::forward ? 0 : 1;
    const int last = dir == Direction::forward ? max_length - 1 : max_length;
    for (int j = first; j <= last; ++j) {
      const double t = sys.alpha.iterate(b.x, dir == Direction::forward ? -j : j);
      if (lo <= t && t <= hi) pts.push_back(t);
    }
  }
  const double kfirst = std::ceil(lo / grid.step);
  const double klast = std::floor(hi / grid.step);
  for (double k = kfirst; k <= klast; k += 1.0) {
    const double t = k * grid.step;
    if (lo <= t && t <= hi) pts.push_back(t);
  }
  for (double t : grid.extra_points) {
    if (lo <= t && t <= hi) pts.push_back(t);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

SupValue sup_product_value(const CosineSystem& sys, const CompactWindow& window,
                           int n, Direction dir, const GridOptions& grid) {
  require_positive_length(n);
  SupValue s;
  for (double t : sample_grid(sys, window.lo(), window.hi(), n, dir, grid)) {
    raise(s, scaled_weight_product(sys, t, n, dir));
  }
  return s;
}

SupProductCurve sup_product_curve(const CosineSystem& sys, const CompactWindow& window,
                                  int max_n, Direction dir, const GridOptions& grid) {
  require_positive_length(max_n);
  SupProductCurve curve{window, dir, grid.step,
                        std::vector<SupValue>(static_cast<std::size_t>(max_n))};
  std::vector<ScaledReal> prefix;
  for (double t : sample_grid(sys, window.lo(), window.hi(), max_n, dir, grid)) {
    product_prefixes(sys, t, max_n, dir, prefix);
    for (std::size_t k = 0; k < prefix.size(); ++k) raise(curve.values[k], prefix[k]);
  }
  return curve;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds:
      return "HOLDS";
    case Verdict::fails:
      return "FAILS";
    case Verdict::inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Verdict decide_limit(std::span<const double> log_values, double tol) {
  if (log_values.size() < 2) return Verdict::inconclusive;
  const std::size_t quarter = std::max<std::size_t>(2, log_values.size() / 4);
  const auto tail = log_values.last(std::min(quarter, log_values.size()));
  const double log_tol = std::log(tol);

  if (tail.back() < log_tol && is_nonincreasing(tail)) return Verdict::holds;
  const bool stays_above =
      std::all_of(tail.begin(), tail.end(), [&](double v) { return v >= log_tol; });
  if (stays_above && is_nondecreasing(tail)) return Verdict::fails;
  return Verdict::inconclusive;
}

CorollaryReport check_corollary(const CosineSystem& sys, const CompactWindow& window,
                                int horizon, double tol, const GridOptions& grid) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (horizon < 4) throw std::invalid_argument("horizon must be >= 4");

  const SupProductCurve fwd = sup_product_curve(sys, window, 2 * horizon, Direction::forward, grid);
  const SupProductCurve bwd = sup_product_curve(sys, window, 2 * horizon, Direction::backward, grid);

  std::vector<ScaledReal> a, b, c;
  for (int n = 1; n <= horizon; ++n) {
    a.push_back(fwd.at(n).sup * bwd.at(n).sup);
    b.push_back(fwd.at(2 * n).sup);
    c.push_back(bwd.at(2 * n).sup);
  }
  auto logs = [](const std::vector<ScaledReal>& xs) {
    std::vector<double> v;
    for (const ScaledReal& x : xs) v.push_back(x.log());
    return v;
  };
  auto values = [](const std::vector<ScaledReal>& xs) {
    std::vector<double> v;
    for (const ScaledReal& x : xs) v.push_back(x.value());
    return v;
  };

  CorollaryReport r{window, horizon, tol, grid.step, values(a), values(b),
                    values(c), decide_limit(logs(a), tol), decide_limit(logs(b), tol),
                    decide_limit(logs(c), tol), Verdict::inconclusive};
  if (r.verdict_a == Verdict::holds &&
      (r.verdict_b == Verdict::holds || r.verdict_c == Verdict::holds)) {
    r.overall = Verdict::holds;
  } else if (r.verdict_a == Verdict::fails ||
             (r.verdict_b == Verdict::fails && r.verdict_c == Verdict::fails)) {
    r.overall = Verdict::fails;
  }
  return r;
}

void PartitionScheme::validate() const {
  const BorelSet K = BorelSet::window(window);
  if (!A.minus(K).empty()) throw ValidationError("A", "must be a subset of the window");
  if (!D.minus(K).empty()) throw ValidationError("D", "must be a subset of the window");
  if (!E.minus(K).empty()) throw ValidationError("E", "must be a subset of the window");
  if (!D.disjoint_from(E)) throw ValidationError("D", "D and E must be disjoint");
  if (!(D.unite(E) == K.minus(A))) {
    throw ValidationError("D", "D and E must cover the window minus A");
  }
}

PartitionScheme PartitionScheme::d_equals_k(const CompactWindow& window) {
  return {BorelSet{}, BorelSet::window(window), BorelSet{}, window};
}

PartitionScheme PartitionScheme::e_equals_k(const CompactWindow& window) {
  return {BorelSet{}, BorelSet{}, BorelSet::window(window), window};
}

std::vector<FamilyMember> power_family(const CosineSystem& sys, int horizon) {
  std::vector<FamilyMember> family;
  family.reserve(static_cast<std::size_t>(std::max(horizon, 0)));
  for (int n = 1; n <= horizon; ++n) family.push_back({n, IteratedSystem(sys, n)});
  return family;
}

PartitionSups partition_sups(const IteratedSystem& sys, const PartitionScheme& scheme,
                             const GridOptions& grid) {
  const BorelSet rest = BorelSet::window(scheme.window).minus(scheme.A);
  const int n = sys.power();
  const CosineSystem& base = sys.base();
  const SetSups rest_fwd = sups_over_set(base, rest, n, Direction::forward, grid);
  const SetSups rest_bwd = sups_over_set(base, rest, n, Direction::backward, grid);
  const SetSups d_fwd = sups_over_set(base, scheme.D, n, Direction::forward, grid);
  const SetSups e_bwd = sups_over_set(base, scheme.E, n, Direction::backward, grid);
  return {rest_fwd.single.sup, rest_bwd.single.sup, d_fwd.single.sup,
          e_bwd.single.sup,    d_fwd.doubled.sup,   e_bwd.doubled.sup};
}

TheoremReport check_theorem_partition(std::span<const FamilyMember> family,
                                      const AtomicMeasure& mu, const AtomicMeasure& nu,
                                      const CompactWindow& window, double eps,
                                      std::span<const PartitionScheme> schemes,
                                      const GridOptions& grid) {
  if (family.size() != schemes.size()) {
    throw std::invalid_argument("one partition scheme per family member is required");
  }
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (!supported_in(mu, window) || !supported_in(nu, window)) {
    throw std::invalid_argument("measures must be supported in the window");
  }

  TheoremReport report{eps, grid.step, {}, {}, std::nullopt};
  for (std::size_t i = 0; i < family.size(); ++i) {
    const PartitionScheme& scheme = schemes[i];
    if (!(scheme.window == window)) {
      throw std::invalid_argument("scheme window differs from the checked window");
    }
    scheme.validate();

    TheoremIndexReport e;
    e.index = family[i].index;
    e.mu_on_A = variation_on(mu, scheme.A.predicate());
    e.nu_on_A = variation_on(nu, scheme.A.predicate());
    const PartitionSups s = partition_sups(family[i].system, scheme, grid);
    e.sup_w_on_rest = s.w_on_rest.value();
    e.sup_inv_w_on_rest = s.inv_w_on_rest.value();
    e.sup_w_on_D = s.w_on_D.value();
    e.sup_inv_w_on_E = s.inv_w_on_E.value();
    e.sup_two_step_on_D = s.two_step_on_D.value();
    e.sup_two_step_on_E = s.two_step_on_E.value();
    const ScaledReal eps_s = ScaledReal::from(eps);
    e.holds = {e.mu_on_A < eps,
               e.nu_on_A < eps,
               s.w_on_rest * s.w_on_D < eps_s,
               s.w_on_rest * s.inv_w_on_E < eps_s,
               s.inv_w_on_rest * s.w_on_D < eps_s,
               s.inv_w_on_rest * s.inv_w_on_E < eps_s,
               s.two_step_on_D < eps_s,
               s.two_step_on_E < eps_s};
    e.all_hold = std::all_of(e.holds.begin(), e.holds.end(), [](bool b) { return b; });
    if (e.all_hold) report.F.push_back(e.index);
    report.entries.push_back(e);
  }

  // Walk back from the largest index while every entry holds.
  std::vector<const TheoremIndexReport*> order;
  for (const auto& e : report.entries) order.push_back(&e);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return a->index < b->index; });
  for (auto it = order.rbegin(); it != order.rend() && (*it)->all_hold; ++it) {
    report.tail_start = (*it)->index;
  }
  return report;
}

std::optional<int> check_forward_divergence(const CosineSystem& sys, double t,
                                            double threshold, int horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
  const ScaledReal limit = ScaledReal::from(threshold);
  ScaledReal p = ScaledReal::one();
  for (int n = 1; n <= horizon; ++n) {
    p *= sys.weight(sys.alpha.iterate(t, n - 1));
    if (p > limit) return n;
  }
  return std::nullopt;
}

}  // namespace cosdyn
