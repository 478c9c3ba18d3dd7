#include "cosdyn/dynamics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cosdyn {
namespace {

void require_nonnegative(int n) {
  if (n < 0) throw std::invalid_argument("step count must be nonnegative");
}

}  // namespace

ScaledReal ScaledReal::from(double x) noexcept {
  ScaledReal r(x, 0);
  r.renormalize();
  return r;
}

void ScaledReal::renormalize() noexcept {
  if (mantissa_ == 0.0) {
    exponent_ = 0;
    return;
  }
  int e = 0;
  mantissa_ = std::frexp(mantissa_, &e);
  exponent_ += e;
}

ScaledReal& ScaledReal::operator*=(double factor) noexcept {
  mantissa_ *= factor;
  renormalize();
  return *this;
}

ScaledReal& ScaledReal::operator/=(double divisor) noexcept {
  mantissa_ /= divisor;
  renormalize();
  return *this;
}

ScaledReal operator*(ScaledReal a, const ScaledReal& b) noexcept {
  a.mantissa_ *= b.mantissa_;
  a.exponent_ += b.exponent_;
  a.renormalize();
  return a;
}

double ScaledReal::value() const noexcept {
  if (exponent_ > std::numeric_limits<int>::max()) return std::numeric_limits<double>::infinity();
  if (exponent_ < std::numeric_limits<int>::min()) return 0.0;
  return std::ldexp(mantissa_, static_cast<int>(exponent_));
}

double ScaledReal::log() const noexcept {
  if (mantissa_ == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(mantissa_) + static_cast<double>(exponent_) * std::numbers::ln2;
}

std::partial_ordering operator<=>(const ScaledReal& a, const ScaledReal& b) noexcept {
  if (a.is_zero() || b.is_zero()) return a.mantissa_ <=> b.mantissa_;
  if (a.exponent_ != b.exponent_) return a.exponent_ <=> b.exponent_;
  return a.mantissa_ <=> b.mantissa_;
}

ScaledReal scaled_forward_weight_product(const CosineSystem& sys, double t, int n) {
  require_nonnegative(n);
  ScaledReal p = ScaledReal::one();
  for (int j = 0; j < n; ++j) p *= sys.weight(sys.alpha.iterate(t, j));
  return p;
}

ScaledReal scaled_backward_weight_product(const CosineSystem& sys, double t, int n) {
  require_nonnegative(n);
  ScaledReal p = ScaledReal::one();
  for (int j = 1; j <= n; ++j) p /= sys.weight(sys.alpha.iterate(t, -j));
  return p;
}

AtomicMeasure adjoint_T(const CosineSystem& sys, const AtomicMeasure& m, int n,
                        NormalizeOptions opts) {
  require_nonnegative(n);
  std::vector<Atom> out;
  out.reserve(m.size());
  for (const Atom& a : m.atoms()) {
    out.push_back({sys.alpha.iterate(a.position, n),
                   a.mass * forward_weight_product(sys, a.position, n)});
  }
  return AtomicMeasure(std::move(out), opts);
}

AtomicMeasure adjoint_S(const CosineSystem& sys, const AtomicMeasure& m, int n,
                        NormalizeOptions opts) {
  require_nonnegative(n);
  std::vector<Atom> out;
  out.reserve(m.size());
  for (const Atom& a : m.atoms()) {
    out.push_back({sys.alpha.iterate(a.position, -n),
                   a.mass * backward_weight_product(sys, a.position, n)});
  }
  return AtomicMeasure(std::move(out), opts);
}

AtomicMeasure cosine(const CosineSystem& sys, const AtomicMeasure& m, int n,
                     NormalizeOptions opts) {
  require_nonnegative(n);
  if (n == 0) return m;
  return linear_combine(0.5, adjoint_T(sys, m, n), 0.5, adjoint_S(sys, m, n), opts);
}

double apply_function_operator(const CosineSystem& sys, const RealFunction& f,
                               double t, int n, Direction dir) {
  require_nonnegative(n);
  // (T^n f)(t) = w(t) · (T^{n-1} f)(α t), unrolled along the orbit.
  double factor = 1.0;
  double x = t;
  for (int k = 0; k < n; ++k) {
    if (dir == Direction::forward) {
      factor *= sys.weight(x);
      x = sys.alpha(x);
    } else {
      x = sys.alpha.inverse(x);
      factor /= sys.weight(x);
    }
  }
  return factor * f(x);
}

double duality_pairing(const AtomicMeasure& m, const RealFunction& f) {
  double sum = 0.0;
  for (const Atom& a : m.atoms()) sum += a.mass * f(a.position);
  return sum;
}

IteratedSystem::IteratedSystem(CosineSystem base, int power)
    : base_(std::move(base)), power_(power) {
  if (power < 1) throw std::invalid_argument("IteratedSystem power must be >= 1");
}

}  // namespace cosdyn
