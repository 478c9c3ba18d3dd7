#pragma once

#include <compare>
#include <functional>

#include "cosdyn/homeomorphism.hpp"
#include "cosdyn/measure.hpp"
#include "cosdyn/piecewise_linear.hpp"

namespace cosdyn {

enum class Direction { forward, backward };

/// A nonnegative real stored as mantissa · 2^exponent with mantissa in
/// [0.5, 1) (or exactly 0). Products of weights along long orbits reach
/// 2^±1000 and beyond; rescaling by powers of two is exact, so within the
/// double range a product here equals the plain floating-point product.
class ScaledReal {
 public:
  static ScaledReal zero() noexcept { return ScaledReal(); }
  static ScaledReal one() noexcept { return ScaledReal(0.5, 1); }
  /// x must be finite and >= 0.
  static ScaledReal from(double x) noexcept;

  /// Multiplies by a finite positive factor.
  ScaledReal& operator*=(double factor) noexcept;
  ScaledReal& operator/=(double divisor) noexcept;
  friend ScaledReal operator*(ScaledReal a, const ScaledReal& b) noexcept;

  bool is_zero() const noexcept { return mantissa_ == 0.0; }
  /// Plain double; overflows to inf or underflows to 0 outside the range.
  double value() const noexcept;
  /// Natural log; -inf for zero.
  double log() const noexcept;

  friend std::partial_ordering operator<=>(const ScaledReal& a, const ScaledReal& b) noexcept;
  friend bool operator==(const ScaledReal&, const ScaledReal&) = default;

 private:
  ScaledReal() = default;
  ScaledReal(double mantissa, long exponent) : mantissa_(mantissa), exponent_(exponent) {}
  void renormalize() noexcept;

  double mantissa_ = 0.0;
  long exponent_ = 0;
};

/// The pair (α, w) generating the weighted composition operator
/// T f = w · (f ∘ α), its inverse S, their adjoints T*, S* on measures and the
/// cosine family C_n* = (T*^n + S*^n) / 2.
struct CosineSystem {
  Homeomorphism alpha;
  WeightFunction weight;

  friend bool operator==(const CosineSystem&, const CosineSystem&) = default;
};

/// ∏_{j=0}^{n-1} w(α^j(t)), multiplied left to right. n = 0 gives 1.
ScaledReal scaled_forward_weight_product(const CosineSystem& sys, double t, int n);
/// ∏_{j=1}^{n} 1/w(α^{-j}(t)).
ScaledReal scaled_backward_weight_product(const CosineSystem& sys, double t, int n);

inline ScaledReal scaled_weight_product(const CosineSystem& sys, double t, int n,
                                        Direction dir) {
  return dir == Direction::forward ? scaled_forward_weight_product(sys, t, n)
                                   : scaled_backward_weight_product(sys, t, n);
}

inline double forward_weight_product(const CosineSystem& sys, double t, int n) {
  return scaled_forward_weight_product(sys, t, n).value();
}
inline double backward_weight_product(const CosineSystem& sys, double t, int n) {
  return scaled_backward_weight_product(sys, t, n).value();
}
inline double log_forward_weight_product(const CosineSystem& sys, double t, int n) {
  return scaled_forward_weight_product(sys, t, n).log();
}
inline double log_backward_weight_product(const CosineSystem& sys, double t, int n) {
  return scaled_backward_weight_product(sys, t, n).log();
}

/// T*^n m: each atom (t, c) moves to (α^n(t), c · ∏_{j<n} w(α^j t)).
AtomicMeasure adjoint_T(const CosineSystem& sys, const AtomicMeasure& m, int n,
                        NormalizeOptions opts = {});
/// S*^n m = (T*)^{-n} m: each atom (t, c) moves to
/// (α^{-n}(t), c · ∏_{j=1}^{n} 1/w(α^{-j} t)).
AtomicMeasure adjoint_S(const CosineSystem& sys, const AtomicMeasure& m, int n,
                        NormalizeOptions opts = {});
/// C_n* m = (T*^n m + S*^n m) / 2, with C_0* the identity.
AtomicMeasure cosine(const CosineSystem& sys, const AtomicMeasure& m, int n,
                     NormalizeOptions opts = {});

using RealFunction = std::function<double(double)>;

/// (T^n f)(t) or (S^n f)(t) on the function side, evaluated by applying the
/// one-step operators T g = w · (g ∘ α) and S g = (g ∘ α^{-1}) / (w ∘ α^{-1})
/// n times. Shares no code with the closed-form measure-side adjoints.
double apply_function_operator(const CosineSystem& sys, const RealFunction& f,
                               double t, int n, Direction dir);

/// ⟨m, f⟩ = Σ mass_i · f(position_i).
double duality_pairing(const AtomicMeasure& m, const RealFunction& f);

/// The n-th power of a system viewed as a single system (α_n, w_n) with
/// α_n = α^n and w_n = ∏_{j<n} w ∘ α^j. Its T*, S* are T*^n, S*^n of the base.
class IteratedSystem {
 public:
  /// Throws std::invalid_argument for power < 1.
  IteratedSystem(CosineSystem base, int power);

  const CosineSystem& base() const noexcept { return base_; }
  int power() const noexcept { return power_; }

  /// w_z(t).
  double weight(double t) const { return forward_weight_product(base_, t, power_); }
  /// (w_z ∘ α_z^{-1})^{-1}(t), the one-step weight of S_z*.
  double inverse_weight(double t) const {
    return backward_weight_product(base_, t, power_);
  }
  /// ∏_{j=0}^{1} (w_z ∘ α_z^j)(t).
  double two_step_forward(double t) const {
    return forward_weight_product(base_, t, 2 * power_);
  }
  /// ∏_{j=1}^{2} (w_z ∘ α_z^{-j})^{-1}(t).
  double two_step_backward(double t) const {
    return backward_weight_product(base_, t, 2 * power_);
  }

  AtomicMeasure T(const AtomicMeasure& m, int k = 1) const {
    return adjoint_T(base_, m, k * power_);
  }
  AtomicMeasure S(const AtomicMeasure& m, int k = 1) const {
    return adjoint_S(base_, m, k * power_);
  }
  AtomicMeasure C(const AtomicMeasure& m) const { return cosine(base_, m, power_); }

 private:
  CosineSystem base_;
  int power_;
};

}  // namespace cosdyn
