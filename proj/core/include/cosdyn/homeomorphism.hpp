#pragma once

namespace cosdyn {

/// Affine homeomorphism t ↦ a·t + b of the real line with closed-form
/// integer iterates. Translations are the a = 1 case and are iterated as
/// t + n·b so integer shifts of dyadic points stay exact.
class Homeomorphism {
 public:
  enum class Kind { translation, affine };

  static Homeomorphism translation(double b);
  /// Throws ValidationError when a is zero or either coefficient is not finite.
  static Homeomorphism affine(double a, double b);

  Kind kind() const noexcept { return kind_; }
  double slope() const noexcept { return a_; }
  double offset() const noexcept { return b_; }

  double operator()(double t) const noexcept { return a_ * t + b_; }
  double inverse(double t) const noexcept { return (t - b_) / a_; }

  /// α^n(t) for any integer n; n < 0 iterates the inverse, n = 0 is identity.
  double iterate(double t, int n) const noexcept;

  friend bool operator==(const Homeomorphism&, const Homeomorphism&) = default;

 private:
  Homeomorphism(Kind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}

  Kind kind_;
  double a_;
  double b_;
};

}  // namespace cosdyn
