#include "cosdyn/homeomorphism.hpp"

#include <cmath>

#include "cosdyn/errors.hpp"

namespace cosdyn {

Homeomorphism Homeomorphism::translation(double b) {
  if (!std::isfinite(b)) throw ValidationError("alpha.b", "must be finite");
  return Homeomorphism(Kind::translation, 1.0, b);
}

Homeomorphism Homeomorphism::affine(double a, double b) {
  if (!std::isfinite(a)) throw ValidationError("alpha.a", "must be finite");
  if (!std::isfinite(b)) throw ValidationError("alpha.b", "must be finite");
  if (a == 0.0) throw ValidationError("alpha.a", "slope must be nonzero");
  return Homeomorphism(Kind::affine, a, b);
}

double Homeomorphism::iterate(double t, int n) const noexcept {
  if (n == 0) return t;
  if (n == 1) return (*this)(t);
  if (n == -1) return inverse(t);
  if (a_ == 1.0) return t + static_cast<double>(n) * b_;

  // α^n(t) = a^n t + b (a^n - 1)/(a - 1); a^n - 1 via expm1 keeps precision
  // for slopes near one.
  const double nn = static_cast<double>(n);
  double an = 0.0;
  double an_minus_one = 0.0;
  if (a_ > 0.0) {
    const double e = nn * std::log(a_);
    an = std::exp(e);
    an_minus_one = std::expm1(e);
  } else {
    an = std::pow(a_, nn);
    an_minus_one = an - 1.0;
  }
  return an * t + b_ * an_minus_one / (a_ - 1.0);
}

}  // namespace cosdyn
