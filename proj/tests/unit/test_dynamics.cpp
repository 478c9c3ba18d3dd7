#include <cmath>
#include <limits>
#include <vector>

#include "cosdyn/dynamics.hpp"
#include "cosdyn/errors.hpp"
#include "cosdyn/scenarios.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cosdyn;
using cosdyn::testing::Rng;
using cosdyn::testing::rel_diff;
using cosdyn::testing::rel_tv_error;

namespace {

const CosineSystem kShift{Homeomorphism::translation(1), WeightFunction::constant(1)};
const CosineSystem kExample = build_example({4, 1});

CosineSystem constant_system(double c) {
  return {Homeomorphism::translation(1), WeightFunction::constant(c)};
}

std::vector<Atom> atoms_of(const AtomicMeasure& m) {
  return {m.atoms().begin(), m.atoms().end()};
}

}  // namespace

TEST_CASE("homeomorphism iterates") {
  const Homeomorphism shift = Homeomorphism::translation(1);
  CHECK(shift.iterate(0.5, 3) == 3.5);
  CHECK(shift.iterate(0.5, -3) == -2.5);
  CHECK(shift.iterate(0.5, 0) == 0.5);

  const Homeomorphism doubling = Homeomorphism::affine(2, 1);
  CHECK(doubling.iterate(1, 3) == doctest::Approx(15));  // 1 → 3 → 7 → 15
  CHECK(doubling.iterate(15, -3) == doctest::Approx(1));
  CHECK(doubling.inverse(doubling(0.3)) == doctest::Approx(0.3));

  CHECK_THROWS_AS(Homeomorphism::affine(0, 1), ValidationError);
  CHECK_THROWS_AS(Homeomorphism::translation(NAN), ValidationError);
}

TEST_CASE("property: inverse and iterate laws") {
  Rng rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const Homeomorphism h = testing::random_homeomorphism(rng);
    const double t = rng.uniform(-20, 20);
    CHECK(std::abs(h.inverse(h(t)) - t) <= 1e-12 * std::max(1.0, std::abs(t)));

    const int m = rng.integer(-10, 10);
    const int n = rng.integer(-10, 10);
    const double direct = h.iterate(t, m + n);
    const double composed = h.iterate(h.iterate(t, n), m);
    const double scale = std::max({1.0, std::abs(t), std::abs(direct)});
    CHECK(std::abs(direct - composed) <= 1e-12 * scale);
  }
}

TEST_CASE("weight functions") {
  const WeightFunction& w = kExample.weight;
  CHECK(w(-10) == 4);
  CHECK(w(-1) == 4);
  CHECK(w(0) == 3);
  CHECK(w(1) == 2);
  CHECK(w(10) == 2);
  CHECK(w.sup() == 4);
  CHECK(w.inf() == 2);

  CHECK_THROWS_AS(WeightFunction({{0, 0.0}}, 0.0, 0.0), ValidationError);
  CHECK_THROWS_AS(WeightFunction({{0, 1}, {0, 2}}, 1, 2), ValidationError);
  CHECK_THROWS_AS(WeightFunction({{0, 1}, {1, 2}}, 1.5, 2), ValidationError);
  CHECK_THROWS_AS(WeightFunction({}, 1, 2), ValidationError);
  try {
    WeightFunction({{0, 1}, {1, -2}}, 1, -2);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("positive") != std::string::npos);
  }
}

TEST_CASE("weight products") {
  for (double t : {-3.0, 0.0, 2.5}) {
    CHECK(forward_weight_product(kShift, t, 7) == 1.0);
    CHECK(backward_weight_product(kShift, t, 7) == 1.0);
    CHECK(forward_weight_product(constant_system(1.5), t, 4) == std::pow(1.5, 4));
    CHECK(backward_weight_product(constant_system(2), t, 5) == 1.0 / 32);
  }
  CHECK(forward_weight_product(kExample, 0, 1) == 3);
  CHECK(backward_weight_product(kExample, 0, 1) == 0.25);
  CHECK(backward_weight_product(kExample, 0, 2) == 1.0 / 16);
  CHECK(forward_weight_product(kExample, 0.5, 0) == 1.0);
  CHECK_THROWS_AS(forward_weight_product(kExample, 0, -1), std::invalid_argument);
}

TEST_CASE("scaled products survive far outside the double range") {
  const CosineSystem two = constant_system(2);
  const ScaledReal big = scaled_forward_weight_product(two, 0, 3000);
  CHECK(big.log() == doctest::Approx(3000 * std::log(2.0)));
  CHECK(big.value() == std::numeric_limits<double>::infinity());
  const ScaledReal tiny = scaled_backward_weight_product(two, 0, 3000);
  CHECK(tiny.log() == doctest::Approx(-3000 * std::log(2.0)));
  CHECK(tiny.value() == 0.0);
  CHECK((big * tiny).value() == 1.0);
  CHECK(tiny < big);
  CHECK(ScaledReal::zero() < tiny);
  CHECK(ScaledReal::from(0.75) * ScaledReal::from(4) == ScaledReal::from(3));
}

TEST_CASE("property: weight cocycle law") {
  Rng rng(22);
  for (int trial = 0; trial < 400; ++trial) {
    const CosineSystem sys = testing::random_system(rng);
    const double t = rng.uniform(-6, 6);
    const int m = rng.integer(0, 12);
    const int n = rng.integer(0, 12);
    const double lhs = forward_weight_product(sys, t, m + n);
    const double rhs =
        forward_weight_product(sys, t, n) * forward_weight_product(sys, sys.alpha.iterate(t, n), m);
    CHECK(rel_diff(lhs, rhs) <= 1e-12);
    // Products agree with the step-by-step oracle.
    CHECK(rel_diff(lhs, testing::oracle_forward_product(sys, t, m + n)) <= 1e-12);
    CHECK(rel_diff(backward_weight_product(sys, t, n),
                   testing::oracle_backward_product(sys, t, n)) <= 1e-12);
  }
}

TEST_CASE("adjoint T*, S* and cosine on atoms") {
  const AtomicMeasure d0 = AtomicMeasure::dirac(0);
  CHECK(atoms_of(adjoint_T(kShift, d0, 1)) == std::vector<Atom>{{1, 1}});
  CHECK(atoms_of(adjoint_T(constant_system(2), d0, 3)) == std::vector<Atom>{{3, 8}});
  CHECK(atoms_of(adjoint_T(kExample, d0, 1)) == std::vector<Atom>{{1, 3}});

  CHECK(atoms_of(adjoint_S(kShift, d0, 1)) == std::vector<Atom>{{-1, 1}});
  CHECK(atoms_of(adjoint_S(kExample, d0, 1)) == std::vector<Atom>{{-1, 0.25}});

  CHECK(atoms_of(cosine(kShift, d0, 1)) == std::vector<Atom>{{-1, 0.5}, {1, 0.5}});
  CHECK(atoms_of(cosine(kExample, d0, 1)) == std::vector<Atom>{{-1, 0.125}, {1, 1.5}});
  CHECK(cosine(kExample, d0, 0) == d0);
  for (int n = 1; n <= 12; ++n) CHECK(total_variation(cosine(kShift, d0, n)) == 1.0);
}

TEST_CASE("property: single-step atomic action is exact") {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const CosineSystem sys = testing::random_system(rng);
    const double t = rng.uniform(-8, 8);
    const auto image = atoms_of(adjoint_T(sys, AtomicMeasure::dirac(t), 1));
    REQUIRE(image.size() == 1);
    CHECK(image[0].position == sys.alpha(t));
    CHECK(image[0].mass == sys.weight(t));
  }
}

TEST_CASE("property: inverse law") {
  Rng rng(24);
  SUBCASE("translation by integers on dyadic atoms is exact") {
    for (int trial = 0; trial < 200; ++trial) {
      const CosineSystem sys{Homeomorphism::translation(rng.integer(1, 3)),
                             testing::random_weight(rng)};
      const AtomicMeasure m = testing::random_dyadic_measure(rng);
      const int n = rng.integer(1, 10);
      const AtomicMeasure back = adjoint_S(sys, adjoint_T(sys, m, n), n);
      REQUIRE(back.size() == m.size());
      for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(back.atoms()[i].position == m.atoms()[i].position);
        CHECK(rel_diff(back.atoms()[i].mass, m.atoms()[i].mass) <= 1e-9);
      }
    }
  }
  SUBCASE("random systems") {
    for (int trial = 0; trial < 200; ++trial) {
      const CosineSystem sys = testing::random_system(rng);
      const AtomicMeasure m = testing::random_measure(rng);
      const int n = rng.integer(1, 10);
      CHECK(rel_tv_error(adjoint_S(sys, adjoint_T(sys, m, n), n), m) <= 1e-9);
      CHECK(rel_tv_error(adjoint_T(sys, adjoint_S(sys, m, n), n), m) <= 1e-9);
    }
  }
}

TEST_CASE("property: semigroup law") {
  Rng rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const CosineSystem sys = testing::random_system(rng);
    const AtomicMeasure m = testing::random_measure(rng);
    const int a = rng.integer(1, 10);
    const int b = rng.integer(1, 10);
    CHECK(rel_tv_error(adjoint_T(sys, adjoint_T(sys, m, b), a), adjoint_T(sys, m, a + b)) <= 1e-9);
    CHECK(rel_tv_error(adjoint_S(sys, adjoint_S(sys, m, b), a), adjoint_S(sys, m, a + b)) <= 1e-9);
  }
}

TEST_CASE("property: d'Alembert identity for the cosine family") {
  Rng rng(26);
  for (int trial = 0; trial < 20; ++trial) {
    const CosineSystem sys = testing::random_system(rng);
    const AtomicMeasure m0 = testing::random_measure(rng);
    for (int m = 1; m <= 10; ++m) {
      for (int n = 1; n <= m; ++n) {
        const AtomicMeasure lhs = scale(2.0, cosine(sys, cosine(sys, m0, n), m));
        const AtomicMeasure rhs =
            linear_combine(1, cosine(sys, m0, m + n), 1, cosine(sys, m0, m - n));
        CHECK(rel_tv_error(lhs, rhs) <= 1e-9);
      }
    }
  }
}

TEST_CASE("function-side operators") {
  const auto one = [](double) { return 1.0; };
  const auto id = [](double x) { return x; };
  for (double t : {-2.0, 0.0, 3.5}) {
    for (int n : {1, 4}) {
      CHECK(apply_function_operator(kShift, one, t, n, Direction::forward) == 1.0);
      CHECK(apply_function_operator(kShift, one, t, n, Direction::backward) == 1.0);
    }
  }
  CHECK(apply_function_operator(kShift, id, 0, 5, Direction::forward) == 5.0);
  CHECK(apply_function_operator(kExample, one, 0, 1, Direction::forward) == 3.0);
  CHECK(apply_function_operator(kExample, one, 0, 2, Direction::backward) == 1.0 / 16);
}

TEST_CASE("duality pairing") {
  CHECK(duality_pairing(AtomicMeasure{}, [](double) { return 7.0; }) == 0.0);
  CHECK(duality_pairing(AtomicMeasure::dirac(0), [](double x) { return x * x + 1; }) == 1.0);
  CHECK(duality_pairing(AtomicMeasure({{1, 2}, {3, -1}}), [](double x) { return x; }) == -1.0);
}

TEST_CASE("property: duality between T*^n and T^n") {
  Rng rng(27);
  for (int trial = 0; trial < 200; ++trial) {
    const CosineSystem sys = testing::random_system(rng);
    const AtomicMeasure m = testing::random_measure(rng);
    const PiecewiseLinear f = testing::random_function(rng);
    const int n = rng.integer(1, 10);
    const RealFunction fh = [&](double x) { return f(x); };
    for (Direction dir : {Direction::forward, Direction::backward}) {
      const AtomicMeasure image =
          dir == Direction::forward ? adjoint_T(sys, m, n) : adjoint_S(sys, m, n);
      const double lhs = duality_pairing(image, fh);
      double rhs = 0.0;
      double scale = 0.0;
      for (const Atom& a : m.atoms()) {
        const double v = a.mass * apply_function_operator(sys, fh, a.position, n, dir);
        rhs += v;
        scale += std::abs(v);
      }
      CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(scale, 1e-300));
    }
  }
}

TEST_CASE("property: one-step norm bounds") {
  Rng rng(28);
  for (int trial = 0; trial < 300; ++trial) {
    const CosineSystem sys = testing::random_system(rng);
    const AtomicMeasure m = testing::random_measure(rng);
    const double tv = total_variation(m);
    CHECK(total_variation(adjoint_T(sys, m, 1)) <= sys.weight.sup() * tv * (1 + 1e-12));
    CHECK(total_variation(adjoint_S(sys, m, 1)) <= tv / sys.weight.inf() * (1 + 1e-12));
  }
}

TEST_CASE("iterated system is the n-th power") {
  const IteratedSystem z(kExample, 3);
  const AtomicMeasure m({{-2, 1}, {0.5, -2}});
  CHECK(z.weight(0.5) == forward_weight_product(kExample, 0.5, 3));
  CHECK(z.inverse_weight(0.5) == backward_weight_product(kExample, 0.5, 3));
  CHECK(z.two_step_forward(0.5) == forward_weight_product(kExample, 0.5, 6));
  CHECK(z.two_step_backward(0.5) == backward_weight_product(kExample, 0.5, 6));
  CHECK(z.T(m) == adjoint_T(kExample, m, 3));
  CHECK(z.S(m, 2) == adjoint_S(kExample, m, 6));
  CHECK(z.C(m) == cosine(kExample, m, 3));
  CHECK_THROWS_AS(IteratedSystem(kExample, 0), std::invalid_argument);
}
