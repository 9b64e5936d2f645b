#include <doctest.h>

#include <cmath>

#include "dunkl/errors.hpp"
#include "dunkl/function.hpp"
#include "dunkl/intertwine1d.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/polyexact.hpp"

using namespace dunkl;

namespace {

// 3 - 2x^2 + x^5 - x^6/4, with jets through the generic route.
Function1d sample_polynomial() {
  return Function1d::from_generic(
      [](const auto& x) {
        const auto x2 = x * x;
        return 3.0 - 2.0 * x2 + x2 * x2 * x - 0.25 * x2 * x2 * x2;
      },
      DecayClass::polynomial(6));
}

RationalPoly sample_polynomial_exact() {
  RationalPoly p(1);
  p.add_term({0}, 3);
  p.add_term({2}, -2);
  p.add_term({5}, 1);
  p.add_term({6}, Rational(-1, 4));
  return p;
}

}  // namespace

TEST_CASE("jet arithmetic matches closed-form derivatives") {
  const double x0 = 0.7;
  const Jet x = Jet::variable(x0, 6);
  const Jet e = exp(-0.5 * (x * x));
  const double g = std::exp(-0.5 * x0 * x0);
  CHECK(e.derivative(0) == doctest::Approx(g).epsilon(1e-15));
  CHECK(e.derivative(1) == doctest::Approx(-x0 * g).epsilon(1e-14));
  CHECK(e.derivative(2) == doctest::Approx((x0 * x0 - 1) * g).epsilon(1e-14));
  CHECK(e.derivative(3) == doctest::Approx((3 * x0 - x0 * x0 * x0) * g).epsilon(1e-14));
  CHECK(e.derivative(4) == doctest::Approx((x0 * x0 * x0 * x0 - 6 * x0 * x0 + 3) * g).epsilon(1e-13));

  const Jet q = 1.0 / (1.0 + x);
  for (int k = 0; k <= 6; ++k) {
    CHECK(q[k] == doctest::Approx(std::pow(-1.0, k) / std::pow(1 + x0, k + 1)).epsilon(1e-14));
  }
  const Jet r = (x * x) / x;
  CHECK(r[0] == doctest::Approx(x0));
  CHECK(r[1] == doctest::Approx(1.0));
  CHECK(std::abs(r[2]) < 1e-15);
  CHECK(pow(x, 3).derivative(3) == doctest::Approx(6.0));
  CHECK(x.reflect()[1] == -1.0);
  CHECK(e.differentiate().order() == 5);
  CHECK(e.evaluate(0.01) == doctest::Approx(std::exp(-0.5 * 0.71 * 0.71)).epsilon(1e-13));
  CHECK_THROWS_AS(Jet(1.0, Jet::kMaxOrder + 1), RangeError);
  CHECK_THROWS_AS(x / Jet::variable(0.0, 6), RangeError);
}

TEST_CASE("function family values and decay declarations") {
  for (int n = 0; n <= 4; ++n) {
    const Function1d f = hermite_gaussian(n);
    CHECK(f(1.3) == doctest::Approx(std::pow(1.3, n) * std::exp(-0.5 * 1.69)));
    CHECK(f.decay().kind == DecayKind::schwartz);
    CHECK(f.as_sampled().tail_magnitude() < 1e-12);
    CHECK(f.jet(1.3, 3).derivative(0) == doctest::Approx(f(1.3)));
  }
  const Function1d b = bump(1.0);
  CHECK(b(0.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(b(1.0) == 0.0);
  CHECK(b(-1.2) == 0.0);
  CHECK(b.jet(1.5, 4).derivative(3) == 0.0);
  CHECK(b.as_sampled().tail_magnitude() == 0.0);

  const Function1d s = combine(2.0, hermite_gaussian(0), -1.0, hermite_gaussian(2));
  CHECK(s(0.5) == doctest::Approx(2 * std::exp(-0.125) - 0.25 * std::exp(-0.125)));
  CHECK(s.has_jet());

  CHECK_THROWS_AS(sample_polynomial().as_sampled().effective_radius(), InvalidArgument);
  CHECK_THROWS_AS(hermite_gaussian(-1), InvalidArgument);
  CHECK_THROWS_AS(bump(0.0), InvalidArgument);
  const Function1d no_jet([](double x) { return x; }, DecayClass::polynomial(1));
  CHECK_THROWS_AS(no_jet.jet(0.0, 2), UnsupportedCase);
}

TEST_CASE("numeric Dunkl powers agree with exact operators on polynomials") {
  const Function1d f = sample_polynomial();
  for (const Rational& g : {Rational(1, 2), Rational(1), Rational(2), Rational(7, 3)}) {
    const RootSystem rs = RootSystem::rank_one(g);
    const DunklOperators ops(rs);
    RationalPoly p = sample_polynomial_exact();
    for (int m = 1; m <= 4; ++m) {
      p = ops.apply(0, p);
      for (double x : {-1.7, -0.6, -0.1, 0.0, 0.05, 0.2, 0.9, 2.3}) {
        const double exact = p.evaluate(std::vector<double>{x});
        CHECK(dunkl_power_num(g.get_d(), f, m, x) == doctest::Approx(exact).epsilon(1e-11).scale(1.0));
      }
    }
  }
}

TEST_CASE("Dunkl operator on Gaussian-type inputs") {
  const double g = 1.5;
  const Function1d e = hermite_gaussian(0);
  const Function1d o = hermite_gaussian(1);
  for (double x : {-2.0, -0.3, 0.0, 0.1, 1.4}) {
    const double w = std::exp(-0.5 * x * x);
    // Even input: derivative only. Odd input picks up 2g f(x)/x.
    CHECK(dunkl_power_num(g, e, 1, x) == doctest::Approx(-x * w).epsilon(1e-13).scale(1.0));
    CHECK(dunkl_power_num(g, o, 1, x) == doctest::Approx((1 - x * x) * w + 2 * g * w).epsilon(1e-13));
  }
  CHECK(dunkl_power_num(0.0, o, 2, 0.8) == doctest::Approx(o.jet(0.8, 2).derivative(2)));
  CHECK_THROWS_AS(dunkl_power_num(1.0, o, -1, 0.3), InvalidArgument);
}
