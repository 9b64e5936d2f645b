#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dunkl/convolution.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/kernel.hpp"

using namespace dunkl;

namespace {

TransformPlan plan_for(const Rational& g, int grid_n = 257) {
  return TransformPlan(RootSystem::rank_one(g), GridOptions::from_grid_n(grid_n));
}

// T g(y) by central differences plus the reflection term.
double dunkl_fd(double gamma, const std::function<double(double)>& g, double y, double h = 1e-4) {
  const double d = (g(y + h) - g(y - h)) / (2.0 * h);
  return d + gamma * (g(y) - g(-y)) / y;
}

}  // namespace

TEST_CASE("translation: identity at zero, symmetry, classical shift") {
  for (const Rational& g : {Rational(1, 2), Rational(1), Rational(2)}) {
    const TransformPlan plan = plan_for(g);
    const Function1d f = shifted_hermite_gaussian(1, 0.5);
    const SpectralTranslator tau(f, plan);
    for (double y : {-2.0, -0.4, 0.0, 0.9, 2.5}) {
      CHECK(std::abs(tau(0.0, y) - f(y)) < 1e-9);
      CHECK(tau(0.0, y) == doctest::Approx(tau(y, 0.0)).epsilon(1e-9).scale(1.0));
    }
    for (double x : {-1.3, 0.7}) {
      for (double y : {-0.8, 1.9}) CHECK(tau(x, y) == doctest::Approx(tau(y, x)).epsilon(1e-12).scale(1.0));
    }
  }
  const TransformPlan plan0 = plan_for(0);
  const Function1d f = shifted_hermite_gaussian(2, -0.7);
  const SpectralTranslator tau(f, plan0);
  for (double x : {-1.0, 0.5, 2.0}) {
    for (double y : {-1.5, 0.0, 1.2}) CHECK(std::abs(tau(x, y) - f(x + y)) < 1e-9);
  }
}

TEST_CASE("translation: spectral and measure forms agree") {
  const std::vector<std::pair<double, double>> points = {{0.6, -0.4}, {-1.1, 0.8}};
  SUBCASE("half-integer gamma through P and the dual intertwiner") {
    const TransformPlan plan = plan_for(Rational(1, 2));
    const Function1d f = hermite_gaussian(2);
    const SpectralTranslator spectral(f, plan);
    const MeasureTranslator meas(f, plan, MeasureTranslator::Path::p_tv);
    for (auto [x, y] : points) CHECK(std::abs(spectral(x, y) - meas(x, y)) < 1e-7);
  }
  SUBCASE("integer gamma: all three forms") {
    const TransformPlan plan = plan_for(1);
    const Function1d f = shifted_hermite_gaussian(1, 0.3);
    const SpectralTranslator spectral(f, plan);
    const MeasureTranslator via_p(f, plan, MeasureTranslator::Path::p_tv);
    Intertwine1dOptions opts;
    opts.max_panel = 1.0;
    const MeasureTranslator via_q(f, plan, MeasureTranslator::Path::tv_q, opts);
    for (auto [x, y] : points) {
      const double s = spectral(x, y);
      CHECK(std::abs(s - via_p(x, y)) < 1e-7);
      CHECK(std::abs(s - via_q(x, y)) < 1e-7);
    }
  }
  SUBCASE("argument checks") {
    const Function1d f = hermite_gaussian(0);
    CHECK_THROWS_AS(MeasureTranslator(f, plan_for(0), MeasureTranslator::Path::p_tv), InvalidArgument);
    CHECK_THROWS_AS(MeasureTranslator(f, plan_for(Rational(1, 2)), MeasureTranslator::Path::tv_q), UnsupportedCase);
    const TransformPlan product(root_system_from_preset("z2xz2:1,2"), GridOptions::from_grid_n(33));
    CHECK_THROWS_AS(SpectralTranslator(f, product), UnsupportedCase);
  }
}

TEST_CASE("translation commutes with the Dunkl operator") {
  const double gamma = 1.5;
  const TransformPlan plan = plan_for(Rational(3, 2));
  const Function1d f = hermite_gaussian(0);
  // T e^{-y^2/2} = -y e^{-y^2/2}
  const Function1d tf = combine(-1.0, hermite_gaussian(1), 0.0, hermite_gaussian(1));
  const SpectralTranslator tau_f(f, plan);
  const SpectralTranslator tau_tf(tf, plan);
  for (double x : {-0.9, 0.4, 1.7}) {
    for (double y : {-1.2, 0.5, 2.0}) {
      const double lhs = dunkl_fd(gamma, [&](double t) { return tau_f(x, t); }, y);
      CHECK(std::abs(lhs - tau_tf(x, y)) < 1e-4);
    }
  }
}

TEST_CASE("convolution law and commutativity") {
  for (const Rational& g : {Rational(1, 2), Rational(2)}) {
    const TransformPlan plan = plan_for(g, 129);
    const Function1d f = hermite_gaussian(0);
    const Function1d h = shifted_hermite_gaussian(1, 0.4);
    const Convolver fh(f, h, plan);
    const Convolver hf(h, f, plan);
    for (double x : {-1.5, 0.0, 0.8}) CHECK(std::abs(fh(x) - hf(x)) < 1e-9);

    const SampledFunction conv(1, [&](std::span<const double> x) { return std::complex<double>(fh(x[0])); },
                               DecayClass::schwartz(kGaussianRadius));
    const SampledFunction fs = f.as_sampled();
    const SampledFunction hs = h.as_sampled();
    for (double y : {0.0, 0.7, -1.6, 3.0}) {
      const std::vector<double> yy{y};
      const std::complex<double> lhs = dunkl_transform(conv, yy, plan);
      const std::complex<double> rhs = dunkl_transform(fs, yy, plan) * dunkl_transform(hs, yy, plan);
      CHECK(std::abs(lhs - rhs) < 1e-7);
    }
  }
}

TEST_CASE("classical convolution of Gaussians") {
  const TransformPlan plan = plan_for(0);
  const Function1d f = hermite_gaussian(0);
  const Convolver c(f, f, plan);
  for (double x : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
    CHECK(c(x) == doctest::Approx(std::sqrt(std::numbers::pi) * std::exp(-0.25 * x * x)).epsilon(1e-10));
  }
  CHECK(convolve(plan, f, f, 1.0) == doctest::Approx(c(1.0)));
}

TEST_CASE("convolution with concrete distributions") {
  const TransformPlan plan = plan_for(1);
  const Function1d phi = hermite_gaussian(0);
  SUBCASE("point mass at the origin reproduces an even function") {
    const auto delta = ConcreteDistribution::dirac(0.0);
    for (double x : {-1.0, 0.3, 2.2}) CHECK(std::abs(distribution_convolve(plan, delta, phi, x) - phi(x)) < 1e-9);
  }
  SUBCASE("point mass at z equals the translate") {
    const Function1d psi = shifted_hermite_gaussian(1, -0.6);
    const SpectralTranslator tau(psi, plan);
    for (double z : {-0.8, 1.1}) {
      const auto delta = ConcreteDistribution::dirac(z);
      for (double x : {-0.5, 1.4}) CHECK(std::abs(distribution_convolve(plan, delta, psi, x) - tau(x, -z)) < 1e-12);
    }
  }
  SUBCASE("weighted function kind is the function convolution") {
    const Function1d g = shifted_hermite_gaussian(0, 0.5);
    const auto s = ConcreteDistribution::weighted(g);
    for (double x : {-1.0, 0.6}) CHECK(distribution_convolve(plan, s, phi, x) == doctest::Approx(convolve(plan, phi, g, x)));
    CHECK_THROWS_AS(ConcreteDistribution::weighted(Function1d([](double x) { return x; }, DecayClass::polynomial(1))),
                    InvalidArgument);
  }
  SUBCASE("pairing of the convolution") {
    // <(g w) * phi, psi w> = <g w, phi_check * psi>, phi_check(y) = phi(-y).
    const Function1d g = shifted_hermite_gaussian(0, 0.5);
    const Function1d psi = shifted_hermite_gaussian(1, -0.3);
    const Function1d phi_odd = shifted_hermite_gaussian(1, 0.8);
    const Function1d phi_check([phi_odd](double y) { return phi_odd(-y); }, phi_odd.decay());
    const Convolver lhs_conv(phi_odd, g, plan);
    const Convolver rhs_conv(phi_check, psi, plan);
    const QuadratureGrid& grid = plan.space_grids().front();
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double y = grid.nodes[j];
      lhs += grid.weights[j] * lhs_conv(y) * psi(y);
      rhs += grid.weights[j] * g(y) * rhs_conv(y);
    }
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("bump profile and its transform") {
  for (double g : {0.0, 0.5, 1.0, 2.0}) {
    const BumpProfile profile(g);
    CHECK(profile.normalization() > 0.0);
    CHECK(profile(1.0) == 0.0);
    CHECK(profile(-0.1) == 0.0);
    const double eps = 0.3;
    const Function1d phi = profile.scaled(eps);
    CHECK(phi(0.31) == 0.0);
    CHECK(phi(-0.3) == 0.0);
    CHECK(phi(0.29) > 0.0);
    const QuadratureGrid grid = weighted_line_grid(eps, 2.0 * g, 16, 16);
    CHECK(grid.integrate([&](double x) { return phi(x); }) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(profile.transform_scaled(eps, 0.0) == doctest::Approx(1.0).epsilon(1e-8));
    for (double y : {0.5, 2.0, 6.0}) {
      const double direct = grid.integrate([&](double x) { return phi(x) * kernel_1d_oscillatory(g, x, y).real(); });
      CHECK(std::abs(profile.transform_scaled(eps, y) - direct) < 1e-8);
    }
  }
  CHECK_THROWS_AS(BumpProfile(1.0).scaled(0.0), InvalidArgument);
  CHECK_THROWS_AS(BumpProfile(-1.0), InvalidArgument);
}

TEST_CASE("approximate identity report") {
  const TransformPlan plan = plan_for(1);
  const VerificationReport rep = approx_identity_check(plan, shifted_hermite_gaussian(0, 0.5));
  CHECK(rep.passed());
  const auto& curves = rep.curves();
  REQUIRE(curves.size() == 1);
  CHECK(curves.front().name == "approx-identity");
  CHECK(curves.front().rows.size() == 4);
  for (std::size_t i = 1; i < curves.front().rows.size(); ++i) {
    CHECK(curves.front().rows[i][1] < curves.front().rows[i - 1][1]);
  }
  ApproxIdentityOptions bad;
  bad.eps = {0.5, 0.01};
  CHECK_THROWS_AS(approx_identity_check(plan, hermite_gaussian(0), bad), InvalidArgument);
  bad.eps = {};
  CHECK_THROWS_AS(approx_identity_check(plan, hermite_gaussian(0), bad), InvalidArgument);
}
