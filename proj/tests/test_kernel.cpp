#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dunkl/errors.hpp"
#include "dunkl/kernel.hpp"
#include "oracles.hpp"

using namespace dunkl;

TEST_CASE("kernel at zero and symmetry") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-4, 4);
  for (double g : {0.0, 0.5, 1.0, 7.0 / 3.0}) {
    for (int i = 0; i < 100; ++i) {
      const double x = u(rng), t = u(rng);
      CHECK(kernel_1d(g, x, 0.0) == cdouble(1.0, 0.0));
      CHECK(std::abs(kernel_1d(g, x, t) - kernel_1d(g, t, x)) < 1e-14 * std::abs(kernel_1d(g, x, t)));
      const double lambda = u(rng);
      CHECK(std::abs(kernel_1d(g, lambda * x, t) - kernel_1d(g, x, lambda * t)) <
            1e-10 * std::max(1.0, std::abs(kernel_1d(g, x, lambda * t))));
    }
  }
}

TEST_CASE("gamma zero is the exponential") {
  for (double x : {-2.0, 0.3, 1.7}) {
    CHECK(std::abs(kernel_1d(0.0, x, 1.3) - std::exp(1.3 * x)) < 1e-13 * std::exp(1.3 * x));
    CHECK(std::abs(kernel_1d_oscillatory(0.0, x, 1.3) - std::exp(cdouble(0, -1.3 * x))) < 1e-14);
  }
}

TEST_CASE("1D kernel against modified and ordinary Bessel oracles") {
  for (double g : {0.5, 1.0, 2.0, 7.0 / 3.0}) {
    for (double x = -6.0; x <= 6.0; x += 0.7) {
      for (double y : {-3.1, -0.2, 0.9, 4.4}) {
        const double kr = oracle::kernel_real(g, x, y);
        CHECK(std::abs(kernel_1d_real(g, x, y) / kr - 1.0) < 1e-13);
        CHECK(std::abs(kernel_1d(g, x, y).real() / kr - 1.0) < 1e-13);
        const cdouble ko = oracle::kernel_minus_i(g, x, y);
        CHECK(std::abs(kernel_1d_oscillatory(g, x, y) - ko) < 1e-13);
        CHECK(std::abs(kernel_1d(g, x, cdouble(0.0, -y)) - ko) < 1e-13);
      }
    }
  }
}

TEST_CASE("Laplace representation over the mu_x density") {
  for (double g : {0.5, 1.0, 2.0, 7.0 / 3.0}) {
    for (double x : {-1.5, 1.0, 2.5}) {
      for (double z : {-1.0, 0.4, 1.0}) {
        const double integral = oracle::mu_expectation(g, x, [&](double y) { return std::exp(y * z); });
        CHECK(std::abs(kernel_1d_real(g, x, z) - integral) < 1e-10);
      }
    }
  }
}

TEST_CASE("eigenfunction property via finite differences") {
  for (double g : {0.5, 1.0, 2.0}) {
    for (double x : {-1.3, 0.4, 2.2}) {
      for (double y : {-1.1, 0.7, 1.9}) {
        auto k = [&](double s) { return kernel_1d_real(g, s, y); };
        const double h = 1e-3;
        const double d1 = (8 * (k(x + h) - k(x - h)) - (k(x + 2 * h) - k(x - 2 * h))) / (12 * h);
        const double tk = d1 + g * (k(x) - k(-x)) / x;
        CHECK(std::abs(tk - y * k(x)) < 1e-8 * std::max(1.0, std::abs(y * k(x))));
      }
    }
  }
}

TEST_CASE("series agrees with the closed form in 1D") {
  KernelConfig cfg{60, 1e-12};
  for (const char* g : {"1/2", "1", "2", "7/3"}) {
    auto rs = root_system_from_preset(std::string("z2:") + g);
    KernelSeries series(rs, cfg);
    const double gd = rs.gamma().get_d();
    for (double x = -3.0; x <= 3.0; x += 0.5) {
      for (double t = -3.0; t <= 3.0; t += 0.75) {
        const double xs[1] = {x};
        const cdouble zr[1] = {t};
        const cdouble zi[1] = {cdouble(0.0, -t)};
        const double closed = kernel_1d_real(gd, x, t);
        CHECK(std::abs(series(xs, zr) - closed) < 1e-10 * std::max(1.0, closed));
        CHECK(std::abs(series(xs, zi) - kernel_1d_oscillatory(gd, x, t)) < 1e-10);
      }
    }
    const double zero[1] = {0.0};
    const cdouble any[1] = {cdouble(2.0, -1.0)};
    CHECK(series(zero, any) == cdouble(1.0, 0.0));
  }
  KernelSeries coarse(RootSystem::rank_one(1));
  const double xs[1] = {3.0};
  const cdouble zs[1] = {3.0};
  CHECK_THROWS_AS(coarse(xs, zs), NumericError);
}

TEST_CASE("product structure of the Z2^2 kernel") {
  auto rs = root_system_from_preset("z2xz2:1,2");
  KernelSeries series(rs, {60, 1e-12});
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 20; ++i) {
    const double x[2] = {u(rng), u(rng)};
    const cdouble z[2] = {u(rng), cdouble(0.0, u(rng))};
    const cdouble expected = kernel_1d(1.0, x[0], z[0]) * kernel_1d(2.0, x[1], z[1]);
    CHECK(std::abs(series(x, z) - expected) < 1e-10 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("B2 series kernel is symmetric and W-invariant") {
  auto rs = root_system_from_preset("b2:1,1/2");
  DunklKernel k(rs, {30, 1e-12});
  CHECK_FALSE(k.closed_form());
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::vector<KernelSample> samples;
  for (int i = 0; i < 10; ++i) {
    std::vector<double> x{u(rng), u(rng)}, y{u(rng), u(rng)};
    const cdouble yz[2] = {y[0], y[1]};
    const cdouble xz[2] = {x[0], x[1]};
    CHECK(std::abs(k(x, yz) - k(y, xz)) < 1e-10 * std::abs(k(x, yz)));
    samples.push_back({x, y});
  }
  auto report = check_bounds(rs, samples, 1e-12, {30, 1e-12});
  CHECK(report.passed());
}

TEST_CASE("bounds on 1000 samples") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-5, 5);
  std::vector<KernelSample> samples;
  samples.push_back({{0.0}, {3.0}});
  for (int i = 0; i < 1000; ++i) samples.push_back({{u(rng)}, {u(rng)}});
  auto report = check_bounds(RootSystem::rank_one(1), samples);
  CHECK(report.passed());
  CHECK(report.find_check("kernel.bound_imaginary")->residual <= 1e-12);
  CHECK(report.find_check("kernel.bound_sharp") != nullptr);
  CHECK(std::abs(std::abs(kernel_1d(1.0, cdouble(0.0, 0.0), 3.0)) - 1.0) == 0.0);
}
