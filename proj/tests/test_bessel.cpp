#include <doctest.h>

#include <cmath>

#include "dunkl/bessel.hpp"
#include "dunkl/errors.hpp"
#include "oracles.hpp"

using namespace dunkl;

TEST_CASE("closed-form orders") {
  CHECK(bessel_j_normalized(2.5, 0.0) == 1.0);
  CHECK(bessel_j_normalized(0.5, 1.0) == doctest::Approx(0.8414709848078965).epsilon(1e-15));
  for (double u : {0.1, 1.0, 1.9, 2.1, 7.5, 31.0, 140.0}) {
    CHECK(std::abs(bessel_j_normalized(0.5, u) - std::sin(u) / u) < 1e-14);
    CHECK(std::abs(bessel_j_normalized(-0.5, u) - std::cos(u)) < 1e-14);
  }
}

TEST_CASE("real axis against Boost") {
  for (double a : {-0.5, 0.0, 1.0 / 3.0, 0.5, 1.0, 1.5, 2.0, 7.0 / 3.0, 5.5}) {
    for (double u = 0.0; u <= 160.0; u += 0.37) {
      const double ref = oracle::bessel_j_normalized(a, u);
      CHECK(std::abs(bessel_j_normalized(a, u) - ref) < 2e-14);
      CHECK(std::abs(bessel_j_normalized(a, -u) - ref) < 2e-14);
      const auto pair = bessel_j_normalized_pair(a, u);
      CHECK(std::abs(pair.ja1 - oracle::bessel_j_normalized(a + 1.0, u)) < 2e-14);
    }
  }
}

TEST_CASE("imaginary axis against Boost") {
  for (double a : {-0.5, 0.0, 0.5, 1.0, 2.0, 7.0 / 3.0}) {
    for (double v = 0.0; v <= 60.0; v += 0.61) {
      const double ref = oracle::bessel_j_normalized_imag(a, v);
      CHECK(std::abs(bessel_j_normalized_imag(a, v) / ref - 1.0) < 1e-13);
    }
  }
  CHECK_THROWS_AS(bessel_j_normalized_imag(1.0, 701.0), RangeError);
}

TEST_CASE("general complex arguments") {
  for (auto u : {std::complex<double>(3, 4), std::complex<double>(-1, 0.5), std::complex<double>(10, -12)}) {
    CHECK(std::abs(bessel_j_normalized(0.5, u) - std::sin(u) / u) < 1e-12 * std::max(1.0, std::abs(std::sin(u) / u)));
    CHECK(std::abs(bessel_j_normalized(-0.5, u) - std::cos(u)) < 1e-12 * std::max(1.0, std::abs(std::cos(u))));
  }
  CHECK(bessel_j_normalized(1.0, std::complex<double>(0.0, 2.0)).real() ==
        doctest::Approx(oracle::bessel_j_normalized_imag(1.0, 2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(bessel_j_normalized(1.0, std::complex<double>(25, 25)), RangeError);
  CHECK_THROWS_AS(bessel_j_normalized(-0.6, 1.0), InvalidArgument);
}
