#pragma once

// Independent reference values used by the unit tests. Nothing here calls
// into the library under test.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "dunkl/rational.hpp"

namespace oracle {

/// 1D: V_k(y^m)(x) = ratio * x^m with ratio = (1/2)_j / (g + 1/2)_j and
/// j = ceil(m/2), read off the Beta integrals of the mu_x density.
inline dunkl::Rational intertwine_monomial_ratio(const dunkl::Rational& g, int m) {
  const int j = (m + 1) / 2;
  dunkl::Rational r = 1;
  for (int i = 0; i < j; ++i) r *= (dunkl::Rational(1, 2) + i) / (g + dunkl::Rational(1, 2) + i);
  return r;
}

/// Same ratio in floating point via Beta functions.
inline double intertwine_monomial_ratio(double g, int m) {
  const double c = std::tgamma(g + 0.5) / (std::sqrt(std::numbers::pi) * std::tgamma(g));
  // int_{-1}^{1} s^m (1-s)^{g-1} (1+s)^g ds
  auto f = [&](double s) { return std::pow(s, m) * std::pow(1 - s, g - 1) * std::pow(1 + s, g); };
  boost::math::quadrature::tanh_sinh<double> ts;
  return c * ts.integrate(f, -1.0, 1.0, 1e-15);
}

/// Normalized Bessel j_a(u) = Gamma(a+1) (2/u)^a J_a(u) for real u.
inline double bessel_j_normalized(double a, double u) {
  if (u == 0.0) return 1.0;
  const double au = std::abs(u);
  return boost::math::tgamma(a + 1) * std::pow(2.0 / au, a) * boost::math::cyl_bessel_j(a, au);
}

/// Modified: j_a(i u) = Gamma(a+1) (2/u)^a I_a(u).
inline double bessel_j_normalized_imag(double a, double u) {
  if (u == 0.0) return 1.0;
  const double au = std::abs(u);
  return boost::math::tgamma(a + 1) * std::pow(2.0 / au, a) * boost::math::cyl_bessel_i(a, au);
}

/// 1D Dunkl kernel K(x, t) for real x, t via modified Bessel functions.
inline double kernel_real(double g, double x, double t) {
  const double u = x * t;
  return bessel_j_normalized_imag(g - 0.5, u) + u / (2 * g + 1) * bessel_j_normalized_imag(g + 0.5, u);
}

/// K(x, -i y) = j_{g-1/2}(xy) - i xy/(2g+1) j_{g+1/2}(xy).
inline std::complex<double> kernel_minus_i(double g, double x, double y) {
  const double u = x * y;
  return {bessel_j_normalized(g - 0.5, u), -u / (2 * g + 1) * bessel_j_normalized(g + 0.5, u)};
}

/// Adaptive Gauss-Kronrod on [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14);
}

/// Adaptive tanh-sinh, tolerant of endpoint singularities.
inline double integrate_singular(const std::function<double(double)>& f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, a, b, 1e-15);
}

/// int_{-r}^{r} f(s, r - s) ds with the distance to the right endpoint
/// supplied without cancellation (tanh-sinh complement argument).
inline double integrate_right_singular(const std::function<double(double, double)>& f, double r) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate([&](double s, double sc) { return f(s, s > 0 ? sc : r - s); }, -r, r, 1e-15);
}

/// int_a^b f(u, u - a) du with the distance to the left endpoint supplied
/// without cancellation.
inline double integrate_left_singular(const std::function<double(double, double)>& f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double mid = 0.5 * (a + b);
  return ts.integrate([&](double u, double uc) { return f(u, u < mid ? -uc : u - a); }, a, b, 1e-15);
}

/// Dual intertwiner tV f(y) for y != 0 written out from the mu density at
/// base points t with |t| >= |y|, integrated up to |t| = b.
inline double dual_intertwine(double g, const std::function<double(double)>& f, double y, double b) {
  const double c = std::tgamma(g + 0.5) / (std::sqrt(std::numbers::pi) * std::tgamma(g));
  const double a = std::abs(y);
  double s = 0;
  for (double side : {1.0, -1.0}) {
    const bool near_first = side * y > 0;  // the (|t| - sgn(t) y) factor vanishes at |t| = a
    s += integrate_left_singular(
        [&](double u, double dist) {
          const double first = near_first ? dist : u + a;
          const double second = near_first ? u + a : dist;
          return f(side * u) * c * std::pow(first, g - 1) * std::pow(second, g);
        },
        a, b);
  }
  return s;
}

/// Expectation of h under the 1D measure mu_x, written in the variable
/// s = sgn(x) y so the singular factor (|x| - s)^{g-1} sits at s = |x|.
inline double mu_expectation(double g, double x, const std::function<double(double)>& h) {
  const double ax = std::abs(x);
  const double sign = x > 0 ? 1.0 : -1.0;
  const double c = std::tgamma(g + 0.5) / (std::sqrt(std::numbers::pi) * std::tgamma(g));
  return integrate_right_singular(
      [&](double s, double dist) {
        return h(sign * s) * c * std::pow(ax, -2 * g) * std::pow(dist, g - 1) * std::pow(ax + s, g);
      },
      ax);
}

inline dunkl::Rational random_rational(std::mt19937_64& rng, int range = 9, int den = 7) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> d(1, den);
  dunkl::Rational r(num(rng), d(rng));
  r.canonicalize();
  return r;
}

}  // namespace oracle
