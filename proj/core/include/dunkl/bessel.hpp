#pragma once

#include <complex>

namespace dunkl {

/// j_a(u) = Gamma(a+1) sum_n (-1)^n (u/2)^{2n} / (n! Gamma(n+a+1)), a >= -1/2.
///
/// Real u: power series for |u| <= 2, Miller backward recurrence normalized
/// by the Neumann sum beyond.
double bessel_j_normalized(double a, double u);

/// Complex u. Purely real or purely imaginary arguments are routed to the
/// dedicated real paths; other arguments use the power series and throw
/// RangeError for |u| > 30.
std::complex<double> bessel_j_normalized(double a, std::complex<double> u);

/// j_a(i v) for real v (modified Bessel, positive series). RangeError when
/// |v| > 700.
double bessel_j_normalized_imag(double a, double v);

struct BesselPair {
  double ja;   // j_a(u)
  double ja1;  // j_{a+1}(u)
};

/// j_a(u) and j_{a+1}(u) from a single recurrence sweep.
BesselPair bessel_j_normalized_pair(double a, double u);

}  // namespace dunkl
