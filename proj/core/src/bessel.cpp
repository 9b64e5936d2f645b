#include "dunkl/bessel.hpp"

#include <cmath>
#include <vector>

#include "dunkl/errors.hpp"

namespace dunkl {
namespace {

constexpr double kSeriesSwitch = 2.0;
constexpr double kComplexSeriesLimit = 30.0;
constexpr double kImagLimit = 700.0;

void check_order(double a) {
  if (!(a >= -0.5)) throw InvalidArgument("Bessel order must be >= -1/2");
}

template <class T>
T series(double a, T u) {
  const T q = -u * u / 4.0;
  T term = 1.0;
  T sum = 1.0;
  for (int n = 0; n < 2000; ++n) {
    term *= q / ((n + 1.0) * (a + 1.0 + n));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && n > std::abs(q)) break;
  }
  return sum;
}

BesselPair miller(double a, double x) {
  // Backward recurrence J_{v-1} = (2v/x) J_v - J_{v+1} on v = a + m.
  int m_start = static_cast<int>(x + 10.0 * std::cbrt(x) + 25.0);
  if (m_start % 2 != 0) ++m_start;
  double j_next = 0.0;
  double j_cur = 1e-30;
  double norm = 0.0;
  double j0 = 0.0;
  double j1 = 0.0;
  // r_k = (a+1)_{k-1}/k!, norm = J_a + sum_{k>=1} (a+2k) r_k J_{a+2k}
  std::vector<double> r(static_cast<std::size_t>(m_start / 2 + 1), 0.0);
  if (r.size() > 1) r[1] = 1.0;
  for (std::size_t k = 1; k + 1 < r.size(); ++k) r[k + 1] = r[k] * (a + static_cast<double>(k)) / static_cast<double>(k + 1);
  for (int m = m_start; m >= 0; --m) {
    if (m % 2 == 0) {
      const int k = m / 2;
      norm += k == 0 ? j_cur : (a + m) * r[static_cast<std::size_t>(k)] * j_cur;
    }
    if (m == 1) j1 = j_cur;
    if (m == 0) {
      j0 = j_cur;
      break;
    }
    const double j_prev = 2.0 * (a + m) / x * j_cur - j_next;
    j_next = j_cur;
    j_cur = j_prev;
    if (std::abs(j_cur) > 1e250) {
      j_cur *= 1e-250;
      j_next *= 1e-250;
      norm *= 1e-250;
      j1 *= 1e-250;
    }
  }
  return {j0 / norm, 2.0 * (a + 1.0) / x * j1 / norm};
}

}  // namespace

BesselPair bessel_j_normalized_pair(double a, double u) {
  check_order(a);
  if (!std::isfinite(u)) throw RangeError("non-finite Bessel argument");
  const double x = std::abs(u);
  if (x <= kSeriesSwitch) return {series(a, x), series(a + 1.0, x)};
  return miller(a, x);
}

double bessel_j_normalized(double a, double u) { return bessel_j_normalized_pair(a, u).ja; }

double bessel_j_normalized_imag(double a, double v) {
  check_order(a);
  const double x = std::abs(v);
  if (!(x <= kImagLimit)) throw RangeError("imaginary Bessel argument outside supported range");
  // j_a(iv) = sum (v^2/4)^n / (n! (a+1)_n): all terms positive.
  const double q = x * x / 4.0;
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < 5000; ++n) {
    term *= q / ((n + 1.0) * (a + 1.0 + n));
    sum += term;
    if (term <= 1e-17 * sum && n > q) break;
  }
  return sum;
}

std::complex<double> bessel_j_normalized(double a, std::complex<double> u) {
  check_order(a);
  if (u.imag() == 0.0) return bessel_j_normalized(a, u.real());
  if (u.real() == 0.0) return bessel_j_normalized_imag(a, u.imag());
  if (std::abs(u) > kComplexSeriesLimit) throw RangeError("complex Bessel argument outside supported range");
  return series(a, u);
}

}  // namespace dunkl
