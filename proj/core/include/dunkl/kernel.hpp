#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "dunkl/polyexact.hpp"
#include "dunkl/report.hpp"
#include "dunkl/rootsys.hpp"

namespace dunkl {

using cdouble = std::complex<double>;

struct KernelConfig {
  int series_truncation = 40;
  double tolerance = 1e-12;
};

/// 1D kernel K(x, t) = j_{g-1/2}(ixt) + xt/(2g+1) j_{g+1/2}(ixt).
cdouble kernel_1d(double gamma, cdouble x, cdouble t);

/// K(x, -iy) for real x, y; the oscillatory kernel of the Dunkl transform.
cdouble kernel_1d_oscillatory(double gamma, double x, double y);

/// K(x, t) for real x, t (exponential-type growth).
double kernel_1d_real(double gamma, double x, double t);

/// K(x, z) on the intertwined exponential series
/// sum_n V_k[<., z>^n / n!](x), truncated at degree N.
class KernelSeries {
 public:
  explicit KernelSeries(const RootSystem& rs, KernelConfig config = {});

  const KernelConfig& config() const { return config_; }
  /// Throws NumericError when the tail bound (|x||z|)^{N+1}/(N+1)! exceeds
  /// the tolerance.
  cdouble operator()(std::span<const double> x, std::span<const cdouble> z) const;
  /// Tail bound for the given argument norms.
  double tail_bound(double norm_x, double norm_z) const;

 private:
  Intertwiner v_;
  KernelConfig config_;
};

/// K(x, z) for real x and complex z: closed form on product groups,
/// intertwined series otherwise.
class DunklKernel {
 public:
  explicit DunklKernel(const RootSystem& rs, KernelConfig config = {});

  const RootSystem& root_system() const { return rs_; }
  bool closed_form() const { return rs_.is_product(); }
  cdouble operator()(std::span<const double> x, std::span<const cdouble> z) const;
  /// K(x, -i y) for real x, y.
  cdouble oscillatory(std::span<const double> x, std::span<const double> y) const;

 private:
  RootSystem rs_;
  std::vector<double> axis_gamma_;
  std::shared_ptr<const KernelSeries> series_;
};

struct KernelSample {
  std::vector<double> x;
  std::vector<double> y;
};

/// Checks |K(ix, y)| <= 1, |K(x, z)| <= exp(|x| |Re z|), the sharp
/// max_w exp(Re <wx, z>) bound (product groups), W-invariance and the
/// conjugation symmetry on the given real samples.
VerificationReport check_bounds(const RootSystem& rs, const std::vector<KernelSample>& samples, double tol = 1e-12,
                                KernelConfig config = {});

}  // namespace dunkl
