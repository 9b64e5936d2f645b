#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "dunkl/function.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/rootsys.hpp"

namespace dunkl {

struct GridOptions {
  double space_radius = kGaussianRadius;
  double frequency_radius = 8.0;
  int panels_per_side = 8;
  int nodes_per_panel = 16;

  /// Resolution from a point count per frequency axis: panels_per_side =
  /// ceil((n - 1) / 32), at least 2.
  static GridOptions from_grid_n(int n);
};

/// int_{-R}^{R} f(x) |x|^power dx. The panels touching the origin absorb
/// |x|^power with Jacobi nodes; the others carry it in their weights.
QuadratureGrid weighted_line_grid(double radius, double power, int panels_per_side, int nodes_per_panel);

/// Composite Gauss-Legendre on [-R, R] with a panel break at 0.
QuadratureGrid plain_line_grid(double radius, int panels_per_side, int nodes_per_panel);

/// Quadrature and kernel context for transforms on a product root system.
class TransformPlan {
 public:
  /// Throws UnsupportedCase unless the root system is a product Z_2^d.
  explicit TransformPlan(const RootSystem& rs, GridOptions options = {},
                         std::vector<std::vector<double>> targets = {});

  const RootSystem& root_system() const { return rs_; }
  const GridOptions& options() const { return options_; }
  int dimension() const { return rs_.dimension(); }
  const std::vector<std::vector<double>>& targets() const { return targets_; }

  /// Per axis: the omega_k-weighted rule on [-space_radius, space_radius].
  const std::vector<QuadratureGrid>& space_grids() const { return space_; }
  /// Per axis: the omega_k-weighted rule on [-frequency_radius, frequency_radius].
  const std::vector<QuadratureGrid>& frequency_grids() const { return frequency_; }
  const QuadratureGrid& plain_space_grid() const { return plain_space_; }

  double axis_gamma(int j) const { return axis_gamma_[static_cast<std::size_t>(j)]; }
  double gamma() const { return gamma_; }
  double mehta() const { return mehta_; }
  /// c_k^2 / 2^{2 gamma + d}.
  double inverse_constant() const;
  /// pi^d c_k^2 / 2^{2 gamma}.
  double p_prefactor() const;
  /// True when the declared support of f fits inside the spatial grid.
  bool covers(const SampledFunction& f) const;

  /// prod_j K_j(x_j, -i y_j).
  std::complex<double> kernel_oscillatory(std::span<const double> x, std::span<const double> y) const;

 private:
  RootSystem rs_;
  GridOptions options_;
  std::vector<std::vector<double>> targets_;
  std::vector<QuadratureGrid> space_;
  std::vector<QuadratureGrid> frequency_;
  QuadratureGrid plain_space_;
  std::vector<double> axis_gamma_;
  double gamma_;
  double mehta_;
};

/// F(f)(y) = int f(x) e^{-i<x,y>} dx.
std::complex<double> classical_fourier(const SampledFunction& f, std::span<const double> y, const TransformPlan& plan);
std::vector<std::complex<double>> classical_fourier(const SampledFunction& f, const std::vector<std::vector<double>>& ys,
                                                    const TransformPlan& plan);

/// F_D(f)(y) = int f(x) K(x, -iy) omega_k(x) dx.
std::complex<double> dunkl_transform(const SampledFunction& f, std::span<const double> y, const TransformPlan& plan);
std::vector<std::complex<double>> dunkl_transform(const SampledFunction& f, const std::vector<std::vector<double>>& ys,
                                                  const TransformPlan& plan);

/// F_D^{-1}(h)(x) = c_k^2 / 2^{2 gamma + d} int h(y) K(x, iy) omega_k(y) dy.
std::complex<double> dunkl_inverse(const SampledFunction& h, std::span<const double> x, const TransformPlan& plan);
std::vector<std::complex<double>> dunkl_inverse(const SampledFunction& h, const std::vector<std::vector<double>>& xs,
                                                const TransformPlan& plan);

/// P(f)(x) = pi^d c_k^2 / 2^{2 gamma} F^{-1}[omega_k F(f)](x), F^{-1} carrying (2 pi)^{-d}.
double multiplier_P(const SampledFunction& f, std::span<const double> x, const TransformPlan& plan);

/// F_B^alpha(f)(lambda) = int_0^R f(r) j_alpha(lambda r) r^{2 alpha + 1} dr / (2^alpha Gamma(alpha + 1)),
/// alpha = gamma + d/2 - 1, over the support [0, R] of the profile.
double fourier_bessel(const std::function<double(double)>& profile, double lambda, double alpha, double radius,
                      int panels = 16, int nodes_per_panel = 16);

/// One-dimensional transforms tabulated on the weighted frequency grid of a
/// rank-one plan.
struct FrequencySamples {
  std::vector<double> nodes;
  std::vector<double> weights;  // include |y|^{2 gamma}
  std::vector<std::complex<double>> values;
};

/// F(f) at the weighted frequency nodes, computed on the plain spatial grid.
FrequencySamples classical_fourier_samples(const std::function<double(double)>& f, const TransformPlan& plan);
/// F_D(f) at the weighted frequency nodes.
FrequencySamples dunkl_transform_samples(const std::function<double(double)>& f, const TransformPlan& plan);
/// (2 pi)^{-1} int h(y) e^{ixy} |y|^{2 gamma} dy from tabulated h.
std::complex<double> weighted_classical_inverse(const FrequencySamples& h, double x);
/// c_k^2 / 2^{2 gamma + 1} int h(y) K(x, iy) |y|^{2 gamma} dy from tabulated h.
std::complex<double> weighted_dunkl_inverse(const FrequencySamples& h, double x, const TransformPlan& plan);

/// P f for a rank-one plan as a reusable evaluator (F f is tabulated once).
class MultiplierP1d {
 public:
  MultiplierP1d(const std::function<double(double)>& f, const TransformPlan& plan);
  double operator()(double x) const;

 private:
  FrequencySamples spectrum_;
  double prefactor_;
};

}  // namespace dunkl
