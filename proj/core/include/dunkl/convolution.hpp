#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "dunkl/function.hpp"
#include "dunkl/intertwine1d.hpp"
#include "dunkl/report.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {

/// tau_x f(y) = F_D^{-1}[K(ix, .) F_D f](y) with F_D f tabulated once on the
/// weighted frequency grid of a rank-one plan.
class SpectralTranslator {
 public:
  SpectralTranslator(const Function1d& f, const TransformPlan& plan);
  SpectralTranslator(FrequencySamples spectrum, const TransformPlan& plan);
  double operator()(double x, double y) const;

 private:
  FrequencySamples spectrum_;
  double gamma_;
  double constant_;
};

/// tau_x f(y) = int int g(xi + eta) d mu_x(xi) d mu_y(eta) for g = V_k^{-1} f
/// supplied by one of the inversion paths.
class MeasureTranslator {
 public:
  enum class Path { p_tv, tv_q };

  /// Path::tv_q needs an integer gamma.
  MeasureTranslator(const Function1d& f, const TransformPlan& plan, Path path, const Intertwine1dOptions& options = {},
                    int jacobi_nodes = 16);
  double operator()(double x, double y) const;

 private:
  std::function<double(double)> inverse_;
  double gamma_;
  int nodes_;
};

double translate_spectral(const TransformPlan& plan, const Function1d& f, double x, double y);
/// Requires gamma > 0.
double translate_measure(const TransformPlan& plan, const Function1d& f, double x, double y);

/// (f * g)(x) = int tau_x f(-y) g(y) omega(y) dy on the weighted spatial grid.
class Convolver {
 public:
  Convolver(const Function1d& f, const Function1d& g, const TransformPlan& plan);
  double operator()(double x) const;

 private:
  FrequencySamples f_spectrum_;
  std::vector<double> g_weighted_;                        // w_j g(y_j)
  std::vector<std::vector<std::complex<double>>> table_;  // K(-y_j, i t_q) w_q F_D f(t_q)
  double gamma_;
  double constant_;
};

double convolve(const TransformPlan& plan, const Function1d& f, const Function1d& g, double x);

/// g omega_k (function kind) or the point mass at `point`.
struct ConcreteDistribution {
  enum class Kind { weighted_function, point_mass };

  Kind kind = Kind::point_mass;
  std::shared_ptr<const Function1d> g;
  double point = 0.0;

  static ConcreteDistribution weighted(const Function1d& g);
  static ConcreteDistribution dirac(double z);
};

/// (S * phi)(x) = <S_y, tau_x phi(-y)>.
double distribution_convolve(const TransformPlan& plan, const ConcreteDistribution& s, const Function1d& phi, double x);

/// phi(r) = C exp(-1/(1 - r^2)) on [0, 1) with int phi(|x|) omega_k(x) dx = 1 (d = 1).
class BumpProfile {
 public:
  explicit BumpProfile(double gamma);
  double gamma() const { return gamma_; }
  double normalization() const { return c_; }
  double operator()(double r) const;
  /// phi_eps(x) = eps^{-(2 gamma + 1)} phi(|x| / eps), support [-eps, eps].
  Function1d scaled(double eps) const;
  /// F_D(phi_eps)(y) through the Fourier-Bessel transform of the profile.
  double transform_scaled(double eps, double y) const;

 private:
  double gamma_;
  double c_;
};

struct ApproxIdentityOptions {
  std::vector<double> eps = {0.5, 0.2, 0.1, 0.05};
  double min_eps = 0.02;
};

/// <(S * phi_eps) omega - S, psi> for S = g omega over a fixed test set psi,
/// the fitted constant M of |F_D(phi_eps)(y) - 1| <= eps M |y|^2 (fitted on
/// the largest eps, checked on the others), and F_D(phi_eps)(0) = 1.
/// Adds the curve "approx-identity" with columns eps, residual, ratio_M.
VerificationReport approx_identity_check(const TransformPlan& plan, const Function1d& g,
                                         const ApproxIdentityOptions& options = {});

}  // namespace dunkl
