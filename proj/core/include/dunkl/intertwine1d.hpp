#pragma once

#include <functional>

#include "dunkl/function.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {

struct Intertwine1dOptions {
  int jacobi_nodes = 40;
  int panel_nodes = 16;
  double first_panel = 0.25;
  double max_panel = 0.5;
};

/// Gamma(g + 1/2) / (sqrt(pi) Gamma(g)).
double mu_constant(double gamma);

/// Density of mu_x on (-|x|, |x|):
/// c |x|^{-2g} (|x| - sgn(x) y)^{g-1} (|x| + sgn(x) y)^g, zero outside.
/// Throws InvalidArgument for x = 0 (mu_0 is the point mass at 0) or g <= 0.
double mu_density(double gamma, double x, double y);

/// V_k f(x) = int f d mu_x by Gauss-Jacobi quadrature (exponents g-1, g).
/// V_k f(0) = f(0); g = 0 gives f(x).
double V_k_num(double gamma, const std::function<double(double)>& f, double x, int nodes = 40);

/// tV_k f(y) = int_{|x| >= |y|} f(x) K(x, y) omega(x) dx with the mu density
/// K; graded panels anchored at the singular endpoint |y|.
double tV_k_num(double gamma, const Function1d& f, double y, const Intertwine1dOptions& options = {});

/// T^m f(x) in one dimension from Taylor jets of the even and odd parts.
double dunkl_power_num(double gamma, const Function1d& f, int m, double x);

/// Integer gamma: pi c_k^2 / 2^{2g} (-1)^g d^{2g} f / dx^{2g}, with jets, so
/// the support of f is preserved.
Function1d apply_P_differential(int gamma, const Function1d& f);
/// Integer gamma: pi c_k^2 / 2^{2g} (-1)^g T^{2g} f (values only).
Function1d apply_Q_differential(int gamma, const Function1d& f);

/// V_k^{-1} f = P tV_k f: tV_k f is tabulated on the plain spatial grid of
/// the plan and P applied as a Fourier multiplier.
class VkInverseViaP {
 public:
  VkInverseViaP(const Function1d& f, const TransformPlan& plan, const Intertwine1dOptions& options = {});
  double operator()(double x) const { return p_(x); }
  Function1d as_function() const;

 private:
  MultiplierP1d p_;
  DecayClass decay_;
};

/// tV_k^{-1} f = V_k P f. P is the differential operator when gamma is an
/// integer and f carries jets, the Fourier multiplier otherwise.
class TvkInverseViaVkP {
 public:
  TvkInverseViaVkP(const Function1d& f, const TransformPlan& plan, const Intertwine1dOptions& options = {});
  double operator()(double x) const;
  Function1d as_function() const;
  bool differential() const { return differential_; }

 private:
  std::function<double(double)> p_;
  bool differential_ = false;
  double gamma_;
  int nodes_;
  DecayClass decay_;
};

/// V_k^{-1} f = tV_k Q f; integer gamma only.
class VkInverseViaQ {
 public:
  VkInverseViaQ(int gamma, const Function1d& f, const Intertwine1dOptions& options = {});
  double operator()(double x) const;
  Function1d as_function() const;

 private:
  int gamma_;
  Function1d qf_;
  Intertwine1dOptions options_;
};

double inv_V_via_P(const TransformPlan& plan, const Function1d& f, double x);
double inv_tV_via_VkP(const TransformPlan& plan, const Function1d& f, double x);
double inv_V_via_Q(int gamma, const Function1d& f, double x);

/// <eta_x, f> = int_{|t| >= |x|} Q f(t) K(t, x) omega(t) dt with the mu
/// density K evaluated at base point t; integer gamma.
double eta_pairing(int gamma, double x, const Function1d& f, const Intertwine1dOptions& options = {});

/// <Z_x, f> = int P f d mu_x, integrated against mu_density. P is the
/// differential form for integer gamma and the multiplier otherwise.
double z_pairing(const TransformPlan& plan, double x, const Function1d& f, const Intertwine1dOptions& options = {});

}  // namespace dunkl
