#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dunkl {

enum class WeightKind { plain, gauss_hermite, gauss_jacobi, truncated_trapezoid };

std::string to_string(WeightKind kind);

/// One-dimensional rule. `weights` already absorb the declared weight
/// function, so sum_i weights[i] f(nodes[i]) approximates
/// int_domain f(t) w(t) dt where
///   plain / truncated_trapezoid : w = 1
///   gauss_hermite               : w = exp(-t^2), domain R
///   gauss_jacobi(a, b)          : w = (upper - t)^a (t - lower)^b.
struct QuadratureGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  double lower = 0.0;
  double upper = 0.0;
  WeightKind kind = WeightKind::plain;
  double jacobi_a = 0.0;
  double jacobi_b = 0.0;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0));
    R sum{};
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }

  /// Appends the nodes/weights of another rule; the domain becomes the hull.
  void append(const QuadratureGrid& other);
};

/// Exact value of int_domain w(t) dt for the declared weight.
double declared_weight_mass(const QuadratureGrid& grid);

/// Gauss rule from a three-term recurrence: monic polynomials with
/// p_{k+1} = (t - alpha_k) p_k - beta_k p_{k-1}, mu0 = int w.
/// Golub-Welsch start, Newton polish, Christoffel weights.
QuadratureGrid gauss_from_recurrence(const std::vector<double>& alpha, const std::vector<double>& beta, double mu0);

QuadratureGrid gauss_legendre(int n, double lower = -1.0, double upper = 1.0);
/// Weight (upper - t)^a (t - lower)^b, a, b > -1.
QuadratureGrid gauss_jacobi(int n, double a, double b, double lower = -1.0, double upper = 1.0);
QuadratureGrid gauss_hermite(int n);
QuadratureGrid composite_legendre(double lower, double upper, int panels, int nodes_per_panel);
QuadratureGrid truncated_trapezoid(double lower, double upper, int points);

/// int_start^end f(t) (t - start)^power dt. The first panel absorbs the
/// endpoint factor with Jacobi nodes; later panels grow geometrically up to
/// `max_panel` and carry the factor in their weights.
QuadratureGrid graded_endpoint_rule(double start, double end, double power, int nodes_per_panel,
                                    double first_panel, double max_panel);

}  // namespace dunkl
