#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "dunkl/errors.hpp"

namespace dunkl {

std::string to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::plain: return "plain";
    case WeightKind::gauss_hermite: return "gauss-hermite";
    case WeightKind::gauss_jacobi: return "gauss-jacobi";
    case WeightKind::truncated_trapezoid: return "truncated-trapezoid";
  }
  return "unknown";
}

void QuadratureGrid::append(const QuadratureGrid& other) {
  if (nodes.empty()) {
    *this = other;
    return;
  }
  nodes.insert(nodes.end(), other.nodes.begin(), other.nodes.end());
  weights.insert(weights.end(), other.weights.begin(), other.weights.end());
  lower = std::min(lower, other.lower);
  upper = std::max(upper, other.upper);
}

double declared_weight_mass(const QuadratureGrid& grid) {
  switch (grid.kind) {
    case WeightKind::plain:
    case WeightKind::truncated_trapezoid:
      return grid.upper - grid.lower;
    case WeightKind::gauss_hermite:
      return std::sqrt(std::numbers::pi);
    case WeightKind::gauss_jacobi: {
      const double a = grid.jacobi_a;
      const double b = grid.jacobi_b;
      const double len = grid.upper - grid.lower;
      return std::pow(len, a + b + 1.0) * std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
    }
  }
  return 0.0;
}

QuadratureGrid gauss_from_recurrence(const std::vector<double>& alpha, const std::vector<double>& beta, double mu0) {
  const int n = static_cast<int>(alpha.size());
  if (n < 1 || static_cast<int>(beta.size()) < n) throw InvalidArgument("gauss_from_recurrence: need n alphas and n betas");

  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) diag(i) = alpha[static_cast<std::size_t>(i)];
  for (int i = 1; i < n; ++i) off(i - 1) = std::sqrt(beta[static_cast<std::size_t>(i)]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("tridiagonal eigensolver failed", 1.0);

  // Orthonormal recurrence: sqrt(b_{k+1}) q_{k+1} = (t - a_k) q_k - sqrt(b_k) q_{k-1}.
  auto eval = [&](double t, double& qn, double& dqn, double& christoffel) {
    double q_prev = 0.0;
    double q = 1.0 / std::sqrt(mu0);
    double d_prev = 0.0;
    double d = 0.0;
    christoffel = q * q;
    for (int k = 0; k < n; ++k) {
      const double sb_k = k == 0 ? 0.0 : std::sqrt(beta[static_cast<std::size_t>(k)]);
      const double sb_next = k + 1 < n ? std::sqrt(beta[static_cast<std::size_t>(k + 1)]) : 1.0;
      const double a_k = alpha[static_cast<std::size_t>(k)];
      const double q_next = ((t - a_k) * q - sb_k * q_prev) / sb_next;
      const double d_next = (q + (t - a_k) * d - sb_k * d_prev) / sb_next;
      q_prev = q;
      q = q_next;
      d_prev = d;
      d = d_next;
      if (k + 1 < n) christoffel += q * q;
    }
    qn = q;
    dqn = d;
  };

  QuadratureGrid g;
  g.nodes.resize(static_cast<std::size_t>(n));
  g.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double t = solver.eigenvalues()(i);
    double qn = 0.0;
    double dqn = 0.0;
    double ch = 0.0;
    for (int it = 0; it < 3; ++it) {
      eval(t, qn, dqn, ch);
      if (dqn == 0.0 || !std::isfinite(dqn)) break;
      const double step = qn / dqn;
      t -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(t))) break;
    }
    eval(t, qn, dqn, ch);
    g.nodes[static_cast<std::size_t>(i)] = t;
    g.weights[static_cast<std::size_t>(i)] = 1.0 / ch;
  }
  return g;
}

QuadratureGrid gauss_jacobi(int n, double a, double b, double lower, double upper) {
  if (n < 1) throw InvalidArgument("gauss_jacobi: n must be positive");
  if (!(a > -1.0) || !(b > -1.0)) throw InvalidArgument("gauss_jacobi: exponents must exceed -1");
  if (!(upper > lower)) throw InvalidArgument("gauss_jacobi: empty interval");
  // Standard interval [-1, 1] with weight (1 - s)^a (1 + s)^b.
  std::vector<double> alpha(static_cast<std::size_t>(n));
  std::vector<double> beta(static_cast<std::size_t>(n), 0.0);
  const double ab = a + b;
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    if (k == 0) {
      alpha[0] = (b - a) / (ab + 2.0);
    } else {
      alpha[static_cast<std::size_t>(k)] = (b * b - a * a) / (s * (s + 2.0));
    }
    if (k == 1) {
      beta[1] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else if (k > 1) {
      beta[static_cast<std::size_t>(k)] = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  QuadratureGrid g = gauss_from_recurrence(alpha, beta, mu0);
  const double half = 0.5 * (upper - lower);
  const double scale = std::pow(half, ab + 1.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    g.nodes[i] = lower + (g.nodes[i] + 1.0) * half;
    g.weights[i] *= scale;
  }
  g.lower = lower;
  g.upper = upper;
  g.kind = WeightKind::gauss_jacobi;
  g.jacobi_a = a;
  g.jacobi_b = b;
  return g;
}

QuadratureGrid gauss_legendre(int n, double lower, double upper) {
  QuadratureGrid g = gauss_jacobi(n, 0.0, 0.0, lower, upper);
  g.kind = WeightKind::plain;
  return g;
}

QuadratureGrid gauss_hermite(int n) {
  if (n < 1) throw InvalidArgument("gauss_hermite: n must be positive");
  std::vector<double> alpha(static_cast<std::size_t>(n), 0.0);
  std::vector<double> beta(static_cast<std::size_t>(n), 0.0);
  for (int k = 1; k < n; ++k) beta[static_cast<std::size_t>(k)] = 0.5 * k;
  QuadratureGrid g = gauss_from_recurrence(alpha, beta, std::sqrt(std::numbers::pi));
  g.lower = -std::numeric_limits<double>::infinity();
  g.upper = std::numeric_limits<double>::infinity();
  g.kind = WeightKind::gauss_hermite;
  return g;
}

QuadratureGrid composite_legendre(double lower, double upper, int panels, int nodes_per_panel) {
  if (panels < 1) throw InvalidArgument("composite_legendre: panels must be positive");
  if (!(upper > lower)) throw InvalidArgument("composite_legendre: empty interval");
  const QuadratureGrid ref = gauss_legendre(nodes_per_panel);
  QuadratureGrid g;
  g.nodes.reserve(static_cast<std::size_t>(panels * nodes_per_panel));
  g.weights.reserve(g.nodes.capacity());
  const double h = (upper - lower) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = lower + p * h;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      g.nodes.push_back(a + (ref.nodes[i] + 1.0) * 0.5 * h);
      g.weights.push_back(ref.weights[i] * 0.5 * h);
    }
  }
  g.lower = lower;
  g.upper = upper;
  g.kind = WeightKind::plain;
  return g;
}

QuadratureGrid truncated_trapezoid(double lower, double upper, int points) {
  if (points < 2) throw InvalidArgument("truncated_trapezoid: need at least two points");
  if (!(upper > lower)) throw InvalidArgument("truncated_trapezoid: empty interval");
  QuadratureGrid g;
  const double h = (upper - lower) / (points - 1);
  for (int i = 0; i < points; ++i) {
    g.nodes.push_back(lower + i * h);
    g.weights.push_back((i == 0 || i == points - 1) ? 0.5 * h : h);
  }
  g.lower = lower;
  g.upper = upper;
  g.kind = WeightKind::truncated_trapezoid;
  return g;
}

QuadratureGrid graded_endpoint_rule(double start, double end, double power, int nodes_per_panel,
                                    double first_panel, double max_panel) {
  if (!(end > start)) throw InvalidArgument("graded_endpoint_rule: empty interval");
  if (!(first_panel > 0.0) || !(max_panel >= first_panel)) throw InvalidArgument("graded_endpoint_rule: bad panel sizes");
  const double h0 = std::min(first_panel, end - start);
  // Jacobi weight (upper - t)^0 (t - lower)^power on the first panel.
  QuadratureGrid g = gauss_jacobi(nodes_per_panel, 0.0, power, start, start + h0);
  const QuadratureGrid ref = gauss_legendre(nodes_per_panel);
  double a = start + h0;
  double h = h0;
  while (a < end) {
    h = std::min(2.0 * h, max_panel);
    const double b = std::min(a + h, end);
    const double half = 0.5 * (b - a);
    for (std::size_t i = 0; i < ref.size(); ++i) {
      const double t = a + (ref.nodes[i] + 1.0) * half;
      g.nodes.push_back(t);
      g.weights.push_back(ref.weights[i] * half * std::pow(t - start, power));
    }
    a = b;
  }
  g.lower = start;
  g.upper = end;
  g.kind = WeightKind::gauss_jacobi;
  g.jacobi_a = 0.0;
  g.jacobi_b = power;
  return g;
}

}  // namespace dunkl
