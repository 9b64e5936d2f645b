#include "dunkl/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dunkl/errors.hpp"

namespace dunkl {

using cdouble = std::complex<double>;

namespace {

double rank_one_gamma(const TransformPlan& plan) {
  if (plan.dimension() != 1) throw UnsupportedCase("one-dimensional convolution needs a rank-one plan");
  return plan.axis_gamma(0);
}

// K(x, i t) for real x, t.
cdouble kernel_imag(double gamma, double x, double t) { return std::conj(kernel_1d_oscillatory(gamma, x, t)); }

}  // namespace

SpectralTranslator::SpectralTranslator(const Function1d& f, const TransformPlan& plan)
    : SpectralTranslator(dunkl_transform_samples([f](double x) { return f(x); }, plan), plan) {}

SpectralTranslator::SpectralTranslator(FrequencySamples spectrum, const TransformPlan& plan)
    : spectrum_(std::move(spectrum)), gamma_(rank_one_gamma(plan)), constant_(plan.inverse_constant()) {}

double SpectralTranslator::operator()(double x, double y) const {
  cdouble s = 0.0;
  for (std::size_t q = 0; q < spectrum_.nodes.size(); ++q) {
    const double t = spectrum_.nodes[q];
    s += spectrum_.weights[q] * spectrum_.values[q] * kernel_imag(gamma_, x, t) * kernel_imag(gamma_, y, t);
  }
  return constant_ * s.real();
}

MeasureTranslator::MeasureTranslator(const Function1d& f, const TransformPlan& plan, Path path,
                                     const Intertwine1dOptions& options, int jacobi_nodes)
    : gamma_(rank_one_gamma(plan)), nodes_(jacobi_nodes) {
  if (!(gamma_ > 0.0)) throw InvalidArgument("measure translation needs gamma > 0");
  if (path == Path::p_tv) {
    inverse_ = VkInverseViaP(f, plan, options);
  } else {
    if (!plan.root_system().is_integer_case()) throw UnsupportedCase("the Q path needs an integer gamma");
    inverse_ = VkInverseViaQ(static_cast<int>(std::lround(gamma_)), f, options);
  }
}

double MeasureTranslator::operator()(double x, double y) const {
  return V_k_num(
      gamma_, [&](double xi) { return V_k_num(gamma_, [&](double eta) { return inverse_(xi + eta); }, y, nodes_); }, x,
      nodes_);
}

double translate_spectral(const TransformPlan& plan, const Function1d& f, double x, double y) {
  return SpectralTranslator(f, plan)(x, y);
}

double translate_measure(const TransformPlan& plan, const Function1d& f, double x, double y) {
  return MeasureTranslator(f, plan, MeasureTranslator::Path::p_tv)(x, y);
}

Convolver::Convolver(const Function1d& f, const Function1d& g, const TransformPlan& plan)
    : f_spectrum_(dunkl_transform_samples([f](double x) { return f(x); }, plan)),
      gamma_(rank_one_gamma(plan)),
      constant_(plan.inverse_constant()) {
  if (!g.decay().integrable()) throw InvalidArgument("convolution factors must decay");
  const QuadratureGrid& sy = plan.space_grids().front();
  g_weighted_.reserve(sy.size());
  table_.reserve(sy.size());
  for (std::size_t j = 0; j < sy.size(); ++j) {
    g_weighted_.push_back(sy.weights[j] * g(sy.nodes[j]));
    std::vector<cdouble> row;
    row.reserve(f_spectrum_.nodes.size());
    for (std::size_t q = 0; q < f_spectrum_.nodes.size(); ++q) {
      row.push_back(f_spectrum_.weights[q] * f_spectrum_.values[q] *
                    kernel_imag(gamma_, -sy.nodes[j], f_spectrum_.nodes[q]));
    }
    table_.push_back(std::move(row));
  }
}

double Convolver::operator()(double x) const {
  std::vector<cdouble> kx;
  kx.reserve(f_spectrum_.nodes.size());
  for (double t : f_spectrum_.nodes) kx.push_back(kernel_imag(gamma_, x, t));
  double s = 0.0;
  for (std::size_t j = 0; j < table_.size(); ++j) {
    if (g_weighted_[j] == 0.0) continue;
    cdouble tau = 0.0;
    for (std::size_t q = 0; q < kx.size(); ++q) tau += table_[j][q] * kx[q];
    s += g_weighted_[j] * tau.real();
  }
  return constant_ * s;
}

double convolve(const TransformPlan& plan, const Function1d& f, const Function1d& g, double x) {
  return Convolver(f, g, plan)(x);
}

ConcreteDistribution ConcreteDistribution::weighted(const Function1d& g) {
  if (!g.decay().integrable()) throw InvalidArgument("the function kind needs a schwartz or compact payload");
  ConcreteDistribution s;
  s.kind = Kind::weighted_function;
  s.g = std::make_shared<const Function1d>(g);
  return s;
}

ConcreteDistribution ConcreteDistribution::dirac(double z) {
  ConcreteDistribution s;
  s.kind = Kind::point_mass;
  s.point = z;
  return s;
}

double distribution_convolve(const TransformPlan& plan, const ConcreteDistribution& s, const Function1d& phi, double x) {
  if (s.kind == ConcreteDistribution::Kind::point_mass) return SpectralTranslator(phi, plan)(x, -s.point);
  return Convolver(phi, *s.g, plan)(x);
}

BumpProfile::BumpProfile(double gamma) : gamma_(gamma) {
  if (gamma < 0.0) throw InvalidArgument("negative gamma");
  const QuadratureGrid g = graded_endpoint_rule(0.0, 1.0, 2.0 * gamma, 16, 1.0 / 16.0, 1.0 / 16.0);
  double mass = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) mass += g.weights[i] * std::exp(-1.0 / (1.0 - g.nodes[i] * g.nodes[i]));
  c_ = 1.0 / (2.0 * mass);
}

double BumpProfile::operator()(double r) const {
  if (r < 0.0 || r >= 1.0) return 0.0;
  return c_ * std::exp(-1.0 / (1.0 - r * r));
}

Function1d BumpProfile::scaled(double eps) const {
  if (!(eps > 0.0)) throw InvalidArgument("bump scale must be positive");
  const Function1d b = bump(eps);
  const double scale = c_ * std::pow(eps, -(2.0 * gamma_ + 1.0));
  return Function1d([b, scale](double x) { return scale * b(x); }, DecayClass::compact(eps),
                    [b, scale](const Jet& x) { return b.jet(x.value(), x.order()) * scale; }, "phi_eps");
}

double BumpProfile::transform_scaled(double eps, double y) const {
  const double alpha = gamma_ - 0.5;
  // 2^{g + 1/2} / c_k with c_k = 1 / Gamma(g + 1/2).
  const double factor = std::pow(2.0, gamma_ + 0.5) * std::tgamma(gamma_ + 0.5);
  return factor * fourier_bessel([this](double r) { return (*this)(r); }, eps * std::abs(y), alpha, 1.0);
}

VerificationReport approx_identity_check(const TransformPlan& plan, const Function1d& g,
                                         const ApproxIdentityOptions& options) {
  const double gamma = rank_one_gamma(plan);
  const auto& eps = options.eps;
  if (eps.size() < 2) throw InvalidArgument("approximate identity needs at least two scales");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0 && eps[i] <= 1.0)) throw InvalidArgument("scales must lie in (0, 1]");
    if (i > 0 && !(eps[i] < eps[i - 1])) throw InvalidArgument("scales must decrease");
    if (eps[i] < options.min_eps) {
      throw InvalidArgument("scale " + format_double(eps[i]) + " is below the grid limit " +
                            format_double(options.min_eps));
    }
  }
  VerificationReport report("approx-identity");
  const BumpProfile phi(gamma);
  const FrequencySamples gs = dunkl_transform_samples([g](double x) { return g(x); }, plan);
  const std::vector<Function1d> tests = {hermite_gaussian(0), hermite_gaussian(1), shifted_hermite_gaussian(1, 0.5)};
  std::vector<FrequencySamples> psi;  // F_D(psi)(-t)
  for (const auto& p : tests) psi.push_back(dunkl_transform_samples([p](double x) { return p(-x); }, plan));

  Curve curve{"approx-identity", {"eps", "residual", "ratio_M"}, {}};
  std::vector<double> residuals;
  std::vector<std::vector<double>> deviation;  // |F_D(phi_eps)(t) - 1| per scale
  double fitted_m = 0.0;
  double worst_origin = 0.0;
  for (std::size_t e = 0; e < eps.size(); ++e) {
    std::vector<double> dev;
    std::vector<double> multiplier;
    double m_eps = 0.0;
    for (double t : gs.nodes) {
      const double v = phi.transform_scaled(eps[e], t);
      multiplier.push_back(v - 1.0);
      dev.push_back(std::abs(v - 1.0));
      if (t != 0.0) m_eps = std::max(m_eps, std::abs(v - 1.0) / (eps[e] * t * t));
    }
    worst_origin = std::max(worst_origin, std::abs(phi.transform_scaled(eps[e], 0.0) - 1.0));
    double r = 0.0;
    for (const auto& ps : psi) {
      cdouble s = 0.0;
      for (std::size_t q = 0; q < gs.nodes.size(); ++q) s += gs.weights[q] * gs.values[q] * multiplier[q] * ps.values[q];
      r = std::max(r, std::abs(plan.inverse_constant() * s));
    }
    residuals.push_back(r);
    deviation.push_back(std::move(dev));
    if (e == 0) fitted_m = m_eps;
    curve.rows.push_back({eps[e], r, m_eps});
  }
  double violation = 0.0;
  for (std::size_t e = 0; e < eps.size(); ++e) {
    for (std::size_t q = 0; q < gs.nodes.size(); ++q) {
      const double t = gs.nodes[q];
      violation = std::max(violation, deviation[e][q] - eps[e] * fitted_m * t * t);
    }
  }
  report.add_check("approx.normalization", "F_D(phi_eps)(0) = 1 for a unit-mass profile", worst_origin, 1e-10);
  report.add_check("approx.decrease", "residual(eps_min) / residual(eps_max) <= 1/5", residuals.back() / residuals.front(),
                   0.2);
  report.add_check("approx.quadratic_bound", "|F_D(phi_eps)(y) - 1| <= eps M |y|^2, M fitted at the largest eps",
                   std::max(violation, 0.0), 1e-12);
  report.add_check("approx.fitted_m_finite", "fitted M is finite", std::isfinite(fitted_m) ? 0.0 : INFINITY, 0.0);
  report.set_env("fitted_M", fitted_m);
  report.add_curve(std::move(curve));

  // Fourier-Bessel route against direct quadrature of the scaled bump.
  double fb = 0.0;
  for (double e : {eps.front(), eps.back()}) {
    GridOptions local = plan.options();
    local.space_radius = e;
    const TransformPlan small(plan.root_system(), local);
    const Function1d pe = phi.scaled(e);
    for (double y : {0.0, 1.0, 3.5, 7.0}) {
      const std::vector<double> yy{y};
      const cdouble direct = dunkl_transform(pe.as_sampled(), yy, small);
      const double viafb = phi.transform_scaled(e, y);
      fb = std::max(fb, std::abs(direct - viafb) / std::max(std::abs(viafb), 1e-300));
    }
  }
  report.add_check("approx.fourier_bessel", "F_D(phi_eps)(y) = 2^{g+1/2}/c_k F_B(phi)(eps|y|)", fb, 1e-6);
  return report;
}

}  // namespace dunkl
