#include "dunkl/intertwine1d.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "dunkl/errors.hpp"
#include "dunkl/polyexact.hpp"

namespace dunkl {

double mu_constant(double gamma) {
  if (!(gamma > 0.0)) throw InvalidArgument("mu density needs gamma > 0");
  return std::exp(std::lgamma(gamma + 0.5) - std::lgamma(gamma)) / std::sqrt(std::numbers::pi);
}

double mu_density(double gamma, double x, double y) {
  if (x == 0.0) throw InvalidArgument("mu_0 is the point mass at the origin; no density");
  const double a = std::abs(x);
  if (!(std::abs(y) < a)) return 0.0;
  const double s = x > 0.0 ? y : -y;
  return mu_constant(gamma) * std::pow(a, -2.0 * gamma) * std::pow(a - s, gamma - 1.0) * std::pow(a + s, gamma);
}

namespace {

// Rule for mu on [-1, 1], weights scaled by mu_constant. With m > 1 panels
// the end panels carry the endpoint factors with Jacobi nodes and the
// interior panels carry the whole density in their weights.
const QuadratureGrid& mu_rule(double gamma, int nodes, int panels) {
  static std::mutex mutex;
  static std::map<std::tuple<double, int, int>, QuadratureGrid> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_tuple(gamma, nodes, panels);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  QuadratureGrid g;
  if (panels == 1) {
    g = gauss_jacobi(nodes, gamma - 1.0, gamma);
  } else {
    const double h = 2.0 / panels;
    g = gauss_jacobi(nodes, 0.0, gamma, -1.0, -1.0 + h);
    for (std::size_t i = 0; i < g.size(); ++i) g.weights[i] *= std::pow(1.0 - g.nodes[i], gamma - 1.0);
    const QuadratureGrid ref = gauss_legendre(std::min(nodes, 20));
    for (int k = 1; k + 1 < panels; ++k) {
      const double a = -1.0 + k * h;
      for (std::size_t i = 0; i < ref.size(); ++i) {
        const double s = a + (ref.nodes[i] + 1.0) * 0.5 * h;
        g.nodes.push_back(s);
        g.weights.push_back(ref.weights[i] * 0.5 * h * std::pow(1.0 - s, gamma - 1.0) * std::pow(1.0 + s, gamma));
      }
    }
    const QuadratureGrid last = gauss_jacobi(nodes, gamma - 1.0, 0.0, 1.0 - h, 1.0);
    for (std::size_t i = 0; i < last.size(); ++i) {
      g.nodes.push_back(last.nodes[i]);
      g.weights.push_back(last.weights[i] * std::pow(1.0 + last.nodes[i], gamma));
    }
  }
  const double c = mu_constant(gamma);
  for (auto& w : g.weights) w *= c;
  return cache.emplace(key, std::move(g)).first->second;
}

// Panels of physical width about 2 keep Gaussian-scale integrands resolved.
int mu_panels(double x) { return std::max(1, static_cast<int>(std::ceil(std::abs(x) - 1e-12))); }

}  // namespace

double V_k_num(double gamma, const std::function<double(double)>& f, double x, int nodes) {
  if (gamma < 0.0) throw InvalidArgument("negative gamma");
  if (gamma == 0.0 || x == 0.0) return f(x);
  const QuadratureGrid& g = mu_rule(gamma, nodes, mu_panels(x));
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) s += g.weights[i] * f(x * g.nodes[i]);
  return s;
}

double tV_k_num(double gamma, const Function1d& f, double y, const Intertwine1dOptions& options) {
  if (gamma < 0.0) throw InvalidArgument("negative gamma");
  if (gamma == 0.0) return f(y);
  if (!f.decay().integrable()) throw InvalidArgument("tV_k needs a decaying input");
  const double r = f.decay().radius;
  const double c = mu_constant(gamma);
  const int n = options.panel_nodes;
  if (y == 0.0) {
    const QuadratureGrid g = graded_endpoint_rule(0.0, r, 2.0 * gamma - 1.0, n, options.first_panel, options.max_panel);
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) s += g.weights[i] * (f(g.nodes[i]) + f(-g.nodes[i]));
    return c * s;
  }
  const double a = std::abs(y);
  const double sign = y > 0.0 ? 1.0 : -1.0;
  double end = r;
  if (a >= r) {
    if (f.decay().kind == DecayKind::compact) return 0.0;
    end = a + options.max_panel;
  }
  const double h0 = std::min(options.first_panel, a);
  // tV f(-a) = tV(f(-.))(a).
  const QuadratureGrid g1 = graded_endpoint_rule(a, end, gamma - 1.0, n, h0, options.max_panel);
  const QuadratureGrid g2 = graded_endpoint_rule(a, end, gamma, n, h0, options.max_panel);
  double s = 0.0;
  for (std::size_t i = 0; i < g1.size(); ++i) {
    const double u = g1.nodes[i];
    s += g1.weights[i] * f(sign * u) * std::pow(u + a, gamma);
  }
  for (std::size_t i = 0; i < g2.size(); ++i) {
    const double u = g2.nodes[i];
    s += g2.weights[i] * f(-sign * u) * std::pow(u + a, gamma - 1.0);
  }
  return c * s;
}

double dunkl_power_num(double gamma, const Function1d& f, int m, double x) {
  if (m < 0) throw InvalidArgument("negative operator power");
  if (m == 0) return f(x);
  const bool at_origin = std::abs(x) < 0.25;
  const double c = at_origin ? 0.0 : x;
  const int order = at_origin ? std::min(m + 16, Jet::kMaxOrder) : m;
  if (order - m < 0) throw RangeError("operator power too high for the jet order");
  const Jet plus = f.jet(c, order);
  const Jet minus = f.jet(-c, order).reflect();
  Jet even = (plus + minus) * 0.5;
  Jet odd = (plus - minus) * 0.5;
  for (int i = 0; i < m; ++i) {
    // T even = even' (odd); T odd = odd' + 2 g odd / x (even).
    Jet next_odd = even.differentiate();
    Jet next_even = odd.differentiate();
    if (gamma != 0.0) {
      if (at_origin) {
        // odd(h) / h: drop the vanishing constant term.
        Jet q(0.0, odd.order() - 1);
        for (int k = 0; k < odd.order(); ++k) q[k] = odd[k + 1];
        next_even += 2.0 * gamma * q;
      } else {
        next_even += 2.0 * gamma * (odd / Jet::variable(c, odd.order()));
      }
    }
    even = next_even;
    odd = next_odd;
  }
  const double h = x - c;
  return even.evaluate(h) + odd.evaluate(h);
}

namespace {

double exact_prefactor(int gamma) {
  if (gamma < 1) throw UnsupportedCase("the differential forms of P and Q need a positive integer gamma");
  return operator_constants(RootSystem::rank_one(Rational(gamma))).value();
}

}  // namespace

Function1d apply_P_differential(int gamma, const Function1d& f) {
  const double pref = exact_prefactor(gamma) * (gamma % 2 == 0 ? 1.0 : -1.0);
  const int m = 2 * gamma;
  auto value = [f, pref, m](double x) { return pref * f.jet(x, m).derivative(m); };
  auto jet = [f, pref, m](const Jet& x) {
    Jet j = f.jet(x.value(), x.order() + m);
    for (int i = 0; i < m; ++i) j = j.differentiate();
    return j * pref;
  };
  return Function1d(value, f.decay(), jet, "P f");
}

Function1d apply_Q_differential(int gamma, const Function1d& f) {
  const double pref = exact_prefactor(gamma) * (gamma % 2 == 0 ? 1.0 : -1.0);
  const double g = gamma;
  const int m = 2 * gamma;
  return Function1d([f, pref, g, m](double x) { return pref * dunkl_power_num(g, f, m, x); }, f.decay(), {}, "Q f");
}

namespace {

double plan_gamma(const TransformPlan& plan) {
  if (plan.dimension() != 1) throw UnsupportedCase("one-dimensional inversion needs a rank-one plan");
  return plan.axis_gamma(0);
}

void require_schwartz(const Function1d& f) {
  if (!f.decay().integrable()) throw InvalidArgument("inversion input must be schwartz or compactly supported");
}

DecayClass image_decay(const TransformPlan& plan) { return DecayClass::schwartz(plan.options().space_radius); }

}  // namespace

VkInverseViaP::VkInverseViaP(const Function1d& f, const TransformPlan& plan, const Intertwine1dOptions& options)
    : p_((require_schwartz(f), [g = plan_gamma(plan), f, options](double y) { return tV_k_num(g, f, y, options); }), plan),
      decay_(image_decay(plan)) {}

Function1d VkInverseViaP::as_function() const {
  auto self = *this;
  return Function1d([self](double x) { return self(x); }, decay_, {}, "V^-1 f (P tV)");
}

TvkInverseViaVkP::TvkInverseViaVkP(const Function1d& f, const TransformPlan& plan, const Intertwine1dOptions& options)
    : gamma_(plan_gamma(plan)), nodes_(options.jacobi_nodes), decay_(image_decay(plan)) {
  require_schwartz(f);
  if (plan.root_system().is_integer_case() && f.has_jet()) {
    p_ = apply_P_differential(static_cast<int>(std::lround(gamma_)), f);
    differential_ = true;
  } else {
    p_ = MultiplierP1d([f](double x) { return f(x); }, plan);
  }
}

double TvkInverseViaVkP::operator()(double x) const {
  return V_k_num(gamma_, [this](double t) { return p_(t); }, x, nodes_);
}

Function1d TvkInverseViaVkP::as_function() const {
  auto self = *this;
  return Function1d([self](double x) { return self(x); }, decay_, {}, "tV^-1 f (V P)");
}

VkInverseViaQ::VkInverseViaQ(int gamma, const Function1d& f, const Intertwine1dOptions& options)
    : gamma_(gamma), qf_((require_schwartz(f), apply_Q_differential(gamma, f))), options_(options) {}

double VkInverseViaQ::operator()(double x) const { return tV_k_num(gamma_, qf_, x, options_); }

Function1d VkInverseViaQ::as_function() const {
  auto self = *this;
  return Function1d([self](double x) { return self(x); }, qf_.decay(), {}, "V^-1 f (tV Q)");
}

double inv_V_via_P(const TransformPlan& plan, const Function1d& f, double x) { return VkInverseViaP(f, plan)(x); }

double inv_tV_via_VkP(const TransformPlan& plan, const Function1d& f, double x) {
  return TvkInverseViaVkP(f, plan)(x);
}

double inv_V_via_Q(int gamma, const Function1d& f, double x) { return VkInverseViaQ(gamma, f)(x); }

double eta_pairing(int gamma, double x, const Function1d& f, const Intertwine1dOptions& options) {
  require_schwartz(f);
  const Function1d qf = apply_Q_differential(gamma, f);
  const double g = gamma;
  const double a = std::abs(x);
  const double r = f.decay().radius;
  if (a >= r) return 0.0;
  const int n = options.panel_nodes;
  const double h0 = a > 0.0 ? std::min(options.first_panel, a) : options.first_panel;
  double s = 0.0;
  for (double side : {1.0, -1.0}) {
    // t = side * u, u >= a. The factor vanishing at u = a is (u - a)^p.
    double p = 2.0 * g - 1.0;
    if (a > 0.0) p = (side * x > 0.0) ? g - 1.0 : g;
    const QuadratureGrid rule = graded_endpoint_rule(a, r, p, n, h0, options.max_panel);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double u = rule.nodes[i];
      const double t = side * u;
      const double density = mu_density(g, t, x) * std::pow(u, 2.0 * g) / std::pow(u - a, p);
      s += rule.weights[i] * density * qf(t);
    }
  }
  return s;
}

double z_pairing(const TransformPlan& plan, double x, const Function1d& f, const Intertwine1dOptions& options) {
  require_schwartz(f);
  const double g = plan_gamma(plan);
  std::function<double(double)> pf;
  if (plan.root_system().is_integer_case()) {
    pf = apply_P_differential(static_cast<int>(std::lround(g)), f);
  } else {
    pf = MultiplierP1d([f](double t) { return f(t); }, plan);
  }
  if (x == 0.0 || g == 0.0) return pf(x);
  const double a = std::abs(x);
  // Weight (a - sgn(x) y)^{g-1} (a + sgn(x) y)^g on (-a, a).
  const QuadratureGrid rule = x > 0.0 ? gauss_jacobi(options.jacobi_nodes, g - 1.0, g, -a, a)
                                      : gauss_jacobi(options.jacobi_nodes, g, g - 1.0, -a, a);
  const double scale = mu_constant(g) * std::pow(a, -2.0 * g);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * pf(rule.nodes[i]);
  return scale * s;
}

}  // namespace dunkl
