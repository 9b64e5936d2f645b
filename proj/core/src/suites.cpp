#include "dunkl/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "dunkl/convolution.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/intertwine1d.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/polyexact.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {

namespace {

constexpr int kMaxDegree = 8;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using Rng = std::mt19937_64;

// max |a - b| / max |b|.
struct RelErr {
  double err = 0.0;
  double scale = 0.0;

  void add(double a, double b) {
    err = std::max(err, std::abs(a - b));
    scale = std::max(scale, std::abs(b));
  }
  void add(cdouble a, cdouble b) {
    err = std::max(err, std::abs(a - b));
    scale = std::max(scale, std::abs(b));
  }
  double value() const { return scale > 0.0 ? err / scale : err; }
};

// Numeric failures become a NaN residual so the check fails in the report.
void record(VerificationReport& rep, const std::string& id, const std::string& anchor, double tol,
            const std::function<double()>& compute) {
  double r = kNaN;
  try {
    r = compute();
  } catch (const NumericError& e) {
    rep.set_env("error." + id, e.what());
  } catch (const RangeError& e) {
    rep.set_env("error." + id, e.what());
  }
  rep.add_check(id, anchor, r, tol);
}

double max_abs_coefficient(const RationalPoly& p) {
  double m = 0.0;
  for (const auto& [nu, c] : p.terms()) m = std::max(m, std::abs(c.get_d()));
  return m;
}

std::vector<double> uniform_point(Rng& rng, int d, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  std::vector<double> x(static_cast<std::size_t>(d));
  for (auto& v : x) v = u(rng);
  return x;
}

void require_product(const RootSystem& rs, const std::string& suite) {
  if (!rs.is_product()) throw UnsupportedCase("suite " + suite + " needs a product root system");
}

void require_rank_one(const RootSystem& rs, const std::string& suite) {
  if (rs.dimension() != 1) throw UnsupportedCase("suite " + suite + " needs a rank-one root system");
}

std::vector<double> axis_gammas(const RootSystem& rs) {
  std::vector<double> g;
  for (int j = 0; j < rs.dimension(); ++j) g.push_back(rs.axis_multiplicity(j).get_d());
  return g;
}

// Integer gamma of a rank-one system, or 0 when gamma is not a positive integer.
int integer_gamma(const RootSystem& rs) {
  if (!rs.is_integer_case()) return 0;
  return static_cast<int>(rs.gamma().get_num().get_si());
}

std::vector<double> line_points(double a, double b, double step) {
  std::vector<double> xs;
  for (double x = a; x <= b + 1e-9; x += step) xs.push_back(x);
  return xs;
}

VerificationReport suite_transmutation(const SuiteConfig& cfg) {
  const RootSystem& rs = cfg.root_system;
  VerificationReport rep("transmutation");
  const Intertwiner v(rs, kMaxDegree);
  const DunklOperators ops(rs);
  double residual = 0.0;
  std::size_t identities = 0;
  for (int n = 0; n <= kMaxDegree; ++n) {
    for (const auto& nu : monomials_of_degree(rs.dimension(), n)) {
      const RationalPoly p = RationalPoly::monomial(nu);
      const RationalPoly vp = v.apply(p);
      for (int j = 0; j < rs.dimension(); ++j) {
        residual = std::max(residual, max_abs_coefficient(ops.apply(j, vp) - v.apply(p.derivative(j))));
        ++identities;
      }
    }
  }
  rep.add_check("transmutation.identity", "T_j V_k p = V_k d_j p on monomials of degree <= 8", residual, 0.0);
  rep.set_env("identities", identities);
  return rep;
}

VerificationReport suite_normalization(const SuiteConfig& cfg) {
  const RootSystem& rs = cfg.root_system;
  VerificationReport rep("normalization");
  const RationalPoly one = RationalPoly::constant(rs.dimension(), 1);
  rep.add_check("normalization.unit", "V_k(1) = 1", max_abs_coefficient(intertwine(rs, one) - one), 0.0);
  if (!rs.is_product()) {
    rep.set_env("mu_mass", "explicit density known for product systems only");
    return rep;
  }
  record(rep, "normalization.mu_mass", "mu_x is a probability measure", 1e-10, [&] {
    double r = 0.0;
    for (double g : axis_gammas(rs)) {
      if (g == 0.0) continue;
      for (double x : {0.25, 1.0, 3.0, -1.0, -2.5}) {
        const double ax = std::abs(x);
        const QuadratureGrid q = gauss_jacobi(40, g - 1.0, g, -ax, ax);
        double w = 0.0;
        for (double wi : q.weights) w += wi;
        r = std::max(r, std::abs(mu_constant(g) * std::pow(ax, -2.0 * g) * w - 1.0));
        r = std::max(r, std::abs(V_k_num(g, [](double) { return 1.0; }, x) - 1.0));
      }
    }
    return r;
  });
  return rep;
}

VerificationReport suite_intertwine(const SuiteConfig& cfg, Rng& rng) {
  const RootSystem& rs = cfg.root_system;
  require_product(rs, "intertwine");
  VerificationReport rep("intertwine");
  const int d = rs.dimension();
  const auto gammas = axis_gammas(rs);
  const Intertwiner v(rs, kMaxDegree);
  std::vector<std::vector<double>> points;
  for (int i = 0; i < 8; ++i) points.push_back(uniform_point(rng, d, 2.0));
  record(rep, "intertwine.monomials", "numeric V_k over the mu_x density = exact V_k, degree <= 8", 1e-10, [&] {
    double r = 0.0;
    for (int n = 0; n <= kMaxDegree; ++n) {
      for (const auto& nu : monomials_of_degree(d, n)) {
        const RationalPoly vp = v.apply(RationalPoly::monomial(nu));
        RelErr e;
        for (const auto& x : points) {
          double num = 1.0;
          for (int j = 0; j < d; ++j) {
            const int p = nu[static_cast<std::size_t>(j)];
            const auto mono = [p](double t) { return std::pow(t, p); };
            num *= V_k_num(gammas[static_cast<std::size_t>(j)], mono, x[static_cast<std::size_t>(j)]);
          }
          e.add(num, vp.evaluate(std::span<const double>(x)));
        }
        r = std::max(r, e.value());
      }
    }
    return r;
  });
  // Anchor at gamma = 1: V_k(y^2)(x) = x^2 / 3.
  const RootSystem one = RootSystem::rank_one(1);
  const RationalPoly y2 = RationalPoly::monomial({2});
  rep.add_check("intertwine.anchor_exact", "V_k(y^2)(x) = x^2/3 at gamma = 1",
                max_abs_coefficient(intertwine(one, y2) - RationalPoly::monomial({2}, Rational(1, 3))), 0.0);
  record(rep, "intertwine.anchor_numeric", "V_k(y^2)(x) = x^2/3 at gamma = 1", 1e-10, [&] {
    RelErr e;
    for (double x : {-1.5, 0.4, 1.7}) e.add(V_k_num(1.0, [](double t) { return t * t; }, x), x * x / 3.0);
    return e.value();
  });
  return rep;
}

VerificationReport suite_kernel(const SuiteConfig& cfg, Rng& rng) {
  const RootSystem& rs = cfg.root_system;
  VerificationReport rep("kernel");
  const int d = rs.dimension();
  const DunklKernel k(rs);
  const std::vector<cdouble> zero(static_cast<std::size_t>(d), 0.0);
  record(rep, "kernel.origin", "K(x, 0) = 1", 0.0, [&] {
    double r = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto x = uniform_point(rng, d, 5.0);
      r = std::max(r, std::abs(k(x, zero) - 1.0));
    }
    return r;
  });
  const double box = rs.is_product() ? 10.0 : 2.0;
  record(rep, "kernel.bound", "|K(ix, y)| <= 1 on 1000 samples", 1e-12, [&] {
    double r = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto x = uniform_point(rng, d, box);
      const auto y = uniform_point(rng, d, box);
      std::vector<cdouble> iy(y.size());
      for (std::size_t j = 0; j < y.size(); ++j) iy[j] = cdouble(0.0, y[j]);
      r = std::max(r, std::abs(k(x, iy)) - 1.0);
    }
    return std::max(r, 0.0);
  });
  if (rs.is_product()) {
    const KernelSeries series(rs, KernelConfig{60, 1e-12});
    record(rep, "kernel.series", "closed form = intertwined exponential series", 1e-10, [&] {
      double r = 0.0;
      for (int i = 0; i < 50; ++i) {
        const auto x = uniform_point(rng, d, 2.0);
        const auto a = uniform_point(rng, d, 1.5);
        const auto b = uniform_point(rng, d, 1.5);
        std::vector<cdouble> z(a.size());
        for (std::size_t j = 0; j < z.size(); ++j) z[j] = cdouble(a[j], b[j]);
        const cdouble ref = series(x, z);
        r = std::max(r, std::abs(k(x, z) - ref) / std::max(1.0, std::abs(ref)));
      }
      return r;
    });
    const auto gammas = axis_gammas(rs);
    record(rep, "kernel.laplace", "K(x, y) = int e^{<t, y>} d mu_x(t)", 1e-10, [&] {
      double r = 0.0;
      for (int i = 0; i < 50; ++i) {
        const auto x = uniform_point(rng, d, 2.0);
        const auto y = uniform_point(rng, d, 2.0);
        double lap = 1.0;
        std::vector<cdouble> z(y.begin(), y.end());
        for (int j = 0; j < d; ++j) {
          const double yj = y[static_cast<std::size_t>(j)];
          lap *= V_k_num(gammas[static_cast<std::size_t>(j)], [yj](double t) { return std::exp(t * yj); },
                         x[static_cast<std::size_t>(j)]);
        }
        const double ref = k(x, z).real();
        r = std::max(r, std::abs(lap - ref) / std::abs(ref));
      }
      return r;
    });
  } else {
    rep.set_env("kernel.series", "closed form available for product systems only");
  }
  Curve curve{"kernel-curve", {"x", "re", "im"}, {}};
  std::vector<cdouble> e1(static_cast<std::size_t>(d), 0.0);
  e1[0] = cdouble(0.0, 1.0);
  for (int i = 0; i <= 200; ++i) {
    const double x = -5.0 + 0.05 * i;
    std::vector<double> xv(static_cast<std::size_t>(d), 0.0);
    xv[0] = x;
    // K(ix, y) = K(x, iy) with y = e_1.
    const cdouble v = k(xv, e1);
    curve.rows.push_back({x, v.real(), v.imag()});
  }
  rep.add_curve(std::move(curve));
  return rep;
}

// Round trip and factorization on one rank-one axis.
void transform_axis_checks(VerificationReport& rep, const Rational& g, int grid_n, const std::string& suffix) {
  const TransformPlan plan(RootSystem::rank_one(g), GridOptions::from_grid_n(grid_n));
  record(rep, "transform.round_trip" + suffix, "F_D^{-1} F_D = id on x^n e^{-x^2/2}, n <= 4", 1e-6, [&] {
    double r = 0.0;
    for (int n = 0; n <= 4; ++n) {
      const Function1d f = hermite_gaussian(n);
      const FrequencySamples s = dunkl_transform_samples([&](double x) { return f(x); }, plan);
      for (double x : line_points(-4.0, 4.0, 0.25)) {
        r = std::max(r, std::abs(weighted_dunkl_inverse(s, x, plan) - f(x)));
      }
    }
    return r;
  });
  record(rep, "transform.factorization" + suffix, "F_D = F o tV_k", 1e-6, [&] {
    double r = 0.0;
    std::vector<std::vector<double>> ys;
    for (double y : line_points(-6.0, 6.0, 0.75)) ys.push_back({y});
    for (int n = 0; n <= 4; ++n) {
      const Function1d f = hermite_gaussian(n);
      const Function1d tvf([&](double y) { return tV_k_num(g.get_d(), f, y); }, f.decay());
      const auto a = dunkl_transform(f.as_sampled(), ys, plan);
      const auto b = classical_fourier(tvf.as_sampled(), ys, plan);
      RelErr e;
      for (std::size_t i = 0; i < ys.size(); ++i) e.add(b[i], a[i]);
      r = std::max(r, e.value());
    }
    return r;
  });
}

VerificationReport suite_transform(const SuiteConfig& cfg) {
  const RootSystem& rs = cfg.root_system;
  require_product(rs, "transform");
  VerificationReport rep("transform");
  const int d = rs.dimension();
  const TransformPlan plan(rs, GridOptions::from_grid_n(cfg.grid_n));
  record(rep, "transform.eigenfunction", "F_D(e^{-|x|^2/2}) = 2^{gamma + d/2} / c_k e^{-|y|^2/2}", 1e-8, [&] {
    const SampledFunction f(
        d,
        [](std::span<const double> x) {
          double s = 0.0;
          for (double v : x) s += v * v;
          return cdouble(std::exp(-0.5 * s));
        },
        DecayClass::schwartz(kGaussianRadius));
    std::vector<std::vector<double>> ys;
    if (d == 1) {
      ys = {{0.0}, {0.3}, {1.1}, {2.5}, {4.0}};
    } else {
      for (const auto& base : std::vector<std::vector<double>>{{0.0, 0.0}, {0.3, -1.1}, {2.5, 0.4}, {-1.0, 3.0}}) {
        std::vector<double> y(static_cast<std::size_t>(d), 0.0);
        y[0] = base[0];
        y[1] = base[1];
        ys.push_back(y);
      }
    }
    const double lambda = std::pow(2.0, rs.gamma().get_d() + 0.5 * d) / plan.mehta();
    const auto v = dunkl_transform(f, ys, plan);
    double r = 0.0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      double s = 0.0;
      for (double c : ys[i]) s += c * c;
      const double ref = lambda * std::exp(-0.5 * s);
      r = std::max(r, std::abs(v[i] - ref) / ref);
    }
    return r;
  });
  std::vector<Rational> seen;
  for (int j = 0; j < d; ++j) {
    const Rational g = rs.axis_multiplicity(j);
    if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
    seen.push_back(g);
    transform_axis_checks(rep, g, cfg.grid_n, d == 1 ? "" : ".k=" + to_string(g));
  }
  return rep;
}

VerificationReport suite_inversion(const SuiteConfig& cfg) {
  const RootSystem& rs = cfg.root_system;
  require_rank_one(rs, "inversion");
  VerificationReport rep("inversion");
  const TransformPlan plan(rs, GridOptions::from_grid_n(cfg.grid_n));
  const double g = rs.gamma().get_d();
  const int gi = integer_gamma(rs);
  const auto xs = line_points(-4.0, 4.0, 0.5);
  const std::vector<double> coarse = {-3.0, -1.2, 0.0, 0.7, 2.1};
  RelErr p_vs_q, p_vs_spec, tv_vs_spec, rt_p, rt_q, rt_tv;
  for (int n = 0; n <= 4; ++n) {
    const Function1d f = hermite_gaussian(n);
    const VkInverseViaP vp(f, plan);
    const TvkInverseViaVkP tp(f, plan);
    const FrequencySamples dft = dunkl_transform_samples([&](double x) { return f(x); }, plan);
    const FrequencySamples cft = classical_fourier_samples([&](double x) { return f(x); }, plan);
    for (double x : xs) {
      p_vs_spec.add(vp(x), plan.p_prefactor() * weighted_classical_inverse(dft, x).real());
      tv_vs_spec.add(tp(x), weighted_dunkl_inverse(cft, x, plan).real());
      rt_p.add(V_k_num(g, [&](double t) { return vp(t); }, x), f(x));
    }
    const Function1d tp_f = tp.as_function();
    for (double y : coarse) rt_tv.add(tV_k_num(g, tp_f, y), f(y));
    if (gi > 0) {
      const VkInverseViaQ vq(gi, f);
      for (double x : xs) p_vs_q.add(vq(x), vp(x));
      for (double x : coarse) rt_q.add(V_k_num(g, [&](double t) { return vq(t); }, x, 24), f(x));
    }
  }
  rep.add_check("inversion.v_inverse.p_vs_spectral", "P tV_k f = V_k^{-1} f against the spectral multiplier",
                p_vs_spec.value(), 1e-5);
  rep.add_check("inversion.tv_inverse.vp_vs_spectral", "V_k P f = tV_k^{-1} f against F_D^{-1} F f",
                tv_vs_spec.value(), 1e-5);
  rep.add_check("inversion.round_trip.p_tv", "V_k (P tV_k f) = f", rt_p.value(), 1e-5);
  rep.add_check("inversion.round_trip.v_p", "tV_k (V_k P f) = f", rt_tv.value(), 1e-5);
  if (gi > 0) {
    rep.add_check("inversion.v_inverse.p_vs_q", "P tV_k f = tV_k Q f", p_vs_q.value(), 1e-5);
    rep.add_check("inversion.round_trip.tv_q", "V_k (tV_k Q f) = f", rt_q.value(), 1e-5);
  } else {
    rep.set_env("q_path", "integer gamma only");
  }
  return rep;
}

VerificationReport suite_representing(const SuiteConfig& cfg) {
  const RootSystem& rs = cfg.root_system;
  require_rank_one(rs, "representing");
  VerificationReport rep("representing");
  const TransformPlan plan(rs, GridOptions::from_grid_n(cfg.grid_n));
  const int gi = integer_gamma(rs);
  const Function1d f = shifted_hermite_gaussian(3, 0.5);
  const VkInverseViaP vp(f, plan);
  // tV_k^{-1} f = F_D^{-1} F f as the reference.
  const FrequencySamples cft = classical_fourier_samples([&](double x) { return f(x); }, plan);
  const std::vector<double> xs = {-2.1, -0.3, 0.6, 1.8};
  RelErr z;
  for (double x : xs) z.add(z_pairing(plan, x, f), weighted_dunkl_inverse(cft, x, plan).real());
  rep.add_check("representing.z", "<tP mu_x, f> = tV_k^{-1} f(x)", z.value(), 1e-5);
  if (gi > 0) {
    RelErr eta;
    for (double x : xs) eta.add(eta_pairing(gi, x, f), vp(x));
    rep.add_check("representing.eta", "<tQ nu_x, f> = V_k^{-1} f(x)", eta.value(), 1e-5);
  } else {
    rep.set_env("representing.eta", "integer gamma only");
  }
  return rep;
}

VerificationReport suite_support(const SuiteConfig& cfg) {
  const RootSystem& rs = cfg.root_system;
  require_rank_one(rs, "support");
  VerificationReport rep("support");
  const double g = rs.gamma().get_d();
  const int gi = integer_gamma(rs);
  const Function1d b = bump(1.0);
  // Declared support wider than the true one so no shortcut applies.
  const Function1d wide([b](double x) { return b(x); }, DecayClass::compact(2.0),
                        [b](const Jet& x) { return b.jet(x.value(), x.order()); });
  const auto outside = line_points(1.05, 3.0, 0.05);
  if (gi > 0) {
    const Function1d p = apply_P_differential(gi, wide);
    double r = 0.0;
    for (double x : outside) r = std::max({r, std::abs(p(x)), std::abs(p(-x))});
    rep.add_check("support.P", "P f = 0 outside supp f", r, 0.0);
  } else {
    rep.set_env("support.P", "integer gamma only");
  }
  record(rep, "support.tV", "tV_k f = 0 outside [-1 - delta, 1 + delta], delta = 0.05", 1e-8, [&] {
    double r = 0.0;
    for (double y : line_points(1.05, 3.0, 0.25)) {
      r = std::max({r, std::abs(tV_k_num(g, wide, y)), std::abs(tV_k_num(g, wide, -y))});
    }
    return r;
  });
  return rep;
}

VerificationReport suite_translation(const SuiteConfig& cfg) {
  const RootSystem& rs = cfg.root_system;
  require_rank_one(rs, "translation");
  VerificationReport rep("translation");
  const TransformPlan plan(rs, GridOptions::from_grid_n(cfg.grid_n));
  const double g = rs.gamma().get_d();
  const int gi = integer_gamma(rs);
  const Function1d f = shifted_hermite_gaussian(1, 0.3);
  const SpectralTranslator spectral(f, plan);

  record(rep, "translation.tau0", "tau_0 f = f", 1e-8, [&] {
    double r = 0.0;
    for (double y : line_points(-4.0, 4.0, 0.5)) r = std::max(r, std::abs(spectral(0.0, y) - f(y)));
    return r;
  });
  if (g > 0.0) {
    const std::vector<std::pair<double, double>> points = {{0.6, -0.4}, {-1.1, 0.8}};
    const MeasureTranslator via_p(f, plan, MeasureTranslator::Path::p_tv);
    record(rep, "translation.paths.p_tv", "tau_x f(y) = mu_x * mu_y (P tV_k f)", 1e-5, [&] {
      RelErr e;
      for (auto [x, y] : points) e.add(via_p(x, y), spectral(x, y));
      return e.value();
    });
    if (gi > 0) {
      Intertwine1dOptions opts;
      opts.max_panel = 1.0;
      const MeasureTranslator via_q(f, plan, MeasureTranslator::Path::tv_q, opts);
      record(rep, "translation.paths.tv_q", "tau_x f(y) = mu_x * mu_y (tV_k Q f)", 1e-5, [&] {
        RelErr e;
        for (auto [x, y] : points) e.add(via_q(x, y), spectral(x, y));
        return e.value();
      });
    }
  } else {
    rep.set_env("translation.paths", "measure forms need gamma > 0");
  }

  const Function1d phi = hermite_gaussian(0);
  const Function1d h = shifted_hermite_gaussian(0, 0.5);
  const Convolver phi_h(phi, h, plan);
  const SampledFunction conv(
      1, [&](std::span<const double> x) { return cdouble(phi_h(x[0])); }, DecayClass::schwartz(kGaussianRadius));
  const std::vector<std::vector<double>> ys = {{0.0}, {0.7}, {-1.6}, {3.0}};
  const auto f_phi = dunkl_transform(phi.as_sampled(), ys, plan);
  const auto f_h = dunkl_transform(h.as_sampled(), ys, plan);
  record(rep, "convolution.transform_law", "F_D(f * g) = F_D(f) F_D(g)", 1e-5, [&] {
    const auto lhs = dunkl_transform(conv, ys, plan);
    RelErr e;
    for (std::size_t i = 0; i < ys.size(); ++i) e.add(lhs[i], f_phi[i] * f_h[i]);
    return e.value();
  });
  record(rep, "convolution.commutativity", "f * g = g * f", 1e-8, [&] {
    const Convolver h_phi(h, phi, plan);
    RelErr e;
    for (double x : {-1.5, 0.0, 0.8, 2.0}) e.add(h_phi(x), phi_h(x));
    return e.value();
  });
  // S = g omega_k: F_D((S * phi) omega_k) = F_D(phi) F_D(S).
  const auto s = ConcreteDistribution::weighted(h);
  record(rep, "convolution.distribution_law", "F_D((S * phi) omega_k) = F_D(phi) F_D(S), S = g omega_k", 1e-5, [&] {
    // Tabulate once: distribution_convolve rebuilds its table per call.
    const Convolver table(phi, h, plan);
    const SampledFunction tabulated(
        1, [&](std::span<const double> x) { return cdouble(table(x[0])); }, DecayClass::schwartz(kGaussianRadius));
    RelErr e;
    const auto lhs = dunkl_transform(tabulated, ys, plan);
    for (std::size_t i = 0; i < ys.size(); ++i) e.add(lhs[i], f_phi[i] * f_h[i]);
    for (double x : {-0.7, 0.4}) e.add(distribution_convolve(plan, s, phi, x), table(x));
    return e.value();
  });
  // S1 = g omega_k, S2 = delta_z: F_D(S1 * S2) = F_D(S2) F_D(S1).
  record(rep, "convolution.dirac", "F_D(S1 * S2) = F_D(S2) F_D(S1), S2 = delta_z", 1e-5, [&] {
    RelErr e;
    const SpectralTranslator tau_h(h, plan);
    for (double z : {-0.8, 1.1}) {
      const SampledFunction shifted(
          1, [&](std::span<const double> x) { return cdouble(tau_h(x[0], -z)); }, DecayClass::schwartz(kGaussianRadius));
      const auto lhs = dunkl_transform(shifted, ys, plan);
      for (std::size_t i = 0; i < ys.size(); ++i) {
        e.add(lhs[i], kernel_1d_oscillatory(g, z, ys[i][0]) * f_h[i]);
      }
    }
    return e.value();
  });
  // T(S * phi) = S * (T phi) with T phi = -x e^{-x^2/2}.
  record(rep, "convolution.dunkl_commutation", "T(S * phi) = S * (T phi)", 1e-4, [&] {
    const Function1d t_phi = combine(-1.0, hermite_gaussian(1), 0.0, hermite_gaussian(1));
    const Convolver rhs(t_phi, h, plan);
    const double step = 1e-4;
    RelErr e;
    for (double x : {-1.2, 0.5, 1.9}) {
      const double d = (phi_h(x + step) - phi_h(x - step)) / (2.0 * step);
      e.add(d + g * (phi_h(x) - phi_h(-x)) / x, rhs(x));
    }
    return e.value();
  });
  return rep;
}

VerificationReport suite_approx_identity(const SuiteConfig& cfg) {
  const RootSystem& rs = cfg.root_system;
  require_rank_one(rs, "approx-identity");
  const TransformPlan plan(rs, GridOptions::from_grid_n(cfg.grid_n));
  VerificationReport rep = approx_identity_check(plan, shifted_hermite_gaussian(0, 0.5));
  rep.set_suite("approx-identity");
  return rep;
}

bool suite_applies(const std::string& name, const RootSystem& rs) {
  if (suite_needs_rank_one(name)) return rs.dimension() == 1;
  if (name == "intertwine" || name == "transform") return rs.is_product();
  return true;
}

VerificationReport dispatch(const std::string& name, const SuiteConfig& cfg, Rng& rng) {
  if (name == "transmutation") return suite_transmutation(cfg);
  if (name == "normalization") return suite_normalization(cfg);
  if (name == "intertwine") return suite_intertwine(cfg, rng);
  if (name == "kernel") return suite_kernel(cfg, rng);
  if (name == "transform") return suite_transform(cfg);
  if (name == "inversion") return suite_inversion(cfg);
  if (name == "representing") return suite_representing(cfg);
  if (name == "support") return suite_support(cfg);
  if (name == "translation") return suite_translation(cfg);
  if (name == "approx-identity") return suite_approx_identity(cfg);
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace

void SuiteConfig::validate() const {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  if (tol && !(*tol > 0.0)) throw UsageError("--tol must be positive");
  for (const auto& [id, t] : tolerances) {
    if (!(t > 0.0)) throw UsageError("tolerance for " + id + " must be positive");
  }
  if (format != "json" && format != "csv") throw UsageError("format must be json or csv");
  if (grid_n < 17) throw UsageError("grid-n must be at least 17");
}

SuiteConfig suite_config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw UsageError("config must be a JSON object");
  SuiteConfig cfg;
  try {
    if (doc.contains("suite")) cfg.suite = doc.at("suite").get<std::string>();
    if (doc.contains("preset") && doc.contains("root_system")) {
      throw UsageError("config gives both a preset and a root_system");
    }
    if (doc.contains("preset")) cfg.root_system = root_system_from_preset(doc.at("preset").get<std::string>());
    if (doc.contains("root_system")) cfg.root_system = root_system_from_json(doc.at("root_system"));
    if (doc.contains("grid_n")) cfg.grid_n = doc.at("grid_n").get<int>();
    if (doc.contains("tol")) cfg.tol = doc.at("tol").get<double>();
    if (doc.contains("tolerances")) cfg.tolerances = doc.at("tolerances").get<std::map<std::string, double>>();
    if (doc.contains("seed")) cfg.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("out")) cfg.out = doc.at("out").get<std::string>();
    if (doc.contains("format")) cfg.format = doc.at("format").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad config: ") + e.what());
  }
  return cfg;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"transmutation", "normalization", "intertwine", "kernel",
                                                 "transform",     "inversion",     "representing", "support",
                                                 "translation",   "approx-identity", "all"};
  return names;
}

bool suite_needs_rank_one(const std::string& name) {
  return name == "inversion" || name == "representing" || name == "support" || name == "translation" ||
         name == "approx-identity";
}

VerificationReport run_suite(const SuiteConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  Rng rng(config.seed);
  VerificationReport rep(config.suite);
  if (config.suite == "all") {
    nlohmann::json skipped = nlohmann::json::array();
    for (const auto& name : suite_names()) {
      if (name == "all") continue;
      if (!suite_applies(name, config.root_system)) {
        skipped.push_back(name);
        continue;
      }
      rep.merge(dispatch(name, config, rng));
    }
    rep.set_env("skipped", skipped);
  } else {
    rep.merge(dispatch(config.suite, config, rng));
  }
  rep.set_suite(config.suite);
  if (config.tol) rep.override_tolerance(*config.tol);
  for (const auto& [id, t] : config.tolerances) rep.override_tolerance(id, t);
  const RootSystem& rs = config.root_system;
  rep.set_env("root_system", rs.label());
  rep.set_env("dimension", rs.dimension());
  rep.set_env("gamma", to_string(rs.gamma()));
  rep.set_env("grid_n", config.grid_n);
  rep.set_env("seed", config.seed);
  const auto stop = std::chrono::steady_clock::now();
  rep.set_elapsed_ms(std::chrono::duration<double, std::milli>(stop - start).count());
  return rep;
}

const std::vector<std::string>& plot_quantities() {
  static const std::vector<std::string> q = {"kernel-curve", "approx-identity"};
  return q;
}

std::string suite_for_quantity(const std::string& quantity) {
  if (quantity == "kernel-curve") return "kernel";
  if (quantity == "approx-identity") return "approx-identity";
  throw UsageError("unknown plot quantity '" + quantity + "'");
}

std::string emit_plotdata(const VerificationReport& report, const std::string& quantity) {
  suite_for_quantity(quantity);
  const Curve* c = report.find_curve(quantity);
  if (c == nullptr || c->rows.empty()) {
    throw UsageError("report for suite " + report.suite() + " has no data for " + quantity);
  }
  return curve_to_csv(*c);
}

}  // namespace dunkl
