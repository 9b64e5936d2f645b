#include "dunkl/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dunkl/bessel.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/polyexact.hpp"

namespace dunkl {

using cdouble = std::complex<double>;

GridOptions GridOptions::from_grid_n(int n) {
  if (n < 2) throw InvalidArgument("grid resolution must be at least 2");
  GridOptions o;
  o.panels_per_side = std::max(2, (n - 1 + 31) / 32);
  return o;
}

QuadratureGrid weighted_line_grid(double radius, double power, int panels_per_side, int nodes_per_panel) {
  if (!(radius > 0.0)) throw InvalidArgument("weighted_line_grid: radius must be positive");
  if (panels_per_side < 1 || nodes_per_panel < 1) throw InvalidArgument("weighted_line_grid: bad panel counts");
  if (!(power > -1.0)) throw InvalidArgument("weighted_line_grid: power must exceed -1");
  const double h = radius / panels_per_side;
  const QuadratureGrid first = gauss_jacobi(nodes_per_panel, 0.0, power, 0.0, h);
  const QuadratureGrid ref = gauss_legendre(nodes_per_panel);
  std::vector<double> pos_nodes(first.nodes);
  std::vector<double> pos_weights(first.weights);
  for (int p = 1; p < panels_per_side; ++p) {
    const double a = p * h;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      const double t = a + (ref.nodes[i] + 1.0) * 0.5 * h;
      pos_nodes.push_back(t);
      pos_weights.push_back(ref.weights[i] * 0.5 * h * std::pow(t, power));
    }
  }
  QuadratureGrid g;
  for (std::size_t i = pos_nodes.size(); i-- > 0;) {
    g.nodes.push_back(-pos_nodes[i]);
    g.weights.push_back(pos_weights[i]);
  }
  g.nodes.insert(g.nodes.end(), pos_nodes.begin(), pos_nodes.end());
  g.weights.insert(g.weights.end(), pos_weights.begin(), pos_weights.end());
  g.lower = -radius;
  g.upper = radius;
  g.kind = WeightKind::plain;
  return g;
}

QuadratureGrid plain_line_grid(double radius, int panels_per_side, int nodes_per_panel) {
  return composite_legendre(-radius, radius, 2 * panels_per_side, nodes_per_panel);
}

TransformPlan::TransformPlan(const RootSystem& rs, GridOptions options, std::vector<std::vector<double>> targets)
    : rs_(rs), options_(options), targets_(std::move(targets)), gamma_(rs.gamma().get_d()), mehta_(mehta_constant(rs)) {
  if (!rs.is_product()) throw UnsupportedCase("transform plans need a product root system");
  const int d = rs.dimension();
  for (const auto& t : targets_) {
    if (static_cast<int>(t.size()) != d) throw InvalidArgument("target frequency has wrong dimension");
  }
  for (int j = 0; j < d; ++j) {
    const double k = rs.axis_multiplicity(j).get_d();
    const double scale = std::pow(rs.axis_scale(j).get_d(), 2.0 * k);
    axis_gamma_.push_back(k);
    QuadratureGrid s = weighted_line_grid(options.space_radius, 2.0 * k, options.panels_per_side, options.nodes_per_panel);
    QuadratureGrid f =
        weighted_line_grid(options.frequency_radius, 2.0 * k, options.panels_per_side, options.nodes_per_panel);
    for (auto& w : s.weights) w *= scale;
    for (auto& w : f.weights) w *= scale;
    space_.push_back(std::move(s));
    frequency_.push_back(std::move(f));
  }
  plain_space_ = plain_line_grid(options.space_radius, options.panels_per_side, options.nodes_per_panel);
}

double TransformPlan::inverse_constant() const {
  return mehta_ * mehta_ * std::pow(2.0, -(2.0 * gamma_ + dimension()));
}

double TransformPlan::p_prefactor() const {
  return std::pow(std::numbers::pi, dimension()) * mehta_ * mehta_ * std::pow(2.0, -2.0 * gamma_);
}

bool TransformPlan::covers(const SampledFunction& f) const {
  return f.decay().integrable() && f.dimension() == dimension() && f.decay().radius <= options_.space_radius;
}

cdouble TransformPlan::kernel_oscillatory(std::span<const double> x, std::span<const double> y) const {
  cdouble k = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) k *= kernel_1d_oscillatory(axis_gamma_[j], x[j], y[j]);
  return k;
}

namespace {

struct TensorSamples {
  std::vector<std::vector<double>> points;
  std::vector<double> weights;
  std::vector<std::vector<std::size_t>> index;
};

TensorSamples tensor_grid(const std::vector<const QuadratureGrid*>& axes) {
  TensorSamples t;
  const std::size_t d = axes.size();
  std::vector<std::size_t> idx(d, 0);
  while (true) {
    std::vector<double> p(d);
    double w = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
      p[j] = axes[j]->nodes[idx[j]];
      w *= axes[j]->weights[idx[j]];
    }
    t.points.push_back(std::move(p));
    t.weights.push_back(w);
    t.index.push_back(idx);
    std::size_t j = 0;
    while (j < d && ++idx[j] == axes[j]->size()) idx[j++] = 0;
    if (j == d) break;
  }
  return t;
}

void require_covered(const SampledFunction& f, const TransformPlan& plan) {
  if (f.dimension() != plan.dimension()) throw InvalidArgument("function dimension does not match the plan");
  if (!f.decay().integrable()) throw InvalidArgument("transform input must be schwartz or compactly supported");
  if (f.decay().radius > plan.options().space_radius) {
    throw NumericError("declared support exceeds the quadrature radius", f.decay().radius);
  }
}

std::vector<const QuadratureGrid*> pointers(const std::vector<QuadratureGrid>& g) {
  std::vector<const QuadratureGrid*> p;
  for (const auto& x : g) p.push_back(&x);
  return p;
}

// sum_i w_i v_i prod_j table_j[idx_ij]
cdouble contract(const TensorSamples& t, const std::vector<cdouble>& values, const std::vector<std::vector<cdouble>>& tables) {
  cdouble s = 0.0;
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    if (values[i] == 0.0) continue;
    cdouble k = t.weights[i] * values[i];
    for (std::size_t j = 0; j < tables.size(); ++j) k *= tables[j][t.index[i][j]];
    s += k;
  }
  return s;
}

std::vector<cdouble> sample(const SampledFunction& f, const TensorSamples& t) {
  std::vector<cdouble> v;
  v.reserve(t.points.size());
  for (const auto& p : t.points) v.push_back(f(p));
  return v;
}

// Kernel tables K_j(node, -i y_j) (sign = -1) or K_j(node, i y_j) (sign = +1).
std::vector<std::vector<cdouble>> kernel_tables(const TransformPlan& plan, const std::vector<QuadratureGrid>& grids,
                                                std::span<const double> y, double sign, bool node_is_x) {
  std::vector<std::vector<cdouble>> tables(grids.size());
  for (std::size_t j = 0; j < grids.size(); ++j) {
    const double g = plan.axis_gamma(static_cast<int>(j));
    tables[j].reserve(grids[j].size());
    for (double node : grids[j].nodes) {
      const double x = node_is_x ? node : y[j];
      const double yy = node_is_x ? y[j] : node;
      cdouble k = kernel_1d_oscillatory(g, x, yy);
      if (sign > 0) k = std::conj(k);
      tables[j].push_back(k);
    }
  }
  return tables;
}

}  // namespace

std::vector<cdouble> classical_fourier(const SampledFunction& f, const std::vector<std::vector<double>>& ys,
                                       const TransformPlan& plan) {
  require_covered(f, plan);
  const std::vector<const QuadratureGrid*> axes(static_cast<std::size_t>(plan.dimension()), &plan.plain_space_grid());
  const TensorSamples t = tensor_grid(axes);
  const std::vector<cdouble> values = sample(f, t);
  std::vector<cdouble> out;
  out.reserve(ys.size());
  for (const auto& y : ys) {
    if (static_cast<int>(y.size()) != plan.dimension()) throw InvalidArgument("frequency has wrong dimension");
    std::vector<std::vector<cdouble>> tables(axes.size());
    for (std::size_t j = 0; j < axes.size(); ++j) {
      for (double x : axes[j]->nodes) tables[j].push_back(std::polar(1.0, -x * y[j]));
    }
    out.push_back(contract(t, values, tables));
  }
  return out;
}

cdouble classical_fourier(const SampledFunction& f, std::span<const double> y, const TransformPlan& plan) {
  return classical_fourier(f, std::vector<std::vector<double>>{{y.begin(), y.end()}}, plan).front();
}

std::vector<cdouble> dunkl_transform(const SampledFunction& f, const std::vector<std::vector<double>>& ys,
                                     const TransformPlan& plan) {
  require_covered(f, plan);
  const TensorSamples t = tensor_grid(pointers(plan.space_grids()));
  const std::vector<cdouble> values = sample(f, t);
  std::vector<cdouble> out;
  out.reserve(ys.size());
  for (const auto& y : ys) {
    if (static_cast<int>(y.size()) != plan.dimension()) throw InvalidArgument("frequency has wrong dimension");
    out.push_back(contract(t, values, kernel_tables(plan, plan.space_grids(), y, -1.0, true)));
  }
  return out;
}

cdouble dunkl_transform(const SampledFunction& f, std::span<const double> y, const TransformPlan& plan) {
  return dunkl_transform(f, std::vector<std::vector<double>>{{y.begin(), y.end()}}, plan).front();
}

std::vector<cdouble> dunkl_inverse(const SampledFunction& h, const std::vector<std::vector<double>>& xs,
                                   const TransformPlan& plan) {
  if (h.dimension() != plan.dimension()) throw InvalidArgument("function dimension does not match the plan");
  if (!h.decay().integrable()) throw InvalidArgument("inverse transform input must decay");
  const TensorSamples t = tensor_grid(pointers(plan.frequency_grids()));
  const std::vector<cdouble> values = sample(h, t);
  std::vector<cdouble> out;
  out.reserve(xs.size());
  for (const auto& x : xs) {
    if (static_cast<int>(x.size()) != plan.dimension()) throw InvalidArgument("point has wrong dimension");
    // K(x, iy) = conj K(x, -iy) for real x, y.
    out.push_back(plan.inverse_constant() * contract(t, values, kernel_tables(plan, plan.frequency_grids(), x, 1.0, false)));
  }
  return out;
}

cdouble dunkl_inverse(const SampledFunction& h, std::span<const double> x, const TransformPlan& plan) {
  return dunkl_inverse(h, std::vector<std::vector<double>>{{x.begin(), x.end()}}, plan).front();
}

double multiplier_P(const SampledFunction& f, std::span<const double> x, const TransformPlan& plan) {
  require_covered(f, plan);
  const std::size_t d = static_cast<std::size_t>(plan.dimension());
  if (x.size() != d) throw InvalidArgument("point has wrong dimension");
  // Axis-by-axis contraction: F f on the weighted frequency tensor grid,
  // then the weighted inverse sum at x.
  const QuadratureGrid& sx = plan.plain_space_grid();
  const TensorSamples space = tensor_grid(std::vector<const QuadratureGrid*>(d, &sx));
  std::vector<cdouble> data = sample(f, space);
  std::vector<std::size_t> shape(d, sx.size());
  for (std::size_t axis = 0; axis < d; ++axis) {
    const QuadratureGrid& fy = plan.frequency_grids()[axis];
    std::vector<std::size_t> new_shape = shape;
    new_shape[axis] = fy.size();
    std::size_t inner = 1;
    for (std::size_t j = 0; j < axis; ++j) inner *= shape[j];
    std::size_t outer = 1;
    for (std::size_t j = axis + 1; j < d; ++j) outer *= shape[j];
    std::vector<cdouble> next(inner * fy.size() * outer);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t q = 0; q < fy.size(); ++q) {
        for (std::size_t i = 0; i < inner; ++i) {
          cdouble s = 0.0;
          for (std::size_t p = 0; p < sx.size(); ++p) {
            s += sx.weights[p] * std::polar(1.0, -sx.nodes[p] * fy.nodes[q]) * data[i + inner * (p + shape[axis] * o)];
          }
          next[i + inner * (q + fy.size() * o)] = s;
        }
      }
    }
    data = std::move(next);
    shape = new_shape;
  }
  const TensorSamples freq = tensor_grid(pointers(plan.frequency_grids()));
  std::vector<std::vector<cdouble>> tables(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (double y : plan.frequency_grids()[j].nodes) tables[j].push_back(std::polar(1.0, x[j] * y));
  }
  // freq enumerates the first axis fastest, matching the layout of data.
  const cdouble s = contract(freq, data, tables);
  return plan.p_prefactor() * std::pow(2.0 * std::numbers::pi, -static_cast<double>(d)) * s.real();
}

double fourier_bessel(const std::function<double(double)>& profile, double lambda, double alpha, double radius,
                      int panels, int nodes_per_panel) {
  if (!(alpha >= -0.5)) throw InvalidArgument("fourier_bessel: order must be at least -1/2");
  if (!(radius > 0.0)) throw InvalidArgument("fourier_bessel: radius must be positive");
  const double h = radius / panels;
  const QuadratureGrid g = graded_endpoint_rule(0.0, radius, 2.0 * alpha + 1.0, nodes_per_panel, h, h);
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    s += g.weights[i] * profile(g.nodes[i]) * bessel_j_normalized(alpha, lambda * g.nodes[i]);
  }
  return s / (std::pow(2.0, alpha) * std::tgamma(alpha + 1.0));
}

namespace {

void require_rank_one(const TransformPlan& plan) {
  if (plan.dimension() != 1) throw UnsupportedCase("tabulated one-dimensional transforms need a rank-one plan");
}

}  // namespace

FrequencySamples classical_fourier_samples(const std::function<double(double)>& f, const TransformPlan& plan) {
  require_rank_one(plan);
  const QuadratureGrid& sx = plan.plain_space_grid();
  const QuadratureGrid& fy = plan.frequency_grids().front();
  std::vector<double> fx(sx.size());
  for (std::size_t p = 0; p < sx.size(); ++p) fx[p] = sx.weights[p] * f(sx.nodes[p]);
  FrequencySamples out{fy.nodes, fy.weights, {}};
  out.values.reserve(fy.size());
  for (double y : fy.nodes) {
    cdouble s = 0.0;
    for (std::size_t p = 0; p < sx.size(); ++p) s += fx[p] * std::polar(1.0, -sx.nodes[p] * y);
    out.values.push_back(s);
  }
  return out;
}

FrequencySamples dunkl_transform_samples(const std::function<double(double)>& f, const TransformPlan& plan) {
  require_rank_one(plan);
  const QuadratureGrid& sx = plan.space_grids().front();
  const QuadratureGrid& fy = plan.frequency_grids().front();
  const double g = plan.axis_gamma(0);
  std::vector<double> fx(sx.size());
  for (std::size_t p = 0; p < sx.size(); ++p) fx[p] = sx.weights[p] * f(sx.nodes[p]);
  FrequencySamples out{fy.nodes, fy.weights, {}};
  out.values.reserve(fy.size());
  for (double y : fy.nodes) {
    cdouble s = 0.0;
    for (std::size_t p = 0; p < sx.size(); ++p) {
      if (fx[p] != 0.0) s += fx[p] * kernel_1d_oscillatory(g, sx.nodes[p], y);
    }
    out.values.push_back(s);
  }
  return out;
}

cdouble weighted_classical_inverse(const FrequencySamples& h, double x) {
  cdouble s = 0.0;
  for (std::size_t q = 0; q < h.nodes.size(); ++q) s += h.weights[q] * h.values[q] * std::polar(1.0, x * h.nodes[q]);
  return s / (2.0 * std::numbers::pi);
}

cdouble weighted_dunkl_inverse(const FrequencySamples& h, double x, const TransformPlan& plan) {
  require_rank_one(plan);
  const double g = plan.axis_gamma(0);
  cdouble s = 0.0;
  for (std::size_t q = 0; q < h.nodes.size(); ++q) {
    s += h.weights[q] * h.values[q] * std::conj(kernel_1d_oscillatory(g, x, h.nodes[q]));
  }
  return plan.inverse_constant() * s;
}

MultiplierP1d::MultiplierP1d(const std::function<double(double)>& f, const TransformPlan& plan)
    : spectrum_(classical_fourier_samples(f, plan)), prefactor_(plan.p_prefactor()) {}

double MultiplierP1d::operator()(double x) const { return prefactor_ * weighted_classical_inverse(spectrum_, x).real(); }

}  // namespace dunkl
