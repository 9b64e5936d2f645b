#include "dunkl/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/bessel.hpp"
#include "dunkl/errors.hpp"

namespace dunkl {

cdouble kernel_1d(double gamma, cdouble x, cdouble t) {
  if (!(gamma >= 0.0)) throw InvalidArgument("kernel_1d: gamma must be nonnegative");
  const cdouble z = x * t;
  if (z.imag() == 0.0) return kernel_1d_real(gamma, z.real(), 1.0);
  const cdouble u = cdouble(0.0, 1.0) * z;
  return bessel_j_normalized(gamma - 0.5, u) + z / (2.0 * gamma + 1.0) * bessel_j_normalized(gamma + 0.5, u);
}

cdouble kernel_1d_oscillatory(double gamma, double x, double y) {
  if (!(gamma >= 0.0)) throw InvalidArgument("kernel_1d: gamma must be nonnegative");
  const double u = x * y;
  const BesselPair p = bessel_j_normalized_pair(gamma - 0.5, u);
  return {p.ja, -u / (2.0 * gamma + 1.0) * p.ja1};
}

double kernel_1d_real(double gamma, double x, double t) {
  if (!(gamma >= 0.0)) throw InvalidArgument("kernel_1d: gamma must be nonnegative");
  const double v = x * t;
  if (v < 0.0) {
    // K = e^v 1F1(g; 2g+1; -2v); the Bessel form cancels badly here.
    if (v < -350.0) throw RangeError("real kernel argument outside supported range");
    const double z = -2.0 * v;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < 5000; ++n) {
      term *= (gamma + n) / (2.0 * gamma + 1.0 + n) * z / (n + 1.0);
      sum += term;
      if (term <= 1e-17 * sum && n > z) break;
    }
    return std::exp(v) * sum;
  }
  return bessel_j_normalized_imag(gamma - 0.5, v) + v / (2.0 * gamma + 1.0) * bessel_j_normalized_imag(gamma + 0.5, v);
}

KernelSeries::KernelSeries(const RootSystem& rs, KernelConfig config)
    : v_(rs, config.series_truncation), config_(config) {
  if (config.series_truncation < 1) throw InvalidArgument("series truncation must be positive");
  if (!(config.tolerance > 0.0)) throw InvalidArgument("series tolerance must be positive");
}

double KernelSeries::tail_bound(double norm_x, double norm_z) const {
  const int n1 = config_.series_truncation + 1;
  const double s = norm_x * norm_z;
  if (s == 0.0) return 0.0;
  return std::exp(n1 * std::log(s) - std::lgamma(n1 + 1.0));
}

cdouble KernelSeries::operator()(std::span<const double> x, std::span<const cdouble> z) const {
  const int d = v_.root_system().dimension();
  if (static_cast<int>(x.size()) != d || static_cast<int>(z.size()) != d) {
    throw InvalidArgument("kernel series: argument dimension mismatch");
  }
  double nx = 0.0;
  double nz = 0.0;
  for (int j = 0; j < d; ++j) {
    nx += x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    nz += std::norm(z[static_cast<std::size_t>(j)]);
  }
  const double tail = tail_bound(std::sqrt(nx), std::sqrt(nz));
  if (tail > config_.tolerance) throw NumericError("kernel series truncation tail above tolerance", tail);

  const int big_n = config_.series_truncation;
  // Power tables x_j^e and z_j^e / e!.
  std::vector<std::vector<double>> xp(static_cast<std::size_t>(d));
  std::vector<std::vector<cdouble>> zp(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    auto& a = xp[static_cast<std::size_t>(j)];
    auto& b = zp[static_cast<std::size_t>(j)];
    a.assign(static_cast<std::size_t>(big_n + 1), 1.0);
    b.assign(static_cast<std::size_t>(big_n + 1), 1.0);
    for (int e = 1; e <= big_n; ++e) {
      a[static_cast<std::size_t>(e)] = a[static_cast<std::size_t>(e - 1)] * x[static_cast<std::size_t>(j)];
      b[static_cast<std::size_t>(e)] = b[static_cast<std::size_t>(e - 1)] * z[static_cast<std::size_t>(j)] / static_cast<double>(e);
    }
  }
  cdouble sum = 0.0;
  for (int n = 0; n <= big_n; ++n) {
    const auto& basis = v_.basis(n);
    const auto& m = v_.matrix_double(n);
    const std::size_t sz = basis.size();
    std::vector<cdouble> w(sz);
    for (std::size_t c = 0; c < sz; ++c) {
      cdouble t = 1.0;
      for (int j = 0; j < d; ++j) t *= zp[static_cast<std::size_t>(j)][static_cast<std::size_t>(basis[c][static_cast<std::size_t>(j)])];
      w[c] = t;
    }
    for (std::size_t r = 0; r < sz; ++r) {
      double xm = 1.0;
      for (int j = 0; j < d; ++j) xm *= xp[static_cast<std::size_t>(j)][static_cast<std::size_t>(basis[r][static_cast<std::size_t>(j)])];
      if (xm == 0.0) continue;
      cdouble row = 0.0;
      for (std::size_t c = 0; c < sz; ++c) row += m[r * sz + c] * w[c];
      sum += xm * row;
    }
  }
  return sum;
}

DunklKernel::DunklKernel(const RootSystem& rs, KernelConfig config) : rs_(rs) {
  if (rs.is_product()) {
    for (int j = 0; j < rs.dimension(); ++j) axis_gamma_.push_back(rs.axis_multiplicity(j).get_d());
  } else {
    series_ = std::make_shared<KernelSeries>(rs, config);
  }
}

cdouble DunklKernel::operator()(std::span<const double> x, std::span<const cdouble> z) const {
  if (series_) return (*series_)(x, z);
  const int d = rs_.dimension();
  if (static_cast<int>(x.size()) != d || static_cast<int>(z.size()) != d) {
    throw InvalidArgument("kernel: argument dimension mismatch");
  }
  cdouble k = 1.0;
  for (int j = 0; j < d; ++j) {
    k *= kernel_1d(axis_gamma_[static_cast<std::size_t>(j)], x[static_cast<std::size_t>(j)], z[static_cast<std::size_t>(j)]);
  }
  return k;
}

cdouble DunklKernel::oscillatory(std::span<const double> x, std::span<const double> y) const {
  const int d = rs_.dimension();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d) {
    throw InvalidArgument("kernel: argument dimension mismatch");
  }
  if (!series_) {
    cdouble k = 1.0;
    for (int j = 0; j < d; ++j) {
      k *= kernel_1d_oscillatory(axis_gamma_[static_cast<std::size_t>(j)], x[static_cast<std::size_t>(j)],
                                 y[static_cast<std::size_t>(j)]);
    }
    return k;
  }
  std::vector<cdouble> z(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) z[static_cast<std::size_t>(j)] = cdouble(0.0, -y[static_cast<std::size_t>(j)]);
  return (*series_)(x, z);
}

VerificationReport check_bounds(const RootSystem& rs, const std::vector<KernelSample>& samples, double tol,
                                KernelConfig config) {
  const DunklKernel k(rs, config);
  const int d = rs.dimension();
  const auto& group = rs.group().elements();
  double bound_excess = 0.0;
  double growth_excess = 0.0;
  double sharp_excess = 0.0;
  double invariance = 0.0;
  double conjugation = 0.0;
  auto to_complex = [](const std::vector<double>& v, cdouble scale) {
    std::vector<cdouble> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = scale * v[i];
    return out;
  };
  auto apply = [d](const RationalMatrix& m, const std::vector<double>& v) {
    std::vector<double> out(static_cast<std::size_t>(d), 0.0);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) out[static_cast<std::size_t>(r)] += m(r, c).get_d() * v[static_cast<std::size_t>(c)];
    }
    return out;
  };
  for (const auto& s : samples) {
    if (static_cast<int>(s.x.size()) != d || static_cast<int>(s.y.size()) != d) {
      throw InvalidArgument("check_bounds: sample dimension mismatch");
    }
    // K(ix, y) = K(y, ix).
    const cdouble kix = k(s.y, to_complex(s.x, {0.0, 1.0}));
    const cdouble kmix = k(s.y, to_complex(s.x, {0.0, -1.0}));
    bound_excess = std::max(bound_excess, std::abs(kix) - 1.0);
    conjugation = std::max(conjugation, std::abs(kmix - std::conj(kix)));

    const cdouble kxy = k(s.x, to_complex(s.y, 1.0));
    double nx = 0.0;
    double ny = 0.0;
    double sharp = 0.0;
    for (int j = 0; j < d; ++j) {
      nx += s.x[static_cast<std::size_t>(j)] * s.x[static_cast<std::size_t>(j)];
      ny += s.y[static_cast<std::size_t>(j)] * s.y[static_cast<std::size_t>(j)];
      sharp += std::abs(s.x[static_cast<std::size_t>(j)] * s.y[static_cast<std::size_t>(j)]);
    }
    growth_excess = std::max(growth_excess, std::abs(kxy) / std::exp(std::sqrt(nx * ny)) - 1.0);
    if (rs.is_product()) sharp_excess = std::max(sharp_excess, std::abs(kxy) / std::exp(sharp) - 1.0);

    for (const auto& w : group) {
      const cdouble kw = k(apply(w, s.x), to_complex(apply(w, s.y), 1.0));
      invariance = std::max(invariance, std::abs(kw - kxy) / std::max(1.0, std::abs(kxy)));
    }
  }
  VerificationReport report("kernel-bounds");
  report.add_check("kernel.bound_imaginary", "|K(ix,y)| <= 1", std::max(bound_excess, 0.0), tol);
  report.add_check("kernel.bound_growth", "|K(x,z)| <= exp(|x||Re z|)", std::max(growth_excess, 0.0), tol);
  if (rs.is_product()) {
    report.add_check("kernel.bound_sharp", "|K(x,z)| <= max_w exp(Re <wx,z>)", std::max(sharp_excess, 0.0), tol);
  }
  report.add_check("kernel.w_invariance", "K(wx,wy) = K(x,y)", invariance, std::max(tol, 1e-12));
  report.add_check("kernel.conjugation", "K(-ix,y) = conj K(ix,y)", conjugation, std::max(tol, 1e-12));
  report.set_env("samples", samples.size());
  return report;
}

}  // namespace dunkl
