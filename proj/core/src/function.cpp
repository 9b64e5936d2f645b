#include "dunkl/function.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/errors.hpp"

namespace dunkl {

Jet::Jet(double value, int order) : n_(order) {
  if (order < 0 || order > kMaxOrder) throw RangeError("jet order out of range");
  c_[0] = value;
}

Jet Jet::variable(double x0, int order) {
  Jet j(x0, order);
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

std::vector<double> Jet::coefficients() const { return {c_.begin(), c_.begin() + n_ + 1}; }

double Jet::derivative(int k) const {
  if (k < 0 || k > n_) throw RangeError("jet derivative beyond its order");
  return std::tgamma(k + 1.0) * c_[static_cast<std::size_t>(k)];
}

Jet Jet::differentiate() const {
  if (n_ == 0) throw RangeError("cannot differentiate an order-0 jet");
  Jet d(0.0, n_ - 1);
  for (int k = 0; k < n_; ++k) d.c_[static_cast<std::size_t>(k)] = (k + 1) * c_[static_cast<std::size_t>(k + 1)];
  return d;
}

double Jet::evaluate(double h) const {
  double s = 0.0;
  for (int k = n_; k >= 0; --k) s = s * h + c_[static_cast<std::size_t>(k)];
  return s;
}

Jet Jet::reflect() const {
  Jet r = *this;
  for (int k = 1; k <= n_; k += 2) r.c_[static_cast<std::size_t>(k)] = -r.c_[static_cast<std::size_t>(k)];
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  n_ = std::min(n_, o.n_);
  for (int k = 0; k <= n_; ++k) c_[static_cast<std::size_t>(k)] += o.c_[static_cast<std::size_t>(k)];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  n_ = std::min(n_, o.n_);
  for (int k = 0; k <= n_; ++k) c_[static_cast<std::size_t>(k)] -= o.c_[static_cast<std::size_t>(k)];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) {
  const int n = std::min(n_, o.n_);
  std::array<double, kMaxOrder + 1> r{};
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += c_[static_cast<std::size_t>(j)] * o.c_[static_cast<std::size_t>(k - j)];
    r[static_cast<std::size_t>(k)] = s;
  }
  c_ = r;
  n_ = n;
  return *this;
}

Jet& Jet::operator/=(const Jet& o) {
  if (o.c_[0] == 0.0) throw RangeError("jet division by a series vanishing at the center");
  const int n = std::min(n_, o.n_);
  std::array<double, kMaxOrder + 1> q{};
  for (int k = 0; k <= n; ++k) {
    double s = c_[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k; ++j) s -= o.c_[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = s / o.c_[0];
  }
  c_ = q;
  n_ = n;
  return *this;
}

Jet& Jet::operator+=(double s) {
  c_[0] += s;
  return *this;
}

Jet& Jet::operator-=(double s) {
  c_[0] -= s;
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (int k = 0; k <= n_; ++k) c_[static_cast<std::size_t>(k)] *= s;
  return *this;
}

Jet& Jet::operator/=(double s) {
  for (int k = 0; k <= n_; ++k) c_[static_cast<std::size_t>(k)] /= s;
  return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator*(Jet a, const Jet& b) { return a *= b; }
Jet operator/(Jet a, const Jet& b) { return a /= b; }
Jet operator+(Jet a, double s) { return a += s; }
Jet operator+(double s, Jet a) { return a += s; }
Jet operator-(Jet a, double s) { return a -= s; }
Jet operator-(double s, const Jet& a) { return -a + s; }
Jet operator*(Jet a, double s) { return a *= s; }
Jet operator*(double s, Jet a) { return a *= s; }
Jet operator/(Jet a, double s) { return a /= s; }
Jet operator/(double s, const Jet& a) { return Jet(s, a.order()) / a; }
Jet operator-(const Jet& a) { return a * -1.0; }

Jet exp(const Jet& a) {
  Jet e(std::exp(a.value()), a.order());
  for (int k = 1; k <= a.order(); ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * a[j] * e[k - j];
    e[k] = s / k;
  }
  return e;
}

Jet pow(const Jet& a, int n) {
  if (n < 0) return 1.0 / pow(a, -n);
  Jet r(1.0, a.order());
  for (int i = 0; i < n; ++i) r *= a;
  return r;
}

std::string to_string(DecayKind kind) {
  switch (kind) {
    case DecayKind::schwartz: return "schwartz";
    case DecayKind::compact: return "compact";
    case DecayKind::polynomial: return "polynomial";
  }
  return "unknown";
}

SampledFunction::SampledFunction(int dimension, Evaluator f, DecayClass decay)
    : dim_(dimension), f_(std::move(f)), decay_(decay) {
  if (dimension < 1) throw InvalidArgument("function dimension must be positive");
  if (!f_) throw InvalidArgument("empty evaluator");
}

double SampledFunction::effective_radius() const {
  if (!decay_.integrable()) throw InvalidArgument("polynomial-growth functions have no effective support");
  return decay_.radius;
}

double SampledFunction::tail_magnitude() const {
  const double r = effective_radius();
  double worst = 0.0;
  std::vector<double> x(static_cast<std::size_t>(dim_));
  for (double scale : {1.0, 1.25, 1.5}) {
    for (int j = 0; j < dim_; ++j) {
      for (double sign : {-1.0, 1.0}) {
        std::fill(x.begin(), x.end(), 0.0);
        x[static_cast<std::size_t>(j)] = sign * scale * r;
        worst = std::max(worst, std::abs(f_(x)));
      }
    }
    for (double sign : {-1.0, 1.0}) {
      std::fill(x.begin(), x.end(), sign * scale * r / std::sqrt(static_cast<double>(dim_)));
      worst = std::max(worst, std::abs(f_(x)));
    }
  }
  return worst;
}

Function1d::Function1d(Value value, DecayClass decay, JetMap jet, std::string name)
    : value_(std::move(value)), jet_(std::move(jet)), decay_(decay), name_(std::move(name)) {
  if (!value_) throw InvalidArgument("empty function");
}

Jet Function1d::jet(double x0, int order) const {
  if (!jet_) throw UnsupportedCase("function has no Taylor jets");
  return jet_(Jet::variable(x0, order));
}

SampledFunction Function1d::as_sampled() const {
  auto v = value_;
  return SampledFunction(1, [v](std::span<const double> x) { return std::complex<double>(v(x[0]), 0.0); }, decay_);
}

Function1d combine(double a, const Function1d& f, double b, const Function1d& g) {
  DecayClass decay = f.decay_;
  if (!g.decay_.integrable() || !f.decay_.integrable()) {
    decay = DecayClass::polynomial(std::max(f.decay_.order, g.decay_.order));
  } else if (f.decay_.kind == DecayKind::compact && g.decay_.kind == DecayKind::compact) {
    decay = DecayClass::compact(std::max(f.decay_.radius, g.decay_.radius));
  } else {
    decay = DecayClass::schwartz(std::max(f.decay_.radius, g.decay_.radius));
  }
  auto fv = f.value_;
  auto gv = g.value_;
  Function1d::JetMap jm;
  if (f.jet_ && g.jet_) {
    auto fj = f.jet_;
    auto gj = g.jet_;
    jm = [a, b, fj, gj](const Jet& x) { return a * fj(x) + b * gj(x); };
  }
  return Function1d([a, b, fv, gv](double x) { return a * fv(x) + b * gv(x); }, decay, jm);
}

namespace {

template <class T>
T ipow(const T& x, int n) {
  if constexpr (std::is_same_v<T, double>) {
    return std::pow(x, n);
  } else {
    return pow(x, n);
  }
}

}  // namespace

Function1d hermite_gaussian(int n) {
  if (n < 0) throw InvalidArgument("hermite_gaussian: negative degree");
  return Function1d::from_generic(
      [n](const auto& x) {
        using std::exp;
        return ipow(x, n) * exp(-0.5 * (x * x));
      },
      DecayClass::schwartz(kGaussianRadius), "x^" + std::to_string(n) + " exp(-x^2/2)");
}

Function1d gaussian(double a) {
  if (!(a > 0.0)) throw InvalidArgument("gaussian: width parameter must be positive");
  const double radius = std::max(kGaussianRadius * std::sqrt(0.5 / a), 1.0);
  return Function1d::from_generic(
      [a](const auto& x) {
        using std::exp;
        return exp(-a * (x * x));
      },
      DecayClass::schwartz(radius), "exp(-a x^2)");
}

Function1d shifted_hermite_gaussian(int m, double shift) {
  if (m < 0) throw InvalidArgument("shifted_hermite_gaussian: negative degree");
  if (std::abs(shift) > 2.0) throw InvalidArgument("shifted_hermite_gaussian: shift must lie in [-2, 2]");
  return Function1d::from_generic(
      [m, shift](const auto& x) {
        using std::exp;
        const auto u = x - shift;
        return ipow(u, m) * exp(-0.5 * (u * u));
      },
      DecayClass::schwartz(kGaussianRadius), "shifted Hermite-Gaussian");
}

Function1d bump(double r) {
  if (!(r > 0.0)) throw InvalidArgument("bump: radius must be positive");
  auto value = [r](double x) {
    const double u = x / r;
    if (std::abs(u) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
  };
  auto jet = [r](const Jet& x) {
    const double u0 = x.value() / r;
    if (std::abs(u0) >= 1.0) return Jet(0.0, x.order());
    const Jet u = x / r;
    return exp(-1.0 / (1.0 - u * u));
  };
  return Function1d(value, DecayClass::compact(r), jet, "bump");
}

}  // namespace dunkl
