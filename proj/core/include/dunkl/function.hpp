#pragma once

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace dunkl {

/// Truncated Taylor series c_0 + c_1 h + ... + c_n h^n around a point,
/// n <= kMaxOrder. Binary operations truncate to the smaller order.
class Jet {
 public:
  static constexpr int kMaxOrder = 40;

  Jet() = default;
  Jet(double value, int order);
  /// The jet of the identity map at x0: x0 + h.
  static Jet variable(double x0, int order);

  int order() const { return n_; }
  double value() const { return c_[0]; }
  double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  std::vector<double> coefficients() const;

  /// k-th derivative at the expansion point: k! c_k.
  double derivative(int k) const;
  /// d/dh; the order drops by one.
  Jet differentiate() const;
  /// Evaluates the truncated series at offset h.
  double evaluate(double h) const;
  /// h -> -h.
  Jet reflect() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator+=(double s);
  Jet& operator-=(double s);
  Jet& operator*=(double s);
  Jet& operator/=(double s);

 private:
  std::array<double, kMaxOrder + 1> c_{};
  int n_ = 0;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(Jet a, const Jet& b);
Jet operator/(Jet a, const Jet& b);
Jet operator+(Jet a, double s);
Jet operator+(double s, Jet a);
Jet operator-(Jet a, double s);
Jet operator-(double s, const Jet& a);
Jet operator*(Jet a, double s);
Jet operator*(double s, Jet a);
Jet operator/(Jet a, double s);
Jet operator/(double s, const Jet& a);
Jet operator-(const Jet& a);
Jet exp(const Jet& a);
Jet pow(const Jet& a, int n);

enum class DecayKind { schwartz, compact, polynomial };

struct DecayClass {
  DecayKind kind = DecayKind::schwartz;
  double radius = 0.0;  // effective support radius (schwartz) or support radius (compact)
  int order = 0;        // growth order (polynomial)

  static DecayClass schwartz(double radius) { return {DecayKind::schwartz, radius, 0}; }
  static DecayClass compact(double radius) { return {DecayKind::compact, radius, 0}; }
  static DecayClass polynomial(int order) { return {DecayKind::polynomial, 0.0, order}; }
  bool integrable() const { return kind != DecayKind::polynomial; }
};

std::string to_string(DecayKind kind);

/// Complex-valued function on R^d with a declared decay class.
class SampledFunction {
 public:
  using Evaluator = std::function<std::complex<double>(std::span<const double>)>;

  SampledFunction(int dimension, Evaluator f, DecayClass decay);

  int dimension() const { return dim_; }
  const DecayClass& decay() const { return decay_; }
  std::complex<double> operator()(std::span<const double> x) const { return f_(x); }
  /// Throws InvalidArgument unless the class is schwartz or compact.
  double effective_radius() const;
  /// max |f| over calibration points on the shells |x| = R, 1.25 R, 1.5 R
  /// (coordinate directions and diagonals).
  double tail_magnitude() const;

 private:
  int dim_;
  Evaluator f_;
  DecayClass decay_;
};

/// Real function on the line with optional Taylor jets.
class Function1d {
 public:
  using Value = std::function<double(double)>;
  using JetMap = std::function<Jet(const Jet&)>;

  Function1d(Value value, DecayClass decay, JetMap jet = {}, std::string name = {});

  /// Builds both the value and the jet map from one generic callable that
  /// accepts double and Jet.
  template <class F>
  static Function1d from_generic(F f, DecayClass decay, std::string name = {}) {
    return Function1d([f](double x) { return f(x); }, decay, [f](const Jet& x) { return f(x); }, std::move(name));
  }

  double operator()(double x) const { return value_(x); }
  bool has_jet() const { return static_cast<bool>(jet_); }
  /// Taylor jet of order `order` at x0. Throws UnsupportedCase without a jet map.
  Jet jet(double x0, int order) const;
  const DecayClass& decay() const { return decay_; }
  const std::string& name() const { return name_; }
  SampledFunction as_sampled() const;

  /// a f + b g; jets are combined when both sides have them.
  friend Function1d combine(double a, const Function1d& f, double b, const Function1d& g);

 private:
  Value value_;
  JetMap jet_;
  DecayClass decay_;
  std::string name_;
};

Function1d combine(double a, const Function1d& f, double b, const Function1d& g);

/// Effective radius used for Gaussian-class inputs.
inline constexpr double kGaussianRadius = 12.0;

/// x^n exp(-x^2/2).
Function1d hermite_gaussian(int n);
/// exp(-a x^2).
Function1d gaussian(double a = 0.5);
/// (x - s)^m exp(-(x - s)^2 / 2) for |s| <= 2.
Function1d shifted_hermite_gaussian(int m, double shift);
/// exp(-1/(1 - (x/r)^2)) on |x| < r, zero outside.
Function1d bump(double r = 1.0);

}  // namespace dunkl
