#pragma once

#include <map>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "dunkl/rational.hpp"

namespace dunkl {

class RationalMatrix;

using Exponent = std::vector<int>;

/// Exact multivariate polynomial over Q. Zero coefficients are never stored.
class RationalPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit RationalPoly(int dimension = 1);

  static RationalPoly constant(int dimension, const Rational& c);
  static RationalPoly monomial(const Exponent& nu, const Rational& c = 1);
  /// The coordinate function x_j (0-based).
  static RationalPoly variable(int dimension, int j);
  /// <a, x>
  static RationalPoly linear_form(const RationalVector& a);

  int dimension() const { return dim_; }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Exponent& nu) const;

  /// Adds c x^nu, dropping the entry if the sum cancels.
  void add_term(const Exponent& nu, const Rational& c);

  RationalPoly derivative(int j) const;
  /// (a . grad) p
  RationalPoly directional_derivative(const RationalVector& a) const;
  RationalPoly homogeneous_component(int n) const;
  /// x -> p(A x).
  RationalPoly compose_linear(const RationalMatrix& a) const;

  Rational evaluate(const RationalVector& x) const;
  double evaluate(std::span<const double> x) const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const Rational& c);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
  friend RationalPoly operator*(const Rational& c, RationalPoly a) { return a *= c; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  RationalPoly operator-() const;
  RationalPoly pow(unsigned n) const;

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  int dim_;
  TermMap terms_;
};

struct LinearDivision {
  RationalPoly quotient;
  RationalPoly remainder;
};

/// Exact division of p by the linear form <a, x> (synthetic division in the
/// first variable with a nonzero coefficient).
LinearDivision divide_by_linear(const RationalPoly& p, const RationalVector& a);

/// All exponents of total degree n in `dimension` variables, lex-descending.
std::vector<Exponent> monomials_of_degree(int dimension, int n);

/// [{"exponents":[...], "coeff":"p/q"}]; from_json also accepts a
/// {"dimension": d, "terms": [...]} wrapper.
nlohmann::json to_json(const RationalPoly& p);
RationalPoly poly_from_json(const nlohmann::json& doc, int dimension = -1);

}  // namespace dunkl
