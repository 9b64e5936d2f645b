#pragma once

#include <string>
#include <vector>

#include "dunkl/poly.hpp"
#include "dunkl/rootsys.hpp"

namespace dunkl {

/// Exact Dunkl operators for a fixed root system, with the reflections
/// precomputed.
class DunklOperators {
 public:
  explicit DunklOperators(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  /// T_j p for the 0-based axis j.
  RationalPoly apply(int j, const RationalPoly& p) const;
  /// (a_1 T_1 + ... + a_d T_d) p
  RationalPoly apply_directional(const RationalVector& a, const RationalPoly& p) const;

 private:
  RootSystem rs_;
  std::vector<RationalMatrix> reflections_;
};

/// T_j p with 0-based j. Throws InvalidArgument for an out-of-range axis.
RationalPoly dunkl_apply(const RootSystem& rs, int j, const RationalPoly& p);

/// V_k on polynomials of degree <= max_degree, stored as one matrix per
/// homogeneous degree in the basis monomials_of_degree(d, n).
class Intertwiner {
 public:
  using Matrix = std::vector<std::vector<Rational>>;

  Intertwiner(const RootSystem& rs, int max_degree);

  const RootSystem& root_system() const { return rs_; }
  int max_degree() const { return max_degree_; }
  const std::vector<Exponent>& basis(int n) const;
  /// Column c holds the coefficients of V_k(basis(n)[c]).
  const Matrix& matrix(int n) const;
  const Matrix& inverse_matrix(int n) const;
  /// matrix(n) rounded to double, row-major.
  const std::vector<double>& matrix_double(int n) const;

  RationalPoly apply(const RationalPoly& p) const;
  RationalPoly apply_inverse(const RationalPoly& p) const;

 private:
  RationalPoly apply_with(const RationalPoly& p, bool inverse) const;

  RootSystem rs_;
  int max_degree_;
  std::vector<std::vector<Exponent>> basis_;
  std::vector<Matrix> v_;
  std::vector<Matrix> v_inv_;
  std::vector<std::vector<double>> v_double_;
};

RationalPoly intertwine(const RootSystem& rs, const RationalPoly& p);
RationalPoly intertwine_inverse(const RootSystem& rs, const RationalPoly& p);

/// The prefactor pi^d c_k^2 / 2^{2 gamma} of P and Q, as factor * pi^pi_power.
struct OperatorConstants {
  Rational factor;
  int pi_power = 0;

  double value() const;
  std::string to_string() const;
};

/// Exact prefactor; integer multiplicities only (UnsupportedCase otherwise).
OperatorConstants operator_constants(const RootSystem& rs);
/// Numeric prefactor from mehta_constant; any multiplicities.
double operator_prefactor(const RootSystem& rs);

RationalPoly apply_P_poly(const RootSystem& rs, const RationalPoly& f);
RationalPoly apply_Q_poly(const RootSystem& rs, const RationalPoly& f);

}  // namespace dunkl
