#include "dunkl/polyexact.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "dunkl/errors.hpp"

namespace dunkl {

DunklOperators::DunklOperators(const RootSystem& rs) : rs_(rs) {
  reflections_.reserve(rs.positive_roots().size());
  for (const auto& a : rs.positive_roots()) reflections_.push_back(reflection_matrix(a));
}

RationalPoly DunklOperators::apply(int j, const RationalPoly& p) const {
  const int d = rs_.dimension();
  if (j < 0 || j >= d) throw InvalidArgument("Dunkl operator axis out of range");
  if (p.dimension() != d) throw InvalidArgument("polynomial dimension does not match root system");
  RationalPoly out = p.derivative(j);
  const auto& roots = rs_.positive_roots();
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const Rational& k = rs_.multiplicities()[r];
    const Rational& aj = roots[r][static_cast<std::size_t>(j)];
    if (sgn(k) == 0 || sgn(aj) == 0) continue;
    const RationalPoly diff = p - p.compose_linear(reflections_[r]);
    if (diff.is_zero()) continue;
    LinearDivision qr = divide_by_linear(diff, roots[r]);
    if (!qr.remainder.is_zero()) {
      throw InternalError("reflection difference not divisible by its root form");
    }
    out += qr.quotient * (k * aj);
  }
  return out;
}

RationalPoly DunklOperators::apply_directional(const RationalVector& a, const RationalPoly& p) const {
  if (static_cast<int>(a.size()) != rs_.dimension()) throw InvalidArgument("direction has wrong dimension");
  RationalPoly out(rs_.dimension());
  for (int j = 0; j < rs_.dimension(); ++j) {
    if (sgn(a[static_cast<std::size_t>(j)]) == 0) continue;
    out += apply(j, p) * a[static_cast<std::size_t>(j)];
  }
  return out;
}

RationalPoly dunkl_apply(const RootSystem& rs, int j, const RationalPoly& p) {
  return DunklOperators(rs).apply(j, p);
}

namespace {

using Matrix = Intertwiner::Matrix;

std::map<Exponent, std::size_t> index_of(const std::vector<Exponent>& basis) {
  std::map<Exponent, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

// Solves the (possibly over-determined) system A X = B exactly; every
// column of B must lie in the range of A and A must have full column rank.
Matrix solve_exact(Matrix a, Matrix b, std::size_t cols) {
  const std::size_t rows = a.size();
  const std::size_t rhs = b.empty() ? 0 : b.front().size();
  std::vector<std::size_t> pivot_row(cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) throw InternalError("intertwining system is rank deficient");
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    for (std::size_t k = 0; k < rhs; ++k) b[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (sgn(a[r][k]) != 0) a[i][k] -= f * a[r][k];
      }
      for (std::size_t k = 0; k < rhs; ++k) {
        if (sgn(b[r][k]) != 0) b[i][k] -= f * b[r][k];
      }
    }
    pivot_row[c] = r;
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    for (std::size_t k = 0; k < rhs; ++k) {
      if (sgn(b[i][k]) != 0) throw InternalError("intertwining system is inconsistent");
    }
  }
  Matrix x(cols, std::vector<Rational>(rhs));
  for (std::size_t c = 0; c < cols; ++c) x[c] = b[pivot_row[c]];
  return x;
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

Intertwiner::Intertwiner(const RootSystem& rs, int max_degree) : rs_(rs), max_degree_(max_degree) {
  if (max_degree < 0) throw InvalidArgument("intertwiner degree must be nonnegative");
  const int d = rs.dimension();
  const DunklOperators ops(rs);
  for (int n = 0; n <= max_degree; ++n) basis_.push_back(monomials_of_degree(d, n));

  v_.push_back(identity_matrix(1));
  v_inv_.push_back(identity_matrix(1));
  for (int n = 1; n <= max_degree; ++n) {
    const auto& bn = basis_[static_cast<std::size_t>(n)];
    const auto& bm = basis_[static_cast<std::size_t>(n - 1)];
    const auto idx_m = index_of(bm);
    const std::size_t mn = bn.size();
    const std::size_t mm = bm.size();
    const Matrix& vprev = v_.back();

    // Stacked system: rows (j, mu) over j = 0..d-1 and mu in basis(n-1).
    Matrix a(static_cast<std::size_t>(d) * mm, std::vector<Rational>(mn));
    Matrix b(static_cast<std::size_t>(d) * mm, std::vector<Rational>(mn));
    for (std::size_t c = 0; c < mn; ++c) {
      const RationalPoly e = RationalPoly::monomial(bn[c]);
      for (int j = 0; j < d; ++j) {
        const std::size_t off = static_cast<std::size_t>(j) * mm;
        const RationalPoly te = ops.apply(j, e);
        for (const auto& [mu, coef] : te.terms()) a[off + idx_m.at(mu)][c] = coef;
        // V_{n-1}(d_j e): d_j x^nu = nu_j x^{nu - e_j}
        const int e_j = bn[c][static_cast<std::size_t>(j)];
        if (e_j == 0) continue;
        Exponent mu = bn[c];
        mu[static_cast<std::size_t>(j)] -= 1;
        const std::size_t col = idx_m.at(mu);
        for (std::size_t r = 0; r < mm; ++r) {
          if (sgn(vprev[r][col]) != 0) b[off + r][c] = vprev[r][col] * e_j;
        }
      }
    }
    v_.push_back(solve_exact(std::move(a), std::move(b), mn));
    v_inv_.push_back(solve_exact(v_.back(), identity_matrix(mn), mn));
  }
  for (const auto& m : v_) {
    std::vector<double> dm;
    dm.reserve(m.size() * m.size());
    for (const auto& row : m) {
      for (const auto& v : row) dm.push_back(v.get_d());
    }
    v_double_.push_back(std::move(dm));
  }
}

const std::vector<Exponent>& Intertwiner::basis(int n) const {
  if (n < 0 || n > max_degree_) throw RangeError("degree outside the intertwiner table");
  return basis_[static_cast<std::size_t>(n)];
}

const Intertwiner::Matrix& Intertwiner::matrix(int n) const {
  if (n < 0 || n > max_degree_) throw RangeError("degree outside the intertwiner table");
  return v_[static_cast<std::size_t>(n)];
}

const Intertwiner::Matrix& Intertwiner::inverse_matrix(int n) const {
  if (n < 0 || n > max_degree_) throw RangeError("degree outside the intertwiner table");
  return v_inv_[static_cast<std::size_t>(n)];
}

const std::vector<double>& Intertwiner::matrix_double(int n) const {
  if (n < 0 || n > max_degree_) throw RangeError("degree outside the intertwiner table");
  return v_double_[static_cast<std::size_t>(n)];
}

RationalPoly Intertwiner::apply_with(const RationalPoly& p, bool inverse) const {
  if (p.dimension() != rs_.dimension()) throw InvalidArgument("polynomial dimension does not match root system");
  if (p.degree() > max_degree_) throw RangeError("polynomial degree exceeds the intertwiner table");
  RationalPoly out(p.dimension());
  std::vector<std::map<Exponent, std::size_t>> indices(static_cast<std::size_t>(max_degree_ + 1));
  for (const auto& [nu, c] : p.terms()) {
    int n = 0;
    for (int e : nu) n += e;
    auto& idx = indices[static_cast<std::size_t>(n)];
    if (idx.empty()) idx = index_of(basis_[static_cast<std::size_t>(n)]);
    const std::size_t col = idx.at(nu);
    const Matrix& m = inverse ? v_inv_[static_cast<std::size_t>(n)] : v_[static_cast<std::size_t>(n)];
    const auto& bn = basis_[static_cast<std::size_t>(n)];
    for (std::size_t r = 0; r < bn.size(); ++r) {
      if (sgn(m[r][col]) != 0) out.add_term(bn[r], c * m[r][col]);
    }
  }
  return out;
}

RationalPoly Intertwiner::apply(const RationalPoly& p) const { return apply_with(p, false); }

RationalPoly Intertwiner::apply_inverse(const RationalPoly& p) const { return apply_with(p, true); }

RationalPoly intertwine(const RootSystem& rs, const RationalPoly& p) {
  return Intertwiner(rs, std::max(p.degree(), 0)).apply(p);
}

RationalPoly intertwine_inverse(const RootSystem& rs, const RationalPoly& p) {
  return Intertwiner(rs, std::max(p.degree(), 0)).apply_inverse(p);
}

double OperatorConstants::value() const { return factor.get_d() * std::pow(std::numbers::pi, pi_power); }

std::string OperatorConstants::to_string() const {
  std::string s = dunkl::to_string(factor);
  if (pi_power != 0) s += " * pi^" + std::to_string(pi_power);
  return s;
}

OperatorConstants operator_constants(const RootSystem& rs) {
  if (!rs.is_integer_case()) throw UnsupportedCase("exact P/Q prefactor requires positive integer multiplicities");
  // c_k = pi^{-d/2} / M, so pi^d c_k^2 / 2^{2 gamma} = 1 / (M^2 4^gamma).
  const Rational m = gaussian_weight_moment(rs);
  const unsigned gamma = static_cast<unsigned>(rs.gamma().get_num().get_ui());
  return {1 / (m * m * pow(Rational(4), gamma)), 0};
}

double operator_prefactor(const RootSystem& rs) {
  const double c = mehta_constant(rs);
  const int d = rs.dimension();
  return std::pow(std::numbers::pi, d) * c * c * std::pow(2.0, -2.0 * rs.gamma().get_d());
}

namespace {

unsigned multiplicity_as_uint(const Rational& k) { return static_cast<unsigned>(k.get_num().get_ui()); }

}  // namespace

RationalPoly apply_P_poly(const RootSystem& rs, const RationalPoly& f) {
  const OperatorConstants pc = operator_constants(rs);
  RationalPoly g = f;
  for (std::size_t r = 0; r < rs.positive_roots().size(); ++r) {
    const unsigned k = multiplicity_as_uint(rs.multiplicities()[r]);
    for (unsigned i = 0; i < 2 * k; ++i) g = g.directional_derivative(rs.positive_roots()[r]);
    if (k % 2 == 1) g = -g;
  }
  return g * pc.factor;
}

RationalPoly apply_Q_poly(const RootSystem& rs, const RationalPoly& f) {
  const OperatorConstants pc = operator_constants(rs);
  const DunklOperators ops(rs);
  RationalPoly g = f;
  for (std::size_t r = 0; r < rs.positive_roots().size(); ++r) {
    const unsigned k = multiplicity_as_uint(rs.multiplicities()[r]);
    for (unsigned i = 0; i < 2 * k; ++i) g = ops.apply_directional(rs.positive_roots()[r], g);
    if (k % 2 == 1) g = -g;
  }
  return g * pc.factor;
}

}  // namespace dunkl
