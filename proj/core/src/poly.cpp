#include "dunkl/poly.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/errors.hpp"
#include "dunkl/rootsys.hpp"

namespace dunkl {

RationalPoly::RationalPoly(int dimension) : dim_(dimension) {
  if (dimension < 1) throw InvalidArgument("polynomial dimension must be positive");
}

RationalPoly RationalPoly::constant(int dimension, const Rational& c) {
  RationalPoly p(dimension);
  p.add_term(Exponent(static_cast<std::size_t>(dimension), 0), c);
  return p;
}

RationalPoly RationalPoly::monomial(const Exponent& nu, const Rational& c) {
  for (int e : nu) {
    if (e < 0) throw InvalidArgument("negative exponent");
  }
  RationalPoly p(static_cast<int>(nu.size()));
  p.add_term(nu, c);
  return p;
}

RationalPoly RationalPoly::variable(int dimension, int j) {
  if (j < 0 || j >= dimension) throw InvalidArgument("variable index out of range");
  Exponent nu(static_cast<std::size_t>(dimension), 0);
  nu[static_cast<std::size_t>(j)] = 1;
  return monomial(nu);
}

RationalPoly RationalPoly::linear_form(const RationalVector& a) {
  const int d = static_cast<int>(a.size());
  RationalPoly p(d);
  for (int j = 0; j < d; ++j) {
    Exponent nu(a.size(), 0);
    nu[static_cast<std::size_t>(j)] = 1;
    p.add_term(nu, a[static_cast<std::size_t>(j)]);
  }
  return p;
}

int RationalPoly::degree() const {
  int deg = -1;
  for (const auto& [nu, c] : terms_) {
    int s = 0;
    for (int e : nu) s += e;
    deg = std::max(deg, s);
  }
  return deg;
}

bool RationalPoly::is_homogeneous() const {
  int deg = -1;
  for (const auto& [nu, c] : terms_) {
    int s = 0;
    for (int e : nu) s += e;
    if (deg >= 0 && s != deg) return false;
    deg = s;
  }
  return true;
}

Rational RationalPoly::coefficient(const Exponent& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RationalPoly::add_term(const Exponent& nu, const Rational& c) {
  if (static_cast<int>(nu.size()) != dim_) throw InvalidArgument("exponent dimension mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(nu, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

RationalPoly RationalPoly::derivative(int j) const {
  if (j < 0 || j >= dim_) throw InvalidArgument("derivative index out of range");
  RationalPoly out(dim_);
  for (const auto& [nu, c] : terms_) {
    const int e = nu[static_cast<std::size_t>(j)];
    if (e == 0) continue;
    Exponent mu = nu;
    mu[static_cast<std::size_t>(j)] = e - 1;
    out.add_term(mu, c * e);
  }
  return out;
}

RationalPoly RationalPoly::directional_derivative(const RationalVector& a) const {
  if (static_cast<int>(a.size()) != dim_) throw InvalidArgument("direction dimension mismatch");
  RationalPoly out(dim_);
  for (int j = 0; j < dim_; ++j) {
    if (sgn(a[static_cast<std::size_t>(j)]) == 0) continue;
    out += derivative(j) * a[static_cast<std::size_t>(j)];
  }
  return out;
}

RationalPoly RationalPoly::homogeneous_component(int n) const {
  RationalPoly out(dim_);
  for (const auto& [nu, c] : terms_) {
    int s = 0;
    for (int e : nu) s += e;
    if (s == n) out.terms_.emplace(nu, c);
  }
  return out;
}

namespace {

// Returns true and fills (perm, sign) when a is a signed permutation matrix:
// (A x)_r = sign[r] * x_{perm[r]}.
bool as_signed_permutation(const RationalMatrix& a, std::vector<int>& perm, std::vector<int>& sign) {
  const int n = a.size();
  perm.assign(static_cast<std::size_t>(n), -1);
  sign.assign(static_cast<std::size_t>(n), 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Rational& v = a(r, c);
      if (sgn(v) == 0) continue;
      if (perm[static_cast<std::size_t>(r)] != -1) return false;
      if (v == 1) {
        sign[static_cast<std::size_t>(r)] = 1;
      } else if (v == -1) {
        sign[static_cast<std::size_t>(r)] = -1;
      } else {
        return false;
      }
      perm[static_cast<std::size_t>(r)] = c;
    }
    if (perm[static_cast<std::size_t>(r)] == -1) return false;
  }
  return true;
}

}  // namespace

RationalPoly RationalPoly::compose_linear(const RationalMatrix& a) const {
  if (a.size() != dim_) throw InvalidArgument("compose_linear: dimension mismatch");
  RationalPoly out(dim_);
  std::vector<int> perm;
  std::vector<int> sign;
  if (as_signed_permutation(a, perm, sign)) {
    for (const auto& [nu, c] : terms_) {
      Exponent mu(nu.size(), 0);
      int s = 1;
      for (int r = 0; r < dim_; ++r) {
        const int e = nu[static_cast<std::size_t>(r)];
        mu[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])] += e;
        if (sign[static_cast<std::size_t>(r)] < 0 && (e % 2) != 0) s = -s;
      }
      out.add_term(mu, s > 0 ? c : Rational(-c));
    }
    return out;
  }

  // General case: expand prod_r (row_r . x)^{nu_r}, caching powers per row.
  std::vector<RationalPoly> rows;
  rows.reserve(static_cast<std::size_t>(dim_));
  for (int r = 0; r < dim_; ++r) {
    RationalVector row(static_cast<std::size_t>(dim_));
    for (int c = 0; c < dim_; ++c) row[static_cast<std::size_t>(c)] = a(r, c);
    rows.push_back(linear_form(row));
  }
  std::vector<std::vector<RationalPoly>> powers(static_cast<std::size_t>(dim_));
  auto row_power = [&](int r, int e) -> const RationalPoly& {
    auto& cache = powers[static_cast<std::size_t>(r)];
    if (cache.empty()) cache.push_back(constant(dim_, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * rows[static_cast<std::size_t>(r)]);
    return cache[static_cast<std::size_t>(e)];
  };
  for (const auto& [nu, c] : terms_) {
    RationalPoly term = constant(dim_, c);
    for (int r = 0; r < dim_; ++r) {
      const int e = nu[static_cast<std::size_t>(r)];
      if (e > 0) term = term * row_power(r, e);
    }
    out += term;
  }
  return out;
}

Rational RationalPoly::evaluate(const RationalVector& x) const {
  if (static_cast<int>(x.size()) != dim_) throw InvalidArgument("evaluate: dimension mismatch");
  Rational sum = 0;
  for (const auto& [nu, c] : terms_) {
    Rational t = c;
    for (int j = 0; j < dim_; ++j) t *= dunkl::pow(x[static_cast<std::size_t>(j)], static_cast<unsigned>(nu[static_cast<std::size_t>(j)]));
    sum += t;
  }
  return sum;
}

double RationalPoly::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) throw InvalidArgument("evaluate: dimension mismatch");
  double sum = 0.0;
  for (const auto& [nu, c] : terms_) {
    double t = c.get_d();
    for (int j = 0; j < dim_; ++j) {
      const int e = nu[static_cast<std::size_t>(j)];
      if (e > 0) t *= std::pow(x[static_cast<std::size_t>(j)], e);
    }
    sum += t;
  }
  return sum;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.dim_ != dim_) throw InvalidArgument("polynomial dimension mismatch");
  for (const auto& [nu, c] : o.terms_) add_term(nu, c);
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.dim_ != dim_) throw InvalidArgument("polynomial dimension mismatch");
  for (const auto& [nu, c] : o.terms_) add_term(nu, -c);
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [nu, v] : terms_) v *= c;
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.dim_ != b.dim_) throw InvalidArgument("polynomial dimension mismatch");
  RationalPoly out(a.dim_);
  Exponent mu(static_cast<std::size_t>(a.dim_));
  for (const auto& [na, ca] : a.terms_) {
    for (const auto& [nb, cb] : b.terms_) {
      for (std::size_t j = 0; j < mu.size(); ++j) mu[j] = na[j] + nb[j];
      out.add_term(mu, ca * cb);
    }
  }
  return out;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly out = *this;
  for (auto& [nu, v] : out.terms_) v = -v;
  return out;
}

RationalPoly RationalPoly::pow(unsigned n) const {
  RationalPoly result = constant(dim_, 1);
  RationalPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

LinearDivision divide_by_linear(const RationalPoly& p, const RationalVector& a) {
  const int d = p.dimension();
  if (static_cast<int>(a.size()) != d) throw InvalidArgument("divide_by_linear: dimension mismatch");
  int pivot = -1;
  for (int j = 0; j < d; ++j) {
    if (sgn(a[static_cast<std::size_t>(j)]) != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) throw InvalidArgument("divide_by_linear: zero linear form");
  const auto pv = static_cast<std::size_t>(pivot);

  // Order terms by the pivot exponent first so the leading term is always
  // the one with the highest power of x_pivot.
  auto key_of = [pv](const Exponent& nu) {
    Exponent k;
    k.reserve(nu.size());
    k.push_back(nu[pv]);
    for (std::size_t j = 0; j < nu.size(); ++j) {
      if (j != pv) k.push_back(nu[j]);
    }
    return k;
  };
  auto exp_of = [pv](const Exponent& k) {
    Exponent nu(k.size());
    nu[pv] = k[0];
    std::size_t idx = 1;
    for (std::size_t j = 0; j < nu.size(); ++j) {
      if (j != pv) nu[j] = k[idx++];
    }
    return nu;
  };

  std::map<Exponent, Rational> rem;
  for (const auto& [nu, c] : p.terms()) rem.emplace(key_of(nu), c);

  RationalPoly quotient(d);
  const Rational lead = a[pv];
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (top->first[0] == 0) break;
    Exponent nu = exp_of(top->first);
    Rational q = top->second / lead;
    nu[pv] -= 1;
    quotient.add_term(nu, q);
    for (int j = 0; j < d; ++j) {
      const Rational& aj = a[static_cast<std::size_t>(j)];
      if (sgn(aj) == 0) continue;
      Exponent mu = nu;
      mu[static_cast<std::size_t>(j)] += 1;
      auto [it, inserted] = rem.emplace(key_of(mu), -q * aj);
      if (!inserted) {
        it->second -= q * aj;
        if (sgn(it->second) == 0) rem.erase(it);
      }
    }
  }
  RationalPoly remainder(d);
  for (const auto& [k, c] : rem) remainder.add_term(exp_of(k), c);
  return {std::move(quotient), std::move(remainder)};
}

std::vector<Exponent> monomials_of_degree(int dimension, int n) {
  if (dimension < 1 || n < 0) throw InvalidArgument("monomials_of_degree: bad arguments");
  std::vector<Exponent> out;
  Exponent nu(static_cast<std::size_t>(dimension), 0);
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j == dimension - 1) {
      nu[static_cast<std::size_t>(j)] = left;
      out.push_back(nu);
      return;
    }
    for (int e = left; e >= 0; --e) {
      nu[static_cast<std::size_t>(j)] = e;
      self(self, j + 1, left - e);
    }
  };
  rec(rec, 0, n);
  return out;
}

nlohmann::json to_json(const RationalPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [nu, c] : p.terms()) {
    terms.push_back({{"exponents", nu}, {"coeff", to_string(c)}});
  }
  return terms;
}

RationalPoly poly_from_json(const nlohmann::json& doc, int dimension) {
  const nlohmann::json* terms = &doc;
  if (doc.is_object()) {
    if (doc.contains("dimension")) dimension = doc.at("dimension").get<int>();
    terms = &doc.at("terms");
  }
  if (!terms->is_array()) throw InvalidArgument("polynomial JSON must be a term list");
  if (dimension < 0) {
    if (terms->empty()) throw InvalidArgument("cannot infer dimension of an empty term list");
    dimension = static_cast<int>(terms->front().at("exponents").size());
  }
  RationalPoly p(dimension);
  for (const auto& t : *terms) {
    auto nu = t.at("exponents").get<Exponent>();
    if (static_cast<int>(nu.size()) != dimension) throw InvalidArgument("exponent length mismatch in polynomial JSON");
    for (int e : nu) {
      if (e < 0) throw InvalidArgument("negative exponent in polynomial JSON");
    }
    const auto& c = t.at("coeff");
    Rational r = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
    p.add_term(nu, r);
  }
  return p;
}

}  // namespace dunkl
