#include "dunkl/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "dunkl/errors.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {

RationalMatrix::RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n)) {
  if (n < 1) throw InvalidArgument("matrix size must be positive");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (o.n_ != n_) throw InvalidArgument("matrix size mismatch");
  RationalMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const Rational& v = (*this)(i, k);
      if (sgn(v) == 0) continue;
      for (int j = 0; j < n_; ++j) out(i, j) += v * o(k, j);
    }
  }
  return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (static_cast<int>(v.size()) != n_) throw InvalidArgument("matrix-vector size mismatch");
  RationalVector out(v.size());
  for (int i = 0; i < n_; ++i) {
    Rational s = 0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

bool RationalMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

namespace {

bool is_zero_vector(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool parallel(const RationalVector& a, const RationalVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

RationalVector negate(const RationalVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

}  // namespace

RationalVector reflect(const RationalVector& alpha, const RationalVector& x) {
  if (alpha.size() != x.size()) throw InvalidArgument("reflect: dimension mismatch");
  if (is_zero_vector(alpha)) throw InvalidArgument("reflect: zero root vector");
  const Rational c = 2 * dot(alpha, x) / dot(alpha, alpha);
  RationalVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - c * alpha[i];
  return out;
}

std::vector<double> reflect(std::span<const double> alpha, std::span<const double> x) {
  if (alpha.size() != x.size()) throw InvalidArgument("reflect: dimension mismatch");
  double aa = 0.0;
  double ax = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    aa += alpha[i] * alpha[i];
    ax += alpha[i] * x[i];
  }
  if (aa == 0.0) throw InvalidArgument("reflect: zero root vector");
  const double c = 2.0 * ax / aa;
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - c * alpha[i];
  return out;
}

RationalMatrix reflection_matrix(const RationalVector& alpha) {
  if (is_zero_vector(alpha)) throw InvalidArgument("reflection_matrix: zero root vector");
  const int n = static_cast<int>(alpha.size());
  RationalMatrix m = RationalMatrix::identity(n);
  const Rational aa = dot(alpha, alpha);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) -= 2 * alpha[static_cast<std::size_t>(i)] * alpha[static_cast<std::size_t>(j)] / aa;
  }
  return m;
}

ReflectionGroup::ReflectionGroup(std::vector<RationalMatrix> generators, std::vector<RationalMatrix> elements)
    : generators_(std::move(generators)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
}

bool ReflectionGroup::contains(const RationalMatrix& m) const {
  return std::binary_search(elements_.begin(), elements_.end(), m);
}

ReflectionGroup close_group(const std::vector<RationalVector>& roots, std::size_t max_order) {
  if (roots.empty()) throw InvalidArgument("close_group: no roots");
  const int d = static_cast<int>(roots.front().size());
  std::vector<RationalMatrix> gens;
  gens.reserve(roots.size());
  for (const auto& r : roots) {
    if (static_cast<int>(r.size()) != d) throw InvalidArgument("close_group: inconsistent root dimensions");
    gens.push_back(reflection_matrix(r));
  }
  std::set<RationalMatrix> seen;
  std::vector<RationalMatrix> frontier{RationalMatrix::identity(d)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<RationalMatrix> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        RationalMatrix h = s * g;
        if (seen.insert(h).second) {
          if (seen.size() > max_order) {
            throw NotARootSystem("group closure exceeded " + std::to_string(max_order) + " elements");
          }
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  return ReflectionGroup(std::move(gens), std::vector<RationalMatrix>(seen.begin(), seen.end()));
}

RootSystem::RootSystem(int dimension, std::vector<RationalVector> roots, std::vector<Rational> k, ReflectionGroup group)
    : dimension_(dimension), roots_(std::move(roots)), k_(std::move(k)), group_(std::move(group)) {
  Rational gamma = 0;
  bool integer_case = !k_.empty();
  for (const auto& m : k_) {
    gamma += m;
    if (!is_integer(m) || sgn(m) <= 0) integer_case = false;
  }
  profile_.gamma_index = gamma;
  profile_.is_integer_case = integer_case;

  std::vector<std::size_t> axis(static_cast<std::size_t>(dimension_), roots_.size());
  bool product = roots_.size() == static_cast<std::size_t>(dimension_);
  for (std::size_t r = 0; r < roots_.size() && product; ++r) {
    int nonzero = -1;
    for (int j = 0; j < dimension_; ++j) {
      if (sgn(roots_[r][static_cast<std::size_t>(j)]) == 0) continue;
      if (nonzero >= 0) {
        product = false;
        break;
      }
      nonzero = j;
    }
    if (!product || nonzero < 0) break;
    if (axis[static_cast<std::size_t>(nonzero)] != roots_.size()) {
      product = false;
      break;
    }
    axis[static_cast<std::size_t>(nonzero)] = r;
  }
  if (product) product_axis_ = std::move(axis);
}

RootSystem RootSystem::create(int dimension, std::vector<RationalVector> positive_roots,
                              std::vector<Rational> multiplicities, std::size_t max_group_order) {
  if (dimension < 1) throw InvalidArgument("root system dimension must be positive");
  if (positive_roots.empty()) throw NotARootSystem("no positive roots given");
  if (positive_roots.size() != multiplicities.size()) {
    throw InvalidArgument("number of multiplicities does not match number of positive roots");
  }
  for (const auto& r : positive_roots) {
    if (static_cast<int>(r.size()) != dimension) throw InvalidArgument("root has wrong dimension");
    if (is_zero_vector(r)) throw NotARootSystem("zero root");
  }
  for (const auto& k : multiplicities) {
    if (sgn(k) < 0) throw InvalidArgument("negative multiplicity");
  }
  for (std::size_t i = 0; i < positive_roots.size(); ++i) {
    for (std::size_t j = i + 1; j < positive_roots.size(); ++j) {
      if (parallel(positive_roots[i], positive_roots[j])) throw NotARootSystem("parallel positive roots");
    }
  }

  // Closure of R = R+ u -R+ under its reflections, and W-invariance of k.
  auto find_root = [&](const RationalVector& v) -> std::ptrdiff_t {
    const RationalVector neg = negate(v);
    for (std::size_t i = 0; i < positive_roots.size(); ++i) {
      if (positive_roots[i] == v || positive_roots[i] == neg) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
  };
  for (const auto& a : positive_roots) {
    for (std::size_t j = 0; j < positive_roots.size(); ++j) {
      const std::ptrdiff_t idx = find_root(reflect(a, positive_roots[j]));
      if (idx < 0) throw NotARootSystem("root set is not closed under its reflections");
      if (multiplicities[static_cast<std::size_t>(idx)] != multiplicities[j]) {
        throw NotARootSystem("multiplicity is not constant on a W-orbit");
      }
    }
  }

  ReflectionGroup group = close_group(positive_roots, max_group_order);
  return RootSystem(dimension, std::move(positive_roots), std::move(multiplicities), std::move(group));
}

RootSystem RootSystem::rank_one(const Rational& gamma) {
  RootSystem rs = create(1, {{Rational(1)}}, {gamma});
  rs.set_label("z2:" + to_string(gamma));
  return rs;
}

RootSystem RootSystem::product(const std::vector<Rational>& k) {
  const int d = static_cast<int>(k.size());
  if (d < 1) throw InvalidArgument("product root system needs at least one factor");
  std::vector<RationalVector> roots;
  for (int j = 0; j < d; ++j) {
    RationalVector e(static_cast<std::size_t>(d), Rational(0));
    e[static_cast<std::size_t>(j)] = 1;
    roots.push_back(std::move(e));
  }
  RootSystem rs = create(d, std::move(roots), k);
  std::string label = d == 1 ? "z2:" : (d == 2 ? "z2xz2:" : "z2d:");
  for (int j = 0; j < d; ++j) label += (j ? "," : "") + to_string(k[static_cast<std::size_t>(j)]);
  rs.set_label(label);
  return rs;
}

RootSystem RootSystem::b2(const Rational& k_short, const Rational& k_long) {
  std::vector<RationalVector> roots{{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  RootSystem rs = create(2, std::move(roots), {k_short, k_short, k_long, k_long});
  rs.set_label("b2:" + to_string(k_short) + "," + to_string(k_long));
  return rs;
}

const Rational& RootSystem::axis_multiplicity(int j) const {
  if (!is_product()) throw UnsupportedCase("axis_multiplicity requires a product root system");
  if (j < 0 || j >= dimension_) throw InvalidArgument("axis index out of range");
  return k_[product_axis_[static_cast<std::size_t>(j)]];
}

Rational RootSystem::axis_scale(int j) const {
  if (!is_product()) throw UnsupportedCase("axis_scale requires a product root system");
  if (j < 0 || j >= dimension_) throw InvalidArgument("axis index out of range");
  const auto& root = roots_[product_axis_[static_cast<std::size_t>(j)]];
  return abs(root[static_cast<std::size_t>(j)]);
}

double RootSystem::weight(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dimension_) throw InvalidArgument("weight: dimension mismatch");
  double w = 1.0;
  for (std::size_t r = 0; r < roots_.size(); ++r) {
    if (sgn(k_[r]) == 0) continue;
    double s = 0.0;
    for (int j = 0; j < dimension_; ++j) s += roots_[r][static_cast<std::size_t>(j)].get_d() * x[static_cast<std::size_t>(j)];
    w *= std::pow(std::abs(s), 2.0 * k_[r].get_d());
  }
  return w;
}

double weight(const RootSystem& rs, std::span<const double> x) { return rs.weight(x); }

Rational gaussian_weight_moment(const RootSystem& rs) {
  const int d = rs.dimension();
  for (const auto& k : rs.multiplicities()) {
    if (!is_integer(k) || sgn(k) < 0) throw UnsupportedCase("exact Gaussian moment needs integer multiplicities");
  }
  RationalPoly w = RationalPoly::constant(d, 1);
  for (std::size_t r = 0; r < rs.positive_roots().size(); ++r) {
    const unsigned e = 2U * static_cast<unsigned>(rs.multiplicities()[r].get_num().get_ui());
    if (e == 0) continue;
    w = w * RationalPoly::linear_form(rs.positive_roots()[r]).pow(e);
  }
  // int e^{-t^2} t^{2m} dt = Gamma(m + 1/2) = sqrt(pi) (2m)! / (4^m m!).
  Rational total = 0;
  for (const auto& [nu, c] : w.terms()) {
    Rational term = c;
    for (int e : nu) {
      if (e % 2 != 0) {
        term = 0;
        break;
      }
      const unsigned m = static_cast<unsigned>(e / 2);
      term *= factorial(2 * m) / (pow(Rational(4), m) * factorial(m));
    }
    total += term;
  }
  return total;
}

namespace {

double mehta_by_quadrature_2d(const RootSystem& rs) {
  // omega is homogeneous of degree 2 gamma:
  // int e^{-r^2} omega = Gamma(gamma + 1) / 2 * int_0^{2 pi} omega(cos t, sin t) dt.
  std::vector<double> cuts;
  for (const auto& r : rs.positive_roots()) {
    // zero of <alpha, (cos t, sin t)>
    const double t0 = std::atan2(r[0].get_d(), -r[1].get_d());
    for (double t : {t0, t0 + std::numbers::pi, t0 - std::numbers::pi, t0 + 2 * std::numbers::pi}) {
      if (t >= 0.0 && t < 2 * std::numbers::pi) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(), [](double a, double b) { return std::abs(a - b) < 1e-14; }), cuts.end());
  cuts.push_back(cuts.front() + 2 * std::numbers::pi);

  auto exponent_at = [&](double t) {
    for (std::size_t r = 0; r < rs.positive_roots().size(); ++r) {
      const auto& a = rs.positive_roots()[r];
      const double v = a[0].get_d() * std::cos(t) + a[1].get_d() * std::sin(t);
      if (std::abs(v) < 1e-12) return 2.0 * rs.multiplicities()[r].get_d();
    }
    return 0.0;
  };
  auto angular = [&](int n) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double lo = cuts[i];
      const double hi = cuts[i + 1];
      const double b = exponent_at(lo);
      const double a = exponent_at(hi);
      const QuadratureGrid g = gauss_jacobi(n, a, b, lo, hi);
      sum += g.integrate([&](double t) {
        const double x[2] = {std::cos(t), std::sin(t)};
        return rs.weight(x) / (std::pow(hi - t, a) * std::pow(t - lo, b));
      });
    }
    return sum;
  };
  const double coarse = angular(40);
  const double fine = angular(80);
  const double rel = std::abs(fine - coarse) / std::abs(fine);
  if (!(rel < 1e-12)) throw NumericError("angular quadrature for the Mehta constant did not converge", rel);
  const double gamma = rs.gamma().get_d();
  return 1.0 / (std::exp(std::lgamma(gamma + 1.0)) / 2.0 * fine);
}

double mehta_by_hermite(const RootSystem& rs) {
  const int d = rs.dimension();
  auto tensor = [&](int n) {
    const QuadratureGrid g = gauss_hermite(n);
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    std::vector<double> x(static_cast<std::size_t>(d));
    double sum = 0.0;
    while (true) {
      double w = 1.0;
      for (int j = 0; j < d; ++j) {
        x[static_cast<std::size_t>(j)] = g.nodes[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
        w *= g.weights[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
      }
      sum += w * rs.weight(x);
      int j = 0;
      while (j < d && ++idx[static_cast<std::size_t>(j)] == n) idx[static_cast<std::size_t>(j++)] = 0;
      if (j == d) break;
    }
    return sum;
  };
  const int base = d <= 3 ? 40 : 12;
  const double coarse = tensor(base);
  const double fine = tensor(base + base / 2);
  const double rel = std::abs(fine - coarse) / std::abs(fine);
  if (!(rel < 1e-8)) throw NumericError("tensor Gauss-Hermite quadrature for the Mehta constant did not converge", rel);
  return 1.0 / fine;
}

}  // namespace

double mehta_constant(const RootSystem& rs) {
  const int d = rs.dimension();
  if (sgn(rs.gamma()) == 0) return std::pow(std::numbers::pi, -0.5 * d);
  if (rs.is_product()) {
    double log_int = 0.0;
    for (int j = 0; j < d; ++j) {
      const double k = rs.axis_multiplicity(j).get_d();
      log_int += 2.0 * k * std::log(rs.axis_scale(j).get_d()) + std::lgamma(k + 0.5);
    }
    return std::exp(-log_int);
  }
  bool integer = true;
  for (const auto& k : rs.multiplicities()) integer = integer && is_integer(k);
  if (integer) return 1.0 / (std::pow(std::numbers::pi, 0.5 * d) * gaussian_weight_moment(rs).get_d());
  if (d == 2) return mehta_by_quadrature_2d(rs);
  return mehta_by_hermite(rs);
}

namespace {

Rational json_rational(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number_float()) return parse_rational(v.dump());
  throw InvalidArgument("expected a rational number (\"p/q\" string or number)");
}

}  // namespace

RootSystem root_system_from_json(const nlohmann::json& doc) {
  try {
    const int d = doc.at("dimension").get<int>();
    std::vector<RationalVector> roots;
    for (const auto& r : doc.at("positive_roots")) {
      RationalVector v;
      for (const auto& c : r) v.push_back(json_rational(c));
      roots.push_back(std::move(v));
    }
    std::vector<Rational> k;
    for (const auto& m : doc.at("multiplicities")) k.push_back(json_rational(m));
    RootSystem rs = RootSystem::create(d, std::move(roots), std::move(k));
    std::ostringstream label;
    label << "custom:d=" << d << ",roots=" << rs.positive_roots().size() << ",gamma=" << to_string(rs.gamma());
    rs.set_label(label.str());
    return rs;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed root system JSON: ") + e.what());
  }
}

nlohmann::json to_json(const RootSystem& rs) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : rs.positive_roots()) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& c : r) v.push_back(to_string(c));
    roots.push_back(std::move(v));
  }
  nlohmann::json k = nlohmann::json::array();
  for (const auto& m : rs.multiplicities()) k.push_back(to_string(m));
  return {{"dimension", rs.dimension()}, {"positive_roots", roots}, {"multiplicities", k}};
}

RootSystem root_system_from_preset(const std::string& preset) {
  const auto colon = preset.find(':');
  if (colon == std::string::npos) throw InvalidArgument("preset must look like 'z2:1' or 'z2xz2:1,2'");
  const std::string kind = preset.substr(0, colon);
  std::vector<Rational> args;
  std::stringstream ss(preset.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) args.push_back(parse_rational(item));
  if (kind == "z2") {
    if (args.size() != 1) throw InvalidArgument("preset z2 takes one multiplicity");
    return RootSystem::rank_one(args[0]);
  }
  if (kind == "z2xz2") {
    if (args.size() != 2) throw InvalidArgument("preset z2xz2 takes two multiplicities");
    return RootSystem::product(args);
  }
  if (kind == "z2d") {
    if (args.empty()) throw InvalidArgument("preset z2d needs at least one multiplicity");
    return RootSystem::product(args);
  }
  if (kind == "b2") {
    if (args.size() != 2) throw InvalidArgument("preset b2 takes two multiplicities");
    return RootSystem::b2(args[0], args[1]);
  }
  throw InvalidArgument("unknown preset kind '" + kind + "'");
}

}  // namespace dunkl
