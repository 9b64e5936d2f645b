#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "dunkl/errors.hpp"
#include "dunkl/rootsys.hpp"
#include "oracles.hpp"

using namespace dunkl;

namespace {

RationalVector rv(std::initializer_list<int> xs) {
  RationalVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

// Brute force: all products of up to `depth` reflections, rounded to a grid.
std::size_t brute_force_order(const std::vector<std::array<double, 2>>& roots, int depth) {
  using M = std::array<long, 4>;
  std::set<M> seen;
  std::vector<std::array<double, 4>> refl;
  for (auto a : roots) {
    const double n = a[0] * a[0] + a[1] * a[1];
    refl.push_back({1 - 2 * a[0] * a[0] / n, -2 * a[0] * a[1] / n, -2 * a[1] * a[0] / n, 1 - 2 * a[1] * a[1] / n});
  }
  std::vector<std::array<double, 4>> layer{{1, 0, 0, 1}};
  auto key = [](const std::array<double, 4>& m) {
    return M{std::lround(m[0] * 1e6), std::lround(m[1] * 1e6), std::lround(m[2] * 1e6), std::lround(m[3] * 1e6)};
  };
  seen.insert(key(layer[0]));
  for (int step = 0; step < depth; ++step) {
    std::vector<std::array<double, 4>> next;
    for (const auto& g : layer) {
      for (const auto& s : refl) {
        std::array<double, 4> h{s[0] * g[0] + s[1] * g[2], s[0] * g[1] + s[1] * g[3], s[2] * g[0] + s[3] * g[2],
                                s[2] * g[1] + s[3] * g[3]};
        next.push_back(h);
        seen.insert(key(h));
      }
    }
    layer = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("reflect examples") {
  CHECK(reflect(rv({1, 0}), rv({3, 5})) == rv({-3, 5}));
  CHECK(reflect(rv({1, 1}), rv({1, 1})) == rv({-1, -1}));
  CHECK(reflect(rv({2, -1}), rv({1, 2})) == rv({1, 2}));
  CHECK_THROWS_AS(reflect(rv({0, 0}), rv({1, 2})), InvalidArgument);
}

TEST_CASE("reflect is an involution on random rational data") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    RationalVector a{oracle::random_rational(rng), oracle::random_rational(rng), oracle::random_rational(rng)};
    if (sgn(a[0]) == 0 && sgn(a[1]) == 0 && sgn(a[2]) == 0) continue;
    RationalVector x{oracle::random_rational(rng), oracle::random_rational(rng), oracle::random_rational(rng)};
    CHECK(reflect(a, reflect(a, x)) == x);
  }
}

TEST_CASE("group closure orders") {
  CHECK(close_group({rv({1})}).order() == 2);
  CHECK(close_group({rv({1, 0}), rv({0, 1})}).order() == 4);
  const auto b2 = close_group({rv({1, 0}), rv({0, 1}), rv({1, 1}), rv({1, -1})});
  CHECK(b2.order() == brute_force_order({{1, 0}, {0, 1}, {1, 1}, {1, -1}}, 8));
  CHECK(b2.order() == 8);
  CHECK(RootSystem::product({1, 2, 3}).group().order() == 8);
  for (const auto& g : b2.elements()) {
    CHECK(b2.contains(g * g.transpose()));
    CHECK((g * g.transpose()).is_identity());
  }
}

TEST_CASE("group closure cap") {
  // (1,0) and (3,4) meet at an angle that is not a rational multiple of pi,
  // so the generated group is infinite.
  CHECK_THROWS_AS(close_group({rv({1, 0}), rv({3, 4})}, 64), NotARootSystem);
}

TEST_CASE("root system validation") {
  CHECK_THROWS_AS(RootSystem::create(2, {rv({1, 0}), rv({2, 0})}, {1, 1}), NotARootSystem);
  CHECK_THROWS_AS(RootSystem::create(2, {rv({1, 0}), rv({1, 1})}, {1, 1}), NotARootSystem);
  CHECK_THROWS_AS(RootSystem::create(2, {rv({1, 0}), rv({0, 1}), rv({1, 1}), rv({1, -1})}, {1, 2, 1, 1}),
                  NotARootSystem);
  CHECK_THROWS_AS(RootSystem::create(1, {rv({1})}, {-1}), InvalidArgument);
  CHECK_NOTHROW(RootSystem::create(2, {rv({1, 0}), rv({0, 1}), rv({1, 1}), rv({1, -1})}, {1, 1, 2, 2}));
}

TEST_CASE("multiplicity profile") {
  auto rs = root_system_from_preset("z2xz2:1,2");
  CHECK(rs.gamma() == 3);
  CHECK(rs.is_integer_case());
  CHECK(rs.is_product());
  auto half = root_system_from_preset("z2:1/2");
  CHECK(half.gamma() == Rational(1, 2));
  CHECK_FALSE(half.is_integer_case());
  CHECK_FALSE(root_system_from_preset("b2:1,1").is_product());
  CHECK_FALSE(root_system_from_preset("z2:0").is_integer_case());
}

TEST_CASE("weight examples") {
  const double two = 2.0;
  CHECK(RootSystem::rank_one(1).weight(std::span<const double>(&two, 1)) == doctest::Approx(4.0));
  auto z = root_system_from_preset("z2xz2:1,2");
  const double x[2] = {1.0, 2.0};
  CHECK(z.weight(x) == doctest::Approx(16.0));
  auto b2 = root_system_from_preset("b2:1,1");
  const double on_plane[2] = {1.5, 1.5};
  CHECK(b2.weight(on_plane) == 0.0);
}

TEST_CASE("weight invariance and homogeneity") {
  std::mt19937_64 rng(11);
  for (const char* preset : {"b2:1,2", "z2xz2:1/2,3", "b2:1/3,1"}) {
    auto rs = root_system_from_preset(preset);
    const double g = rs.gamma().get_d();
    for (int i = 0; i < 100; ++i) {
      RationalVector x{oracle::random_rational(rng), oracle::random_rational(rng)};
      const auto xd = to_doubles(x);
      const double w = rs.weight(xd);
      for (const auto& m : rs.group().elements()) {
        const auto wx = to_doubles(m * x);
        CHECK(rs.weight(wx) == doctest::Approx(w).epsilon(1e-12));
      }
      const double t = 1.7;
      const double tx[2] = {t * xd[0], t * xd[1]};
      CHECK(rs.weight(tx) == doctest::Approx(std::pow(t, 2 * g) * w).epsilon(1e-12));
    }
  }
}

TEST_CASE("mehta constant examples") {
  CHECK(mehta_constant(RootSystem::rank_one(1)) == doctest::Approx(2.0 / std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(mehta_constant(RootSystem::rank_one(Rational(1, 2))) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mehta_constant(root_system_from_preset("z2xz2:1,1")) == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-14));
  CHECK(mehta_constant(root_system_from_preset("z2:0")) == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)));
}

TEST_CASE("mehta constant of product systems matches the Gamma product") {
  for (const char* preset : {"z2d:1/3,5/2,2", "z2xz2:7/3,1/4", "z2:5"}) {
    auto rs = root_system_from_preset(preset);
    double prod = 1.0;
    for (int j = 0; j < rs.dimension(); ++j) prod /= boost::math::tgamma(rs.axis_multiplicity(j).get_d() + 0.5);
    CHECK(std::abs(mehta_constant(rs) / prod - 1.0) < 1e-12);
  }
}

TEST_CASE("mehta constant of B2 against direct polar quadrature") {
  for (auto [sks, skl] : std::vector<std::pair<const char*, const char*>>{{"1", "1"}, {"1", "2"}, {"1/2", "1/2"}, {"1/3", "1"}}) {
    auto rs = RootSystem::b2(parse_rational(sks), parse_rational(skl));
    const double ks = parse_rational(sks).get_d();
    const double kl = parse_rational(skl).get_d();
    const double g = 2 * ks + 2 * kl;
    // Angular factor by tanh-sinh on each octant.
    double ang = 0.0;
    for (int o = 0; o < 8; ++o) {
      ang += oracle::integrate_singular(
          [&](double t) {
            const double c = std::cos(t), s = std::sin(t);
            return std::pow(std::abs(c * s), 2 * ks) * std::pow(std::abs((c + s) * (c - s)), 2 * kl);
          },
          o * std::numbers::pi / 4, (o + 1) * std::numbers::pi / 4);
    }
    const double expected = 1.0 / (std::tgamma(g + 1.0) / 2.0 * ang);
    CHECK(std::abs(mehta_constant(rs) / expected - 1.0) < 1e-10);
  }
}

TEST_CASE("root system JSON round trip") {
  auto rs = root_system_from_preset("b2:1/2,3");
  auto doc = to_json(rs);
  auto back = root_system_from_json(doc);
  CHECK(back.positive_roots() == rs.positive_roots());
  CHECK(back.multiplicities() == rs.multiplicities());
  CHECK(doc["multiplicities"][0] == "1/2");
  auto parsed = root_system_from_json(nlohmann::json::parse(
      R"({"dimension": 2, "positive_roots": [["1","0"],[0,1]], "multiplicities": ["2/3", 1]})"));
  CHECK(parsed.is_product());
  CHECK(parsed.gamma() == Rational(5, 3));
  CHECK_THROWS_AS(root_system_from_json(nlohmann::json::parse(R"({"dimension": 2})")), InvalidArgument);
  CHECK_THROWS_AS(root_system_from_preset("a7:1"), InvalidArgument);
  CHECK_THROWS_AS(root_system_from_preset("z2:1/0"), InvalidArgument);
}
