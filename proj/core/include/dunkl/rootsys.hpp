#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dunkl/rational.hpp"

namespace dunkl {

/// Square matrix with exact rational entries, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n);
  static RationalMatrix identity(int n);

  int size() const { return n_; }
  Rational& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * n_ + c)]; }
  const Rational& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalVector operator*(const RationalVector& v) const;
  RationalMatrix transpose() const;
  bool is_identity() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
  friend bool operator<(const RationalMatrix& a, const RationalMatrix& b) { return a.a_ < b.a_; }

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

/// sigma_alpha(x) = x - 2<alpha,x>/|alpha|^2 alpha. Throws InvalidArgument for alpha = 0.
RationalVector reflect(const RationalVector& alpha, const RationalVector& x);
std::vector<double> reflect(std::span<const double> alpha, std::span<const double> x);

/// Matrix of sigma_alpha.
RationalMatrix reflection_matrix(const RationalVector& alpha);

class ReflectionGroup {
 public:
  ReflectionGroup(std::vector<RationalMatrix> generators, std::vector<RationalMatrix> elements);

  std::size_t order() const { return elements_.size(); }
  const std::vector<RationalMatrix>& elements() const { return elements_; }
  const std::vector<RationalMatrix>& generators() const { return generators_; }
  bool contains(const RationalMatrix& m) const;

 private:
  std::vector<RationalMatrix> generators_;
  std::vector<RationalMatrix> elements_;  // sorted
};

inline constexpr std::size_t kDefaultGroupOrderCap = 1024;

/// Closes the reflections of `roots` under multiplication. Throws
/// NotARootSystem once more than `max_order` elements have been produced.
ReflectionGroup close_group(const std::vector<RationalVector>& roots,
                            std::size_t max_order = kDefaultGroupOrderCap);

struct MultiplicityProfile {
  Rational gamma_index;
  bool is_integer_case = false;  // every k(alpha) is a positive integer
};

/// Positive roots with their multiplicities plus the generated group.
/// Immutable after construction.
class RootSystem {
 public:
  /// Validates the root-system axioms and W-invariance of k.
  static RootSystem create(int dimension, std::vector<RationalVector> positive_roots,
                           std::vector<Rational> multiplicities,
                           std::size_t max_group_order = kDefaultGroupOrderCap);

  /// Z_2 on the real line: root 1 with k = gamma.
  static RootSystem rank_one(const Rational& gamma);
  /// Z_2^d: coordinate roots e_j with multiplicities k_j.
  static RootSystem product(const std::vector<Rational>& k);
  /// B_2 with k on the short roots e_1, e_2 and on the long roots e_1 +- e_2.
  static RootSystem b2(const Rational& k_short, const Rational& k_long);

  int dimension() const { return dimension_; }
  const std::vector<RationalVector>& positive_roots() const { return roots_; }
  const std::vector<Rational>& multiplicities() const { return k_; }
  const ReflectionGroup& group() const { return group_; }

  const Rational& gamma() const { return profile_.gamma_index; }
  bool is_integer_case() const { return profile_.is_integer_case; }
  const MultiplicityProfile& profile() const { return profile_; }

  /// True when every root is a multiple of a coordinate axis and each axis
  /// carries exactly one root, i.e. W = Z_2^d.
  bool is_product() const { return product_axis_.size() == static_cast<std::size_t>(dimension_); }
  /// For product systems: multiplicity attached to axis j.
  const Rational& axis_multiplicity(int j) const;
  /// For product systems: |a_j| where a_j e_j is the root on axis j.
  Rational axis_scale(int j) const;

  /// omega_k(x) = prod |<alpha,x>|^{2k(alpha)}.
  double weight(std::span<const double> x) const;

  /// Deterministic identifier ("z2:1", "z2xz2:1,2", ... or a JSON digest).
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

 private:
  RootSystem(int dimension, std::vector<RationalVector> roots, std::vector<Rational> k, ReflectionGroup group);

  int dimension_;
  std::vector<RationalVector> roots_;
  std::vector<Rational> k_;
  ReflectionGroup group_;
  MultiplicityProfile profile_;
  std::vector<std::size_t> product_axis_;  // axis j -> root index, only for product systems
  std::string label_;
};

/// omega_k evaluated at x.
double weight(const RootSystem& rs, std::span<const double> x);

/// c_k = (int e^{-|x|^2} omega_k(x) dx)^{-1}. Closed form for Z_2^d, exact
/// moment expansion for integer multiplicities, quadrature otherwise.
double mehta_constant(const RootSystem& rs);

/// For integer multiplicities: the rational M with
/// int e^{-|x|^2} omega_k(x) dx = pi^{d/2} M. Throws UnsupportedCase otherwise.
Rational gaussian_weight_moment(const RootSystem& rs);

/// {"dimension": d, "positive_roots": [[...]], "multiplicities": [...]} with
/// rationals as "p/q" strings (plain JSON integers are accepted too).
RootSystem root_system_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const RootSystem& rs);

/// Presets "z2:g", "z2xz2:k1,k2", "z2d:k1,...,kd", "b2:ks,kl".
RootSystem root_system_from_preset(const std::string& preset);

}  // namespace dunkl
