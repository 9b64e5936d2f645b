#include "dunkl/rational.hpp"

#include <cctype>

#include "dunkl/errors.hpp"

namespace dunkl {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw InvalidArgument("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
      throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !is_integer_literal(whole)) ||
        (!frac.empty() && !is_integer_literal(frac)) || (!frac.empty() && !std::isdigit(static_cast<unsigned char>(frac.front())))) {
      throw InvalidArgument("malformed decimal literal '" + std::string(text) + "'");
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class w = whole.empty() ? mpz_class(0) : parse_integer(whole);
    mpz_class f = frac.empty() ? mpz_class(0) : parse_integer(frac);
    Rational r(w * scale + f, scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  if (!is_integer_literal(s)) {
    throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
  }
  return Rational(parse_integer(s));
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<double> to_doubles(const RationalVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

}  // namespace dunkl
