#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q", "p" or a decimal literal such as "0.25" into a canonical
/// rational. Throws InvalidArgument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" for integers) form.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational pow(const Rational& base, unsigned exponent);

Rational factorial(unsigned n);

Rational dot(const RationalVector& a, const RationalVector& b);

std::vector<double> to_doubles(const RationalVector& v);

}  // namespace dunkl
