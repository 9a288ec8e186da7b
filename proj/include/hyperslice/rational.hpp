#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperslice {

using Rational = mpq_class;

/// Parses "3", "-2.75", "1e-3", "5/8" exactly. Throws std::invalid_argument.
Rational parse_rational(std::string_view s);

/// "p/q" or "p" when the denominator is one.
std::string rational_to_string(const Rational& r);

/// Exact value of a finite double.
Rational rational_from_double(double d);

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double d) { return d; }

}  // namespace hyperslice
