#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "3", "-2/7", "0.125" or "1e-3" into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace dunkl
