#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hartree {

/** Exact rational arithmetic. All exponent bookkeeping runs on these; doubles
 *  only appear at the boundary to the grid code. */
using Rational = mpq_class;

/** Build a canonical rational from an integer pair (den > 0 after reduction). */
Rational rat(long num, long den = 1);

/** Parse "3", "-7/4" or a terminating decimal such as "1.25" into an exact
 *  rational. Returns nullopt on malformed input (including division by zero,
 *  embedded whitespace, or trailing junk). */
std::optional<Rational> parse_rational(const std::string& text);

/** Canonical display form: "num/den", or "num" when den == 1. */
std::string rational_str(const Rational& q);

double to_double(const Rational& q);

}  // namespace hartree
