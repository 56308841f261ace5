#pragma once

#include <gmpxx.h>

#include <string>

#include "eds/errors.hpp"

namespace eds {

/// Exact rational scalar.  Values are kept canonical: lowest terms, positive
/// denominator, zero stored as 0/1.  All arithmetic in the library is exact;
/// the only floating-point computation lives in preimage_newton.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Canonical rendering "num/den", e.g. "3/2", "-1/1", "0/1".
std::string rational_str(const Rational& q);

/// Parses "p/q" or "p" (optional leading '-').  Rejects zero denominators and
/// anything that is not a plain base-10 integer literal on either side.
Rational parse_rational(const std::string& text);

}  // namespace eds
