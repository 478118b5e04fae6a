#pragma once

#include <gmpxx.h>

#include <string>

namespace shufcompat {

/// Exact rational scalar used by every algebraic module.
using Rational = mpq_class;

/// Canonical "p" or "p/q" text.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace shufcompat
