#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace chowform {

// Exact arithmetic substrate. Int is an arbitrary-precision signed integer,
// Rat a canonical fraction (denominator > 0, reduced, zero stored as 0/1).
// GMP maintains canonical form through arithmetic; construction goes through
// the helpers below.
using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p/q" or "p" (base 10). Throws parse_error on malformed input or q = 0.
Rat rat_from_string(const std::string& s);

Int int_from_string(const std::string& s);

/// t^e for signed e; e < 0 requires t != 0.
Rat rat_pow(const Rat& t, long e);

std::string to_string(const Int& v);

/// "p" when the denominator is 1, else "p/q".
std::string to_string(const Rat& v);

/// Int from a long that is known to fit (all spec-scale indices do).
long to_long(const Int& v);

std::string vector_to_string(const std::vector<Int>& v);

} // namespace chowform
