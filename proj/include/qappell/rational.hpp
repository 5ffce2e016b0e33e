#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qappell {

using BigInt = mpz_class;
/// GMP rationals are kept canonical (reduced, positive denominator) by every
/// arithmetic operation.
using BigRational = mpq_class;

inline bool is_zero(const BigRational& r) { return sgn(r) == 0; }

/// "p/q" with the denominator omitted when it is 1.
std::string to_string(const BigRational& r);

/// Parses "p", "-p" or "p/q". Throws qappell::error on malformed input or a
/// zero denominator.
BigRational parse_rational(std::string_view text);

BigRational pow(const BigRational& base, long exponent);

}  // namespace qappell
