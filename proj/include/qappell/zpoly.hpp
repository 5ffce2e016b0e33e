#pragma once

#include <optional>
#include <vector>

#include "qappell/rational.hpp"

namespace qappell {

/// Integer polynomial kernel backing QPoly/QRat arithmetic. Coefficients are
/// ascending, trailing zeros trimmed. All heavy lifting of the rational
/// function field (products, exact quotients, gcds) happens here on
/// primitive integer polynomials.
namespace zpoly {

using Coeffs = std::vector<BigInt>;

void trim(Coeffs& a);
inline int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

Coeffs add(const Coeffs& a, const Coeffs& b);
Coeffs sub(const Coeffs& a, const Coeffs& b);
Coeffs scale(const Coeffs& a, const BigInt& s);
/// Schoolbook for short operands, Kronecker substitution otherwise.
Coeffs mul(const Coeffs& a, const Coeffs& b);
Coeffs mul_schoolbook(const Coeffs& a, const Coeffs& b);

/// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
BigInt content(const Coeffs& a);

/// Splits a nonzero polynomial as unit_content * primitive where primitive
/// has a positive leading coefficient. Returns the signed content.
BigInt make_primitive(Coeffs& a);

/// Quotient a / b if b divides a over Z, otherwise nullopt. b must be nonzero.
std::optional<Coeffs> divide_exact(const Coeffs& a, const Coeffs& b);

/// Like divide_exact but a remainder is an internal error.
Coeffs divide_exact_or_throw(const Coeffs& a, const Coeffs& b);

struct GcdResult {
  Coeffs gcd;       ///< primitive, positive leading coefficient
  Coeffs cofactor_a;  ///< a / gcd
  Coeffs cofactor_b;  ///< b / gcd
};

/// Gcd of two primitive nonzero polynomials by the dense modular algorithm:
/// images modulo word-size primes combined by CRT until stable, then certified
/// by exact trial division.
GcdResult gcd_primitive(const Coeffs& a, const Coeffs& b);

BigRational eval(const Coeffs& a, const BigRational& at);

}  // namespace zpoly
}  // namespace qappell
