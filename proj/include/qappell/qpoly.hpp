#pragma once

#include <utility>

#include "qappell/poly.hpp"
#include "qappell/rational.hpp"
#include "qappell/zpoly.hpp"

namespace qappell {

/// Polynomial in the deformation parameter q over the rationals.
using QPoly = Poly<BigRational>;

/// The indeterminate q.
QPoly q_var();
/// q^k.
QPoly q_power(std::size_t k);

/// Decomposes p = content * primitive with primitive an integer polynomial
/// of positive leading coefficient. The zero polynomial maps to (0, {}).
std::pair<BigRational, zpoly::Coeffs> primitive_split(const QPoly& p);
QPoly from_integer(const zpoly::Coeffs& c, const BigRational& scale = 1);

/// Product through the integer kernel (faster than the generic schoolbook on
/// large operands).
QPoly mul(const QPoly& a, const QPoly& b);

/// Division with remainder over Q. Throws division_by_zero for b = 0.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

/// a / b, throwing arithmetic_error when the remainder is nonzero.
QPoly exact_div(const QPoly& a, const QPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

QPoly monic(const QPoly& a);

}  // namespace qappell
