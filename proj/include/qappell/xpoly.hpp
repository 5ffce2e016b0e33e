#pragma once

#include <string>

#include "qappell/poly.hpp"
#include "qappell/qrat.hpp"

namespace qappell {

/// Polynomial in x with coefficients in Q(q).
using XPoly = Poly<QRat>;
/// Polynomial in x over the rationals (q specialised to a number).
using RationalPoly = Poly<BigRational>;

/// Jackson derivative in x: x^n -> [n]_q x^(n-1).
XPoly q_derivative_x(const XPoly& p);
/// k-fold application of q_derivative_x.
XPoly q_derivative_x(const XPoly& p, unsigned k);

/// p(q x).
XPoly scale_x_by_q(const XPoly& p);
/// p(c x).
XPoly scale_x(const XPoly& p, const QRat& c);

/// p(x0) with coefficients staying in Q(q).
QRat eval_x(const XPoly& p, const QRat& x0);

/// Coefficientwise q -> q0; throws pole_error if a coefficient has a pole there.
RationalPoly eval_q(const XPoly& p, const BigRational& q0);

/// Lifts a polynomial with rational coefficients.
XPoly to_xpoly(const RationalPoly& p);

/// Plain text, descending powers of x, e.g. "x^2 - (1 + q)*x + 1/2".
std::string to_text(const XPoly& p);

}  // namespace qappell
