#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qappell/report.hpp"

namespace qappell {

using Json = nlohmann::ordered_json;

/// {"num": ["p/q", ...], "den": [...]}, index = power of q, den monic.
Json to_json(const QRat& r);
/// {"n": degree, "coeffs": [QRat, ...]} ascending in x; the zero polynomial
/// has n = -1 and no coefficients.
Json to_json(const XPoly& p);
Json to_json(const RationalPoly& p);
Json to_json(const VerificationReport& r);
Json to_json(const DiscrepancyReport& r);

/// Inverses of to_json; throw qappell::error on malformed input.
QRat qrat_from_json(const Json& j);
XPoly xpoly_from_json(const Json& j);

/// Two-space indented JSON followed by a newline.
std::string dump(const Json& j);

/// LaTeX bodies (no math delimiters). q-polynomials ascend in q, x-polynomials
/// descend in x.
std::string to_latex(const QPoly& p);
std::string to_latex(const QRat& r);
std::string to_latex(const XPoly& p);
std::string to_latex(const BigRational& c);

/// `\[ lhs = rhs \]`
std::string latex_display(const std::string& lhs, const std::string& rhs);

/// One CSV field, quoted only when needed.
std::string csv_field(const std::string& s);

}  // namespace qappell
