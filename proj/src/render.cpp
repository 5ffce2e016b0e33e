#include "qappell/render.hpp"

#include "qappell/error.hpp"

namespace qappell {

namespace {

Json coeff_array(const QPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

QPoly poly_from_array(const Json& a, const char* field) {
  if (!a.is_array()) throw error(std::string("QRat field '") + field + "' must be an array");
  std::vector<BigRational> coeffs;
  for (const auto& c : a) {
    if (!c.is_string()) throw error(std::string("QRat field '") + field + "' must hold \"p/q\" strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return QPoly(std::move(coeffs));
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::string latex_power(const std::string& var, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^{" + std::to_string(k) + "}";
}

std::size_t term_count(const QPoly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coeffs()) n += is_zero(c) ? 0 : 1;
  return n;
}

bool all_negative(const QPoly& p) {
  for (const auto& c : p.coeffs()) {
    if (sgn(c) > 0) return false;
  }
  return !p.is_zero();
}

}  // namespace

Json to_json(const QRat& r) {
  Json j;
  j["num"] = coeff_array(r.num());
  j["den"] = coeff_array(r.den());
  return j;
}

Json to_json(const XPoly& p) {
  Json j;
  j["n"] = p.degree();
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json to_json(const RationalPoly& p) { return to_json(to_xpoly(p)); }

Json to_json(const VerificationReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["family"] = r.family;
  j["max_n"] = r.n_last;
  j["passed"] = r.passed;
  j["first_failure"] = optional_int(r.first_failure);
  return j;
}

Json to_json(const DiscrepancyReport& r) {
  Json j;
  j["claim"] = r.claim;
  j["status"] = to_string(r.status);
  j["counterexample_n"] = optional_int(r.counterexample_n);
  j["residual"] = r.residual ? to_json(*r.residual) : Json(nullptr);
  return j;
}

QRat qrat_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw error("QRat JSON needs \"num\" and \"den\"");
  }
  return QRat::make(poly_from_array(j["num"], "num"), poly_from_array(j["den"], "den"));
}

XPoly xpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw error("XPoly JSON needs a \"coeffs\" array");
  }
  std::vector<QRat> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(qrat_from_json(c));
  XPoly p(std::move(coeffs));
  if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<int>() != p.degree())) {
    throw error("XPoly JSON: \"n\" does not match the coefficient list");
  }
  return p;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string to_latex(const BigRational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  const std::string sign = sgn(c) < 0 ? "-" : "";
  return sign + "\\frac{" + BigInt(abs(c.get_num())).get_str() + "}{" + c.get_den().get_str() + "}";
}

std::string to_latex(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const BigRational& c = p.coeffs()[k];
    if (is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const BigRational mag = abs(c);
    const std::string mono = latex_power("q", k);
    if (mono.empty()) {
      out += to_latex(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_latex(mag) + " " + mono;
    }
  }
  return out;
}

std::string to_latex(const QRat& r) {
  const QPoly den = r.den();
  if (den.degree() == 0) return to_latex(r.num());
  const QPoly num = r.num();
  if (all_negative(num)) return "-\\frac{" + to_latex(-num) + "}{" + to_latex(den) + "}";
  return "\\frac{" + to_latex(num) + "}{" + to_latex(den) + "}";
}

std::string to_latex(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const QRat& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    // Pull a common minus sign out so that -(1 + q) x reads as "- (...) x".
    const bool negative = all_negative(c.num());
    const QRat mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = latex_power("x", i);
    if (mono.empty()) {
      out += to_latex(mag);
      continue;
    }
    if (mag == QRat(1)) {
      out += mono;
      continue;
    }
    const bool bracket = mag.den().degree() == 0 && term_count(mag.num()) > 1;
    const std::string body = to_latex(mag);
    out += (bracket ? "\\left(" + body + "\\right)" : body) + " " + mono;
  }
  return out;
}

std::string latex_display(const std::string& lhs, const std::string& rhs) {
  return "\\[ " + lhs + " = " + rhs + " \\]";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace qappell
