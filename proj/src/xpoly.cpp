#include "qappell/xpoly.hpp"

#include <vector>

#include "qappell/qnumbers.hpp"

namespace qappell {

XPoly q_derivative_x(const XPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<QRat> out(p.size() - 1);
  for (std::size_t n = 1; n < p.size(); ++n) {
    const QRat& c = p.coeffs()[n];
    if (!c.is_zero()) out[n - 1] = QRat(q_integer(static_cast<unsigned>(n))) * c;
  }
  return XPoly(std::move(out));
}

XPoly q_derivative_x(const XPoly& p, unsigned k) {
  XPoly r = p;
  for (unsigned i = 0; i < k && !r.is_zero(); ++i) r = q_derivative_x(r);
  return r;
}

XPoly scale_x_by_q(const XPoly& p) {
  std::vector<QRat> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    const QRat& c = p.coeffs()[k];
    if (!c.is_zero()) out[k] = QRat(q_power(k)) * c;
  }
  return XPoly(std::move(out));
}

XPoly scale_x(const XPoly& p, const QRat& c) {
  std::vector<QRat> out(p.size());
  QRat power(1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!p.coeffs()[k].is_zero()) out[k] = power * p.coeffs()[k];
    if (k + 1 < p.size()) power *= c;
  }
  return XPoly(std::move(out));
}

QRat eval_x(const XPoly& p, const QRat& x0) { return p.eval(x0); }

RationalPoly eval_q(const XPoly& p, const BigRational& q0) {
  return p.map([&](const QRat& c) { return c.eval(q0); });
}

XPoly to_xpoly(const RationalPoly& p) {
  return p.map([](const BigRational& c) { return QRat(c); });
}

std::string to_text(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const QRat& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    std::string coeff;
    bool negative = false;
    if (c.is_constant()) {
      BigRational v = c.constant_value();
      negative = sgn(v) < 0;
      v = abs(v);
      if (v != 1 || mono.empty()) coeff = to_string(v);
    } else {
      coeff = "(" + to_text(c) + ")";
    }
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (coeff.empty()) {
      out += mono;
    } else if (mono.empty()) {
      out += coeff;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace qappell
