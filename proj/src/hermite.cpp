#include "qappell/hermite.hpp"

#include <algorithm>
#include <string>

#include "qappell/error.hpp"
#include "qappell/qnumbers.hpp"

namespace qappell {

namespace {

QRat qrat(const QPoly& p) { return QRat(p); }

std::vector<XPoly> series_table(int max_n) {
  std::vector<XPoly> out;
  for (int n = 0; n <= max_n; ++n) out.push_back(hermite_series_form(n));
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw range_error(what);
}

}  // namespace

XPoly hermite_series_form_unnormalised(int n) {
  require(n >= 0, "hermite_series_form: n must be non-negative");
  const auto un = static_cast<unsigned>(n);
  std::vector<QRat> coeffs(un + 1);
  for (unsigned k = 0; 2 * k <= un; ++k) {
    const QPoly den = mul(q_double_factorial_even(k), q_factorial(un - 2 * k));
    const QRat term = QRat::make(q_power(k == 0 ? 0 : k * (k - 1)), den);
    coeffs[un - 2 * k] = k % 2 == 0 ? term : -term;
  }
  return XPoly(std::move(coeffs));
}

XPoly hermite_series_form(int n) {
  return qrat(q_factorial(static_cast<unsigned>(std::max(n, 0)))) * hermite_series_form_unnormalised(n);
}

VerificationReport verify_hermite_recurrence(int n) { return verify_hermite_recurrence(n, n); }

VerificationReport verify_hermite_recurrence(int n_first, int n_last) {
  require(n_first >= 2, "verify_hermite_recurrence: n must be at least 2");
  const auto h = series_table(n_last);
  const XPoly x = XPoly::monomial(QRat(1), 1);
  std::vector<XPoly> residuals;
  for (int n = n_first; n <= n_last; ++n) {
    const auto un = static_cast<unsigned>(n);
    XPoly r = scale_x_by_q(h[n]) - qrat(q_power(un)) * (x * h[n - 1]);
    r += qrat(mul(q_integer(un - 1), q_power(un - 2))) * h[n - 2];
    residuals.push_back(std::move(r));
  }
  return VerificationReport::from_residuals("h1", "hermite", n_first, std::move(residuals));
}

VerificationReport verify_hermite_difference(int n) { return verify_hermite_difference(n, n); }

VerificationReport verify_hermite_difference(int n_first, int n_last) {
  require(n_first >= 1, "verify_hermite_difference: n must be at least 1");
  const auto h = series_table(n_last);
  const XPoly x = XPoly::monomial(QRat(1), 1);
  std::vector<XPoly> residuals;
  for (int n = n_first; n <= n_last; ++n) {
    const auto un = static_cast<unsigned>(n);
    const XPoly d1 = q_derivative_x(h[n]);
    // q^(n-2) is q^-1 at n = 1, where D^2 H_1 vanishes anyway.
    XPoly r = QRat(q_var()).pow(static_cast<long>(n) - 2) * q_derivative_x(d1);
    r -= qrat(q_power(un)) * (x * d1);
    r += qrat(q_integer(un)) * scale_x_by_q(h[n]);
    residuals.push_back(std::move(r));
  }
  return VerificationReport::from_residuals("h2", "hermite", n_first, std::move(residuals));
}

VerificationReport verify_hermite_generator_ratio(int order) {
  require(order >= 2, "verify_hermite_generator_ratio: order must be at least 2");
  const Series h = make_family(FamilyKind::hermite, static_cast<std::size_t>(order)).generator();
  const Series dh = series_q_derivative(h);
  const Series hq = series_scale_arg(h, qrat(q_var())).truncated(dh.order());
  std::vector<XPoly> residuals;
  for (std::size_t n = 0; n <= dh.order(); ++n) {
    const QRat shifted = n == 0 ? QRat() : hq[n - 1];
    residuals.push_back(XPoly(dh[n] + shifted));
  }
  return VerificationReport::from_residuals("generator-ratio", "hermite", 0, std::move(residuals));
}

VerificationReport verify_hermite_cross_construction(int max_n) {
  require(max_n >= 0, "verify_hermite_cross_construction: max_n must be non-negative");
  const AppellFamily fam = make_family(FamilyKind::hermite, std::max<std::size_t>(max_n, 2));
  const auto from_generator = appell_polynomials(fam, static_cast<std::size_t>(max_n));
  std::vector<XPoly> residuals;
  for (int n = 0; n <= max_n; ++n) residuals.push_back(from_generator[n] - hermite_series_form(n));
  return VerificationReport::from_residuals("cross-construction", "hermite", 0, std::move(residuals));
}

DiscrepancyReport check_h0_normalization(int max_n) {
  if (max_n < 0) return DiscrepancyReport::from_residuals("h0-normalization", 0, {});
  std::vector<XPoly> residuals;
  for (int n = 0; n <= max_n; ++n) residuals.push_back(hermite_series_form_unnormalised(n) - hermite_series_form(n));
  return DiscrepancyReport::from_residuals("h0-normalization", 0, residuals);
}

}  // namespace qappell
