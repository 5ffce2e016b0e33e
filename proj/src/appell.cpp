#include "qappell/appell.hpp"

#include <algorithm>
#include <string>

#include "qappell/error.hpp"
#include "qappell/qnumbers.hpp"

namespace qappell {

namespace {

QRat qrat(const QPoly& p) { return QRat(p); }

void require(bool ok, const std::string& what) {
  if (!ok) throw range_error(what);
}

// t * s, keeping the order.
Series times_t(const Series& s) {
  std::vector<QRat> c(s.order() + 2);
  for (std::size_t i = 0; i <= s.order(); ++i) c[i + 1] = s[i];
  return Series(s.order() + 1, std::move(c));
}

void require_degree_range(const AppellFamily& fam, int n_first, int n_last, const char* op) {
  require(n_first >= 1 && n_last >= n_first && static_cast<std::size_t>(n_last) + 1 <= fam.order(),
          std::string(op) + ": need 1 <= n <= order - 1 (order " + std::to_string(fam.order()) + ", n in [" +
              std::to_string(n_first) + ", " + std::to_string(n_last) + "])");
}

}  // namespace

AppellFamily::AppellFamily(std::string name, Series generator)
    : name_(std::move(name)), generator_(std::move(generator)) {
  if (generator_.is_zero()) throw error("Appell generator '" + name_ + "' is identically zero");
}

std::vector<QRat> family_numbers(const AppellFamily& fam, std::size_t max_n) {
  require(max_n <= fam.order(), "family_numbers: index " + std::to_string(max_n) + " exceeds generator order " +
                                    std::to_string(fam.order()));
  std::vector<QRat> out;
  out.reserve(max_n + 1);
  QPoly factorial(BigRational(1));
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (n >= 2) factorial = mul(factorial, q_integer(static_cast<unsigned>(n)));
    const QRat& c = fam.generator()[n];
    out.push_back(c.is_zero() ? QRat() : qrat(factorial) * c);
  }
  return out;
}

namespace {

XPoly polynomial_from_numbers(const std::vector<QRat>& numbers, std::size_t n) {
  std::vector<QRat> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (numbers[k].is_zero()) continue;
    coeffs[n - k] = qrat(q_binomial(static_cast<unsigned>(n), static_cast<int>(k))) * numbers[k];
  }
  return XPoly(std::move(coeffs));
}

}  // namespace

XPoly appell_polynomial(const AppellFamily& fam, std::size_t n) {
  require(n <= fam.order(), "appell_polynomial: degree " + std::to_string(n) + " exceeds generator order " +
                                std::to_string(fam.order()));
  return polynomial_from_numbers(family_numbers(fam, n), n);
}

std::vector<XPoly> appell_polynomials(const AppellFamily& fam, std::size_t max_n) {
  const auto numbers = family_numbers(fam, max_n);
  std::vector<XPoly> out;
  out.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(polynomial_from_numbers(numbers, n));
  return out;
}

std::vector<QRat> alpha_coefficients(const AppellFamily& fam, std::size_t max_n) {
  const std::size_t shift = fam.generator().valuation();
  if (shift > 1) {
    throw error("alpha_coefficients: generator '" + fam.name() + "' vanishes to order " + std::to_string(shift) +
                " at t = 0; only a single cancelled factor of t is supported");
  }
  require(max_n + shift <= fam.order() && max_n + 1 <= fam.order(),
          "alpha_coefficients: index " + std::to_string(max_n) + " needs a generator of order > " +
              std::to_string(max_n + shift));
  // Only coefficients up to t^(max_n + shift) influence the requested alphas.
  const Series a = fam.generator().truncated(std::max<std::size_t>(max_n + shift, 1));
  const Series numerator = times_t(series_q_derivative(a));
  const Series denominator = series_scale_arg(a, qrat(q_var()));
  const Series quotient = series_div(numerator, denominator);

  std::vector<QRat> out;
  out.reserve(max_n + 1);
  QPoly factorial(BigRational(1));
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (n >= 2) factorial = mul(factorial, q_integer(static_cast<unsigned>(n)));
    out.push_back(quotient[n].is_zero() ? QRat() : qrat(factorial) * quotient[n]);
  }
  return out;
}

VerificationReport verify_lowering(const AppellFamily& fam, int n, int k) {
  require(k >= 0 && n >= k && static_cast<std::size_t>(n) <= fam.order(),
          "verify_lowering: need 0 <= k <= n <= order");
  const auto table = appell_polynomials(fam, static_cast<std::size_t>(n));
  const QRat ratio = QRat::make(q_factorial(static_cast<unsigned>(n - k)), q_factorial(static_cast<unsigned>(n)));
  XPoly residual = table[n - k] - ratio * q_derivative_x(table[n], static_cast<unsigned>(k));
  return VerificationReport::from_residuals("lowering(k=" + std::to_string(k) + ")", fam.name(), n,
                                            {std::move(residual)});
}

VerificationReport verify_lowering_all(const AppellFamily& fam, int max_n) {
  require(max_n >= 0 && static_cast<std::size_t>(max_n) <= fam.order(), "verify_lowering_all: need 0 <= n <= order");
  const auto table = appell_polynomials(fam, static_cast<std::size_t>(max_n));
  std::vector<XPoly> residuals;
  for (int n = 0; n <= max_n; ++n) {
    XPoly first_nonzero;
    XPoly derivative = table[n];
    for (int k = 0; k <= n; ++k) {
      if (k > 0) derivative = q_derivative_x(derivative);
      const QRat ratio =
          QRat::make(q_factorial(static_cast<unsigned>(n - k)), q_factorial(static_cast<unsigned>(n)));
      XPoly residual = table[n - k] - ratio * derivative;
      if (!residual.is_zero()) {
        first_nonzero = std::move(residual);
        break;
      }
    }
    residuals.push_back(std::move(first_nonzero));
  }
  return VerificationReport::from_residuals("lowering", fam.name(), 0, std::move(residuals));
}

VerificationReport verify_recurrence_a1(const AppellFamily& fam, int n) { return verify_recurrence_a1(fam, n, n); }

VerificationReport verify_recurrence_a1(const AppellFamily& fam, int n_first, int n_last) {
  require_degree_range(fam, n_first, n_last, "verify_recurrence_a1");
  const auto table = appell_polynomials(fam, static_cast<std::size_t>(n_last));
  const auto alpha = alpha_coefficients(fam, static_cast<std::size_t>(n_last));
  const XPoly x = XPoly::monomial(QRat(1), 1);

  std::vector<XPoly> residuals;
  for (int n = n_first; n <= n_last; ++n) {
    const auto un = static_cast<unsigned>(n);
    const QRat qn = qrat(q_integer(un));
    XPoly lhs = qn * scale_x_by_q(table[n]);
    XPoly rhs = (qn * qrat(q_power(un))) * (x * table[n - 1]);
    for (int k = 0; k <= n; ++k) {
      if (alpha[k].is_zero()) continue;
      const QRat c = qrat(q_binomial(un, k)) * alpha[k] * qrat(q_power(static_cast<std::size_t>(n - k)));
      rhs += c * table[n - k];
    }
    residuals.push_back(lhs - rhs);
  }
  return VerificationReport::from_residuals("a1", fam.name(), n_first, std::move(residuals));
}

VerificationReport verify_difference_a2(const AppellFamily& fam, int n) { return verify_difference_a2(fam, n, n); }

VerificationReport verify_difference_a2(const AppellFamily& fam, int n_first, int n_last) {
  require_degree_range(fam, n_first, n_last, "verify_difference_a2");
  const auto table = appell_polynomials(fam, static_cast<std::size_t>(n_last));
  const auto alpha = alpha_coefficients(fam, static_cast<std::size_t>(n_last));
  const XPoly x = XPoly::monomial(QRat(1), 1);

  std::vector<XPoly> residuals;
  for (int n = n_first; n <= n_last; ++n) {
    const auto un = static_cast<unsigned>(n);
    XPoly sum;
    XPoly derivative = table[n];
    for (int k = 0; k <= n; ++k) {
      if (k > 0) derivative = q_derivative_x(derivative);
      if (alpha[k].is_zero()) continue;
      const QRat c = QRat::make(q_power(static_cast<std::size_t>(n - k)), q_factorial(static_cast<unsigned>(k))) *
                     alpha[k];
      sum += c * derivative;
    }
    sum += qrat(q_power(un)) * (x * q_derivative_x(table[n]));
    sum -= qrat(q_integer(un)) * scale_x_by_q(table[n]);
    residuals.push_back(std::move(sum));
  }
  return VerificationReport::from_residuals("a2", fam.name(), n_first, std::move(residuals));
}

}  // namespace qappell
