#include "qappell/families.hpp"

#include <algorithm>
#include <string>

#include "qappell/error.hpp"
#include "qappell/qnumbers.hpp"

namespace qappell {

namespace {

QRat qrat(const QPoly& p) { return QRat(p); }
QRat qpow(std::size_t k) { return qrat(q_power(k)); }
QRat qint(unsigned n) { return qrat(q_integer(n)); }
QRat qfact_inv(unsigned n) { return qrat(q_factorial(n)).inverse(); }

const XPoly& x_poly() {
  static const XPoly x = XPoly::monomial(QRat(1), 1);
  return x;
}

Series hermite_generator(std::size_t order) {
  std::vector<QRat> c(order + 1);
  for (std::size_t k = 0; 2 * k <= order; ++k) {
    const QRat sign(k % 2 == 0 ? 1 : -1);
    c[2 * k] = sign * QRat::make(q_power(k == 0 ? 0 : k * (k - 1)), q_double_factorial_even(static_cast<unsigned>(k)));
  }
  return Series(order, std::move(c));
}

// Inputs common to every printed-theorem residual.
struct PrintedContext {
  std::vector<XPoly> polys;     // family polynomials P_0..P_max
  std::vector<QRat> numbers;    // family numbers P_m(0)
  std::vector<QRat> e_numbers;  // e_{m,q}; only filled for the Euler family
};

PrintedContext make_context(FamilyKind kind, int n_last) {
  const auto max_n = static_cast<std::size_t>(n_last);
  const AppellFamily fam = make_family(kind, max_n + 1);
  PrintedContext ctx{appell_polynomials(fam, max_n), family_numbers(fam, max_n), {}};
  if (kind == FamilyKind::euler) ctx.e_numbers = euler_numbers(max_n);
  return ctx;
}

// B_n(qx) - q^n (x - 1/(q[2])) B_{n-1}(x) + (1/[n]) sum_{k<=n-2} [n k] q^(k-1) b_{n-k} B_k(x)
XPoly residual_b1(const PrintedContext& c, unsigned n) {
  const QRat shift = (qpow(1) * qint(2)).inverse();
  XPoly r = scale_x_by_q(c.polys[n]) - qpow(n) * ((x_poly() - XPoly(shift)) * c.polys[n - 1]);
  XPoly sum;
  for (unsigned k = 0; k + 2 <= n; ++k) {
    const QRat coeff = qrat(q_binomial(n, static_cast<int>(k))) * QRat(q_var()).pow(static_cast<long>(k) - 1) *
                       c.numbers[n - k];
    sum += coeff * c.polys[k];
  }
  return r + qint(n).inverse() * sum;
}

// sum_{k=2}^{n} q^(n-k-1) b_k/[k]! D^k B_n - q^n (x - 1/(q[2])) D B_n + [n] B_n(qx)
XPoly residual_b2(const PrintedContext& c, unsigned n) {
  const QRat shift = (qpow(1) * qint(2)).inverse();
  XPoly r;
  XPoly derivative = q_derivative_x(c.polys[n]);
  const XPoly first_derivative = derivative;
  for (unsigned k = 2; k <= n; ++k) {
    derivative = q_derivative_x(derivative);
    const QRat coeff = QRat(q_var()).pow(static_cast<long>(n) - static_cast<long>(k) - 1) * c.numbers[k] * qfact_inv(k);
    r += coeff * derivative;
  }
  r -= qpow(n) * ((x_poly() - XPoly(shift)) * first_derivative);
  r += qint(n) * scale_x_by_q(c.polys[n]);
  return r;
}

enum class EulerSymbol { number, polynomial, at_zero };

XPoly euler_symbol(const PrintedContext& c, EulerSymbol reading, unsigned m) {
  switch (reading) {
    case EulerSymbol::number:
      return XPoly(c.e_numbers[m]);
    case EulerSymbol::polynomial:
      return c.polys[m];
    case EulerSymbol::at_zero:
      return XPoly(c.numbers[m]);
  }
  return {};
}

// E_n(qx) - 1/2 sum_{k=0}^{n-1} [n-1 k] q^k E_{n-k-1} E_k(x) - x q^n E_{n-1}(x)
XPoly residual_e1(const PrintedContext& c, unsigned n, EulerSymbol reading) {
  const QRat half(BigRational(1, 2));
  XPoly sum;
  for (unsigned k = 0; k + 1 <= n; ++k) {
    const QRat coeff = qrat(q_binomial(n - 1, static_cast<int>(k))) * qpow(k);
    sum += coeff * (euler_symbol(c, reading, n - k - 1) * c.polys[k]);
  }
  return scale_x_by_q(c.polys[n]) - half * sum - qpow(n) * (x_poly() * c.polys[n - 1]);
}

// 1/2 sum_{k=2}^{n} q^(n-k) e_{k-1}/[k-1]! D^k E_n - 1/2 q^(n-1) D E_n + x q^n D E_n - [n] E_n(qx)
XPoly residual_e2(const PrintedContext& c, unsigned n, EulerSymbol reading) {
  const QRat half(BigRational(1, 2));
  XPoly r;
  XPoly derivative = q_derivative_x(c.polys[n]);
  const XPoly first_derivative = derivative;
  for (unsigned k = 2; k <= n; ++k) {
    derivative = q_derivative_x(derivative);
    const XPoly symbol = euler_symbol(c, reading, k - 1);
    r += (half * qpow(n - k) * qfact_inv(k - 1)) * (symbol * derivative);
  }
  r -= (half * qpow(n - 1)) * first_derivative;
  r += qpow(n) * (x_poly() * first_derivative);
  r -= qint(n) * scale_x_by_q(c.polys[n]);
  return r;
}

// 1/(2q) sum_{k<=n-2} [n k] g_{n-k} q^k G_k(x) + [n](xq - 1/(2q)) q^(n-1) G_{n-1}(x)
//   + q^(n-1) G_n(x) - [n] G_n(qx)
XPoly residual_g1(const PrintedContext& c, unsigned n) {
  const QRat inv_2q = (QRat(2) * qpow(1)).inverse();
  XPoly sum;
  for (unsigned k = 0; k + 2 <= n; ++k) {
    sum += (qrat(q_binomial(n, static_cast<int>(k))) * c.numbers[n - k] * qpow(k)) * c.polys[k];
  }
  XPoly r = inv_2q * sum;
  const XPoly linear = qpow(1) * x_poly() - XPoly(inv_2q);
  r += (qint(n) * qpow(n - 1)) * (linear * c.polys[n - 1]);
  r += qpow(n - 1) * c.polys[n];
  r -= qint(n) * scale_x_by_q(c.polys[n]);
  return r;
}

// sum_{k=2}^{n} q^(n-k-1) g_k/(2[k]!) D^k G_n - q^(n-2)/2 D G_n + q^(n-1) G_n + x q^n D G_n - [n] G_n(qx)
XPoly residual_g2(const PrintedContext& c, unsigned n) {
  const QRat half(BigRational(1, 2));
  XPoly r;
  XPoly derivative = q_derivative_x(c.polys[n]);
  const XPoly first_derivative = derivative;
  for (unsigned k = 2; k <= n; ++k) {
    derivative = q_derivative_x(derivative);
    const QRat coeff =
        half * QRat(q_var()).pow(static_cast<long>(n) - static_cast<long>(k) - 1) * c.numbers[k] * qfact_inv(k);
    r += coeff * derivative;
  }
  r -= (half * qpow(n - 2)) * first_derivative;
  r += qpow(n - 1) * c.polys[n];
  r += qpow(n) * (x_poly() * first_derivative);
  r -= qint(n) * scale_x_by_q(c.polys[n]);
  return r;
}

}  // namespace

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::bernoulli:
      return "bernoulli";
    case FamilyKind::euler:
      return "euler";
    case FamilyKind::genocchi:
      return "genocchi";
    case FamilyKind::hermite:
      return "hermite";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view text) {
  for (FamilyKind k : kAllFamilies) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

AppellFamily make_family(FamilyKind kind, std::size_t order) {
  if (order < 2) throw range_error("make_family: order must be at least 2");
  switch (kind) {
    case FamilyKind::bernoulli: {
      const Series e = eq_exponential(order + 1);
      const Series t = Series::monomial(order + 1, 1);
      return AppellFamily("bernoulli", series_div(t, e - Series::constant(order + 1, QRat(1))));
    }
    case FamilyKind::euler: {
      const Series e = eq_exponential(order);
      return AppellFamily("euler",
                          series_div(Series::constant(order, QRat(2)), e + Series::constant(order, QRat(1))));
    }
    case FamilyKind::genocchi: {
      const Series e = eq_exponential(order);
      return AppellFamily("genocchi",
                          series_div(Series::monomial(order, 1, QRat(2)), e + Series::constant(order, QRat(1))));
    }
    case FamilyKind::hermite:
      return AppellFamily("hermite", hermite_generator(order));
  }
  throw error("unknown family kind");
}

Series euler_number_series(std::size_t order) {
  if (order < 1) throw range_error("euler_number_series: order must be at least 1");
  const std::size_t work = order + 1;
  const Series e = eq_exponential(work);
  const Series numerator = series_mul(Series::monomial(work, 1), e);
  const Series denominator = series_scale_arg(e, QRat(2)) - Series::constant(work, QRat(1));
  return series_div(numerator, denominator);
}

std::vector<QRat> euler_numbers(std::size_t max_n) {
  const Series s = euler_number_series(std::max<std::size_t>(max_n, 1));
  std::vector<QRat> out;
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(qrat(q_factorial(static_cast<unsigned>(n))) * s[n]);
  return out;
}

const char* to_string(PrintedTheorem t) {
  switch (t) {
    case PrintedTheorem::b1:
      return "b1";
    case PrintedTheorem::b2:
      return "b2";
    case PrintedTheorem::e1_number:
      return "e1-number";
    case PrintedTheorem::e1_polynomial:
      return "e1-polynomial";
    case PrintedTheorem::e1_at_zero:
      return "e1-at-zero";
    case PrintedTheorem::e2_number:
      return "e2-number";
    case PrintedTheorem::e2_at_zero:
      return "e2-at-zero";
    case PrintedTheorem::g1:
      return "g1";
    case PrintedTheorem::g2:
      return "g2";
  }
  return "?";
}

FamilyKind family_of(PrintedTheorem t) {
  switch (t) {
    case PrintedTheorem::b1:
    case PrintedTheorem::b2:
      return FamilyKind::bernoulli;
    case PrintedTheorem::g1:
    case PrintedTheorem::g2:
      return FamilyKind::genocchi;
    default:
      return FamilyKind::euler;
  }
}

std::vector<XPoly> printed_theorem_residuals(PrintedTheorem theorem, int n_first, int n_last) {
  if (n_first < 2) throw range_error("printed theorems are stated for n >= 2");
  if (n_last < n_first) return {};
  const PrintedContext ctx = make_context(family_of(theorem), n_last);
  std::vector<XPoly> out;
  for (int n = n_first; n <= n_last; ++n) {
    const auto un = static_cast<unsigned>(n);
    switch (theorem) {
      case PrintedTheorem::b1:
        out.push_back(residual_b1(ctx, un));
        break;
      case PrintedTheorem::b2:
        out.push_back(residual_b2(ctx, un));
        break;
      case PrintedTheorem::e1_number:
        out.push_back(residual_e1(ctx, un, EulerSymbol::number));
        break;
      case PrintedTheorem::e1_polynomial:
        out.push_back(residual_e1(ctx, un, EulerSymbol::polynomial));
        break;
      case PrintedTheorem::e1_at_zero:
        out.push_back(residual_e1(ctx, un, EulerSymbol::at_zero));
        break;
      case PrintedTheorem::e2_number:
        out.push_back(residual_e2(ctx, un, EulerSymbol::number));
        break;
      case PrintedTheorem::e2_at_zero:
        out.push_back(residual_e2(ctx, un, EulerSymbol::at_zero));
        break;
      case PrintedTheorem::g1:
        out.push_back(residual_g1(ctx, un));
        break;
      case PrintedTheorem::g2:
        out.push_back(residual_g2(ctx, un));
        break;
    }
  }
  return out;
}

DiscrepancyReport verify_printed_theorem(FamilyKind kind, PrintedTheorem theorem, int n_first, int n_last) {
  if (kind != family_of(theorem) || n_last < n_first) {
    DiscrepancyReport r;
    r.claim = to_string(theorem);
    return r;
  }
  return DiscrepancyReport::from_residuals(to_string(theorem), n_first,
                                           printed_theorem_residuals(theorem, n_first, n_last));
}

DiscrepancyReport verify_printed_theorem(FamilyKind kind, PrintedTheorem theorem, int n) {
  return verify_printed_theorem(kind, theorem, n, n);
}

DiscrepancyReport verify_euler_number_relation(int max_n) {
  if (max_n < 0) return DiscrepancyReport::from_residuals("euler-relation", 0, {});
  const auto top = static_cast<std::size_t>(max_n);
  const auto e = euler_numbers(top);
  const auto polys = appell_polynomials(make_family(FamilyKind::euler, std::max<std::size_t>(top, 2)), top);
  const QRat half(BigRational(1, 2));
  std::vector<XPoly> residuals;
  for (std::size_t n = 0; n <= top; ++n) {
    const QRat scaled = QRat(pow(BigRational(2), static_cast<long>(n))) * eval_x(polys[n], half);
    residuals.push_back(XPoly(e[n] - scaled));
  }
  return DiscrepancyReport::from_residuals("euler-relation", 0, residuals);
}

RationalPoly classical_limit(const AppellFamily& fam, std::size_t n) {
  return eval_q(appell_polynomial(fam, n), BigRational(1));
}

RationalPoly classical_limit(FamilyKind kind, std::size_t n) {
  return classical_limit(make_family(kind, std::max<std::size_t>(n, 2)), n);
}

}  // namespace qappell
