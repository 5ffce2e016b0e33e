#include "qappell/series.hpp"

#include <string>

#include "qappell/error.hpp"
#include "qappell/qnumbers.hpp"

namespace qappell {

namespace {

void require_same_order(const Series& a, const Series& b, const char* op) {
  if (a.order() != b.order()) {
    throw order_mismatch(std::string(op) + ": series orders differ (" + std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()) + ")");
  }
}

}  // namespace

Series::Series(std::size_t order, std::vector<QRat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > order + 1) {
    throw range_error("series of order " + std::to_string(order) + " given " + std::to_string(coeffs_.size()) +
                      " coefficients");
  }
  coeffs_.resize(order + 1);
}

Series Series::constant(std::size_t order, const QRat& c) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(std::size_t order, std::size_t power, const QRat& c) {
  Series s(order);
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

bool Series::is_zero() const { return valuation() > order(); }

std::size_t Series::valuation() const {
  std::size_t m = 0;
  while (m < coeffs_.size() && coeffs_[m].is_zero()) ++m;
  return m;
}

Series Series::truncated(std::size_t new_order) const {
  if (new_order > order()) {
    throw range_error("cannot truncate a series of order " + std::to_string(order()) + " to order " +
                      std::to_string(new_order));
  }
  return Series(new_order, std::vector<QRat>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

Series& Series::operator+=(const Series& o) {
  require_same_order(*this, o, "series addition");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  require_same_order(*this, o, "series subtraction");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Series operator-(const Series& a) {
  Series r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series operator*(const QRat& s, const Series& a) {
  Series r = a;
  for (auto& c : r.coeffs_) c = s * c;
  return r;
}

Series series_mul(const Series& a, const Series& b) {
  require_same_order(a, b, "series_mul");
  const std::size_t n = a.order();
  std::vector<QRat> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return Series(n, std::move(c));
}

Series series_div(const Series& a, const Series& b) {
  require_same_order(a, b, "series_div");
  const std::size_t m = b.valuation();
  if (m > b.order()) throw zero_divisor("series_div: divisor vanishes to order " + std::to_string(b.order()));
  for (std::size_t i = 0; i < m; ++i) {
    if (!a[i].is_zero()) {
      throw non_cancellable_zero("series_div: dividend coefficient of t^" + std::to_string(i) +
                                 " is nonzero but the divisor starts at t^" + std::to_string(m));
    }
  }
  const std::size_t n = a.order() - m;
  const QRat lead_inv = b[m].inverse();
  std::vector<QRat> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    QRat acc = a[k + m];
    for (std::size_t j = 1; j <= k; ++j) {
      if (b[m + j].is_zero() || c[k - j].is_zero()) continue;
      acc -= b[m + j] * c[k - j];
    }
    c[k] = acc * lead_inv;
  }
  return Series(n, std::move(c));
}

Series series_scale_arg(const Series& a, const QRat& c) {
  std::vector<QRat> r(a.order() + 1);
  QRat power(1);
  for (std::size_t n = 0; n <= a.order(); ++n) {
    if (!a[n].is_zero()) r[n] = power * a[n];
    if (n < a.order()) power *= c;
  }
  return Series(a.order(), std::move(r));
}

Series series_q_derivative(const Series& a) {
  if (a.order() < 1) throw range_error("series_q_derivative needs order >= 1");
  std::vector<QRat> r(a.order());
  for (std::size_t n = 0; n + 1 <= a.order(); ++n) {
    if (!a[n + 1].is_zero()) r[n] = QRat(q_integer(static_cast<unsigned>(n + 1))) * a[n + 1];
  }
  return Series(a.order() - 1, std::move(r));
}

Series eq_exponential(std::size_t order) {
  std::vector<QRat> c;
  c.reserve(order + 1);
  QPoly factorial(BigRational(1));
  for (std::size_t n = 0; n <= order; ++n) {
    if (n >= 2) factorial = mul(factorial, q_integer(static_cast<unsigned>(n)));
    c.push_back(QRat(factorial).inverse());
  }
  return Series(order, std::move(c));
}

const QRat& coefficient(const Series& a, std::size_t n) {
  if (n > a.order()) {
    throw range_error("coefficient index " + std::to_string(n) + " exceeds series order " + std::to_string(a.order()));
  }
  return a[n];
}

}  // namespace qappell
