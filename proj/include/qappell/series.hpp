#pragma once

#include <cstddef>
#include <vector>

#include "qappell/qrat.hpp"

namespace qappell {

/// Formal power series in t over Q(q), truncated after t^order. The order is
/// fixed at construction; binary operations demand equal orders and never
/// extend them.
class Series {
 public:
  explicit Series(std::size_t order) : coeffs_(order + 1) {}
  /// coeffs may be shorter than order + 1 (zero padded) but not longer.
  Series(std::size_t order, std::vector<QRat> coeffs);

  static Series constant(std::size_t order, const QRat& c);
  /// c * t^power, the zero series when power > order.
  static Series monomial(std::size_t order, std::size_t power, const QRat& c = QRat(1));

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<QRat>& coeffs() const noexcept { return coeffs_; }
  const QRat& operator[](std::size_t n) const { return coeffs_[n]; }

  bool is_zero() const;
  /// Index of the first nonzero coefficient, or order() + 1 for the zero series.
  std::size_t valuation() const;

  /// Drops coefficients above new_order (new_order <= order()).
  Series truncated(std::size_t new_order) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(const Series& a);
  friend Series operator*(const QRat& s, const Series& a);

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  std::vector<QRat> coeffs_;
};

/// Truncated Cauchy product; throws order_mismatch.
Series series_mul(const Series& a, const Series& b);

/// c with a = b * c. A common factor t^m (m = valuation of b) is cancelled,
/// so the result has order a.order() - m. Throws zero_divisor when b vanishes
/// to its order and non_cancellable_zero when a has a nonzero coefficient
/// below t^m.
Series series_div(const Series& a, const Series& b);

/// t -> c t.
Series series_scale_arg(const Series& a, const QRat& c);

/// Jackson derivative in t: coefficient n of the result is [n+1]_q a_(n+1).
/// The result has order a.order() - 1; requires a.order() >= 1.
Series series_q_derivative(const Series& a);

/// e_q(t) = sum t^n / [n]_q! up to t^order.
Series eq_exponential(std::size_t order);

/// a_n with range checking.
const QRat& coefficient(const Series& a, std::size_t n);

}  // namespace qappell
