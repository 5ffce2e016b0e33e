#pragma once

#include <string>

#include "qappell/qpoly.hpp"
#include "qappell/rational.hpp"
#include "qappell/zpoly.hpp"

namespace qappell {

/// Rational function of q in canonical form: numerator and denominator are
/// coprime in Q[q] and the denominator is monic, so equality is structural.
///
/// Internally the value is scale * N / D with N, D primitive integer
/// polynomials of positive leading coefficient; num() and den() rebuild the
/// monic-denominator form on demand.
class QRat {
 public:
  QRat() = default;
  QRat(long c) : QRat(BigRational(c)) {}
  QRat(const BigRational& c);
  explicit QRat(const QPoly& p);

  /// Canonical form of num/den; throws division_by_zero when den = 0.
  static QRat make(const QPoly& num, const QPoly& den);

  QPoly num() const;
  /// Monic.
  QPoly den() const;

  bool is_zero() const noexcept { return num_.empty(); }
  /// True when the value does not depend on q.
  bool is_constant() const noexcept { return num_.size() <= 1 && den_.size() == 1; }
  /// Value of a constant; throws qappell::error otherwise.
  BigRational constant_value() const;

  /// Exact value at q = q0; throws pole_error if the denominator vanishes.
  BigRational eval(const BigRational& q0) const;

  QRat inverse() const;
  QRat pow(long exponent) const;

  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a);
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  QRat& operator/=(const QRat& o) { return *this = *this / o; }

  friend bool operator==(const QRat& a, const QRat& b) {
    return a.scale_ == b.scale_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

 private:
  QRat(BigRational scale, zpoly::Coeffs num, zpoly::Coeffs den)
      : scale_(std::move(scale)), num_(std::move(num)), den_(std::move(den)) {}

  BigRational scale_{0};
  zpoly::Coeffs num_{};
  zpoly::Coeffs den_{BigInt(1)};
};

inline bool is_zero(const QRat& r) { return r.is_zero(); }

/// Canonical form of num/den.
inline QRat qrat_normalize(const QPoly& num, const QPoly& den) { return QRat::make(num, den); }
inline BigRational qrat_eval(const QRat& r, const BigRational& q0) { return r.eval(q0); }

/// Plain-text rendering in ascending powers, e.g. "1 + 2*q + q^2".
std::string to_text(const QPoly& p, const std::string& var = "q");
/// "num" or "(num)/(den)" with parentheses dropped around single terms.
std::string to_text(const QRat& r);

}  // namespace qappell
