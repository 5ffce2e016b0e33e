#pragma once

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "qappell/rational.hpp"

namespace qappell {

namespace detail {
template <typename T>
bool coeff_is_zero(const T& c) {
  using qappell::is_zero;
  return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial with coefficients in a commutative ring T,
/// stored in ascending powers. Trailing zeros are never stored, so the zero
/// polynomial is the empty vector and structural equality is polynomial
/// equality whenever T's equality is canonical.
///
/// T must be default-constructible to zero and provide +, -, * and an
/// `is_zero(const T&)` overload found by ADL or in this namespace.
template <typename T>
class Poly {
 public:
  using coeff_type = T;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  explicit Poly(T constant) {
    if (!detail::coeff_is_zero(constant)) coeffs_.push_back(std::move(constant));
  }

  static Poly monomial(T c, std::size_t power) {
    if (detail::coeff_is_zero(c)) return {};
    std::vector<T> v(power + 1);
    v[power] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<T>& coeffs() const noexcept { return coeffs_; }

  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T{}; }
  const T& leading() const { return coeffs_.back(); }

  /// Multiplication by var^k.
  Poly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<T> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    Poly r;
    r.coeffs_ = std::move(v);
    return r;
  }

  /// Horner evaluation in any ring U that T converts into.
  template <typename U>
  U eval(const U& at) const {
    U acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * at + U(*it);
    }
    return acc;
  }

  /// Applies f to every coefficient; the result is re-trimmed.
  template <typename F>
  auto map(F&& f) const -> Poly<std::decay_t<decltype(f(std::declval<const T&>()))>> {
    using R = std::decay_t<decltype(f(std::declval<const T&>()))>;
    std::vector<R> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(f(c));
    return Poly<R>(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(v));
  }

  friend Poly operator*(const T& s, const Poly& p) {
    if (detail::coeff_is_zero(s)) return {};
    std::vector<T> v;
    v.reserve(p.coeffs_.size());
    for (const auto& c : p.coeffs_) v.push_back(s * c);
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& p, const T& s) { return s * p; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

}  // namespace qappell
