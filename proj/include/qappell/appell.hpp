#pragma once

#include <string>
#include <vector>

#include "qappell/report.hpp"
#include "qappell/series.hpp"
#include "qappell/xpoly.hpp"

namespace qappell {

/// A q-Appell family: the polynomials A_n(x) defined by
///   A(t) e_q(t x) = sum_n A_n(x) t^n / [n]_q!
/// for a generator A(t) known up to t^order.
///
/// A generator with zero constant term (the Genocchi case) is accepted and
/// reported as shifted(); its alpha quotient is formed after cancelling the
/// common power of t.
class AppellFamily {
 public:
  /// Throws qappell::error if the generator is identically zero.
  AppellFamily(std::string name, Series generator);

  const std::string& name() const noexcept { return name_; }
  const Series& generator() const noexcept { return generator_; }
  std::size_t order() const noexcept { return generator_.order(); }
  bool shifted() const { return generator_[0].is_zero(); }

 private:
  std::string name_;
  Series generator_;
};

/// A_{0,q} .. A_{max_n,q}, where A_{n,q} = A_{n,q}(0) = [n]_q! [t^n] A(t).
std::vector<QRat> family_numbers(const AppellFamily& fam, std::size_t max_n);

/// A_{n,q}(x) = sum_k [n k]_q A_{k,q} x^(n-k).
XPoly appell_polynomial(const AppellFamily& fam, std::size_t n);

/// A_{0,q}(x) .. A_{max_n,q}(x).
std::vector<XPoly> appell_polynomials(const AppellFamily& fam, std::size_t max_n);

/// alpha_0 .. alpha_max_n defined by
///   t D_{q,t} A(t) / A(q t) = sum_n alpha_n t^n / [n]_q!.
/// Requires max_n + valuation(A) <= order. Generators vanishing to second
/// order or beyond at t = 0 are rejected.
std::vector<QRat> alpha_coefficients(const AppellFamily& fam, std::size_t max_n);

/// A_{n-k}(x) - ([n-k]_q! / [n]_q!) D^k_{q,x} A_n(x) for one (n, k).
VerificationReport verify_lowering(const AppellFamily& fam, int n, int k);

/// The iterated lowering identity for every 0 <= k <= n <= max_n. The
/// residual recorded for degree n is the first nonzero one over k (zero if
/// all vanish).
VerificationReport verify_lowering_all(const AppellFamily& fam, int max_n);

/// [n] A_n(qx) - sum_k [n k] alpha_k q^(n-k) A_(n-k)(x) - x [n] q^n A_(n-1)(x).
VerificationReport verify_recurrence_a1(const AppellFamily& fam, int n);
VerificationReport verify_recurrence_a1(const AppellFamily& fam, int n_first, int n_last);

/// sum_k (q^(n-k) alpha_k / [k]!) D^k A_n + x q^n D A_n - [n] A_n(qx).
VerificationReport verify_difference_a2(const AppellFamily& fam, int n);
VerificationReport verify_difference_a2(const AppellFamily& fam, int n_first, int n_last);

}  // namespace qappell
