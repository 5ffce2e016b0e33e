#pragma once

#include "qappell/families.hpp"

namespace qappell {

/// H_{n,q}(x) = [n]_q! sum_k (-1)^k q^(k(k-1)) x^(n-2k) / ([2k]_q!! [n-2k]_q!).
XPoly hermite_series_form(int n);

/// The same sum without the leading [n]_q!, i.e. H_{n,q}(x) / [n]_q!.
XPoly hermite_series_form_unnormalised(int n);

/// H_n(qx) - x q^n H_{n-1}(x) + [n-1] q^(n-2) H_{n-2}(x). Throws range_error for n < 2.
VerificationReport verify_hermite_recurrence(int n);
VerificationReport verify_hermite_recurrence(int n_first, int n_last);

/// q^(n-2) D^2 H_n - x q^n D H_n + [n] H_n(qx), for n >= 1.
VerificationReport verify_hermite_difference(int n);
VerificationReport verify_hermite_difference(int n_first, int n_last);

/// Coefficients of D_{q,t} H_q(t) + t H_q(qt) up to t^(N-1), one constant
/// residual per power of t.
VerificationReport verify_hermite_generator_ratio(int order);

/// The generating-function family against hermite_series_form, n = 0..max_n.
VerificationReport verify_hermite_cross_construction(int max_n);

/// Claim "h0-normalization": whether the sum as printed equals H_{n,q}(x)
/// for n = 0..max_n.
DiscrepancyReport check_h0_normalization(int max_n);

}  // namespace qappell
