#pragma once

#include "qappell/qpoly.hpp"

namespace qappell {

/// [n]_q = 1 + q + ... + q^(n-1); zero for n = 0.
QPoly q_integer(unsigned n);

/// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
QPoly q_factorial(unsigned n);

/// [2m]_q!! = [2m]_q [2m-2]_q ... [2]_q; 1 for m = 0.
QPoly q_double_factorial_even(unsigned m);

/// Gaussian binomial [n k]_q, built from the q-Pascal rule
/// [n k] = [n-1 k-1] + q^k [n-1 k]. Zero when k < 0 or k > n.
QPoly q_binomial(unsigned n, int k);

}  // namespace qappell
