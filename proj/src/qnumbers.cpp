#include "qappell/qnumbers.hpp"

#include <algorithm>
#include <vector>

namespace qappell {

QPoly q_integer(unsigned n) { return QPoly(std::vector<BigRational>(n, BigRational(1))); }

QPoly q_factorial(unsigned n) {
  QPoly r(BigRational(1));
  for (unsigned k = 2; k <= n; ++k) r = mul(r, q_integer(k));
  return r;
}

QPoly q_double_factorial_even(unsigned m) {
  QPoly r(BigRational(1));
  for (unsigned k = 1; k <= m; ++k) r = mul(r, q_integer(2 * k));
  return r;
}

QPoly q_binomial(unsigned n, int k) {
  if (k < 0 || static_cast<unsigned>(k) > n) return {};
  const auto kk = static_cast<unsigned>(k);
  // row[j] holds [i j]_q for the current i; only j <= k is needed.
  std::vector<QPoly> row(kk + 1);
  row[0] = QPoly(BigRational(1));
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, kk); j >= 1; --j) {
      row[j] = row[j - 1] + row[j].shifted(j);
    }
  }
  return row[kk];
}

}  // namespace qappell
