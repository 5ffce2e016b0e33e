#pragma once

#include <random>

#include "oracles.hpp"
#include "qappell/xpoly.hpp"

namespace testing {

using qappell::BigRational;
using qappell::QPoly;
using qappell::QRat;
using qappell::XPoly;

inline QPoly poly(std::initializer_list<long> coeffs) {
  std::vector<BigRational> c;
  for (long v : coeffs) c.emplace_back(v);
  return QPoly(std::move(c));
}

inline oracle::Vec to_vec(const QPoly& p) { return oracle::Vec(p.coeffs().begin(), p.coeffs().end()); }

// Coefficients of p at q = q0, ascending in x.
inline oracle::Vec at_q(const XPoly& p, const BigRational& q0) {
  oracle::Vec out;
  for (const auto& c : p.coeffs()) out.push_back(c.eval(q0));
  oracle::trim(out);
  return out;
}

inline QPoly random_poly(std::mt19937& rng, int max_degree, int bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> val(-bound, bound);
  std::vector<BigRational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = BigRational(val(rng), 1 + std::abs(val(rng)));
  return QPoly(std::move(c));
}

inline QRat random_qrat(std::mt19937& rng, int max_degree = 3, int bound = 5) {
  QPoly den;
  while (den.is_zero()) den = random_poly(rng, max_degree, bound);
  return QRat::make(random_poly(rng, max_degree, bound), den);
}

}  // namespace testing
