#include "qappell/qpoly.hpp"

#include "qappell/error.hpp"

namespace qappell {

QPoly q_var() { return q_power(1); }

QPoly q_power(std::size_t k) { return QPoly::monomial(BigRational(1), k); }

std::pair<BigRational, zpoly::Coeffs> primitive_split(const QPoly& p) {
  if (p.is_zero()) return {BigRational(0), {}};
  BigInt den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  zpoly::Coeffs ints(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& c = p.coeffs()[i];
    BigInt factor;
    mpz_divexact(factor.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    ints[i] = c.get_num() * factor;
  }
  const BigInt cont = zpoly::make_primitive(ints);
  BigRational scale(cont, den_lcm);
  scale.canonicalize();
  return {scale, std::move(ints)};
}

QPoly from_integer(const zpoly::Coeffs& c, const BigRational& scale) {
  std::vector<BigRational> v;
  v.reserve(c.size());
  for (const auto& x : c) v.emplace_back(scale * BigRational(x));
  return QPoly(std::move(v));
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto [sa, pa] = primitive_split(a);
  auto [sb, pb] = primitive_split(b);
  return from_integer(zpoly::mul(pa, pb), sa * sb);
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw division_by_zero("QPoly division by the zero polynomial");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<BigRational> r = a.coeffs();
  std::vector<BigRational> q(a.size() - b.size() + 1);
  const BigRational inv_lc = BigRational(1) / b.leading();
  const std::size_t db = b.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigRational f = r[k + db] * inv_lc;
    q[k] = f;
    if (is_zero(f)) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw division_by_zero("QPoly division by the zero polynomial");
  if (a.is_zero()) return {};
  auto [sa, pa] = primitive_split(a);
  auto [sb, pb] = primitive_split(b);
  // b primitive divides a over Q iff it divides a's primitive part over Z.
  auto quotient = zpoly::divide_exact(pa, pb);
  if (!quotient) throw arithmetic_error("exact QPoly division left a remainder");
  return from_integer(*quotient, sa / sb);
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  auto pa = primitive_split(a).second;
  auto pb = primitive_split(b).second;
  auto g = zpoly::gcd_primitive(pa, pb).gcd;
  return monic(from_integer(g));
}

QPoly monic(const QPoly& a) {
  if (a.is_zero()) return a;
  return (BigRational(1) / a.leading()) * a;
}

}  // namespace qappell
