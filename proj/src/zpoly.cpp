#include "qappell/zpoly.hpp"

#include <algorithm>
#include <cstdint>

#include "qappell/error.hpp"

namespace qappell::zpoly {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::size_t kKroneckerThreshold = 24;

std::size_t max_bits(const Coeffs& a) {
  std::size_t bits = 0;
  for (const auto& c : a) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

std::size_t bit_length(std::size_t v) {
  std::size_t n = 0;
  while (v != 0) {
    ++n;
    v >>= 1;
  }
  return n;
}

// Packs a into the integer sum a_i * 2^(64*limbs*i).
BigInt kronecker_pack(const Coeffs& a, std::size_t limbs) {
  std::vector<u64> pos(a.size() * limbs, 0);
  std::vector<u64> neg(a.size() * limbs, 0);
  bool any_neg = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int s = sgn(a[i]);
    if (s == 0) continue;
    auto& dst = s > 0 ? pos : neg;
    any_neg = any_neg || s < 0;
    std::size_t count = 0;
    mpz_export(dst.data() + i * limbs, &count, -1, sizeof(u64), 0, 0, a[i].get_mpz_t());
  }
  BigInt p, n;
  mpz_import(p.get_mpz_t(), pos.size(), -1, sizeof(u64), 0, 0, pos.data());
  if (any_neg) {
    mpz_import(n.get_mpz_t(), neg.size(), -1, sizeof(u64), 0, 0, neg.data());
    p -= n;
  }
  return p;
}

// Inverse of kronecker_pack for a value whose digits lie in (-2^(b-1), 2^(b-1)).
Coeffs kronecker_unpack(BigInt value, std::size_t limbs, std::size_t digits) {
  const bool negative = sgn(value) < 0;
  if (negative) value = -value;
  std::size_t count = 0;
  std::vector<u64> data((mpz_sizeinbase(value.get_mpz_t(), 2) + 63) / 64 + 1, 0);
  mpz_export(data.data(), &count, -1, sizeof(u64), 0, 0, value.get_mpz_t());
  data.resize(std::max(count, digits * limbs), 0);

  const std::size_t bits = 64 * limbs;
  BigInt half, full;
  mpz_ui_pow_ui(full.get_mpz_t(), 2, bits);
  half = full / 2;

  Coeffs out(digits);
  int carry = 0;
  for (std::size_t i = 0; i < digits; ++i) {
    BigInt u;
    mpz_import(u.get_mpz_t(), limbs, -1, sizeof(u64), 0, 0, data.data() + i * limbs);
    u += carry;
    if (u >= half) {
      u -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    out[i] = negative ? BigInt(-u) : u;
  }
  if (carry != 0) throw arithmetic_error("Kronecker unpack overflow");
  trim(out);
  return out;
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

using ModPoly = std::vector<u64>;

void trim_mod(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const Coeffs& a, u64 p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  trim_mod(r);
  return r;
}

// a <- a mod b, b nonzero.
void rem_mod(ModPoly& a, const ModPoly& b, u64 p) {
  const std::size_t db = b.size() - 1;
  const u64 inv_lc = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 f = mulmod(a.back(), inv_lc, p);
    const std::size_t shift = a.size() - b.size();
    if (f != 0) {
      for (std::size_t j = 0; j < db; ++j) {
        a[shift + j] = (a[shift + j] + p - mulmod(f, b[j], p)) % p;
      }
    }
    a.pop_back();
    trim_mod(a);
  }
}

// Monic gcd over F_p; both inputs nonzero.
ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    rem_mod(a, b, p);
    std::swap(a, b);
  }
  const u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

class PrimeStream {
 public:
  u64 next() {
    mpz_nextprime(current_.get_mpz_t(), current_.get_mpz_t());
    return current_.get_ui();
  }

 private:
  BigInt current_{BigInt(1) << 62};
};

// Moves residues into (-m/2, m/2]; the CRT stability test only works in this
// representation since the true coefficients may be negative.
void to_symmetric(Coeffs& h, const BigInt& modulus) {
  for (auto& c : h) {
    if (2 * c > modulus) {
      c -= modulus;
    } else if (2 * c <= -modulus) {
      c += modulus;
    }
  }
}

}  // namespace

void trim(Coeffs& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs r = a.size() >= b.size() ? a : b;
  const Coeffs& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  trim(r);
  return r;
}

Coeffs sub(const Coeffs& a, const Coeffs& b) {
  Coeffs r = a;
  if (b.size() > r.size()) r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Coeffs scale(const Coeffs& a, const BigInt& s) {
  if (sgn(s) == 0) return {};
  Coeffs r = a;
  for (auto& c : r) c *= s;
  return r;
}

Coeffs mul_schoolbook(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) < kKroneckerThreshold) return mul_schoolbook(a, b);
  const std::size_t bits = max_bits(a) + max_bits(b) + bit_length(std::min(a.size(), b.size())) + 2;
  const std::size_t limbs = (bits + 63) / 64;
  const BigInt product = kronecker_pack(a, limbs) * kronecker_pack(b, limbs);
  return kronecker_unpack(product, limbs, a.size() + b.size() - 1);
}

BigInt content(const Coeffs& a) {
  BigInt g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BigInt make_primitive(Coeffs& a) {
  trim(a);
  if (a.empty()) return 0;
  BigInt c = content(a);
  if (sgn(a.back()) < 0) c = -c;
  if (c != 1) {
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return c;
}

std::optional<Coeffs> divide_exact(const Coeffs& a, const Coeffs& b) {
  if (b.empty()) throw division_by_zero("polynomial division by zero");
  if (a.empty()) return Coeffs{};
  if (a.size() < b.size()) return std::nullopt;
  const std::size_t db = b.size() - 1;
  const BigInt& lc = b.back();
  const bool unit_lc = lc == 1;
  Coeffs r = a;
  Coeffs q(a.size() - db);
  BigInt f;
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = r[k + db];
    if (sgn(top) == 0) continue;
    if (unit_lc) {
      f = top;
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
      mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    }
    for (std::size_t j = 0; j < db; ++j) {
      mpz_submul(r[k + j].get_mpz_t(), f.get_mpz_t(), b[j].get_mpz_t());
    }
    top = 0;
    q[k] = f;
  }
  for (std::size_t j = 0; j < db; ++j) {
    if (sgn(r[j]) != 0) return std::nullopt;
  }
  trim(q);
  return q;
}

Coeffs divide_exact_or_throw(const Coeffs& a, const Coeffs& b) {
  auto q = divide_exact(a, b);
  if (!q) throw arithmetic_error("exact polynomial division left a remainder");
  return std::move(*q);
}

GcdResult gcd_primitive(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) throw arithmetic_error("gcd_primitive needs nonzero operands");
  if (a.size() == 1 || b.size() == 1) return {Coeffs{1}, a, b};
  if (a == b) return {a, Coeffs{1}, Coeffs{1}};

  BigInt lc_gcd;
  mpz_gcd(lc_gcd.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  PrimeStream primes;
  std::size_t best_degree = std::min(a.size(), b.size());  // one past the largest possible
  Coeffs accum;
  BigInt modulus = 1;

  for (;;) {
    const u64 p = primes.next();
    if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0) continue;
    ModPoly image = gcd_mod(reduce(a, p), reduce(b, p), p);
    const std::size_t deg = image.size() - 1;
    if (deg == 0) return {Coeffs{1}, a, b};
    if (deg > best_degree) continue;  // unlucky prime
    const u64 lc_mod = mpz_fdiv_ui(lc_gcd.get_mpz_t(), p);
    for (auto& c : image) c = mulmod(c, lc_mod, p);

    bool stable = false;
    if (deg < best_degree) {
      best_degree = deg;
      accum.assign(image.size(), 0);
      for (std::size_t i = 0; i < image.size(); ++i) accum[i] = static_cast<unsigned long>(image[i]);
      modulus = static_cast<unsigned long>(p);
      to_symmetric(accum, modulus);
    } else {
      const u64 inv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
      stable = true;
      for (std::size_t i = 0; i < image.size(); ++i) {
        const u64 h = mpz_fdiv_ui(accum[i].get_mpz_t(), p);
        const u64 t = mulmod((image[i] + p - h) % p, inv, p);
        if (t != 0) {
          stable = false;
          accum[i] += modulus * static_cast<unsigned long>(t);
        }
      }
      modulus *= static_cast<unsigned long>(p);
      to_symmetric(accum, modulus);
    }
    if (!stable) continue;

    Coeffs candidate = accum;
    make_primitive(candidate);
    auto qa = divide_exact(a, candidate);
    if (!qa) continue;
    auto qb = divide_exact(b, candidate);
    if (!qb) continue;
    return {std::move(candidate), std::move(*qa), std::move(*qb)};
  }
}

BigRational eval(const Coeffs& a, const BigRational& at) {
  BigRational acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * at + BigRational(*it);
  return acc;
}

}  // namespace qappell::zpoly
