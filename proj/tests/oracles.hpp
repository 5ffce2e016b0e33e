#pragma once

// Reference computations for the test suites. Everything here works on plain
// rationals at a fixed numeric q and shares no code with the library beyond
// the GMP scalar type.

#include <gmpxx.h>

#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;

inline Q qint(const Q& q, long n) {
  Q s = 0, p = 1;
  for (long i = 0; i < n; ++i) {
    s += p;
    p *= q;
  }
  return s;
}

inline Q qfact(const Q& q, long n) {
  Q f = 1;
  for (long i = 1; i <= n; ++i) f *= qint(q, i);
  return f;
}

inline Q power(const Q& b, long e) {
  Q r = 1;
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

inline Q qbinom(const Q& q, long n, long k) {
  if (k < 0 || k > n) return 0;
  return qfact(q, n) / (qfact(q, k) * qfact(q, n - k));
}

inline long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Power series truncated after t^(size-1).
inline Vec mul(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Long division after dropping the common leading zeros of b.
inline Vec div(Vec a, Vec b) {
  std::size_t m = 0;
  while (m < b.size() && b[m] == 0) ++m;
  if (m == b.size()) throw std::domain_error("oracle::div by zero series");
  for (std::size_t i = 0; i < m; ++i)
    if (a[i] != 0) throw std::domain_error("oracle::div not cancellable");
  a.erase(a.begin(), a.begin() + static_cast<long>(m));
  b.erase(b.begin(), b.begin() + static_cast<long>(m));
  Vec c(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Q s = a[n];
    for (std::size_t k = 1; k <= n && k < b.size(); ++k) s -= b[k] * c[n - k];
    c[n] = s / b[0];
  }
  return c;
}

inline Vec eq_exp(const Q& q, std::size_t size, const Q& scale = 1) {
  Vec e(size);
  for (std::size_t n = 0; n < size; ++n) e[n] = power(scale, static_cast<long>(n)) / qfact(q, static_cast<long>(n));
  return e;
}

enum class Kind { bernoulli, euler, genocchi, hermite };

// Generator A(t) at numeric q, coefficients t^0..t^(size-1).
inline Vec generator(Kind kind, const Q& q, std::size_t size) {
  Vec e = eq_exp(q, size + 1);
  Vec t(size + 1);
  t[1] = 1;
  Vec r;
  switch (kind) {
    case Kind::bernoulli: {
      Vec d = e;
      d[0] -= 1;
      r = div(t, d);
      break;
    }
    case Kind::euler: {
      Vec d = e;
      d[0] += 1;
      Vec two(size + 1);
      two[0] = 2;
      r = div(two, d);
      break;
    }
    case Kind::genocchi: {
      Vec d = e;
      d[0] += 1;
      Vec two_t(size + 1);
      two_t[1] = 2;
      r = div(two_t, d);
      break;
    }
    case Kind::hermite: {
      r.assign(size, 0);
      for (std::size_t k = 0; 2 * k < size; ++k) {
        Q dfact = 1;
        for (long j = 1; j <= static_cast<long>(k); ++j) dfact *= qint(q, 2 * j);
        const Q c = power(q, static_cast<long>(k * (k == 0 ? 0 : k - 1))) / dfact;
        r[2 * k] = k % 2 == 0 ? c : Q(-c);
      }
      break;
    }
  }
  r.resize(size);
  return r;
}

// Coefficients (ascending in x) of A_n(x) = sum_k [n k] A_k x^(n-k) at numeric q.
inline std::vector<Vec> polynomials(Kind kind, const Q& q, long max_n) {
  const Vec g = generator(kind, q, static_cast<std::size_t>(max_n + 1));
  std::vector<Vec> out;
  for (long n = 0; n <= max_n; ++n) {
    Vec p(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) p[static_cast<std::size_t>(n - k)] = qbinom(q, n, k) * qfact(q, k) * g[k];
    out.push_back(p);
  }
  return out;
}

inline Vec numbers(Kind kind, const Q& q, long max_n) {
  const Vec g = generator(kind, q, static_cast<std::size_t>(max_n + 1));
  Vec out;
  for (long n = 0; n <= max_n; ++n) out.push_back(qfact(q, n) * g[n]);
  return out;
}

// alpha_n = [n]! [t^n] t D_q A(t) / A(q t) at numeric q.
inline Vec alpha(Kind kind, const Q& q, long max_n) {
  const std::size_t size = static_cast<std::size_t>(max_n + 3);
  const Vec a = generator(kind, q, size);
  Vec num(size), den(size);
  for (std::size_t n = 1; n < size; ++n) num[n] = qint(q, static_cast<long>(n)) * a[n];
  for (std::size_t n = 0; n < size; ++n) den[n] = power(q, static_cast<long>(n)) * a[n];
  const Vec quot = div(num, den);
  Vec out;
  for (long n = 0; n <= max_n; ++n) out.push_back(qfact(q, n) * quot[n]);
  return out;
}

inline Q eval(const Vec& p, const Q& x) {
  Q acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Probabilists' Hermite He_0..He_max_n.
inline std::vector<Vec> hermite_he(long max_n) {
  std::vector<Vec> he{{1}, {0, 1}};
  for (long n = 2; n <= max_n; ++n) {
    Vec p(static_cast<std::size_t>(n + 1));
    for (std::size_t i = 0; i < he[n - 1].size(); ++i) p[i + 1] += he[n - 1][i];
    for (std::size_t i = 0; i < he[n - 2].size(); ++i) p[i] -= Q(n - 1) * he[n - 2][i];
    he.push_back(p);
  }
  he.resize(static_cast<std::size_t>(max_n + 1));
  return he;
}

// Euclidean gcd over Q, monic; polynomials ascending, trimmed.
inline void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Vec rem(Vec a, const Vec& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Q f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return a;
}

inline Vec euclid_gcd(Vec a, Vec b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const Q lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

}  // namespace oracle
