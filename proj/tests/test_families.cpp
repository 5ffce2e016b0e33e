#include <cstdlib>
#include <fstream>

#include "discrepancy_golden.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "qappell/error.hpp"
#include "qappell/qnumbers.hpp"

using namespace qappell;
using oracle::Q;
using oracle::Vec;

namespace {

const QRat q(q_var());

Vec rational_coeffs(const RationalPoly& p) { return Vec(p.coeffs().begin(), p.coeffs().end()); }

Vec trimmed(Vec v) {
  oracle::trim(v);
  return v;
}

// Classical generators at q = 1 with the ordinary exponential.
Vec classical_numbers(oracle::Kind kind, long max_n) { return oracle::numbers(kind, Q(1), max_n); }

// Oracle-side Jackson derivative in x at numeric q.
Vec dq(const Vec& p, const Q& q0) {
  Vec out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(oracle::qint(q0, static_cast<long>(i)) * p[i]);
  return out;
}

Vec dq(Vec p, const Q& q0, long k) {
  for (long i = 0; i < k; ++i) p = dq(p, q0);
  return p;
}

// Value at x of each printed residual, evaluated from oracle data only.
Q printed_b1(const std::vector<Vec>& B, const Vec& b, const Q& q0, long n, const Q& x) {
  using namespace oracle;
  Q r = eval(B[n], q0 * x) - power(q0, n) * (x - 1 / (q0 * qint(q0, 2))) * eval(B[n - 1], x);
  Q s = 0;
  for (long k = 0; k <= n - 2; ++k) s += qbinom(q0, n, k) * power(q0, k) / q0 * b[n - k] * eval(B[k], x);
  return r + s / qint(q0, n);
}

Q printed_b2(const std::vector<Vec>& B, const Vec& b, const Q& q0, long n, const Q& x) {
  using namespace oracle;
  Q r = 0;
  for (long k = 2; k <= n; ++k) r += power(q0, n - k) / q0 * b[k] / qfact(q0, k) * eval(dq(B[n], q0, k), x);
  r -= power(q0, n) * (x - 1 / (q0 * qint(q0, 2))) * eval(dq(B[n], q0), x);
  return r + qint(q0, n) * eval(B[n], q0 * x);
}

Q printed_g1(const std::vector<Vec>& G, const Vec& g, const Q& q0, long n, const Q& x) {
  using namespace oracle;
  Q s = 0;
  for (long k = 0; k <= n - 2; ++k) s += qbinom(q0, n, k) * g[n - k] * power(q0, k) * eval(G[k], x);
  Q r = s / (2 * q0);
  r += qint(q0, n) * (x * q0 - 1 / (2 * q0)) * power(q0, n - 1) * eval(G[n - 1], x);
  r += power(q0, n - 1) * eval(G[n], x);
  return r - qint(q0, n) * eval(G[n], q0 * x);
}

Q printed_g2(const std::vector<Vec>& G, const Vec& g, const Q& q0, long n, const Q& x) {
  using namespace oracle;
  Q r = 0;
  for (long k = 2; k <= n; ++k) r += power(q0, n - k) / q0 * g[k] / (2 * qfact(q0, k)) * eval(dq(G[n], q0, k), x);
  r -= power(q0, n) / (q0 * q0) / 2 * eval(dq(G[n], q0), x);
  r += power(q0, n - 1) * eval(G[n], x) + x * power(q0, n) * eval(dq(G[n], q0), x);
  return r - qint(q0, n) * eval(G[n], q0 * x);
}

// Euler numbers of the printed generator t e_q(t) / (e_q(2t) - 1).
Vec printed_euler_numbers(const Q& q0, long max_n) {
  const std::size_t size = static_cast<std::size_t>(max_n + 2);
  Vec t(size);
  t[1] = 1;
  Vec d = oracle::eq_exp(q0, size, 2);
  d[0] -= 1;
  const Vec s = oracle::div(oracle::mul(t, oracle::eq_exp(q0, size)), d);
  Vec out;
  for (long n = 0; n <= max_n; ++n) out.push_back(oracle::qfact(q0, n) * s[n]);
  return out;
}

Q printed_e1_number(const std::vector<Vec>& E, const Vec& e, const Q& q0, long n, const Q& x) {
  using namespace oracle;
  Q s = 0;
  for (long k = 0; k <= n - 1; ++k) s += qbinom(q0, n - 1, k) * power(q0, k) * e[n - k - 1] * eval(E[k], x);
  return eval(E[n], q0 * x) - s / 2 - x * power(q0, n) * eval(E[n - 1], x);
}

Q printed_e2(const std::vector<Vec>& E, const Vec& e, const Q& q0, long n, const Q& x) {
  using namespace oracle;
  Q r = 0;
  for (long k = 2; k <= n; ++k) r += power(q0, n - k) * e[k - 1] / qfact(q0, k - 1) / 2 * eval(dq(E[n], q0, k), x);
  r -= power(q0, n - 1) / 2 * eval(dq(E[n], q0), x);
  r += x * power(q0, n) * eval(dq(E[n], q0), x);
  return r - qint(q0, n) * eval(E[n], q0 * x);
}

using PrintedOracle = Q (*)(const std::vector<Vec>&, const Vec&, const Q&, long, const Q&);

// Status an independent numeric evaluation implies: refuted as soon as one
// sampled value is nonzero; otherwise consistent with confirmed.
std::optional<long> first_numeric_failure(PrintedOracle f, const std::vector<Vec>& polys, const Vec& numbers,
                                          long n_last) {
  const Q q0(1, 2);
  for (long n = 2; n <= n_last; ++n)
    for (const Q x : {Q(0), Q(1), Q(-2), Q(3, 5)})
      if (f(polys, numbers, q0, n, x) != 0) return n;
  return std::nullopt;
}

void check_against_numeric(PrintedTheorem t, oracle::Kind kind, PrintedOracle f, const Vec& numbers) {
  const Q q0(1, 2);
  const auto polys = oracle::polynomials(kind, q0, 10);
  const auto report = verify_printed_theorem(family_of(t), t, 2, 10);
  const auto numeric = first_numeric_failure(f, polys, numbers, 10);
  if (numeric) {
    CHECK_MESSAGE(report.status == ClaimStatus::refuted, to_string(t));
    // A symbolic counterexample can only appear at or before the numeric one.
    REQUIRE(report.counterexample_n.has_value());
    CHECK(*report.counterexample_n <= *numeric);
  } else {
    CHECK_MESSAGE(report.status == ClaimStatus::confirmed, to_string(t));
  }
}

}  // namespace

TEST_CASE("generators are built to the requested order") {
  for (FamilyKind k : kAllFamilies) CHECK(make_family(k, 10).order() == 10);
  const auto b = family_numbers(make_family(FamilyKind::bernoulli, 6), 1);
  CHECK(b[0] == QRat(1));
  CHECK(b[1] == -QRat(q_integer(2)).inverse());
  CHECK(family_numbers(make_family(FamilyKind::euler, 6), 0)[0] == QRat(1));
  const Series h = make_family(FamilyKind::hermite, 9).generator();
  CHECK(h[2] == -QRat(q_integer(2)).inverse());
  for (std::size_t n = 1; n <= 9; n += 2) CHECK(h[n].is_zero());
  CHECK(h[4] == QRat::make(q_power(2), q_double_factorial_even(2)));
  CHECK_THROWS_AS(make_family(FamilyKind::euler, 1), range_error);
  CHECK(parse_family_kind("genocchi") == FamilyKind::genocchi);
  CHECK_FALSE(parse_family_kind("laguerre").has_value());
}

TEST_CASE("Euler-number series as printed") {
  const Series s = euler_number_series(8);
  CHECK(s.order() == 8);
  CHECK(s[0] == QRat(BigRational(1, 2)));
  CHECK(s[0].eval(1) == BigRational(1, 2));
  const auto e = euler_numbers(8);
  CHECK(e.size() == 9);
  for (const BigRational q0 : {BigRational(1), BigRational(1, 2)}) {
    const Vec expect = printed_euler_numbers(q0, 8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(e[n].eval(q0) == expect[n]);
  }
}

TEST_CASE("classical Bernoulli limit") {
  const Vec expect = classical_numbers(oracle::Kind::bernoulli, 10);
  const Vec spot{1, Q(-1, 2), Q(1, 6), 0, Q(-1, 30)};
  for (long n = 0; n <= 4; ++n) CHECK(expect[n] == spot[n]);
  const auto polys = oracle::polynomials(oracle::Kind::bernoulli, 1, 10);
  for (std::size_t n = 0; n <= 10; ++n) {
    const RationalPoly p = classical_limit(FamilyKind::bernoulli, n);
    CHECK(p.coeff(0) == expect[n]);
    CHECK(rational_coeffs(p) == trimmed(polys[n]));
  }
}

TEST_CASE("classical Euler limit") {
  CHECK(rational_coeffs(classical_limit(FamilyKind::euler, 1)) == Vec{Q(-1, 2), 1});
  const auto polys = oracle::polynomials(oracle::Kind::euler, 1, 10);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(rational_coeffs(classical_limit(FamilyKind::euler, n)) == trimmed(polys[n]));

  // 2^n E_n(1/2) gives the classical Euler numbers of 2e^t / (e^(2t) + 1).
  Vec d = oracle::eq_exp(1, 10, 2);
  d[0] += 1;
  Vec num = oracle::eq_exp(1, 10);
  for (auto& c : num) c *= 2;
  const Vec gen = oracle::div(num, d);
  const Vec spot{1, 0, -1, 0, 5};
  for (long n = 0; n <= 8; ++n) {
    const Q classical = oracle::qfact(1, n) * gen[n];
    if (n <= 4) CHECK(classical == spot[n]);
    const Q value = oracle::power(2, n) * classical_limit(FamilyKind::euler, n).eval(BigRational(1, 2));
    CHECK(value == classical);
  }
}

TEST_CASE("classical Genocchi limit") {
  const Vec expect = classical_numbers(oracle::Kind::genocchi, 8);
  const Vec spot{0, 1, -1, 0, 1, 0, -3};
  for (long n = 0; n <= 6; ++n) CHECK(expect[n] == spot[n]);
  for (std::size_t n = 0; n <= 8; ++n) {
    const RationalPoly p = classical_limit(FamilyKind::genocchi, n);
    CHECK(p.coeff(0) == expect[n]);
  }
}

TEST_CASE("classical Hermite limit") {
  const auto he = oracle::hermite_he(10);
  CHECK(rational_coeffs(classical_limit(FamilyKind::hermite, 4)) == Vec{3, 0, -6, 0, 1});
  for (std::size_t n = 0; n <= 10; ++n) CHECK(rational_coeffs(classical_limit(FamilyKind::hermite, n)) == he[n]);
}

TEST_CASE("printed theorems: statuses match an independent numeric evaluation") {
  const Q q0(1, 2);
  check_against_numeric(PrintedTheorem::b1, oracle::Kind::bernoulli, printed_b1,
                        oracle::numbers(oracle::Kind::bernoulli, q0, 10));
  check_against_numeric(PrintedTheorem::b2, oracle::Kind::bernoulli, printed_b2,
                        oracle::numbers(oracle::Kind::bernoulli, q0, 10));
  check_against_numeric(PrintedTheorem::g1, oracle::Kind::genocchi, printed_g1,
                        oracle::numbers(oracle::Kind::genocchi, q0, 10));
  check_against_numeric(PrintedTheorem::g2, oracle::Kind::genocchi, printed_g2,
                        oracle::numbers(oracle::Kind::genocchi, q0, 10));
  check_against_numeric(PrintedTheorem::e1_number, oracle::Kind::euler, printed_e1_number,
                        printed_euler_numbers(q0, 10));
  check_against_numeric(PrintedTheorem::e1_at_zero, oracle::Kind::euler, printed_e1_number,
                        oracle::numbers(oracle::Kind::euler, q0, 10));
  check_against_numeric(PrintedTheorem::e2_number, oracle::Kind::euler, printed_e2, printed_euler_numbers(q0, 10));
  check_against_numeric(PrintedTheorem::e2_at_zero, oracle::Kind::euler, printed_e2,
                        oracle::numbers(oracle::Kind::euler, q0, 10));
}

TEST_CASE("printed theorem plumbing") {
  const auto wrong = verify_printed_theorem(FamilyKind::euler, PrintedTheorem::b1, 2, 5);
  CHECK(wrong.status == ClaimStatus::inapplicable);
  CHECK_FALSE(wrong.counterexample_n.has_value());
  CHECK(verify_printed_theorem(FamilyKind::bernoulli, PrintedTheorem::b1, 5, 4).status == ClaimStatus::inapplicable);
  CHECK_THROWS_AS(printed_theorem_residuals(PrintedTheorem::g1, 1, 4), range_error);
  for (PrintedTheorem t : kAllPrintedTheorems) {
    const auto r = verify_printed_theorem(family_of(t), t, 2, 6);
    CHECK(r.status != ClaimStatus::inapplicable);
    if (r.status == ClaimStatus::refuted) {
      CHECK(r.counterexample_n.has_value());
      CHECK(r.residual.has_value());
      CHECK_FALSE(r.residual->is_zero());
    }
  }
}

TEST_CASE("Euler-number relation report") {
  const auto r = verify_euler_number_relation(8);
  // e_0 = 1/2 while E_0(1/2) = 1, so the relation fails already at n = 0.
  CHECK(r.status == ClaimStatus::refuted);
  CHECK(r.counterexample_n == 0);
  CHECK(*r.residual == XPoly(QRat(BigRational(-1, 2))));
  CHECK_FALSE(to_json(r).dump().empty());
}

TEST_CASE("discrepancy report is deterministic and matches the golden file") {
  const std::string first = testing::discrepancy_report_text();
  CHECK(first == testing::discrepancy_report_text());
  if (std::getenv("QAPPELL_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(testing::golden_path(), std::ios::binary) << first;
  }
  CHECK(first == testing::read_file(testing::golden_path()));
}
