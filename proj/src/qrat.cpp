#include "qappell/qrat.hpp"

#include "qappell/error.hpp"

namespace qappell {

namespace {

// A function rather than a global so QRat values may be built during static initialisation.
zpoly::Coeffs one() { return {BigInt(1)}; }

bool is_one(const zpoly::Coeffs& c) { return c.size() == 1 && c[0] == 1; }

std::size_t term_count(const QPoly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coeffs()) n += is_zero(c) ? 0 : 1;
  return n;
}

}  // namespace

QRat::QRat(const BigRational& c) {
  if (!qappell::is_zero(c)) {
    scale_ = c;
    num_ = one();
  }
}

QRat::QRat(const QPoly& p) {
  if (p.is_zero()) return;
  auto [s, prim] = primitive_split(p);
  scale_ = std::move(s);
  num_ = std::move(prim);
}

QRat QRat::make(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw division_by_zero("rational function with zero denominator");
  if (num.is_zero()) return {};
  auto [sn, pn] = primitive_split(num);
  auto [sd, pd] = primitive_split(den);
  auto g = zpoly::gcd_primitive(pn, pd);
  return QRat(sn / sd, std::move(g.cofactor_a), std::move(g.cofactor_b));
}

QPoly QRat::num() const {
  if (is_zero()) return {};
  return from_integer(num_, scale_ / BigRational(den_.back()));
}

QPoly QRat::den() const { return from_integer(den_, BigRational(1) / BigRational(den_.back())); }

BigRational QRat::constant_value() const {
  if (!is_constant()) throw error("rational function is not constant in q");
  if (is_zero()) return 0;
  return scale_ * BigRational(num_[0]) / BigRational(den_[0]);
}

BigRational QRat::eval(const BigRational& q0) const {
  const BigRational d = zpoly::eval(den_, q0);
  if (qappell::is_zero(d)) {
    throw pole_error("denominator vanishes at q = " + to_string(q0), to_text(den()));
  }
  if (is_zero()) return 0;
  return scale_ * zpoly::eval(num_, q0) / d;
}

QRat QRat::inverse() const {
  if (is_zero()) throw division_by_zero("inverse of the zero rational function");
  return QRat(BigRational(1) / scale_, den_, num_);
}

QRat QRat::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  QRat result(1);
  QRat base = *this;
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

QRat operator*(const QRat& a, const QRat& b) {
  if (a.is_zero() || b.is_zero()) return {};
  BigRational scale = a.scale_ * b.scale_;
  if (is_one(a.den_) && is_one(b.den_)) {
    return QRat(std::move(scale), zpoly::mul(a.num_, b.num_), one());
  }
  auto g1 = zpoly::gcd_primitive(a.num_, b.den_);
  auto g2 = zpoly::gcd_primitive(b.num_, a.den_);
  return QRat(std::move(scale), zpoly::mul(g1.cofactor_a, g2.cofactor_a),
              zpoly::mul(g2.cofactor_b, g1.cofactor_b));
}

QRat operator+(const QRat& a, const QRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;

  // a = sa*Na/(g*Da'), b = sb*Nb/(g*Db') with g = gcd(Da, Db). The new
  // numerator is coprime to Da' and Db', so only g can cancel.
  zpoly::Coeffs g, da_rest, db_rest;
  if (a.den_ == b.den_) {
    g = a.den_;
    da_rest = one();
    db_rest = one();
  } else {
    auto r = zpoly::gcd_primitive(a.den_, b.den_);
    g = std::move(r.gcd);
    da_rest = std::move(r.cofactor_a);
    db_rest = std::move(r.cofactor_b);
  }

  const BigInt fa = a.scale_.get_num() * b.scale_.get_den();
  const BigInt fb = b.scale_.get_num() * a.scale_.get_den();
  zpoly::Coeffs t = zpoly::add(zpoly::scale(zpoly::mul(a.num_, db_rest), fa),
                               zpoly::scale(zpoly::mul(b.num_, da_rest), fb));
  if (t.empty()) return {};
  const BigInt content = zpoly::make_primitive(t);
  BigRational scale(content, a.scale_.get_den() * b.scale_.get_den());
  scale.canonicalize();

  zpoly::Coeffs den = zpoly::mul(da_rest, db_rest);
  if (is_one(g)) return QRat(std::move(scale), std::move(t), std::move(den));
  auto r = zpoly::gcd_primitive(t, g);
  return QRat(std::move(scale), std::move(r.cofactor_a), zpoly::mul(den, r.cofactor_b));
}

QRat operator-(const QRat& a) {
  if (a.is_zero()) return a;
  return QRat(-a.scale_, a.num_, a.den_);
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator/(const QRat& a, const QRat& b) { return a * b.inverse(); }

std::string to_text(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const BigRational& c = p.coeffs()[k];
    if (is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    const BigRational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    if (k == 1) mono = var;
    if (k > 1) mono = var + "^" + std::to_string(k);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::string to_text(const QRat& r) {
  const QPoly num = r.num();
  const QPoly den = r.den();
  if (den.degree() == 0) return to_text(num);
  auto wrap = [](const QPoly& p) {
    std::string s = to_text(p);
    const bool fractional = p.degree() == 0 && p.coeffs()[0].get_den() != 1;
    return term_count(p) > 1 || fractional ? "(" + s + ")" : s;
  };
  return wrap(num) + "/" + wrap(den);
}

}  // namespace qappell
