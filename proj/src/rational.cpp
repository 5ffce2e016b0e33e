#include "qappell/rational.hpp"

#include <cctype>

#include "qappell/error.hpp"

namespace qappell {

std::string to_string(const BigRational& r) { return r.get_str(10); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return BigInt(digits, 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) || den_text.front() == '-' ||
      den_text.front() == '+') {
    throw error("malformed rational: '" + std::string(text) + "'");
  }
  BigInt den = parse_integer(den_text);
  if (sgn(den) == 0) throw division_by_zero("zero denominator in '" + std::string(text) + "'");
  BigRational r(parse_integer(num_text), den);
  r.canonicalize();
  return r;
}

BigRational pow(const BigRational& base, long exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw division_by_zero("negative power of zero");
    return pow(BigRational(1) / base, -exponent);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return BigRational(num, den);
}

}  // namespace qappell
