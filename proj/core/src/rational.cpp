#include "diolab/rational.hpp"

#include <cctype>

namespace diolab {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw DomainError("empty rational literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' ||
          c == '+')) {
      throw DomainError("malformed rational literal: " + std::string(text));
    }
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0) {
    throw DomainError("malformed rational literal: " + std::string(text));
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
    throw DomainError("rational with zero denominator: " + std::string(text));
  }
  q.canonicalize();
  return q;
}

std::string fraction_str(const Rational& value) {
  std::string s = value.get_str();
  if (s.find('/') == std::string::npos) s += "/1";
  return s;
}

std::string decimal_str(const Rational& value, int digits) {
  // Truncated expansion of |value| with `digits` places, sign restored.
  Integer num = value.get_num();
  Integer den = value.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled = num * scale / den;
  Integer ip = scaled / scale;
  Integer fp = scaled % scale;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
  return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

Integer rational_floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), mpq_numref(value.get_mpq_t()),
             mpq_denref(value.get_mpq_t()));
  return out;
}

Integer rational_ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), mpq_numref(value.get_mpq_t()),
             mpq_denref(value.get_mpq_t()));
  return out;
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

std::uint64_t to_u64(const Integer& value) {
  if (value < 0 || !value.fits_ulong_p()) {
    // 64-bit Linux: ulong == uint64.
    if (value < 0) throw DomainError("negative value where uint64 expected");
    throw DomainError("value too large for uint64: " + value.get_str());
  }
  return static_cast<std::uint64_t>(value.get_ui());
}

}  // namespace diolab
