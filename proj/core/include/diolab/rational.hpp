#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "diolab/errors.hpp"

namespace diolab {

// Exact scalars. mpq_class keeps values in lowest terms with positive
// denominator as long as every value enters through the helpers below;
// arithmetic then preserves canonical form.
using Integer = mpz_class;
using Rational = mpq_class;

/// q = num/den in lowest terms. Throws DomainError if den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

/// Parses "num/den" or a bare integer, base 10. Throws DomainError on junk.
Rational parse_rational(std::string_view text);

/// Always "num/den", including "/1" for integers. The inverse of
/// parse_rational and the wire format of every rational column.
std::string fraction_str(const Rational& value);

/// Decimal digits of value, not used as a wire format.
std::string decimal_str(const Rational& value, int digits);

Integer rational_floor(const Rational& value);
Integer rational_ceil(const Rational& value);

/// True if value is an integer.
bool is_integral(const Rational& value);

inline Rational rational_abs(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

inline Integer to_integer(std::uint64_t v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

inline Rational to_rational(std::uint64_t v) { return Rational(to_integer(v)); }

/// Value as uint64. Throws DomainError if negative or too large.
std::uint64_t to_u64(const Integer& value);

}  // namespace diolab
