#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "diolab/rational.hpp"

namespace diolab {

// Exact integer/rational number theory: factorization, totient, p-adic
// valuations, prime sums, Moebius-based coprime counting. Everything here
// is exact; no floating point.

struct PrimePower {
  Integer prime;
  unsigned exponent;
};

/// Ordered prime factorization. Empty entry list represents 1.
class Factorization {
 public:
  /// Factors n >= 1. Deterministic: smallest-prime-factor sieve at desk
  /// scale, then trial division by sieved primes, then Brent's rho with
  /// fixed-base Miller-Rabin. Inputs are limited to the range where the
  /// fixed base set is a proven primality test (n < 3.3e24, about 2^81);
  /// larger inputs throw DomainError.
  static Factorization of(const Integer& n);

  const std::vector<PrimePower>& entries() const { return entries_; }
  const Integer& value() const { return value_; }
  unsigned omega() const { return static_cast<unsigned>(entries_.size()); }
  Integer radical() const;
  bool squarefree() const;
  /// All positive divisors, ascending.
  std::vector<Integer> divisors() const;

 private:
  std::vector<PrimePower> entries_;
  Integer value_ = 1;
};

/// Allocation-free factor list for word-sized inputs (hot loops).
struct SmallFactors {
  struct Entry {
    std::uint64_t p;
    std::uint32_t e;
  };
  std::array<Entry, 16> f;
  int count = 0;

  std::uint64_t radical() const {
    std::uint64_t r = 1;
    for (int i = 0; i < count; ++i) r *= f[i].p;
    return r;
  }
  bool squarefree() const {
    for (int i = 0; i < count; ++i)
      if (f[i].e > 1) return false;
    return true;
  }
};

/// Factors n >= 1 (throws DomainError on 0).
SmallFactors factor_u64(std::uint64_t n);

/// Deterministic Miller-Rabin with a fixed base set (exact for all uint64).
bool is_prime_u64(std::uint64_t n);
/// Deterministic for n < 3.3e24; DomainError beyond.
bool is_prime(const Integer& n);

/// Euler totient. n >= 1; DomainError on 0.
std::uint64_t totient_u64(std::uint64_t n);
Integer totient(const Integer& n);

/// nu_p(x) for x != 0 and p prime; DomainError otherwise.
long padic_valuation(const Rational& x, const Integer& p);

/// Exact sum of 1/p over primes y <= p <= x; 0 on an empty range.
Rational mertens_tail(const Rational& y, const Rational& x);

/// Exact sum of 1/p over distinct primes p | n with p >= t. n >= 1.
Rational prime_harmonic_of(const Integer& n, const Rational& t);
Rational prime_harmonic_of_u64(std::uint64_t n, const Rational& t);

/// #{1 <= c <= X : gcd(c, n) = 1} by Moebius inclusion-exclusion over the
/// square-free divisors of rad(n).
Integer coprime_count(const Integer& X, const Integer& n);
std::uint64_t coprime_count_u64(std::uint64_t X, std::uint64_t n);

/// Exact sum over 1 <= c <= X with gcd(c, n) = 1 of
/// prod_{p | gcd(g, c)} (1 + 1/(p-1)).
Rational weighted_coprime_sum(const Integer& X, const Integer& n,
                              const Integer& g);

/// Sorted primes p <= n as a stable snapshot (the sieve only grows).
class SieveView {
 public:
  explicit SieveView(std::uint64_t at_least);
  std::span<const std::uint32_t> primes() const;
  std::uint64_t limit() const;
  /// Smallest prime factor of 2 <= n <= limit().
  std::uint32_t spf(std::uint64_t n) const;

 private:
  struct Tables;
  std::shared_ptr<const Tables> t_;
};

/// Calls fn(n, phi(n)) for every lo <= n <= hi via a segmented sieve.
/// Suited to ranges too large for per-value factorization.
void for_each_totient(std::uint64_t lo, std::uint64_t hi,
                      const std::function<void(std::uint64_t, std::uint64_t)>& fn);

}  // namespace diolab
