#pragma once

// Exact integer and rational arithmetic plus the small amount of
// elementary number theory the rest of the library needs: trial-division
// factorization, divisor enumeration, cube roots and valuations.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace thue {

using BigInt = mpz_class;
// mpq_class values produced by this library are always canonical
// (lowest terms, positive denominator).
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::invalid_argument if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den = 1);

int sign(const BigInt& v);
int sign(const Rational& v);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);
BigInt floor(const Rational& v);
BigInt ceil(const Rational& v);
BigInt gcd(const BigInt& a, const BigInt& b);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);
BigInt parse_bigint(const std::string& text);

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class Factorization {
 public:
  Factorization() = default;

  /// Validates and multiplies out a factor list. Primes must be strictly
  /// increasing, prime, and carry positive exponents.
  static Factorization from_factors(std::vector<PrimePower> factors);

  const BigInt& value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  std::size_t divisor_count() const;

  /// "3^3*7", "7*61^3"; the unit prints as "1".
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  BigInt value_ = 1;
  std::vector<PrimePower> factors_;
};

/// Deterministic Miller-Rabin below 3.3e24; larger inputs fall back to
/// GMP's probabilistic test.
bool is_prime(const BigInt& n);

/// Complete factorization by trial division up to the square root, with an
/// early exit once the remaining cofactor is prime. Throws
/// std::invalid_argument for n <= 0.
Factorization factor(const BigInt& n);

/// All positive divisors, strictly increasing.
std::vector<BigInt> divisors(const Factorization& f);

/// The cube root c with c^3 == n, if one exists. Negative n allowed.
std::optional<BigInt> is_cube(const BigInt& n);

/// Largest e with p^e | n. Throws std::invalid_argument if n == 0 or p < 2.
unsigned padic_valuation(const BigInt& p, const BigInt& n);

}  // namespace thue
