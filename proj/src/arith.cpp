#include "thue/arith.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace thue {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

int sign(const BigInt& v) { return sgn(v); }
int sign(const Rational& v) { return sgn(v); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("division by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("division by zero");
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt floor(const Rational& v) { return floor_div(v.get_num(), v.get_den()); }
BigInt ceil(const Rational& v) { return ceil_div(v.get_num(), v.get_den()); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::string to_string(const BigInt& v) { return v.get_str(10); }
std::string to_string(const Rational& v) { return v.get_str(10); }

BigInt parse_bigint(const std::string& text) {
  BigInt v;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  v.set_str(text.front() == '+' ? text.substr(1) : text, 10);
  return v;
}

// ---------------------------------------------------------------------------
// Primality

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 pow_mod(u64 base, u64 exp, u64 n) {
  u64 result = 1;
  base %= n;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

constexpr std::array<unsigned, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool strong_probable_prime(u64 n, u64 a) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const BigInt& n, unsigned a) {
  BigInt d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  BigInt x;
  BigInt base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const BigInt minus_one = n - 1;
  if (x == 1 || x == minus_one) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == minus_one) return true;
  }
  return false;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  // The first twelve bases are deterministic for every 64-bit input.
  for (unsigned a : kWitnesses) {
    if (!strong_probable_prime(n, u64{a})) return false;
  }
  return true;
}

const BigInt& deterministic_limit() {
  static const BigInt limit("3317044064679887385961981", 10);
  return limit;
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  for (unsigned p : kWitnesses) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < deterministic_limit()) {
    for (unsigned a : kWitnesses) {
      if (!strong_probable_prime(n, a)) return false;
    }
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// ---------------------------------------------------------------------------
// Factorization

Factorization Factorization::from_factors(std::vector<PrimePower> factors) {
  Factorization f;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& pp = factors[i];
    if (pp.exponent == 0) throw std::invalid_argument("zero exponent in factorization");
    if (!is_prime(pp.prime)) throw std::invalid_argument("composite base " + thue::to_string(pp.prime));
    if (i > 0 && !(factors[i - 1].prime < pp.prime)) {
      throw std::invalid_argument("factorization primes not strictly increasing");
    }
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    f.value_ *= power;
  }
  f.factors_ = std::move(factors);
  return f;
}

std::size_t Factorization::divisor_count() const {
  std::size_t count = 1;
  for (const auto& pp : factors_) count *= pp.exponent + 1;
  return count;
}

std::string Factorization::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& pp : factors_) {
    if (!out.empty()) out += '*';
    out += thue::to_string(pp.prime);
    if (pp.exponent > 1) out += '^' + std::to_string(pp.exponent);
  }
  return out;
}

namespace {

void factor_u64(u64 n, std::vector<PrimePower>& out) {
  auto take = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({BigInt(static_cast<unsigned long>(p)), e});
  };
  take(2);
  take(3);
  // 6k +/- 1 wheel; re-check cofactor primality after each hit.
  bool cofactor_prime = n > 1 && is_prime_u64(n);
  for (u64 p = 5; !cofactor_prime && p <= n / p; p += 6) {
    for (u64 q : {p, p + 2}) {
      if (n % q == 0) {
        take(q);
        cofactor_prime = n > 1 && is_prime_u64(n);
        if (cofactor_prime) break;
      }
    }
  }
  if (n > 1) out.push_back({BigInt(static_cast<unsigned long>(n)), 1});
}

void factor_big(BigInt n, std::vector<PrimePower>& out) {
  auto take = [&](const BigInt& p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e) out.push_back({p, e});
  };
  take(2);
  take(3);
  BigInt p = 5;
  while (n > 1 && !n.fits_ulong_p() && !is_prime(n) && p * p <= n) {
    take(p);
    take(p + 2);
    p += 6;
  }
  if (n.fits_ulong_p()) {
    // Finish natively; every remaining prime factor is >= p.
    std::vector<PrimePower> rest;
    factor_u64(n.get_ui(), rest);
    out.insert(out.end(), rest.begin(), rest.end());
  } else if (n > 1) {
    out.push_back({n, 1});
  }
}

}  // namespace

Factorization factor(const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("factor: expected a positive integer, got " + to_string(n));
  std::vector<PrimePower> factors;
  if (n.fits_ulong_p()) {
    factor_u64(n.get_ui(), factors);
  } else {
    factor_big(n, factors);
  }
  std::sort(factors.begin(), factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return Factorization::from_factors(std::move(factors));
}

std::vector<BigInt> divisors(const Factorization& f) {
  std::vector<BigInt> out{BigInt(1)};
  out.reserve(f.divisor_count());
  for (const auto& pp : f.factors()) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<BigInt> is_cube(const BigInt& n) {
  BigInt root;
  if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), 3) != 0) return root;
  return std::nullopt;
}

unsigned padic_valuation(const BigInt& p, const BigInt& n) {
  if (n == 0) throw std::invalid_argument("padic_valuation: n must be nonzero");
  if (p < 2) throw std::invalid_argument("padic_valuation: p must be prime");
  BigInt rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace thue
