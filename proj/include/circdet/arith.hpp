// Integer utilities shared by every module: the big-integer alias, error
// types, primality, factorisation and a few small number-theoretic helpers.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace circdet {

using BigInt = mpz_class;
using i128 = __int128;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied arguments outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A construction failed its own verification. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of budget before finding an answer.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// BigInt helpers
// ---------------------------------------------------------------------------

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline BigInt big(long v) { return BigInt(v); }

inline BigInt from_i128(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

inline bool fits_i64(const BigInt& v) { return v.fits_slong_p(); }

inline std::int64_t to_i64(const BigInt& v) {
  if (!v.fits_slong_p()) throw DomainError("integer " + to_string(v) + " exceeds 64 bits");
  return v.get_si();
}

inline BigInt parse_bigint(const std::string& text) {
  BigInt r;
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || r.set_str(t, 10) != 0) throw DomainError("not an integer: '" + text + "'");
  return r;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Floor division and its non-negative remainder.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt mod_floor(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const BigInt& d, const BigInt& v) {
  return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exponent of the prime p in v (v != 0).
inline unsigned valuation(BigInt v, unsigned long p) {
  if (v == 0) throw DomainError("valuation of zero");
  unsigned e = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
    ++e;
  }
  return e;
}

/// Balanced residue of v modulo m, in (-m/2, m/2].
inline long balanced_mod(const BigInt& v, long m) {
  long r = mod_floor(v, BigInt(m)).get_si();
  if (2 * r > m) r -= m;
  return r;
}

inline long balanced_mod(long v, long m) {
  long r = ((v % m) + m) % m;
  if (2 * r > m) r -= m;
  return r;
}

// ---------------------------------------------------------------------------
// Small number theory
// ---------------------------------------------------------------------------

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin, exact for every 64-bit input.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline bool is_prime(long n) { return n > 1 && is_prime_u64(static_cast<std::uint64_t>(n)); }

inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline std::vector<long> primes_up_to(long limit) {
  std::vector<long> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
  for (long i = 2; i <= limit; ++i) {
    if (composite[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * i; j <= limit; j += i) composite[static_cast<size_t>(j)] = true;
  }
  return out;
}

inline long gcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

inline int moebius(long n) {
  int m = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

/// Multiplicative order of a modulo m (gcd(a, m) = 1).
inline long multiplicative_order(const BigInt& a, long m) {
  long r = mod_floor(a, BigInt(m)).get_si();
  if (gcd(r, m) != 1) throw DomainError("order of a non-unit");
  long x = r % m, k = 1;
  while (x != 1 % m) {
    x = (x * r) % m;
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------
// Factorisation
// ---------------------------------------------------------------------------

/// Sign and prime-power decomposition of a nonzero integer.
struct FactoredInteger {
  int sign = 1;
  std::map<BigInt, unsigned> powers;

  BigInt value() const {
    BigInt r = sign;
    for (const auto& [p, e] : powers) r *= pow(p, e);
    return r;
  }
  unsigned exponent(const BigInt& p) const {
    auto it = powers.find(p);
    return it == powers.end() ? 0 : it->second;
  }
};

inline constexpr long kTrialDivisionBound = 1'000'000;

/// Prime powers found by trial division up to `trial_bound`, with the
/// cofactor left over. `complete` when the cofactor is 1 or a certified prime
/// (it is then moved into `known`).
struct PartialFactorization {
  FactoredInteger known;
  BigInt cofactor = 1;
  bool complete = true;
};

inline PartialFactorization partial_factor(const BigInt& v, long trial_bound = kTrialDivisionBound) {
  if (v == 0) throw DomainError("cannot factor zero");
  PartialFactorization r;
  r.known.sign = v < 0 ? -1 : 1;
  BigInt n = abs(v);
  static const std::vector<long> small = primes_up_to(kTrialDivisionBound);
  for (long p : small) {
    if (p > trial_bound) break;
    if (BigInt(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
        ++e;
      }
      r.known.powers[BigInt(p)] = e;
    }
  }
  if (n == 1) return r;
  const BigInt bound = BigInt(trial_bound);
  if (n <= bound * bound || (n.fits_ulong_p() && is_prime_u64(n.get_ui()))) {
    r.known.powers[n] += 1;
    return r;
  }
  r.cofactor = n;
  r.complete = false;
  return r;
}

/// Trial division to `trial_bound`, then a deterministic primality test on
/// the cofactor. Returns nullopt when a composite cofactor remains, or when
/// the cofactor is beyond 64 bits and cannot be certified.
inline std::optional<FactoredInteger> factor_integer(const BigInt& v, long trial_bound = kTrialDivisionBound) {
  PartialFactorization r = partial_factor(v, trial_bound);
  if (!r.complete) return std::nullopt;
  return r.known;
}

}  // namespace circdet
