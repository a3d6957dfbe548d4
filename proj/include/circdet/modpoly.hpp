// Polynomials over F_p (p < 2^62) and the factorisation of Phi_d mod p.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "arith.hpp"
#include "polyring.hpp"

namespace circdet {

/// Coefficients in [0, p), lowest degree first, no trailing zeros.
using ModPoly = std::vector<std::uint64_t>;

namespace modp {

inline void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long deg(const ModPoly& a) { return static_cast<long>(a.size()) - 1; }

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

inline ModPoly from_int(const IntPoly& f, std::uint64_t p) {
  ModPoly r(f.size());
  const BigInt P(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_floor(f.coeffs()[i], P).get_ui();
  trim(r);
  return r;
}

inline ModPoly sub(ModPoly a, const ModPoly& b, std::uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline ModPoly mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

/// Remainder of a modulo b (b nonzero).
inline ModPoly rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
  const long db = deg(b);
  const std::uint64_t li = inv(b.back(), p);
  for (long k = deg(a); k >= db; --k) {
    std::uint64_t t = mulmod(a[static_cast<std::size_t>(k)], li, p);
    if (!t) continue;
    for (long j = 0; j <= db; ++j) {
      std::size_t idx = static_cast<std::size_t>(k - db + j);
      a[idx] = (a[idx] + p - mulmod(t, b[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  trim(a);
  return a;
}

inline ModPoly quo(ModPoly a, const ModPoly& b, std::uint64_t p) {
  const long db = deg(b);
  if (deg(a) < db) return {};
  const std::uint64_t li = inv(b.back(), p);
  ModPoly q(static_cast<std::size_t>(deg(a) - db + 1), 0);
  for (long k = deg(a); k >= db; --k) {
    std::uint64_t t = mulmod(a[static_cast<std::size_t>(k)], li, p);
    q[static_cast<std::size_t>(k - db)] = t;
    if (!t) continue;
    for (long j = 0; j <= db; ++j) {
      std::size_t idx = static_cast<std::size_t>(k - db + j);
      a[idx] = (a[idx] + p - mulmod(t, b[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  trim(q);
  return q;
}

inline ModPoly monic(ModPoly a, std::uint64_t p) {
  if (a.empty()) return a;
  std::uint64_t li = inv(a.back(), p);
  for (auto& v : a) v = mulmod(v, li, p);
  return a;
}

inline ModPoly gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// base^e mod m.
inline ModPoly powmod_poly(ModPoly base, const BigInt& e, const ModPoly& m, std::uint64_t p) {
  ModPoly r{1};
  base = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base, p), m, p);
  }
  return r;
}

// Splits h, all of whose irreducible factors have degree f, into those factors.
inline void equal_degree_split(const ModPoly& h, long f, std::uint64_t p, std::vector<ModPoly>& out) {
  if (deg(h) == f) {
    out.push_back(monic(h, p));
    return;
  }
  if (p == 2 || pow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(f)) <= 4096) {
    // enumerate monic degree-f polynomials
    BigInt total = pow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(f));
    const unsigned long T = total.get_ui();
    ModPoly rest = h;
    for (unsigned long code = 0; code < T && deg(rest) > f; ++code) {
      ModPoly c(static_cast<std::size_t>(f + 1));
      unsigned long v = code;
      for (long i = 0; i < f; ++i) {
        c[static_cast<std::size_t>(i)] = v % p;
        v /= p;
      }
      c[static_cast<std::size_t>(f)] = 1;
      if (rem(rest, c, p).empty()) {
        out.push_back(c);
        rest = quo(rest, c, p);
      }
    }
    out.push_back(monic(rest, p));
    return;
  }
  const BigInt e = (pow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(f)) - 1) / 2;
  for (std::uint64_t c = 0;; ++c) {
    for (long shape = 1; shape <= 2; ++shape) {
      ModPoly a(static_cast<std::size_t>(shape + 1), 0);
      a[0] = c % p;
      a[static_cast<std::size_t>(shape)] = 1;
      if (shape == 2) a[1] = 1;
      ModPoly b = powmod_poly(a, e, h, p);
      b = sub(b, ModPoly{1}, p);
      ModPoly g = gcd(h, b, p);
      if (deg(g) > 0 && deg(g) < deg(h)) {
        equal_degree_split(g, f, p, out);
        equal_degree_split(quo(h, g, p), f, p, out);
        return;
      }
    }
  }
}

}  // namespace modp

/// All irreducible factors of Phi_d modulo a prime p not dividing d, sorted
/// by coefficient vector (highest coefficient first compared last).
inline std::vector<ModPoly> cyclotomic_factors_mod(long d, std::uint64_t p) {
  if (d % static_cast<long>(p) == 0) throw DomainError("prime divides the conductor");
  const long f = multiplicative_order(BigInt(static_cast<unsigned long>(p)), d);
  ModPoly h = modp::from_int(cyclotomic(d), p);
  std::vector<ModPoly> out;
  modp::equal_degree_split(h, f, p, out);
  std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

/// Roots of Phi_d modulo p for p = 1 mod d, ascending.
inline std::vector<std::uint64_t> cyclotomic_roots_mod(long d, std::uint64_t p) {
  if ((p - 1) % static_cast<std::uint64_t>(d) != 0) throw DomainError("p is not 1 mod d");
  std::vector<long> qs;
  for (long q = 2, m = d; q <= m; ++q)
    if (m % q == 0) {
      qs.push_back(q);
      while (m % q == 0) m /= q;
    }
  std::uint64_t r = 0;
  for (std::uint64_t a = 2; a < p; ++a) {
    std::uint64_t c = powmod(a, (p - 1) / static_cast<std::uint64_t>(d), p);
    bool prim = c != 1 || d == 1;
    for (long q : qs)
      if (powmod(c, static_cast<std::uint64_t>(d / q), p) == 1) prim = false;
    if (prim) {
      r = c;
      break;
    }
  }
  if (d == 1) return {1};
  std::vector<std::uint64_t> roots;
  for (long k = 1; k < d; ++k)
    if (gcd(k, d) == 1) roots.push_back(powmod(r, static_cast<std::uint64_t>(k), p));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace circdet
