// Norm equations in Z[w_3], Z[w_5], Z[w_15]; splitting of primes in
// Z[w_15]; the x^2 + pq y^2 = 4p obstruction; powers of (3 + sqrt 5)/2.
#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "cyclonorm.hpp"
#include "lattice.hpp"
#include "modpoly.hpp"
#include "polyring.hpp"

namespace circdet {

inline void require_prime(long p, const char* what) {
  if (!is_prime(p)) throw DomainError(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

// ---------------------------------------------------------------------------
// Z[w_3]
// ---------------------------------------------------------------------------

/// N_3(a + b x) = a^2 - ab + b^2.
inline BigInt norm3(const BigInt& a, const BigInt& b) { return a * a - a * b + b * b; }

/// (alpha, beta) with alpha^2 - alpha beta + beta^2 = p: smallest beta >= 0,
/// then smallest alpha > 0.
inline std::pair<long, long> eisenstein_rep(long p) {
  require_prime(p, "eisenstein_rep");
  if (p % 3 != 1) throw DomainError("eisenstein_rep needs p = 1 mod 3");
  for (long beta = 0; 3 * beta * beta <= 4 * p; ++beta) {
    // alpha^2 - beta alpha + beta^2 - p = 0
    long disc = 4 * p - 3 * beta * beta;
    long s = static_cast<long>(std::sqrt(static_cast<double>(disc)));
    while (s * s > disc) --s;
    while ((s + 1) * (s + 1) <= disc) ++s;
    if (s * s != disc) continue;
    for (long alpha : {(beta - s) / 2, (beta + s) / 2}) {
      if ((beta - s) % 2 != 0) continue;
      if (alpha > 0 && alpha * alpha - alpha * beta + beta * beta == p) return {alpha, beta};
    }
  }
  throw InternalError("no Eisenstein representation found");
}

/// One move on alpha + beta w_3 that keeps the norm.
enum class EisensteinMove { swap, negate, conjugate };

inline const char* to_string(EisensteinMove m) {
  switch (m) {
    case EisensteinMove::swap:
      return "swap";
    case EisensteinMove::negate:
      return "negate";
    default:
      return "conjugate";
  }
}

inline std::pair<long, long> apply_move(EisensteinMove m, std::pair<long, long> v) {
  switch (m) {
    case EisensteinMove::swap:
      return {v.second, v.first};
    case EisensteinMove::negate:
      return {-v.first, -v.second};
    default:
      return {v.first - v.second, -v.second};
  }
}

/// p = N_3(a + bx + 5(Ax + B)) with (a, b) fixed by p mod 15, and for
/// p = 7, 13 mod 15 also p = N_3(c + dx + 5(x - 1)(Cx + D)).
struct EisensteinRep {
  long p = 0;
  long alpha = 0, beta = 0;  // the starting representation
  long a = 0, b = 0, A = 0, B = 0;
  std::vector<EisensteinMove> moves;
  bool has_second = false;
  long c = 0, d = 0, C = 0, D = 0;
  std::vector<EisensteinMove> second_moves;

  IntPoly first_poly() const { return IntPoly{a + 5 * B, b + 5 * A}; }
  IntPoly second_poly() const { return IntPoly{c, d} + IntPoly{-5 * D, 5 * (D - C), 5 * C}; }
};

namespace detail {

// Breadth-first search over the orbit of (alpha, beta) under the three moves;
// returns the first pair satisfying pred with the path that reaches it.
template <class Pred>
std::optional<std::pair<std::pair<long, long>, std::vector<EisensteinMove>>> eisenstein_orbit_search(
    std::pair<long, long> start, Pred pred) {
  std::deque<std::pair<std::pair<long, long>, std::vector<EisensteinMove>>> q;
  std::set<std::pair<long, long>> seen{start};
  q.push_back({start, {}});
  while (!q.empty()) {
    auto [v, path] = q.front();
    q.pop_front();
    if (pred(v)) return std::make_pair(v, path);
    for (EisensteinMove m : {EisensteinMove::swap, EisensteinMove::negate, EisensteinMove::conjugate}) {
      auto w = apply_move(m, v);
      if (seen.insert(w).second) {
        auto np = path;
        np.push_back(m);
        q.push_back({w, np});
      }
    }
  }
  return std::nullopt;
}

inline long mod5(long v) { return ((v % 5) + 5) % 5; }

}  // namespace detail

inline std::pair<long, long> canonical_pair_mod15(long p) {
  switch (p % 15) {
    case 1:
      return {1, 0};
    case 4:
      return {2, 0};
    case 7:
      return {3, 1};
    case 13:
      return {4, 3};
    default:
      throw DomainError("p must be 1, 4, 7 or 13 mod 15");
  }
}

inline EisensteinRep canonical_rep_mod15(long p) {
  require_prime(p, "canonical_rep_mod15");
  if (p % 3 != 1 || p == 5) throw DomainError("canonical_rep_mod15 needs a prime p = 1 mod 3");
  EisensteinRep r;
  r.p = p;
  std::tie(r.alpha, r.beta) = eisenstein_rep(p);
  auto [a, b] = canonical_pair_mod15(p);
  r.a = a;
  r.b = b;
  auto hit = detail::eisenstein_orbit_search({r.alpha, r.beta}, [&](std::pair<long, long> v) {
    return detail::mod5(v.first - a) == 0 && detail::mod5(v.second - b) == 0;
  });
  if (!hit) throw InternalError("no associate reaches the canonical residue pair");
  r.moves = hit->second;
  r.B = (hit->first.first - a) / 5;
  r.A = (hit->first.second - b) / 5;
  if (norm_d(r.first_poly(), 3) != p) throw InternalError("first form fails the norm check");

  if (p % 15 == 7 || p % 15 == 13) {
    r.has_second = true;
    r.c = p % 15 == 7 ? 2 : 3;
    r.d = p % 15 == 7 ? 3 : -1;
    // alpha = c - 5(C + D), beta = d + 5(D - 2C) modulo Phi_3
    auto hit2 = detail::eisenstein_orbit_search({r.alpha, r.beta}, [&](std::pair<long, long> v) {
      if (detail::mod5(v.first - r.c) || detail::mod5(v.second - r.d)) return false;
      long s = (r.c - v.first) / 5, t = (v.second - r.d) / 5;
      return ((s - t) % 3 + 3) % 3 == 0;
    });
    if (!hit2) throw InternalError("no associate reaches the second form");
    r.second_moves = hit2->second;
    long s = (r.c - hit2->first.first) / 5, t = (hit2->first.second - r.d) / 5;
    r.C = (s - t) / 3;
    r.D = s - r.C;
    if (norm_d(r.second_poly(), 3) != p) throw InternalError("second form fails the norm check");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Prime ideals of Z[w_d] and elements of prescribed norm
// ---------------------------------------------------------------------------

/// f = order of p mod 15, and p splits into 8/f primes of norm p^f.
struct SplittingData {
  long p = 0;
  long f = 0;
  long count = 0;
  long norm_exponent = 0;
};

inline SplittingData splitting_data(long p) {
  require_prime(p, "splitting_data");
  if (p == 3 || p == 5)
    throw DomainError("p = " + std::to_string(p) + " ramifies in Z[w_15]: " +
                      (p == 3 ? "3 = u (1 - w_3)^2" : "5 = u (1 - w_5)^4"));
  SplittingData s;
  s.p = p;
  s.f = multiplicative_order(BigInt(p), 15);
  s.count = 8 / s.f;
  s.norm_exponent = s.f;
  return s;
}

/// The degree-f factor of Phi_d mod p used for prime ideals: x - r with r
/// the smallest root when f = 1, otherwise the smallest factor.
inline ModPoly chosen_factor(long d, std::uint64_t p) {
  const long f = multiplicative_order(BigInt(static_cast<unsigned long>(p)), d);
  if (f == 1) {
    std::uint64_t r = cyclotomic_roots_mod(d, p).front();
    return ModPoly{(p - r) % p, 1};
  }
  return cyclotomic_factors_mod(d, p).front();
}

/// An element of Z[w_d] generating a prime above p (norm p^f).
inline CycloElement prime_element(long d, long p, ShellSearchOptions opt = {}) {
  require_prime(p, "prime_element");
  if (d % p == 0) throw DomainError("p divides the conductor");
  return ideal_generator(d, static_cast<std::uint64_t>(p), chosen_factor(d, static_cast<std::uint64_t>(p)), opt);
}

/// xi in Z[w_15] with |N_15(xi)| = p, for p = 1 mod 15.
inline CycloElement find_norm_element(long p, ShellSearchOptions opt = {}) {
  require_prime(p, "find_norm_element");
  if (p % 15 != 1) throw DomainError("find_norm_element needs p = 1 mod 15");
  CycloElement xi = prime_element(15, p, opt);
  if (abs(norm(xi)) != p) throw InternalError("norm check failed");
  return xi;
}

// ---------------------------------------------------------------------------
// Z[w_5]: p = N_5(3 +- (x - 1) + 3(x - 1) g)
// ---------------------------------------------------------------------------

struct Norm5Rep {
  long p = 0;
  int sign = 1;
  IntPoly g;   // deg <= 3
  IntPoly g2;  // 5p = N_5((x - 1)(1 + 2x) + 3(x - 1) g2)
  bool from_fallback = false;

  IntPoly element() const {
    return IntPoly{3} + IntPoly{-sign, sign} + IntPoly{-3, 3} * g;
  }
  IntPoly element5p() const { return IntPoly{-1, -1, 2} + IntPoly{-3, 3} * g2; }
};

namespace detail {

inline IntPoly g2_from_g(int sign, const IntPoly& g) {
  // (1 - x)(3 + s(x - 1) + 3(x - 1) g) = s'(x - 1)((1 + 2x) + 3 g2) up to sign
  if (sign > 0) return -(IntPoly{1, 1} + IntPoly{-1, 1} * g);
  return IntPoly{-1, 1} * (g - IntPoly{1});
}

inline bool shell_next(std::vector<long>& c, long s) {
  std::size_t i = c.size();
  while (i-- > 0) {
    if (c[i] < s) {
      ++c[i];
      return true;
    }
    c[i] = -s;
  }
  return false;
}

}  // namespace detail

inline constexpr long kNorm5SearchBound = 8;

inline Norm5Rep rep_norm5(long p) {
  require_prime(p, "rep_norm5");
  if (p % 15 != 11) throw DomainError("rep_norm5 needs p = 11 mod 15");
  Norm5Rep r;
  r.p = p;
  auto finish = [&](int sign, IntPoly g, bool fb) {
    r.sign = sign;
    r.g = std::move(g);
    r.from_fallback = fb;
    r.g2 = detail::g2_from_g(sign, r.g);
    if (norm_d(r.element(), 5) != p) throw InternalError("rep_norm5: norm check failed");
    if (norm_d(r.element5p(), 5) != 5 * p) throw InternalError("rep_norm5: 5p form failed");
    return r;
  };
  // shells over g, then sign
  for (long s = 0; s <= kNorm5SearchBound; ++s) {
    std::vector<long> c(4, -s);
    do {
      long mx = 0;
      for (long v : c) mx = std::max(mx, std::labs(v));
      if (mx != s) continue;
      IntPoly g{c[0], c[1], c[2], c[3]};
      for (int sign : {1, -1}) {
        IntPoly f = IntPoly{3} + IntPoly{-sign, sign} + IntPoly{-3, 3} * g;
        if (norm_d(f, 5) == p) return finish(sign, g, false);
      }
    } while (detail::shell_next(c, s));
  }
  // fallback: a norm-p element, then its associates and conjugates
  CycloElement pi = prime_element(5, p);
  const CycloElement unit = cyclo_from_ints(5, {1, 1});
  const CycloElement three_xm1 = cyclo_from_ints(5, {-3, 3});
  for (long k = 1; k < 5; ++k) {
    CycloElement base = conjugate(pi, k);
    CycloElement u = cyclo_one(5);
    for (long m = 0; m < 80; ++m, u = u * unit) {
      for (long j = 0; j < 5; ++j)
        for (int e : {1, -1}) {
          CycloElement cand = scale(cyclo_root_power(5, j) * u * base, BigInt(e));
          for (int sign : {1, -1}) {
            CycloElement rest = cand - cyclo_from_ints(5, {3 - sign, sign});
            auto q = exact_divide(rest, three_xm1);
            if (q) return finish(sign, q->poly(), true);
          }
        }
    }
  }
  throw SearchExhausted("rep_norm5: no representation found");
}

// ---------------------------------------------------------------------------
// Small facts
// ---------------------------------------------------------------------------

/// Whether x^2 + pq y^2 = 4p has an integer solution (pq = 3 mod 4).
inline bool quad_feasibility(long p, long q) {
  require_prime(p, "quad_feasibility");
  require_prime(q, "quad_feasibility");
  if (p == 2 || q == 2 || p == q) throw DomainError("p and q must be distinct odd primes");
  if ((p * q) % 4 != 3) throw DomainError("pq is not 3 mod 4; the obstruction does not apply");
  for (long y = 0; p * q * y * y <= 4 * p; ++y) {
    long rest = 4 * p - p * q * y * y;
    long x = static_cast<long>(std::sqrt(static_cast<double>(rest)));
    while (x * x > rest) --x;
    while ((x + 1) * (x + 1) <= rest) ++x;
    if (x * x == rest) return true;
  }
  return false;
}

/// ((3 + sqrt 5)/2)^k = (a_k + b_k sqrt 5)/2.
inline std::pair<BigInt, BigInt> half_integer_power(long k) {
  if (k < 1) throw DomainError("k must be positive");
  BigInt a = 3, b = 1;
  for (long i = 1; i < k; ++i) {
    BigInt na = (3 * a + 5 * b) / 2;
    BigInt nb = (a + 3 * b) / 2;
    a = na;
    b = nb;
  }
  return {a, b};
}

}  // namespace circdet
