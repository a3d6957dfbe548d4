// Which integers are n x n circulant determinants, for n = p, 2p and 15.
// Every positive verdict comes with a witness polynomial whose M_n has been
// recomputed exactly.
#pragma once

#include <optional>
#include <string>

#include "arith.hpp"
#include "constructions.hpp"
#include "goodbad.hpp"
#include "numberfield.hpp"

namespace circdet {

enum class Status { member, non_member, unknown };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::member:
      return "member";
    case Status::non_member:
      return "non_member";
    default:
      return "unknown";
  }
}

enum class Reason {
  zero,
  coprime,
  fifteen_sq,
  three_pow,
  five_pow,
  class_i,
  class_ii,
  class_iii,
  div_violation,
  no_qualifying_prime,
  unfactored,
  n_squared,  // S_p, S_2p: multiple of n^2
  two_pow,    // S_2p: 2^a m, a >= 2
  p_pow,      // S_2p: p^b m, b >= 2
};

inline const char* to_string(Reason r) {
  switch (r) {
    case Reason::zero: return "zero";
    case Reason::coprime: return "coprime";
    case Reason::fifteen_sq: return "fifteen_sq";
    case Reason::three_pow: return "three_pow";
    case Reason::five_pow: return "five_pow";
    case Reason::class_i: return "class_i";
    case Reason::class_ii: return "class_ii";
    case Reason::class_iii: return "class_iii";
    case Reason::div_violation: return "div_violation";
    case Reason::no_qualifying_prime: return "no_qualifying_prime";
    case Reason::unfactored: return "unfactored";
    case Reason::n_squared: return "n_squared";
    case Reason::two_pow: return "two_pow";
    case Reason::p_pow: return "p_pow";
  }
  return "?";
}

struct MembershipVerdict {
  long n = 15;
  BigInt value;
  Status status = Status::non_member;
  Reason reason = Reason::zero;
  std::optional<long> prime;  // the qualifying prime for class_i..iii
  std::string note;
  std::optional<WitnessCertificate> witness;

  bool member() const { return status == Status::member; }
};

struct MembershipOptions {
  bool synthesize = true;  // false: verdict only, no certificate
  long trial_bound = kTrialDivisionBound;
};

/// For each prime p | gcd(v, n) with p^a || n, p^(a+1) | v. True for v = 0.
inline bool divisibility_ok(long n, const BigInt& v) {
  if (n < 1) throw DomainError("modulus must be positive");
  if (v == 0) return true;
  auto check = [&](long p, unsigned a) { return !divides(BigInt(p), v) || valuation(v, static_cast<unsigned long>(p)) >= a + 1; };
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    unsigned a = 0;
    while (m % p == 0) {
      m /= p;
      ++a;
    }
    if (a && !check(p, a)) return false;
  }
  if (m > 1 && !check(m, 1)) return false;
  return true;
}

namespace detail {

inline MembershipVerdict verdict(long n, const BigInt& v, Status s, Reason r, std::string note = {}) {
  MembershipVerdict out;
  out.n = n;
  out.value = v;
  out.status = s;
  out.reason = r;
  out.note = std::move(note);
  return out;
}

// 1 - x + k (x^n - 1)/(x - 1), with M_n = k n^2.
inline WitnessCertificate n_squared_certificate(long n, const BigInt& k) {
  IntPoly f = IntPoly{1, -1} + geometric_mod(BigInt(n), static_cast<std::size_t>(n)) * k;
  return make_certificate(n, f, k * n * n, "1 - x + k psi_n (k=" + to_string(k) + ")");
}

// Smallest k > 0 with k = target mod `step` and gcd(k, n) = 1.
inline BigInt residue_with_unit(const BigInt& target, long step, long n) {
  BigInt k = mod_floor(target, BigInt(step));
  if (k == 0) k = step;
  for (int i = 0; i < 64; ++i, k += step)
    if (gcd(k, BigInt(n)) == 1) return k;
  throw InternalError("no unit residue found");
}

// The S_15 certificate for 9p^e / 25p^e from prime p.
inline WitnessCertificate class_certificate(long p, bool nine, Reason r) {
  const GoodFormTarget which = nine ? GoodFormTarget::three : GoodFormTarget::five;
  if (r == Reason::class_i && p % 15 != 1) {
    auto pr = witness_3sq_5sq(p);
    return nine ? pr.first : pr.second;
  }
  CycloElement xi = r == Reason::class_i ? find_norm_element(p) : prime_element(15, p);
  Classification c = classify_element(xi);
  if (c.tag != Tag::good) throw InternalError("expected a good element above " + std::to_string(p));
  return with_positive_sign(witness_good_form(c, which));
}

}  // namespace detail

/// Membership in S_15.
inline MembershipVerdict decide_s15(const BigInt& v, MembershipOptions opt = {}) {
  using detail::verdict;
  const long n = 15;
  if (v == 0) {
    auto out = verdict(n, v, Status::member, Reason::zero);
    if (opt.synthesize) out.witness = make_certificate(n, IntPoly{}, BigInt(0), "0");
    return out;
  }
  const unsigned t3 = valuation(v, 3), t5 = valuation(v, 5);
  if (t3 >= 2 && t5 >= 2) {
    auto out = verdict(n, v, Status::member, Reason::fifteen_sq);
    if (opt.synthesize) out.witness = detail::n_squared_certificate(n, v / 225);
    return out;
  }
  if (t3 == 1 || t5 == 1)
    return verdict(n, v, Status::non_member, Reason::div_violation, "3 or 5 divides v exactly once");
  if (t3 == 0 && t5 == 0) {
    auto out = verdict(n, v, Status::member, Reason::coprime);
    if (opt.synthesize) out.witness = coprime_certificate(n, v);
    return out;
  }
  if (t3 >= 3 || t5 >= 3) {
    // one of t3, t5 is >= 3 and the other is 0
    const bool three = t3 >= 3;
    auto out = verdict(n, v, Status::member, three ? Reason::three_pow : Reason::five_pow);
    if (opt.synthesize) {
      if (three) {
        // F = 1 + x^3 + x^6: M = 27, F(1) = 3, so M(G) = 27 (k + 5 lambda)
        BigInt target = v / 27;
        BigInt k = detail::residue_with_unit(target, 5, 15);
        out.witness = shift_construction(witness_3power(5, 1, ThreePowerVariant::F4).poly, n, k, (target - k) / 5);
      } else {
        // witness_p3m(5, 1): M = 125, F(1) = 5, so M(G) = 125 (k + 3 lambda)
        BigInt target = v / 125;
        BigInt k = detail::residue_with_unit(target, 3, 15);
        out.witness = shift_construction(witness_p3m(5, 1).poly, n, k, (target - k) / 3);
      }
    }
    return out;
  }
  // v = 9k or 25k with gcd(k, 15) = 1
  const bool nine = t3 == 2;
  const BigInt k = v / (nine ? 9 : 25);
  PartialFactorization pf = partial_factor(k, opt.trial_bound);
  std::string skipped;
  for (const auto& [q, e] : pf.known.powers) {
    if (!q.fits_slong_p()) continue;
    const long p = q.get_si();
    skipped += (skipped.empty() ? "" : ", ") + std::to_string(p) + "^" + std::to_string(e);
    const long r = p % 15;
    Reason why;
    if (r == 7 || r == 11 || r == 13)
      why = Reason::class_i;
    else if (r == 1 && classify_prime(p) == Tag::good)
      why = Reason::class_i;
    else if (r == 4 && e >= 2)
      why = Reason::class_ii;
    else if ((r == 2 || r == 8) && e >= 4)
      why = Reason::class_iii;
    else {
      if (r == 1) skipped += " (bad)";
      continue;
    }
    auto out = verdict(n, v, Status::member, why);
    out.prime = p;
    if (opt.synthesize) {
      WitnessCertificate base = detail::class_certificate(p, nine, why);
      const BigInt rest = v / base.claimed;
      out.witness = rest == 1 ? base : compose_witness({base, coprime_certificate(n, rest)}, n);
    }
    return out;
  }
  if (!pf.complete)
    return verdict(n, v, Status::unknown, Reason::unfactored,
                   "cofactor " + to_string(pf.cofactor) + " not factored by trial division to " + std::to_string(opt.trial_bound));
  return verdict(n, v, Status::non_member, Reason::no_qualifying_prime,
                 "no prime power of k qualifies: " + (skipped.empty() ? std::string("k = +-1") : skipped));
}

/// Membership in S_p (doubled = false) or S_2p (doubled = true), p odd prime.
inline MembershipVerdict decide_sp(const BigInt& v, long p, bool doubled, MembershipOptions opt = {}) {
  using detail::verdict;
  if (p < 3 || !is_prime(p)) throw DomainError("decide_sp needs an odd prime");
  const long n = doubled ? 2 * p : p;
  if (v == 0) {
    auto out = verdict(n, v, Status::member, Reason::zero);
    if (opt.synthesize) out.witness = make_certificate(n, IntPoly{}, BigInt(0), "0");
    return out;
  }
  const unsigned b = valuation(v, static_cast<unsigned long>(p));
  const unsigned a = doubled ? valuation(v, 2) : 0;
  if (b == 1 || a == 1) return verdict(n, v, Status::non_member, Reason::div_violation);
  Reason why = Reason::coprime;
  if (b >= 2 && (!doubled || a >= 2))
    why = Reason::n_squared;
  else if (a >= 2)
    why = Reason::two_pow;
  else if (b >= 2)
    why = Reason::p_pow;
  auto out = verdict(n, v, Status::member, why);
  if (!opt.synthesize) return out;
  switch (why) {
    case Reason::coprime:
      out.witness = coprime_certificate(n, v);
      break;
    case Reason::n_squared:
      out.witness = detail::n_squared_certificate(n, v / (BigInt(n) * n));
      break;
    case Reason::two_pow: {
      // F = x^2 + 1: M_2p = 4, F(1) = 2, so M(G) = 4 (k + p lambda)
      BigInt w = v / 4;
      BigInt k = detail::residue_with_unit(w, p, n);
      out.witness = shift_construction(IntPoly{1, 0, 1}, n, k, (w - k) / p);
      break;
    }
    default: {
      // F = psi_p - x + x^p: M_2p = p^2, F(1) = p, so M(G) = p^2 (k + 2 lambda)
      BigInt w = v / (BigInt(p) * p);
      IntPoly f = geometric(static_cast<std::size_t>(p)) - IntPoly{0, 1} + IntPoly::x_pow(static_cast<std::size_t>(p));
      out.witness = shift_construction(f, n, BigInt(1), (w - 1) / 2);
      break;
    }
  }
  if (out.witness->claimed != v) throw InternalError("decide_sp: witness value mismatch");
  return out;
}

}  // namespace circdet
