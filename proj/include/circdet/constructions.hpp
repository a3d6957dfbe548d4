// Witness polynomials: each family builds F and checks M_n(F) against its
// claimed value through the norm profile before handing it out.
#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "cyclonorm.hpp"
#include "goodbad.hpp"
#include "numberfield.hpp"
#include "polyring.hpp"

namespace circdet {

struct WitnessCertificate {
  long n = 1;
  IntPoly poly;  // reduced mod x^n - 1
  BigInt claimed;
  NormProfile profile;
  std::string label;
};

/// Reduces F mod x^n - 1 and checks M_n(F) = claimed; a mismatch is a bug.
inline WitnessCertificate make_certificate(long n, const IntPoly& f, const BigInt& claimed, std::string label) {
  if (n < 1) throw DomainError("modulus must be positive");
  WitnessCertificate c;
  c.n = n;
  c.poly = poly_mod_xn(f, static_cast<std::size_t>(n));
  c.claimed = claimed;
  c.profile = norm_profile(c.poly, n);
  c.label = std::move(label);
  if (c.profile.total != claimed)
    throw InternalError(c.label + ": M_" + std::to_string(n) + " = " + to_string(c.profile.total) + ", claimed " +
                        to_string(claimed));
  return c;
}

/// -x, with M_n(-x) = -1 for every n.
inline WitnessCertificate negation_certificate(long n) { return make_certificate(n, IntPoly{0, -1}, BigInt(-1), "-x"); }

inline WitnessCertificate compose_witness(const std::vector<WitnessCertificate>& parts, long n) {
  IntPoly f{1};
  BigInt v = 1;
  std::string label;
  for (const auto& c : parts) {
    if (c.n != n) throw DomainError("compose_witness: modulus mismatch (" + std::to_string(c.n) + " vs " + std::to_string(n) + ")");
    f = poly_mul_mod(f, c.poly, static_cast<std::size_t>(n));
    v *= c.claimed;
    label += (label.empty() ? "" : " * ") + c.label;
  }
  return make_certificate(n, f, v, label.empty() ? "1" : label);
}

/// The same witness times -x when its value is negative.
inline WitnessCertificate with_positive_sign(const WitnessCertificate& c) {
  if (c.claimed >= 0) return c;
  return compose_witness({c, negation_certificate(c.n)}, c.n);
}

/// (x^|v| - 1)/(x - 1), times -x for v < 0; needs gcd(v, n) = 1.
inline WitnessCertificate coprime_certificate(long n, const BigInt& v) {
  if (v == 0 || gcd(v, BigInt(n)) != 1) throw DomainError("coprime_certificate needs gcd(v, n) = 1");
  BigInt a = abs(v);
  auto c = make_certificate(n, geometric_mod(a, static_cast<std::size_t>(n)), a, "psi_" + to_string(a));
  return v < 0 ? compose_witness({c, negation_certificate(n)}, n) : c;
}

namespace detail {

inline void require_odd_prime_not3(long p) {
  if (p < 5 || !is_prime(p)) throw DomainError("p must be an odd prime other than 3");
}

// Builds F and accepts M_n(F) = +-target, fixing a negative sign with -x.
inline WitnessCertificate signed_target(long n, const IntPoly& f, const BigInt& target, const std::string& label) {
  IntPoly g = poly_mod_xn(f, static_cast<std::size_t>(n));
  BigInt v = norm_profile(g, n).total;
  if (v == target) return make_certificate(n, g, target, label);
  if (v == -target) return make_certificate(n, poly_mul_mod(g, IntPoly{0, -1}, static_cast<std::size_t>(n)), target, label + " * -x");
  throw InternalError(label + ": M_" + std::to_string(n) + " = " + to_string(v) + ", expected +-" + to_string(target));
}

}  // namespace detail

/// M_3p(F) = p^3 m for 3 !| m.
inline WitnessCertificate witness_p3m(long p, long m) {
  detail::require_odd_prime_not3(p);
  if (m == 0 || m % 3 == 0) throw DomainError("witness_p3m needs gcd(m, 3) = 1");
  const long n = 3 * p;
  const BigInt target = pow(BigInt(p), 3) * m;
  const std::string label = "p3m(p=" + std::to_string(p) + ",m=" + std::to_string(m) + ")";
  if (m < 0) {
    auto pos = witness_p3m(p, -m);
    auto c = compose_witness({pos, negation_certificate(n)}, n);
    c.label = label;
    return c;
  }
  const long k = (((2 * m * p) % 3) + 3) % 3;
  const std::size_t N = static_cast<std::size_t>(n);
  IntPoly f = geometric_mod(BigInt(m * p + 2 * k), N) -
              poly_mul_mod(poly_mul_mod(x_pow_mod(BigInt(2 * m * p - k), N), geometric_mod(BigInt(k), N), N),
                           IntPoly::x_pow(static_cast<std::size_t>(3 * k)) + IntPoly{1}, N);
  return make_certificate(n, f, target, label);
}

enum class ThreePowerVariant { F3, F4 };

/// M_3p(F3) = 3^4 m for p !| m; M_3p(F4) = 3^3 m for gcd(m, 3p) = 1.
inline WitnessCertificate witness_3power(long p, long m, ThreePowerVariant variant) {
  detail::require_odd_prime_not3(p);
  const long n = 3 * p;
  const std::size_t N = static_cast<std::size_t>(n);
  const IntPoly nine{1, 0, 0, 1, 0, 0, 1};  // 1 + x^3 + x^6
  if (variant == ThreePowerVariant::F3) {
    if (m == 0 || m % p == 0) throw DomainError("witness_3power F3 needs p !| m");
    const std::string label = "F3(p=" + std::to_string(p) + ",m=" + std::to_string(m) + ")";
    if (m < 0) {
      auto c = compose_witness({witness_3power(p, -m, variant), negation_certificate(n)}, n);
      c.label = label;
      return c;
    }
    // a negative exponent p - 3 - 3m is the "multiply by a power of x" case
    IntPoly f = geometric_mod(BigInt(3 * p - 9), N) -
                poly_mul_mod(poly_mul_mod(x_pow_mod(BigInt(3 * p - 6), N), nine, N), geometric_mod(BigInt(p - 3 - 3 * m), N), N);
    return make_certificate(n, f, BigInt(81) * m, label);
  }
  if (m == 0 || gcd(m, n) != 1) throw DomainError("witness_3power F4 needs gcd(m, 3p) = 1");
  const std::string label = "F4(p=" + std::to_string(p) + ",m=" + std::to_string(m) + ")";
  if (m < 0) {
    auto c = compose_witness({witness_3power(p, -m, variant), negation_certificate(n)}, n);
    c.label = label;
    return c;
  }
  auto fac = factor_integer(BigInt(m));
  if (!fac) throw DomainError("cannot factor m");
  IntPoly f = nine;
  for (const auto& [q, e] : fac->powers)
    for (unsigned i = 0; i < e; ++i) f = poly_mul_mod(f, cyclotomic(q.get_si()), N);
  return make_certificate(n, f, BigInt(27) * m, label);
}

/// G = ((x^k - 1)/(x - 1)) F + lambda (x^n - 1)/(x - 1), and
/// M_n(G) = (k F(1) + lambda n) / F(1) * M_n(F).
inline WitnessCertificate shift_construction(const IntPoly& f, long n, const BigInt& k, const BigInt& lambda) {
  if (k == 0 || gcd(k, BigInt(n)) != 1) throw DomainError("shift_construction needs gcd(k, n) = 1");
  const std::size_t N = static_cast<std::size_t>(n);
  IntPoly fr = poly_mod_xn(f, N);
  BigInt f1 = fr.at_one();
  if (f1 == 0) throw DomainError("shift_construction needs F(1) != 0");
  BigInt mf = norm_profile(fr, n).total;
  BigInt num = (k * f1 + lambda * n) * mf;
  if (!divides(f1, num)) throw InternalError("shift_construction: F(1) does not divide the new value");
  IntPoly g = poly_mul_mod(geometric_mod(k, N), fr, N) + geometric_mod(BigInt(n), N) * lambda;
  return make_certificate(n, g, num / f1, "shift(k=" + to_string(k) + ",lambda=" + to_string(lambda) + ")");
}

// ---------------------------------------------------------------------------
// Registry of fixed display polynomials
// ---------------------------------------------------------------------------

struct RegistryEntry {
  std::string name;
  long n = 1;
  std::string poly_text;
  BigInt claimed;
};

/// Parses "name | n | polynomial | claimed" lines; '#' starts a comment.
inline std::vector<RegistryEntry> parse_registry(const std::string& text) {
  std::vector<RegistryEntry> out;
  std::istringstream in(text);
  std::string line;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    std::vector<std::string> f;
    std::size_t start = 0, bar;
    while ((bar = line.find('|', start)) != std::string::npos) {
      f.push_back(trim(line.substr(start, bar - start)));
      start = bar + 1;
    }
    f.push_back(trim(line.substr(start)));
    if (f.size() != 4) throw DomainError("registry line " + std::to_string(lineno) + ": expected 4 fields");
    RegistryEntry e;
    e.name = f[0];
    e.n = std::stol(f[1]);
    e.poly_text = f[2];
    e.claimed = parse_bigint(f[3]);
    out.push_back(std::move(e));
  }
  return out;
}

inline const std::vector<RegistryEntry>& witness_registry() {
  static const std::vector<RegistryEntry> r = parse_registry(
#include "circdet/witness_registry.inc"
  );
  return r;
}

inline std::vector<std::string> registry_names() {
  std::vector<std::string> v;
  for (const auto& e : witness_registry()) v.push_back(e.name);
  return v;
}

inline WitnessCertificate fixed_witness(const std::string& name) {
  for (const auto& e : witness_registry())
    if (e.name == name) return make_certificate(e.n, parse_poly(e.poly_text), e.claimed, e.name);
  throw DomainError("unknown witness '" + name + "'");
}

// ---------------------------------------------------------------------------
// 3^2 p and 5^2 p for p = 7, 11, 13 mod 15
// ---------------------------------------------------------------------------

namespace detail {

inline IntPoly phi5_phi15() { return phi5() * phi15(); }

inline IntPoly linear(long a1, long a0) { return IntPoly{a0, a1}; }

}  // namespace detail

/// Certificates for 9p and 25p at n = 15.
inline std::pair<WitnessCertificate, WitnessCertificate> witness_3sq_5sq(long p) {
  require_prime(p, "witness_3sq_5sq");
  const long r = p % 15;
  using detail::linear;
  const IntPoly one_minus_x{1, -1}, x_minus_1{-1, 1};
  const std::string ps = std::to_string(p);
  if (r == 7 || r == 13) {
    EisensteinRep e = canonical_rep_mod15(p);
    IntPoly head9 = r == 7 ? parse_poly("1 - x + x^3 + x^6 + x^9") : parse_poly("1 - x^5 - x^11 + x^12 + x^3 + x^6 + x^9");
    IntPoly head25 = r == 7 ? parse_poly("1 - x^2 + x^4 + x^9 + x^10 + x^13 + x^14") : parse_poly("1 + x^3 + x^6 + x^9 + x^14");
    IntPoly f = head9 + one_minus_x * detail::phi5_phi15() * linear(e.A, e.B);
    IntPoly g = head25 + x_minus_1 * detail::phi5_phi15() * linear(e.C, e.D);
    return {detail::signed_target(15, f, BigInt(9 * p), "9p(p=" + ps + ")"),
            detail::signed_target(15, g, BigInt(25 * p), "25p(p=" + ps + ")")};
  }
  if (r == 11) {
    Norm5Rep n5 = rep_norm5(p);
    const IntPoly tri{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};  // 1 + x^5 + x^10
    IntPoly f = tri + x_minus_1 * BigInt(n5.sign) + tri * x_minus_1 * n5.g;
    IntPoly g = parse_poly("x^13 + x^14 + x^15 + x^16 - x^7 + x^10 + x^11") + tri * one_minus_x * n5.g2;
    return {detail::signed_target(15, f, BigInt(9 * p), "9p(p=" + ps + ")"),
            detail::signed_target(15, g, BigInt(25 * p), "25p(p=" + ps + ")")};
  }
  throw DomainError("witness_3sq_5sq needs p = 7, 11 or 13 mod 15");
}

enum class GoodFormTarget { three, five };

/// 9k from a good first form, 25k from a good second form, k = N_15.
inline WitnessCertificate witness_good_form(const CanonicalForm& form, GoodFormTarget which) {
  if (form.b_type != Tag::good) throw DomainError("witness_good_form needs a good form (B = 1)");
  const bool first = form.form == FormKind::first;
  if (first != (which == GoodFormTarget::three)) throw DomainError("first form gives 9k, second form gives 25k");
  IntPoly f = form.reconstruct();
  BigInt k = norm_d(f, 15);
  BigInt target = k * (first ? 9 : 25);
  return detail::signed_target(15, f, target, std::string(first ? "9k" : "25k") + "(k=" + to_string(k) + ")");
}

inline WitnessCertificate witness_good_form(const Classification& c, GoodFormTarget which) {
  return witness_good_form(which == GoodFormTarget::three ? c.first : c.second, which);
}

}  // namespace circdet
