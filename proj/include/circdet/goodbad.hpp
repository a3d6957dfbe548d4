// Good/bad classification of elements of Z[w_15] with gcd(N_15, 15) = 1.
//
// Every such xi is u * F(w) with
//   F = (x^5 - 1) +- x^j Phi_3 B + (x - 1) Phi_3 Phi_5 g      (first form)
//   F = (x^3 - 1) +- x^j Phi_5 B + (x - 1) Phi_3 Phi_5 g      (second form)
// and B = 1 (good) or B = x - 1 (bad). The pipeline below follows the
// constructive reduction: split F into alpha, beta; reduce alpha modulo
// (5, Phi_3) and beta modulo (3, Phi_5); collapse the residual B; divide out
// units. Each step is re-verified as an exact identity.
#pragma once

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "arith.hpp"
#include "cyclonorm.hpp"
#include "numberfield.hpp"
#include "polyring.hpp"

namespace circdet {

enum class Tag { good, bad };

inline const char* to_string(Tag t) { return t == Tag::good ? "good" : "bad"; }

/// Tag of a product from the tags of its factors.
inline Tag product_tag(Tag a, Tag b) { return a == b ? Tag::bad : Tag::good; }

namespace detail {

inline const IntPoly& phi3() {
  static const IntPoly p{1, 1, 1};
  return p;
}
inline const IntPoly& phi5() {
  static const IntPoly p{1, 1, 1, 1, 1};
  return p;
}
inline const IntPoly& phi15() {
  static const IntPoly p = cyclotomic(15);
  return p;
}
inline IntPoly xm1() { return IntPoly{-1, 1}; }
inline IntPoly xn_minus_1(std::size_t n) { return IntPoly::x_pow(n) - IntPoly{1}; }

inline IntPoly signed_xpow(int sign, long e) {
  return IntPoly::monomial(BigInt(sign), static_cast<std::size_t>(((e % 15) + 15) % 15));
}

inline IntPoly pow_poly(const IntPoly& p, unsigned e) {
  IntPoly r{1};
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

inline bool all_divisible(const IntPoly& p, long m) {
  for (const auto& v : p.coeffs())
    if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(m))) return false;
  return true;
}

inline IntPoly div_scalar(const IntPoly& p, long m) {
  std::vector<BigInt> c = p.coeffs();
  for (auto& v : c) mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m));
  return IntPoly(std::move(c));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// alpha / beta
// ---------------------------------------------------------------------------

struct AlphaBeta {
  IntPoly alpha, beta;
};

/// alpha = (F(1) Phi_15 - x F)/(x - 1), beta = (x^3 + 1) F, so that
/// F = alpha (x^5 - 1) + beta Phi_3 - F(1) Phi_5 Phi_15.
inline AlphaBeta decompose_alpha_beta(const IntPoly& f) {
  BigInt n15 = norm_d(f, 15);
  if (n15 == 0 || divides(3, n15) || divides(5, n15))
    throw DomainError("decompose_alpha_beta needs gcd(N_15(F), 15) = 1");
  using namespace detail;
  const BigInt f1 = f.at_one();
  AlphaBeta ab;
  ab.alpha = poly_exact_div(phi15() * f1 - f.shifted(1), xm1());
  ab.beta = IntPoly{1, 0, 0, 1} * f;
  IntPoly back = ab.alpha * xn_minus_1(5) + ab.beta * phi3() - phi5() * phi15() * f1;
  if (back != f) throw InternalError("alpha/beta identity failed");
  return ab;
}

/// The rewrites used for the residue Ax + B of alpha modulo (5, Phi_3), as
/// exact identities lhs = rhs.
inline std::vector<std::pair<IntPoly, IntPoly>> alpha_rewrite_identities() {
  using namespace detail;
  const IntPoly x{0, 1}, x2{0, 0, 1}, m = xm1(), p3 = phi3();
  return {
      {IntPoly{0, 2}, m * m - p3 + IntPoly{0, 5}},
      {IntPoly{1, 1}, p3 - x2},
      {IntPoly{1, 2}, p3 - x * m},
      {IntPoly{2, 1}, IntPoly{2, -1} * p3 + x2 * m},
      {IntPoly{-2, 1}, IntPoly{0, 2} * m - IntPoly{2} * p3 + IntPoly{0, 5}},
      {IntPoly{-1, 2}, IntPoly{4, -2} * p3 + IntPoly{0, 0, 2} * m - IntPoly{5}},
  };
}

/// alpha = sign x^j (x - 1)^i + 5 t1 + q1 Phi_3 exactly.
struct AlphaReduction {
  int sign = 1;
  int j = 0;  // 0..2
  int i = 0;  // 0..3
  long residue_a = 0, residue_b = 0;  // alpha = a x + b mod (5, Phi_3), balanced
  IntPoly t1, q1;
};

inline AlphaReduction reduce_alpha(const IntPoly& alpha) {
  using namespace detail;
  IntPoly r = poly_rem_monic(alpha, phi3());
  AlphaReduction ar;
  ar.residue_b = balanced_mod(r[0], 5);
  ar.residue_a = balanced_mod(r[1], 5);
  if (ar.residue_a == 0 && ar.residue_b == 0) throw InternalError("alpha vanishes mod (5, Phi_3)");
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int sign : {1, -1}) {
        IntPoly cand = IntPoly::monomial(BigInt(sign), static_cast<std::size_t>(j)) * pow_poly(xm1(), static_cast<unsigned>(i));
        IntPoly diff = poly_rem_monic(alpha - cand, phi3());
        if (!all_divisible(diff, 5)) continue;
        ar.sign = sign;
        ar.j = j;
        ar.i = i;
        ar.t1 = div_scalar(diff, 5);
        ar.q1 = poly_exact_div(alpha - cand - ar.t1 * BigInt(5), phi3());
        if (cand + ar.t1 * BigInt(5) + ar.q1 * phi3() != alpha) throw InternalError("alpha tracker identity failed");
        return ar;
      }
  throw InternalError("alpha residue not of the form +-x^j (x-1)^i");
}

// ---------------------------------------------------------------------------
// beta
// ---------------------------------------------------------------------------

/// The residual shapes for beta modulo (3, Phi_5).
inline const std::vector<IntPoly>& type1_list() {
  static const std::vector<IntPoly> v{IntPoly{1}, IntPoly{1, 1}, IntPoly{1, 0, 1}, IntPoly{1, -1, 1}};
  return v;
}
inline const std::vector<IntPoly>& type2_list() {
  static const std::vector<IntPoly> v{IntPoly{-1, 1},     IntPoly{-1, 0, 1},     IntPoly{1, 1, -1},
                                      IntPoly{1, -1, -1}, IntPoly{1, -1, 0, -1}, IntPoly{1, -1, 0, 1}};
  return v;
}

/// beta + q1 (x^5 - 1) = (x - 1)^i beta2 + s1 Phi_15 and
/// beta2 = sign x^j T + 3 t2 + q2 Phi_5 with T from the type lists.
struct BetaReduction {
  IntPoly beta2, s1;
  std::array<int, 5> cycle{};  // normalised cyclic residue pattern
  int sign = 1;
  int j = 0;  // 0..4
  int type = 1;
  int index = 0;  // position in its type list
  IntPoly t2, q2;
  IntPoly shape() const { return type == 1 ? type1_list()[static_cast<std::size_t>(index)] : type2_list()[static_cast<std::size_t>(index)]; }
};

namespace detail {

inline int bal3(int v) {
  v = ((v % 3) + 3) % 3;
  return v == 2 ? -1 : v;
}

// Applies the 4-nonzero and 3-equal rewrites by adding multiples of Phi_5.
inline void normalise_cycle(std::array<int, 5>& v) {
  auto count = [&]() {
    int nz = 0, pos = 0, neg = 0, first = 0;
    for (int a : v) {
      if (a) {
        ++nz;
        if (!first) first = a;
      }
      pos += a > 0;
      neg += a < 0;
    }
    return std::array<int, 4>{nz, pos, neg, first};
  };
  for (int guard = 0; guard < 4; ++guard) {
    auto [nz, pos, neg, first] = count();
    int m = 0;
    if (nz == 4) {
      m = pos > neg ? 1 : (neg > pos ? -1 : first);
    } else if (nz == 3 && (pos == 3 || neg == 3)) {
      m = pos == 3 ? 1 : -1;
    } else if (nz == 5) {
      m = pos >= neg ? 1 : -1;
    } else {
      return;
    }
    for (int& a : v) a = bal3(a - m);
  }
  throw InternalError("5-cycle normalisation did not terminate");
}

struct ShapeMatch {
  int sign, j, type, index;
};

inline ShapeMatch match_cycle(const std::array<int, 5>& v) {
  std::vector<int> pos;
  for (int k = 0; k < 5; ++k)
    if (v[static_cast<std::size_t>(k)]) pos.push_back(k);
  auto at = [&](int k) { return v[static_cast<std::size_t>(((k % 5) + 5) % 5)]; };
  if (pos.size() == 1) return {v[static_cast<std::size_t>(pos[0])], pos[0], 1, 0};
  if (pos.size() == 2) {
    int gap = pos[1] - pos[0];
    bool adjacent = gap == 1 || gap == 4;
    int st = (gap == 1 || gap == 2) ? pos[0] : pos[1];
    int s0 = at(st), s1 = at(st + (adjacent ? 1 : 2));
    if (s0 == s1) return {s0, st, 1, adjacent ? 1 : 2};
    return {-s0, st, 2, adjacent ? 0 : 1};
  }
  if (pos.size() == 3) {
    for (int st = 0; st < 5; ++st)
      if (at(st) && at(st + 1) && at(st + 2)) {
        int s0 = at(st), r1 = at(st + 1) * s0, r2 = at(st + 2) * s0;
        if (r1 == 1 && r2 == -1) return {s0, st, 2, 2};
        if (r1 == -1 && r2 == 1) return {s0, st, 1, 3};
        if (r1 == -1 && r2 == -1) return {s0, st, 2, 3};
      }
    for (int st = 0; st < 5; ++st)
      if (at(st) && at(st + 1) && at(st + 3)) {
        int s0 = at(st), r1 = at(st + 1) * s0, r3 = at(st + 3) * s0;
        // 1 + x - x^3 = Phi_5 - 3x^3 - x^2 (1 - x + x^2)
        if (r1 == 1 && r3 == -1) return {-s0, (st + 2) % 5, 1, 3};
        if (r1 == -1 && r3 == 1) return {s0, st, 2, 5};
        if (r1 == -1 && r3 == -1) return {s0, st, 2, 4};
      }
  }
  throw InternalError("beta residue pattern not recognised");
}

}  // namespace detail

inline BetaReduction reduce_beta(const IntPoly& beta, const AlphaReduction& ar) {
  using namespace detail;
  BetaReduction br;
  IntPoly cur = beta + ar.q1 * xn_minus_1(5);
  const IntPoly start = cur;
  br.s1 = IntPoly{};
  IntPoly pw{1};
  for (int k = 0; k < ar.i; ++k) {
    // cur = (x - 1) cur' + cur(1) Phi_15, using Phi_15(1) = 1
    BigInt c1 = cur.at_one();
    br.s1 += pw * c1;
    cur = poly_exact_div(cur - phi15() * c1, xm1());
    pw *= xm1();
  }
  br.beta2 = cur;
  if (pow_poly(xm1(), static_cast<unsigned>(ar.i)) * br.beta2 + br.s1 * phi15() != start)
    throw InternalError("beta peeling identity failed");

  IntPoly r = poly_rem_monic(br.beta2, phi5());
  for (int k = 0; k < 4; ++k) br.cycle[static_cast<std::size_t>(k)] = static_cast<int>(balanced_mod(r[static_cast<std::size_t>(k)], 3));
  br.cycle[4] = 0;
  if (br.cycle == std::array<int, 5>{}) throw InternalError("beta vanishes mod (3, Phi_5)");
  normalise_cycle(br.cycle);
  ShapeMatch m = match_cycle(br.cycle);
  br.sign = m.sign;
  br.j = m.j;
  br.type = m.type;
  br.index = m.index;
  IntPoly cand = IntPoly::monomial(BigInt(m.sign), static_cast<std::size_t>(m.j)) * br.shape();
  IntPoly diff = poly_rem_monic(br.beta2 - cand, phi5());
  if (!all_divisible(diff, 3)) throw InternalError("beta residue does not match its shape");
  br.t2 = div_scalar(diff, 3);
  br.q2 = poly_exact_div(br.beta2 - cand - br.t2 * BigInt(3), phi5());
  return br;
}

// ---------------------------------------------------------------------------
// Units of Z[w_15]
// ---------------------------------------------------------------------------

/// u = (-w)^torsion (w - 1)^e[0] (w + 1)^e[1] (w^3 + 1)^e[2].
struct UnitLedger {
  int torsion = 0;  // 0..29
  std::array<long, 3> e{};
  bool operator==(const UnitLedger& o) const { return torsion == o.torsion && e == o.e; }
};

namespace detail {

struct UnitBasis15 {
  std::array<CycloElement, 3> gen, inv;
  CycloElement minus_w;
  std::vector<CycloElement> roots;  // (-w)^t, t < 30
  long double lmat_inv[3][3];

  UnitBasis15() {
    gen = {cyclo_from_ints(15, {-1, 1}), cyclo_from_ints(15, {1, 1}), cyclo_from_ints(15, {1, 0, 0, 1})};
    for (int c = 0; c < 3; ++c) inv[static_cast<std::size_t>(c)] = unit_inverse(gen[static_cast<std::size_t>(c)]);
    minus_w = cyclo_from_ints(15, {0, -1});
    roots.push_back(cyclo_one(15));
    for (int t = 1; t < 30; ++t) roots.push_back(roots.back() * minus_w);
    const long ks[3] = {1, 2, 4};
    long double m[3][3];
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m[r][c] = std::log(std::abs(embed(gen[static_cast<std::size_t>(c)], ks[r])));
    long double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        int r1 = (c + 1) % 3, r2 = (c + 2) % 3, c1 = (r + 1) % 3, c2 = (r + 2) % 3;
        lmat_inv[r][c] = (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) / det;
      }
  }
};

inline const UnitBasis15& unit_basis15() {
  static const UnitBasis15 b;
  return b;
}

}  // namespace detail

inline CycloElement unit_from_ledger(const UnitLedger& l) {
  const auto& ub = detail::unit_basis15();
  CycloElement u = ub.roots[static_cast<std::size_t>(((l.torsion % 30) + 30) % 30)];
  for (std::size_t c = 0; c < 3; ++c) {
    long e = l.e[c];
    u = u * pow(e >= 0 ? ub.gen[c] : ub.inv[c], static_cast<unsigned long>(e >= 0 ? e : -e));
  }
  return u;
}

/// Exponents of a unit of Z[w_15] over -w, w - 1, w + 1, w^3 + 1.
inline UnitLedger unit_log(const CycloElement& u) {
  if (u.d != 15) throw DomainError("unit_log works in Z[w_15]");
  BigInt nu = norm(u);
  if (nu != 1 && nu != -1) throw DomainError("unit_log of a non-unit");
  const auto& ub = detail::unit_basis15();
  const long ks[3] = {1, 2, 4};
  long double y[3];
  for (int r = 0; r < 3; ++r) y[r] = std::log(std::abs(embed(u, ks[r])));
  UnitLedger l;
  for (int c = 0; c < 3; ++c) {
    long double s = 0;
    for (int r = 0; r < 3; ++r) s += ub.lmat_inv[c][r] * y[r];
    long double rs = std::nearbyint(s);
    if (std::fabs(s - rs) > 1e-6L) throw InternalError("unit_log: non-integral exponent");
    l.e[static_cast<std::size_t>(c)] = static_cast<long>(rs);
  }
  l.torsion = 0;
  CycloElement rest = u * unit_from_ledger(UnitLedger{0, {-l.e[0], -l.e[1], -l.e[2]}});
  for (int k = 0; k < 30; ++k) {
    if (ub.roots[static_cast<std::size_t>(k)] == rest) {
      l.torsion = k;
      return l;
    }
  }
  throw InternalError("unit_log: quotient is not a root of unity");
}

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

enum class FormKind { first, second };

/// first:  (x^5 - 1) + sign x^shift Phi_3 B + (x - 1) Phi_3 Phi_5 g
/// second: (x^3 - 1) + sign x^shift Phi_5 B + (x - 1) Phi_3 Phi_5 g
/// with B = 1 (good) or x - 1 (bad); the element equals
/// unit(ledger) * reconstruct().
struct CanonicalForm {
  FormKind form = FormKind::first;
  int sign = 1;
  int shift = 0;
  Tag b_type = Tag::good;
  IntPoly cofactor;
  UnitLedger unit_ledger;

  IntPoly b_poly() const { return b_type == Tag::good ? IntPoly{1} : IntPoly{-1, 1}; }
  IntPoly core() const {
    using namespace detail;
    if (form == FormKind::first) return xn_minus_1(5) + signed_xpow(sign, shift) * phi3() * b_poly();
    return xn_minus_1(3) + signed_xpow(sign, shift) * phi5() * b_poly();
  }
  IntPoly reconstruct() const {
    using namespace detail;
    return core() + xm1() * phi3() * phi5() * cofactor;
  }
};

struct Classification {
  Tag tag = Tag::bad;
  CanonicalForm first, second;
  AlphaReduction alpha;
  BetaReduction beta;
};

namespace detail {

// (w - 1) Phi_3 Phi_5 with its norm and conjugate cofactor, for exact division.
struct IdealGenerator15 {
  CycloElement g, cofactor;
  BigInt norm;
  IdealGenerator15()
      : g(reduce_mod_cyclotomic(xm1() * phi3() * phi5(), 15)), cofactor(conjugate_cofactor(g)), norm(circdet::norm(g)) {}
};

inline const IdealGenerator15& ideal_generator_15() {
  static const IdealGenerator15 g;
  return g;
}

// g = (xi / U - core) / ((w - 1) Phi_3 Phi_5), exact or InternalError.
inline IntPoly cofactor_for(const CycloElement& xi, const CycloElement& unit, const IntPoly& core) {
  const auto& ig = ideal_generator_15();
  CycloElement t = (xi * unit_inverse(unit) - reduce_mod_cyclotomic(core, 15)) * ig.cofactor;
  for (auto& v : t.coords) {
    if (!divides(ig.norm, v)) throw InternalError("canonical form: residue mismatch modulo (w - 1) Phi_3 Phi_5");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), ig.norm.get_mpz_t());
  }
  return t.poly();
}

struct Collapse {
  IntPoly multiplier;
  int eps_a = 1, a = 0;  // multiplier = eps_a x^a mod Phi_3
  int eps_b = 1, b = 0;  // multiplier * T = eps_b x^b B mod (3, Phi_5)
};

inline Collapse collapse_shape(int type, int index) {
  const IntPoly xp1{1, 1}, x2p1{1, 0, 1};
  Collapse c;
  if (type == 1) {
    const IntPoly mult[4] = {IntPoly{1}, x2p1, xp1, xp1 * xp1};
    c.multiplier = mult[index];
  } else {
    const IntPoly mult[6] = {IntPoly{1}, x2p1, x2p1 * x2p1, x2p1 * x2p1, xp1, xp1};
    c.multiplier = mult[index];
  }
  const IntPoly t = type == 1 ? type1_list()[static_cast<std::size_t>(index)] : type2_list()[static_cast<std::size_t>(index)];
  const IntPoly B = type == 1 ? IntPoly{1} : xm1();
  bool found_a = false, found_b = false;
  IntPoly ma = poly_rem_monic(c.multiplier, phi3());
  IntPoly mb = c.multiplier * t;
  for (int s : {1, -1}) {
    for (int e = 0; e < 3 && !found_a; ++e)
      if (poly_rem_monic(IntPoly::monomial(BigInt(s), static_cast<std::size_t>(e)), phi3()) == ma) {
        c.eps_a = s;
        c.a = e;
        found_a = true;
      }
    for (int e = 0; e < 5 && !found_b; ++e)
      if (all_divisible(poly_rem_monic(mb - IntPoly::monomial(BigInt(s), static_cast<std::size_t>(e)) * B, phi5()), 3)) {
        c.eps_b = s;
        c.b = e;
        found_b = true;
      }
  }
  if (!found_a || !found_b) throw InternalError("shape collapse failed");
  return c;
}

}  // namespace detail

/// Second form from the first: divide by sign w^J (bad) or multiply by
/// w^4 (w + 1) and divide out (w - 1) (good).
inline CanonicalForm second_form(const CycloElement& xi, const CanonicalForm& first, const CycloElement& unit) {
  using namespace detail;
  CanonicalForm s;
  s.form = FormKind::second;
  s.b_type = first.b_type;
  s.sign = first.sign;
  s.shift = (15 - first.shift) % 15;
  CycloElement u2 = unit * reduce_mod_cyclotomic(signed_xpow(first.sign, first.shift), 15);
  if (first.b_type == Tag::good) {
    CycloElement m = reduce_mod_cyclotomic(IntPoly{0, 0, 0, 0, 1, 1}, 15);
    CycloElement f = reduce_mod_cyclotomic(signed_xpow(-1, 6) * xm1(), 15);
    u2 = u2 * unit_inverse(m) * f;
  }
  s.cofactor = cofactor_for(xi, u2, s.core());
  s.unit_ledger = unit_log(u2);
  if (unit_from_ledger(s.unit_ledger) * reduce_mod_cyclotomic(s.reconstruct(), 15) != xi)
    throw InternalError("second form reconstruction failed");
  return s;
}

inline Classification classify_element(const CycloElement& xi) {
  using namespace detail;
  if (xi.d != 15) throw DomainError("classify_element works in Z[w_15]");
  const IntPoly f = xi.poly();
  AlphaBeta ab = decompose_alpha_beta(f);
  Classification out;
  out.alpha = reduce_alpha(ab.alpha);
  out.beta = reduce_beta(ab.beta, out.alpha);
  const AlphaReduction& ar = out.alpha;
  const BetaReduction& br = out.beta;

  // xi = (x-1)^i s x^j [(x^5 - 1) + s s' x^{j'-j} Phi_3 T]  mod (w-1) Phi_3 Phi_5
  Collapse c = collapse_shape(br.type, br.index);
  CanonicalForm& fst = out.first;
  fst.form = FormKind::first;
  fst.b_type = br.type == 1 ? Tag::good : Tag::bad;
  fst.sign = ar.sign * br.sign * c.eps_a * c.eps_b;
  fst.shift = static_cast<int>((((br.j - ar.j + c.b - c.a) % 5) + 5) % 5);

  CycloElement unit = reduce_mod_cyclotomic(signed_xpow(ar.sign * c.eps_a, ar.j + c.a) * pow_poly(xm1(), static_cast<unsigned>(ar.i)), 15);
  unit = unit * unit_inverse(reduce_mod_cyclotomic(c.multiplier, 15));
  fst.cofactor = cofactor_for(xi, unit, fst.core());
  fst.unit_ledger = unit_log(unit);
  if (unit_from_ledger(fst.unit_ledger) * reduce_mod_cyclotomic(fst.reconstruct(), 15) != xi)
    throw InternalError("first form reconstruction failed");
  out.second = second_form(xi, fst, unit);
  out.tag = fst.b_type;
  return out;
}

inline Classification classify_poly(const IntPoly& f) { return classify_element(reduce_mod_cyclotomic(f, 15)); }

/// Tag of p = 1 mod 15, from any element of norm p.
inline Tag classify_prime(long p) {
  static std::mutex mu;
  static std::map<long, Tag> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  Tag t = classify_element(find_norm_element(p)).tag;
  std::lock_guard<std::mutex> lock(mu);
  cache[p] = t;
  return t;
}

struct PrimePowerTag {
  long p = 0;
  long exponent = 1;  // residue class degree f; p^f is the norm of a prime above p
  Tag tag = Tag::bad;
  bool computed = false;  // true when obtained by classifying an element
};

/// Tag of p^f, f the residue class degree of p in Z[w_15].
inline PrimePowerTag prime_power_tag(long p) {
  SplittingData sd = splitting_data(p);
  PrimePowerTag t;
  t.p = p;
  t.exponent = sd.f;
  const long r = p % 15;
  if (sd.f == 1) {
    t.tag = classify_prime(p);
    t.computed = true;
  } else if (sd.f == 4) {
    t.tag = Tag::good;
  } else if (r == 4) {
    t.tag = Tag::good;
  } else if (r == 14) {
    t.tag = Tag::bad;
  } else {
    t.tag = classify_element(prime_element(15, p)).tag;
    t.computed = true;
  }
  return t;
}

/// The same tag obtained by classifying a generator of a prime above p.
inline Tag prime_power_tag_computed(long p) {
  splitting_data(p);
  return classify_element(prime_element(15, p)).tag;
}

}  // namespace circdet
