// Norms N_d(F), the profile d -> N_d(F) with M_n(F) as the product, exact
// arithmetic in Z[w_d] and unit checks.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "linalg.hpp"
#include "polyring.hpp"

namespace circdet {

// ---------------------------------------------------------------------------
// Z[w_d]
// ---------------------------------------------------------------------------

/// Residue of a polynomial modulo Phi_d; coords has exactly phi(d) entries.
struct CycloElement {
  long d = 1;
  std::vector<BigInt> coords;

  IntPoly poly() const { return IntPoly(coords); }
  bool operator==(const CycloElement& o) const { return d == o.d && coords == o.coords; }
  bool operator!=(const CycloElement& o) const { return !(*this == o); }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const BigInt& v) { return v == 0; });
  }
};

inline CycloElement reduce_mod_cyclotomic(const IntPoly& f, long d) {
  const long k = euler_phi(d);
  IntPoly r = poly_rem_monic(f, cyclotomic(d));
  CycloElement e{d, std::vector<BigInt>(static_cast<std::size_t>(k))};
  for (std::size_t i = 0; i < r.size(); ++i) e.coords[i] = r.coeffs()[i];
  return e;
}

inline CycloElement cyclo_from_ints(long d, std::initializer_list<long> c) { return reduce_mod_cyclotomic(IntPoly(c), d); }

inline CycloElement cyclo_one(long d) { return reduce_mod_cyclotomic(IntPoly{1}, d); }

inline CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  if (a.d != b.d) throw DomainError("conductor mismatch");
  return reduce_mod_cyclotomic(a.poly() * b.poly(), a.d);
}
inline CycloElement operator+(const CycloElement& a, const CycloElement& b) {
  if (a.d != b.d) throw DomainError("conductor mismatch");
  CycloElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}
inline CycloElement operator-(const CycloElement& a, const CycloElement& b) {
  if (a.d != b.d) throw DomainError("conductor mismatch");
  CycloElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}
inline CycloElement operator-(const CycloElement& a) {
  CycloElement r = a;
  for (auto& v : r.coords) v = -v;
  return r;
}
inline CycloElement scale(const CycloElement& a, const BigInt& s) {
  CycloElement r = a;
  for (auto& v : r.coords) v *= s;
  return r;
}

/// w -> w^k for gcd(k, d) = 1.
inline CycloElement conjugate(const CycloElement& a, long k) {
  k = ((k % a.d) + a.d) % a.d;
  if (gcd(k, a.d) != 1) throw DomainError("conjugation exponent not coprime to conductor");
  if (a.d == 1) return a;
  return reduce_mod_cyclotomic(a.poly().compose_power(static_cast<std::size_t>(k)), a.d);
}

/// w^e for any integer e.
inline CycloElement cyclo_root_power(long d, long e) {
  e = ((e % d) + d) % d;
  return reduce_mod_cyclotomic(IntPoly::x_pow(static_cast<std::size_t>(e)), d);
}

inline CycloElement pow(const CycloElement& a, unsigned long e) {
  CycloElement r = cyclo_one(a.d), b = a;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Norms
// ---------------------------------------------------------------------------

/// Rows are the coordinates of w^i * r, i < phi(d).
inline std::vector<BigInt> multiplication_matrix(const CycloElement& r) {
  const std::size_t k = r.coords.size();
  const IntPoly phi = cyclotomic(r.d);
  std::vector<BigInt> m(k * k);
  std::vector<BigInt> row = r.coords;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i * k + j] = row[j];
    // row <- x * row mod Phi_d
    BigInt top = row[k - 1];
    for (std::size_t j = k - 1; j > 0; --j) row[j] = row[j - 1];
    row[0] = 0;
    if (top != 0)
      for (std::size_t j = 0; j < k; ++j) mpz_submul(row[j].get_mpz_t(), top.get_mpz_t(), phi.coeffs()[j].get_mpz_t());
  }
  return m;
}

inline BigInt norm(const CycloElement& a) {
  if (a.d == 1) return a.coords[0];
  if (a.is_zero()) return 0;
  return det_auto(multiplication_matrix(a), a.coords.size());
}

/// N_d(F): the product of F over the primitive d-th roots of unity.
inline BigInt norm_d(const IntPoly& f, long d) {
  if (d == 1) return f.at_one();
  return norm(reduce_mod_cyclotomic(f, d));
}

/// d -> N_d(F) for d | n, and their product M_n(F).
struct NormProfile {
  long n = 1;
  std::map<long, BigInt> norms;
  BigInt total = 1;
};

inline NormProfile norm_profile(const IntPoly& f, long n) {
  if (n < 1) throw DomainError("modulus must be positive");
  IntPoly g = poly_mod_xn(f, static_cast<std::size_t>(n));
  NormProfile p;
  p.n = n;
  p.total = 1;
  for (long d : divisors(n)) {
    BigInt v = norm_d(g, d);
    p.total *= v;
    p.norms[d] = std::move(v);
  }
  return p;
}

/// M_n(F) as the resultant of x^n - 1 with F.
inline BigInt circulant_resultant(const IntPoly& f, long n) {
  IntPoly g = poly_mod_xn(f, static_cast<std::size_t>(n));
  if (g.is_zero()) return 0;
  IntPoly xn = IntPoly::x_pow(static_cast<std::size_t>(n)) - IntPoly{1};
  return resultant(xn, g);
}

/// The n x n circulant determinant D(a_0, ..., a_{n-1}) computed directly.
inline BigInt circulant_determinant(const std::vector<BigInt>& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a[(j + n - i) % n];
  return det_auto(m, n);
}

// ---------------------------------------------------------------------------
// Fast path for small coefficient vectors
// ---------------------------------------------------------------------------

/// Norm profile of integer vectors of length n with small entries, without
/// heap traffic per call. Falls back to BigInt when a Hadamard bound says
/// __int128 could overflow.
class SmallNormEvaluator {
 public:
  explicit SmallNormEvaluator(long n) : n_(n), divs_(divisors(n)) {
    for (long d : divs_) {
      Block b;
      b.d = d;
      b.k = euler_phi(d);
      IntPoly phi = cyclotomic(d);
      for (long j = 0; j <= b.k; ++j) b.phi.push_back(phi[static_cast<std::size_t>(j)].get_si());
      b.xpow.assign(static_cast<std::size_t>(n * b.k), 0);
      for (long i = 0; i < n; ++i) {
        CycloElement e = reduce_mod_cyclotomic(IntPoly::x_pow(static_cast<std::size_t>(i)), d);
        for (long j = 0; j < b.k; ++j) b.xpow[static_cast<std::size_t>(i * b.k + j)] = e.coords[static_cast<std::size_t>(j)].get_si();
      }
      blocks_.push_back(std::move(b));
    }
    max_k_ = 0;
    for (auto& b : blocks_) max_k_ = std::max(max_k_, b.k);
    scratch_.resize(static_cast<std::size_t>(max_k_ * max_k_));
    dbl_.resize(scratch_.size());
    row_.resize(static_cast<std::size_t>(max_k_));
  }

  long n() const { return n_; }
  const std::vector<long>& divisors_list() const { return divs_; }

  /// Writes N_d for each divisor of n (ascending) into out.
  void evaluate(const long* a, std::vector<BigInt>& out) {
    out.resize(divs_.size());
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
      const Block& b = blocks_[bi];
      const long k = b.k;
      // residue of sum a_i x^i mod Phi_d
      for (long j = 0; j < k; ++j) row_[static_cast<std::size_t>(j)] = 0;
      for (long i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        const long* xp = &b.xpow[static_cast<std::size_t>(i * k)];
        for (long j = 0; j < k; ++j) row_[static_cast<std::size_t>(j)] += a[i] * xp[j];
      }
      if (k == 1) {
        out[bi] = BigInt(row_[0]);
        continue;
      }
      bool overflow_risk = false;
      for (long i = 0; i < k; ++i) {
        for (long j = 0; j < k; ++j) {
          scratch_[static_cast<std::size_t>(i * k + j)] = row_[static_cast<std::size_t>(j)];
          dbl_[static_cast<std::size_t>(i * k + j)] = static_cast<double>(row_[static_cast<std::size_t>(j)]);
        }
        long top = row_[static_cast<std::size_t>(k - 1)];
        for (long j = k - 1; j > 0; --j) row_[static_cast<std::size_t>(j)] = row_[static_cast<std::size_t>(j - 1)];
        row_[0] = 0;
        if (top != 0) {
          for (long j = 0; j < k; ++j) {
            row_[static_cast<std::size_t>(j)] -= top * b.phi[static_cast<std::size_t>(j)];
            if (row_[static_cast<std::size_t>(j)] > (1L << 40) || row_[static_cast<std::size_t>(j)] < -(1L << 40)) overflow_risk = true;
          }
        }
      }
      if (!overflow_risk && hadamard_log2(dbl_.data(), static_cast<std::size_t>(k)) < 60.0) {
        out[bi] = from_i128(bareiss_det(scratch_.data(), static_cast<std::size_t>(k)));
      } else {
        std::vector<BigInt> v(static_cast<std::size_t>(n_));
        for (long i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = a[i];
        out[bi] = norm_d(IntPoly(std::move(v)), b.d);
      }
    }
  }

 private:
  struct Block {
    long d = 1, k = 1;
    std::vector<long> phi;
    std::vector<long> xpow;
  };
  long n_;
  std::vector<long> divs_;
  std::vector<Block> blocks_;
  long max_k_ = 0;
  std::vector<i128> scratch_;
  std::vector<double> dbl_;
  std::vector<long> row_;
};

// ---------------------------------------------------------------------------
// Division and units
// ---------------------------------------------------------------------------

/// Product of the conjugates of a other than a itself.
inline CycloElement conjugate_cofactor(const CycloElement& a) {
  CycloElement r = cyclo_one(a.d);
  for (long k = 2; k < a.d; ++k)
    if (gcd(k, a.d) == 1) r = r * conjugate(a, k);
  return r;
}

/// a / b when b divides a in Z[w_d]; nullopt otherwise.
inline std::optional<CycloElement> exact_divide(const CycloElement& a, const CycloElement& b) {
  if (a.d != b.d) throw DomainError("conductor mismatch");
  if (b.is_zero()) throw DomainError("division by zero");
  BigInt nb = norm(b);
  CycloElement t = a * conjugate_cofactor(b);
  for (auto& v : t.coords) {
    if (!divides(nb, v)) return std::nullopt;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), nb.get_mpz_t());
  }
  return t;
}

inline CycloElement unit_inverse(const CycloElement& u) {
  if (u.d > 2) {
    // totally complex: every nonzero norm is positive, so a unit has norm 1
    // and its inverse is the product of the other conjugates
    CycloElement r = conjugate_cofactor(u);
    if (u * r != cyclo_one(u.d)) throw DomainError("element is not a unit");
    return r;
  }
  auto r = exact_divide(cyclo_one(u.d), u);
  if (!r) throw DomainError("element is not a unit");
  return *r;
}

/// Complex embedding w -> exp(2 pi i k / d).
inline std::complex<long double> embed(const CycloElement& a, long k) {
  const long double pi = 3.141592653589793238462643383279502884L;
  std::complex<long double> z = std::polar(1.0L, 2 * pi * static_cast<long double>(k) / static_cast<long double>(a.d));
  std::complex<long double> acc = 0, zp = 1;
  for (const auto& c : a.coords) {
    acc += static_cast<long double>(c.get_d()) * zp;
    zp *= z;
  }
  return acc;
}

enum class Reciprocity { reciprocal, skew_reciprocal, neither };

inline const char* to_string(Reciprocity r) {
  switch (r) {
    case Reciprocity::reciprocal:
      return "reciprocal";
    case Reciprocity::skew_reciprocal:
      return "skew-reciprocal";
    default:
      return "neither";
  }
}

inline Reciprocity reciprocity(const IntPoly& f) {
  IntPoly r = f.reversed();
  if (r == f) return Reciprocity::reciprocal;
  if (r == -f) return Reciprocity::skew_reciprocal;
  return Reciprocity::neither;
}

struct UnitCheck {
  bool is_unit = false;
  bool is_reciprocal = false;
  bool is_skew_reciprocal = false;
  BigInt norm;
};

inline UnitCheck unit_check(const IntPoly& f, long n) {
  UnitCheck u;
  u.norm = norm_d(f, n);
  u.is_unit = u.norm == 1 || u.norm == -1;
  Reciprocity r = reciprocity(f);
  u.is_reciprocal = r == Reciprocity::reciprocal;
  u.is_skew_reciprocal = r == Reciprocity::skew_reciprocal;
  return u;
}

// ---------------------------------------------------------------------------
// Tabulated unit generators
// ---------------------------------------------------------------------------

struct UnitTableEntry {
  std::string name;
  IntPoly poly;
  Reciprocity claimed;
};

struct UnitTableLine {
  std::string name;
  bool is_unit = false;
  Reciprocity reciprocity = Reciprocity::neither;
  Reciprocity claimed = Reciprocity::neither;
  BigInt norm;
  bool ok = false;
};

struct UnitTableReport {
  long n = 0;
  std::vector<UnitTableLine> lines;
  std::size_t expected_rank = 0;  // phi(n)/2 - 1
  bool independent = false;       // log-embedding matrix has full rank
  bool ok = false;
};

inline const std::vector<long>& tabulated_conductors() {
  static const std::vector<long> v{5, 7, 11, 13, 15, 21, 33, 35, 39};
  return v;
}

/// The generator list for a tabulated conductor. Composite conductors carry
/// x - 1 (skew-reciprocal) ahead of the reciprocal generators.
inline std::vector<UnitTableEntry> unit_table(long n) {
  auto xp1 = [](std::size_t k) { return IntPoly::x_pow(k) + IntPoly{1}; };
  auto nm = [](std::size_t k) { return k == 1 ? std::string("x+1") : "x^" + std::to_string(k) + "+1"; };
  std::vector<UnitTableEntry> out;
  auto add_plus = [&](std::initializer_list<std::size_t> ks) {
    for (auto k : ks) out.push_back({nm(k), xp1(k), Reciprocity::reciprocal});
  };
  auto add = [&](const std::string& name, const IntPoly& p) { out.push_back({name, p, Reciprocity::reciprocal}); };
  const IntPoly x2x1{1, 1, 1}, x6x3{1, 0, 0, 1, 0, 0, 1};
  if (n == 15 || n == 21 || n == 33 || n == 35 || n == 39) out.push_back({"x-1", IntPoly{-1, 1}, Reciprocity::skew_reciprocal});
  switch (n) {
    case 5:
      add_plus({1});
      break;
    case 7:
      add_plus({1, 3});
      break;
    case 11:
      add_plus({1, 2, 5});
      add("x^2+x+1", x2x1);
      break;
    case 13:
      add_plus({1, 2, 6});
      add("x^2+x+1", x2x1);
      add("x^10+x^5+1", IntPoly{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
      break;
    case 15:
      add_plus({1, 3});
      break;
    case 21:
      add_plus({1, 2, 3});
      add("x^6+x^3+1", x6x3);
      break;
    case 33:
      add_plus({1, 2, 3, 4, 6, 18});
      add("x^6+x^3+1", x6x3);
      add("Phi_5", cyclotomic(5));
      break;
    case 35:
      add_plus({1, 2, 3, 4, 5, 7, 15});
      add("x^2+x+1", x2x1);
      add("x^6+x^3+1", x6x3);
      add("Phi_11", cyclotomic(11));
      break;
    case 39:
      add_plus({1, 2, 3, 5, 6, 18});
      add("x^6+x^3+1", x6x3);
      add("Phi_5", cyclotomic(5));
      add("Phi_7", cyclotomic(7));
      add("Phi_11", cyclotomic(11));
      break;
    default:
      throw DomainError("no unit table for conductor " + std::to_string(n));
  }
  return out;
}

namespace detail {

// Rank of a small real matrix by Gaussian elimination with a tolerance.
inline std::size_t numeric_rank(std::vector<std::vector<long double>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t best = rank;
    for (std::size_t r = rank; r < rows; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[best][c])) best = r;
    if (std::fabs(m[best][c]) < 1e-9L) continue;
    std::swap(m[best], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      long double f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline UnitTableReport verify_unit_table(long n) {
  UnitTableReport rep;
  rep.n = n;
  auto table = unit_table(n);
  rep.expected_rank = static_cast<std::size_t>(euler_phi(n) / 2 - 1);
  bool all = true;
  std::vector<std::vector<long double>> logs;
  // one embedding per complex-conjugate pair, dropping the last
  std::vector<long> ks;
  for (long k = 1; k < n / 2 + 1; ++k)
    if (gcd(k, n) == 1) ks.push_back(k);
  if (!ks.empty()) ks.pop_back();
  for (const auto& e : table) {
    UnitTableLine l;
    l.name = e.name;
    UnitCheck u = unit_check(e.poly, n);
    l.is_unit = u.is_unit;
    l.norm = u.norm;
    l.reciprocity = reciprocity(e.poly);
    l.claimed = e.claimed;
    l.ok = l.is_unit && l.reciprocity == l.claimed;
    all = all && l.ok;
    rep.lines.push_back(l);
    CycloElement el = reduce_mod_cyclotomic(e.poly, n);
    std::vector<long double> row;
    for (long k : ks) row.push_back(std::log(std::abs(embed(el, k))));
    logs.push_back(row);
  }
  rep.independent = table.size() == rep.expected_rank && detail::numeric_rank(logs) == rep.expected_rank;
  rep.ok = all && rep.independent;
  return rep;
}

}  // namespace circdet
