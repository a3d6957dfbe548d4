// Randomized and exhaustive checks of the algebraic laws the library relies on.
// Each runner is seeded, so a failure is reproducible from (seed, cases).
#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "arith.hpp"
#include "cyclonorm.hpp"
#include "goodbad.hpp"
#include "numberfield.hpp"
#include "polyring.hpp"

namespace circdet {

struct PropertyResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  double seconds = 0;
  bool ok() const { return cases > 0 && failures == 0; }
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed15c1;
inline constexpr std::uint64_t kDefaultCases = 10000;

namespace detail {

using Rng = std::mt19937_64;

inline long uniform(Rng& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

inline IntPoly random_poly(Rng& g, long max_deg, long bound) {
  const long deg = uniform(g, 0, max_deg);
  std::vector<BigInt> c(static_cast<std::size_t>(deg + 1));
  for (auto& v : c) v = uniform(g, -bound, bound);
  return IntPoly(std::move(c));
}

class PropertyRun {
 public:
  explicit PropertyRun(std::string name) : start_(std::chrono::steady_clock::now()) { r_.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++r_.cases;
    if (ok) return;
    if (!r_.failures) r_.first_failure = what;
    ++r_.failures;
  }
  PropertyResult finish() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return r_;
  }

 private:
  PropertyResult r_;
  std::chrono::steady_clock::time_point start_;
};

inline std::string describe(const IntPoly& f, long n) { return "n=" + std::to_string(n) + " F=" + render_poly(f); }

}  // namespace detail

/// M_n(F G mod x^n - 1) = M_n(F) M_n(G).
inline PropertyResult prop_norm_multiplicativity(std::uint64_t seed = kDefaultSeed, std::uint64_t cases = kDefaultCases) {
  detail::Rng g(seed);
  detail::PropertyRun run("norm multiplicativity");
  for (std::uint64_t i = 0; i < cases; ++i) {
    const long n = detail::uniform(g, 1, 24);
    IntPoly f = detail::random_poly(g, n - 1, 3), h = detail::random_poly(g, n - 1, 3);
    BigInt lhs = norm_profile(poly_mul_mod(f, h, static_cast<std::size_t>(n)), n).total;
    BigInt rhs = norm_profile(f, n).total * norm_profile(h, n).total;
    run.check(lhs == rhs, detail::describe(f, n) + " G=" + render_poly(h));
  }
  return run.finish();
}

/// prod_{d|n} N_d(F) = Res(x^n - 1, F), and for n <= 12 also the circulant determinant.
inline PropertyResult prop_profile_product(std::uint64_t seed = kDefaultSeed, std::uint64_t cases = kDefaultCases) {
  detail::Rng g(seed + 1);
  detail::PropertyRun run("norm profile product = M_n");
  for (std::uint64_t i = 0; i < cases; ++i) {
    const long n = detail::uniform(g, 1, 30);
    IntPoly f = detail::random_poly(g, n - 1, 4);
    NormProfile p = norm_profile(f, n);
    bool ok = p.total == circulant_resultant(f, n);
    if (ok && n <= 12) {
      std::vector<BigInt> a(static_cast<std::size_t>(n));
      for (long k = 0; k < n; ++k) a[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k)];
      ok = p.total == circulant_determinant(a);
    }
    run.check(ok, detail::describe(f, n));
  }
  return run.finish();
}

/// N_d(F) from the multiplication matrix equals Res(Phi_d, F).
inline PropertyResult prop_matrix_vs_resultant(std::uint64_t seed = kDefaultSeed, std::uint64_t cases = kDefaultCases) {
  detail::Rng g(seed + 2);
  detail::PropertyRun run("multiplication matrix vs resultant");
  for (std::uint64_t i = 0; i < cases; ++i) {
    const long d = detail::uniform(g, 1, 60);
    IntPoly f = detail::random_poly(g, detail::uniform(g, 0, 20), 5);
    BigInt want = f.is_zero() ? BigInt(0) : resultant(cyclotomic(d), f);
    run.check(norm_d(f, d) == want, detail::describe(f, d));
  }
  return run.finish();
}

/// N_3 = F(1)^2 mod 3, N_5 = F(1)^4 mod 5, N_15 = N_5^2 mod 3, N_15 = N_3^4 mod 5,
/// and 3 | M_15 => 9 | M_15, 5 | M_15 => 25 | M_15.
inline PropertyResult prop_norm_congruences(std::uint64_t seed = kDefaultSeed, std::uint64_t cases = kDefaultCases) {
  detail::Rng g(seed + 3);
  detail::PropertyRun run("N_3(F) = F(1)^2 mod 3 and related congruences");
  const BigInt three = 3, five = 5, nine = 9, t25 = 25;
  for (std::uint64_t i = 0; i < cases; ++i) {
    IntPoly f = detail::random_poly(g, 14, 3);
    NormProfile p = norm_profile(f, 15);
    const BigInt f1 = f.at_one();
    const BigInt &n3 = p.norms[3], &n5 = p.norms[5], &n15 = p.norms[15];
    bool ok = mod_floor(n3 - f1 * f1, three) == 0;
    ok = ok && mod_floor(n5 - pow(f1, 4), five) == 0;
    ok = ok && mod_floor(n15 - n5 * n5, three) == 0;
    ok = ok && mod_floor(n15 - pow(n3, 4), five) == 0;
    if (divides(three, p.total)) ok = ok && divides(nine, p.total);
    if (divides(five, p.total)) ok = ok && divides(t25, p.total);
    run.check(ok, detail::describe(f, 15));
  }
  return run.finish();
}

namespace detail {

// Random element of Z[w_15] with N_15 coprime to 15.
inline CycloElement random_classifiable(Rng& g) {
  for (;;) {
    CycloElement e = reduce_mod_cyclotomic(random_poly(g, 7, 2), 15);
    if (e.is_zero()) continue;
    BigInt nv = norm(e);
    if (gcd(nv, BigInt(15)) == 1) return e;
  }
}

inline const std::vector<CycloElement>& unit_generators_15() {
  static const std::vector<CycloElement> v{cyclo_from_ints(15, {0, -1}), cyclo_from_ints(15, {-1, 1}), cyclo_from_ints(15, {1, 1}),
                                           cyclo_from_ints(15, {1, 0, 0, 1})};
  return v;
}

}  // namespace detail

/// tag(xy) = good iff tag(x) != tag(y); tags are unchanged by Galois
/// conjugation and by multiplication with units. Each case checks all three.
inline PropertyResult prop_classify_laws(std::uint64_t seed = kDefaultSeed, std::uint64_t cases = kDefaultCases) {
  detail::Rng g(seed + 4);
  detail::PropertyRun run("parity, conjugation and unit invariance of classify_element");
  static const long ks[] = {2, 4, 7, 8, 11, 13, 14};
  CycloElement prev = detail::random_classifiable(g);
  Tag prev_tag = classify_element(prev).tag;
  for (std::uint64_t i = 0; i < cases; ++i) {
    CycloElement x = detail::random_classifiable(g);
    const Tag t = classify_element(x).tag;
    const long k = ks[detail::uniform(g, 0, 6)];
    const auto& u = detail::unit_generators_15()[static_cast<std::size_t>(detail::uniform(g, 0, 3))];
    CycloElement unit = pow(u, static_cast<unsigned long>(detail::uniform(g, 1, 3)));
    if (detail::uniform(g, 0, 1)) unit = unit_inverse(unit);
    const bool parity = classify_element(x * prev).tag == product_tag(t, prev_tag);
    const bool conj = classify_element(conjugate(x, k)).tag == t;
    const bool unit_ok = classify_element(x * unit).tag == t;
    std::ostringstream why;
    if (!(parity && conj && unit_ok))
      why << "x=" << render_poly(x.poly()) << " y=" << render_poly(prev.poly()) << " k=" << k << " parity=" << parity
          << " conj=" << conj << " unit=" << unit_ok;
    run.check(parity && conj && unit_ok, why.str());
    prev = std::move(x);
    prev_tag = t;
  }
  return run.finish();
}

/// |Res(Phi_m, Phi_n)| for m != n is p^phi(n) when m/n is a power of the
/// prime p and 1 otherwise. All ordered pairs of divisors of 105, then the
/// full grid 1 <= m, n <= grid.
inline PropertyResult prop_cyclotomic_resultants(long grid = 100) {
  detail::PropertyRun run("cyclotomic resultant law");
  auto expected = [](long m, long n) -> BigInt {
    if (m == n) return 0;
    if (m < n) std::swap(m, n);
    if (m % n) return 1;
    long q = m / n, p = 0;
    for (long c = 2; c * c <= q; ++c)
      if (q % c == 0) {
        p = c;
        break;
      }
    if (!p) p = q;
    while (q % p == 0) q /= p;
    return q == 1 ? pow(BigInt(p), static_cast<unsigned long>(euler_phi(n))) : BigInt(1);
  };
  auto one = [&](long m, long n) {
    BigInt r = abs(resultant(cyclotomic(m), cyclotomic(n)));
    run.check(r == expected(m, n), "m=" + std::to_string(m) + " n=" + std::to_string(n) + " got " + to_string(r));
  };
  for (long m : divisors(105))
    for (long n : divisors(105))
      if (m != n) one(m, n);
  for (long m = 1; m <= grid; ++m)
    for (long n = 1; n <= grid; ++n) one(m, n);
  return run.finish();
}

/// ((3 + sqrt 5)/2)^k = (a_k + b_k sqrt 5)/2: (a_k mod 3, a_k mod 5) is never
/// (0, 2) and (a_k mod 5, b_k mod 3) is never (3, 0). Exact for k <= exact_k,
/// then continued with the recurrence mod 15 (2 is invertible there) up to k_max.
inline PropertyResult prop_pell_cycle(long exact_k = 200, long k_max = 10000) {
  detail::PropertyRun run("half-integer power residues");
  long a = 3, b = 1;  // mod 15
  for (long k = 1; k <= k_max; ++k) {
    if (k > 1) {
      const long na = (8 * (3 * a + 5 * b)) % 15, nb = (8 * (a + 3 * b)) % 15;
      a = na;
      b = nb;
    }
    bool ok = true;
    if (k <= exact_k) {
      auto [ea, eb] = half_integer_power(k);
      ok = mod_floor(ea, BigInt(15)) == a && mod_floor(eb, BigInt(15)) == b;
    }
    ok = ok && !(a % 3 == 0 && a % 5 == 2) && !(a % 5 == 3 && b % 3 == 0);
    run.check(ok, "k=" + std::to_string(k));
  }
  return run.finish();
}

inline std::vector<PropertyResult> run_all_properties(std::uint64_t seed = kDefaultSeed, std::uint64_t cases = kDefaultCases) {
  return {prop_norm_multiplicativity(seed, cases), prop_profile_product(seed, cases), prop_matrix_vs_resultant(seed, cases),
          prop_norm_congruences(seed, cases),      prop_classify_laws(seed, cases),   prop_cyclotomic_resultants(),
          prop_pell_cycle()};
}

}  // namespace circdet
