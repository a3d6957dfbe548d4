#include <gtest/gtest.h>

#include <random>

#include "circdet/cyclonorm.hpp"
#include "oracles.hpp"

using namespace circdet;

namespace {

IntPoly from(const std::vector<long>& v) { return IntPoly(std::vector<BigInt>(v.begin(), v.end())); }

}  // namespace

TEST(Reduce, CoordinatesAndLength) {
  CycloElement e = reduce_mod_cyclotomic(IntPoly::x_pow(8), 15);
  ASSERT_EQ(e.coords.size(), 8u);
  // x^8 = x^7 - x^5 + x^4 - x^3 + x - 1 mod Phi_15
  EXPECT_EQ(e.poly(), (IntPoly{-1, 1, 0, -1, 1, -1, 0, 1}));
  EXPECT_EQ(reduce_mod_cyclotomic(IntPoly{}, 7).coords.size(), 6u);
  EXPECT_TRUE(reduce_mod_cyclotomic(cyclotomic(9), 9).is_zero());
}

TEST(Norm, Examples) {
  EXPECT_EQ(norm_profile(IntPoly{0, -1}, 15).total, -1);
  NormProfile p = norm_profile(parse_poly("1 + x^3 + x^5 + x^7 + x^10"), 35);
  EXPECT_EQ(p.total, 125);
  EXPECT_EQ(norm_profile(parse_poly("1 + x^3 + x^5 + x^7 + x^10"), 55).total, 125);
  EXPECT_EQ(norm_d(IntPoly{-1, 1}, 15), 1);
  EXPECT_EQ(norm_d(IntPoly{-1, 1}, 3), 3);
  EXPECT_EQ(norm_d(IntPoly{2}, 15), 256);
  EXPECT_EQ(norm_profile(cyclotomic(5), 15).total, 0);
}

TEST(Norm, ProfileHasEveryDivisor) {
  NormProfile p = norm_profile(IntPoly{2, 1}, 12);
  std::vector<long> ds;
  for (const auto& [d, v] : p.norms) ds.push_back(d);
  EXPECT_EQ(ds, (std::vector<long>{1, 2, 3, 4, 6, 12}));
}

TEST(Norm, MatchesRootProduct) {
  std::mt19937_64 g(21);
  for (int i = 0; i < 10000; ++i) {
    long d = std::uniform_int_distribution<long>(1, 40)(g);
    std::vector<long> f = oracle::random_coeffs(g, static_cast<std::size_t>(std::uniform_int_distribution<long>(1, 6)(g)), 1);
    ASSERT_EQ(norm_d(from(f), d), oracle::norm(f, d)) << d << " " << render_poly(from(f));
  }
}

TEST(Norm, TotalIsTheCirculantDeterminant) {
  std::mt19937_64 g(22);
  for (int i = 0; i < 10000; ++i) {
    long n = std::uniform_int_distribution<long>(1, 15)(g);
    std::vector<long> a = oracle::random_coeffs(g, static_cast<std::size_t>(n), 3);
    BigInt want = oracle::circulant_det(a);
    ASSERT_EQ(norm_profile(from(a), n).total, want) << n;
    ASSERT_EQ(circulant_resultant(from(a), n), want);
  }
}

TEST(Norm, LongPolynomialsFoldFirst) {
  std::mt19937_64 g(23);
  for (int i = 0; i < 2000; ++i) {
    long n = std::uniform_int_distribution<long>(1, 12)(g);
    std::vector<long> f = oracle::random_coeffs(g, static_cast<std::size_t>(3 * n + 1), 2);
    ASSERT_EQ(norm_profile(from(f), n).total, oracle::circulant_det(oracle::fold(f, n)));
  }
}

TEST(SmallNormEvaluator, AgreesWithProfile) {
  std::mt19937_64 g(24);
  for (long n : {3L, 5L, 10L, 15L, 21L}) {
    SmallNormEvaluator ev(n);
    std::vector<BigInt> out;
    for (int i = 0; i < 2000; ++i) {
      std::vector<long> a = oracle::random_coeffs(g, static_cast<std::size_t>(n), 2);
      ev.evaluate(a.data(), out);
      NormProfile p = norm_profile(from(a), n);
      const auto& ds = ev.divisors_list();
      for (std::size_t k = 0; k < ds.size(); ++k) ASSERT_EQ(out[k], p.norms[ds[k]]) << n << " d=" << ds[k];
    }
  }
}

TEST(Norm, EisensteinFormula) {
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b) ASSERT_EQ(norm_d(IntPoly{a, b}, 3), a * a - a * b + b * b);
}

TEST(Arithmetic, ConjugateCofactorAndExactDivide) {
  std::mt19937_64 g(25);
  for (int i = 0; i < 2000; ++i) {
    CycloElement a = reduce_mod_cyclotomic(from(oracle::random_coeffs(g, 8, 3)), 15);
    CycloElement b = reduce_mod_cyclotomic(from(oracle::random_coeffs(g, 8, 3)), 15);
    if (a.is_zero() || b.is_zero()) continue;
    ASSERT_EQ(a * conjugate_cofactor(a), scale(cyclo_one(15), norm(a)));
    auto q = exact_divide(a * b, b);
    ASSERT_TRUE(q.has_value());
    ASSERT_EQ(*q, a);
  }
  EXPECT_FALSE(exact_divide(cyclo_one(15), cyclo_from_ints(15, {2})).has_value());
}

TEST(Arithmetic, ConjugationIsAnAutomorphism) {
  std::mt19937_64 g(26);
  for (int i = 0; i < 2000; ++i) {
    CycloElement a = reduce_mod_cyclotomic(from(oracle::random_coeffs(g, 8, 3)), 15);
    CycloElement b = reduce_mod_cyclotomic(from(oracle::random_coeffs(g, 8, 3)), 15);
    for (long k : {2L, 7L, 11L}) {
      ASSERT_EQ(conjugate(a * b, k), conjugate(a, k) * conjugate(b, k));
      ASSERT_EQ(norm(conjugate(a, k)), norm(a));
    }
  }
}

TEST(UnitCheck, Examples) {
  UnitCheck u = unit_check(IntPoly{1, 1}, 15);
  EXPECT_TRUE(u.is_unit);
  EXPECT_TRUE(u.is_reciprocal);
  EXPECT_EQ(u.norm, oracle::norm({1, 1}, 15));
  u = unit_check(IntPoly{-1, 1}, 15);
  EXPECT_TRUE(u.is_unit);
  EXPECT_TRUE(u.is_skew_reciprocal);
  EXPECT_FALSE(u.is_reciprocal);
  u = unit_check(IntPoly{-1, 1}, 3);
  EXPECT_FALSE(u.is_unit);
  EXPECT_EQ(u.norm, 3);
}

TEST(UnitTable, AllConductorsPass) {
  for (long n : tabulated_conductors()) {
    UnitTableReport r = verify_unit_table(n);
    EXPECT_TRUE(r.ok) << n;
    EXPECT_TRUE(r.independent) << n;
    for (const auto& l : r.lines) {
      EXPECT_TRUE(l.is_unit) << n << " " << l.name;
      EXPECT_EQ(l.reciprocity, l.claimed) << n << " " << l.name;
    }
  }
}

TEST(UnitTable, ThirtyNineHasCyclotomicUnits) {
  UnitTableReport r = verify_unit_table(39);
  int found = 0;
  for (const auto& l : r.lines)
    if (l.name == "Phi_5" || l.name == "Phi_7" || l.name == "Phi_11") {
      ++found;
      EXPECT_TRUE(l.is_unit);
      EXPECT_EQ(std::abs(oracle::norm(oracle::cyclotomic(std::stol(l.name.substr(4))), 39)), 1);
    }
  EXPECT_EQ(found, 3);
}

TEST(UnitTable, FifteenAndFive) {
  UnitTableReport r = verify_unit_table(15);
  std::vector<std::string> names;
  for (const auto& l : r.lines) names.push_back(l.name);
  EXPECT_EQ(names, (std::vector<std::string>{"x-1", "x+1", "x^3+1"}));
  r = verify_unit_table(5);
  ASSERT_EQ(r.lines.size(), 1u);
  EXPECT_EQ(r.lines[0].name, "x+1");
  EXPECT_EQ(norm_d(IntPoly{-1, 1}, 5), 5);
}

TEST(UnitTable, UnknownConductor) { EXPECT_THROW(verify_unit_table(17), DomainError); }

TEST(UnitInverse, FifteenGenerators) {
  for (auto f : {IntPoly{-1, 1}, IntPoly{1, 1}, IntPoly{1, 0, 0, 1}, IntPoly{0, -1}}) {
    CycloElement u = reduce_mod_cyclotomic(f, 15);
    EXPECT_EQ(u * unit_inverse(u), cyclo_one(15));
  }
  EXPECT_THROW(unit_inverse(cyclo_from_ints(15, {2})), DomainError);
}
