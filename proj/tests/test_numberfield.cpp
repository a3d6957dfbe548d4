#include <gtest/gtest.h>

#include "circdet/numberfield.hpp"
#include "oracles.hpp"

using namespace circdet;

namespace {

std::vector<long> small(const IntPoly& f) {
  std::vector<long> v;
  for (const auto& c : f.coeffs()) v.push_back(c.get_si());
  return v;
}

}  // namespace

TEST(Eisenstein, Seven) { EXPECT_EQ(eisenstein_rep(7), std::make_pair(3L, 1L)); }

// The tie-break picks the smallest beta >= 0 and then the smallest alpha > 0.
// Under that rule 13 and 31 come out as (4, 1) and (6, 1).
TEST(Eisenstein, TieBreakRule) {
  EXPECT_EQ(eisenstein_rep(13), std::make_pair(4L, 1L));
  EXPECT_EQ(eisenstein_rep(31), std::make_pair(6L, 1L));
}

TEST(Eisenstein, AgreesWithBruteForce) {
  for (long p = 7; p < 5000; ++p) {
    if (!oracle::is_prime(p) || p % 3 != 1) continue;
    auto all = oracle::eisenstein_all(p);
    ASSERT_FALSE(all.empty()) << p;
    auto got = eisenstein_rep(p);
    ASSERT_EQ(got, all.front()) << p;
    ASSERT_EQ(got.first * got.first - got.first * got.second + got.second * got.second, p);
  }
}

TEST(Eisenstein, Preconditions) {
  EXPECT_THROW(eisenstein_rep(5), DomainError);
  EXPECT_THROW(eisenstein_rep(21), DomainError);
}

TEST(CanonicalMod15, Examples) {
  EisensteinRep r = canonical_rep_mod15(31);
  EXPECT_EQ(r.a, 1);
  EXPECT_EQ(r.b, 0);
  EXPECT_EQ(oracle::norm(small(r.first_poly()), 3), 31);

  r = canonical_rep_mod15(7);
  EXPECT_EQ(std::make_pair(r.a, r.b), std::make_pair(3L, 1L));
  EXPECT_EQ(std::make_pair(r.A, r.B), std::make_pair(0L, 0L));
  ASSERT_TRUE(r.has_second);
  EXPECT_EQ(std::make_pair(r.c, r.d), std::make_pair(2L, 3L));
  EXPECT_EQ(oracle::norm(small(r.second_poly()), 3), 7);

  r = canonical_rep_mod15(19);
  EXPECT_EQ(std::make_pair(r.a, r.b), std::make_pair(2L, 0L));
  EXPECT_EQ(oracle::norm(small(r.first_poly()), 3), 19);
}

TEST(CanonicalMod15, EveryPrimeBelow5000) {
  const std::map<long, std::pair<long, long>> table{{1, {1, 0}}, {4, {2, 0}}, {7, {3, 1}}, {13, {4, 3}}};
  for (long p = 7; p < 5000; ++p) {
    if (!oracle::is_prime(p) || p % 3 != 1) continue;
    EisensteinRep r = canonical_rep_mod15(p);
    ASSERT_EQ(std::make_pair(r.a, r.b), table.at(p % 15)) << p;
    ASSERT_EQ(oracle::norm(small(r.first_poly()), 3), p) << p;
    ASSERT_EQ(r.has_second, p % 15 == 7 || p % 15 == 13) << p;
    if (r.has_second) {
      ASSERT_EQ(oracle::norm(small(r.second_poly()), 3), p) << p;
    }
  }
}

TEST(Norm5, Eleven) {
  Norm5Rep r = rep_norm5(11);
  EXPECT_EQ(r.sign, 1);
  EXPECT_TRUE(r.g.is_zero());
  EXPECT_EQ(r.element(), (IntPoly{2, 1}));
}

TEST(Norm5, ElevenModFifteenBelow3000) {
  for (long p = 11; p < 3000; p += 15) {
    if (!oracle::is_prime(p)) continue;
    Norm5Rep r = rep_norm5(p);
    ASSERT_EQ(oracle::norm(small(r.element()), 5), p) << p;
    ASSERT_EQ(oracle::norm(small(r.element5p()), 5), 5 * p) << p;
    ASSERT_LE(r.g.degree(), 3);
  }
  EXPECT_THROW(rep_norm5(31), DomainError);
}

TEST(FindNormElement, Examples) {
  for (long p : {31L, 61L, 151L}) {
    CycloElement xi = find_norm_element(p);
    ASSERT_EQ(xi.coords.size(), 8u);
    EXPECT_EQ(std::llabs(oracle::norm(small(xi.poly()), 15)), p);
  }
  EXPECT_THROW(find_norm_element(7), DomainError);
}

TEST(FindNormElement, AllBelow5000) {
  for (long p = 31; p < 5000; p += 15) {
    if (!oracle::is_prime(p)) continue;
    CycloElement xi = find_norm_element(p);
    ASSERT_EQ(abs(norm(xi)), p) << p;
  }
}

TEST(PrimeElement, NormIsPToTheF) {
  for (long p = 2; p < 200; ++p) {
    if (!oracle::is_prime(p) || p == 3 || p == 5) continue;
    CycloElement e = prime_element(15, p);
    long f = oracle::order_mod15(p);
    long long want = 1;
    for (long i = 0; i < f; ++i) want *= p;
    ASSERT_EQ(std::llabs(oracle::norm(small(e.poly()), 15)), want) << p;
  }
}

TEST(Splitting, Examples) {
  SplittingData s = splitting_data(31);
  EXPECT_EQ(s.f, 1);
  EXPECT_EQ(s.count, 8);
  s = splitting_data(11);
  EXPECT_EQ(s.f, 2);
  EXPECT_EQ(s.count, 4);
  s = splitting_data(2);
  EXPECT_EQ(s.f, 4);
  EXPECT_EQ(s.count, 2);
  EXPECT_THROW(splitting_data(3), DomainError);
  EXPECT_THROW(splitting_data(5), DomainError);
}

TEST(Splitting, CountTimesDegreeIsEight) {
  for (long p = 2; p < 20000; ++p) {
    if (!oracle::is_prime(p) || p == 3 || p == 5) continue;
    SplittingData s = splitting_data(p);
    ASSERT_EQ(s.f, oracle::order_mod15(p)) << p;
    ASSERT_EQ(s.count * s.f, 8) << p;
  }
}

TEST(QuadFeasibility, Examples) {
  EXPECT_FALSE(quad_feasibility(7, 5));
  EXPECT_FALSE(quad_feasibility(3, 5));
  EXPECT_THROW(quad_feasibility(7, 3), DomainError);
}

TEST(QuadFeasibility, NeverSolvable) {
  for (long p = 3; p < 400; ++p)
    for (long q = 3; q < 100; ++q) {
      if (!oracle::is_prime(p) || !oracle::is_prime(q) || p == q || (p * q) % 4 != 3) continue;
      bool brute = false;
      for (long y = -3; y <= 3; ++y)
        for (long x = -60; x <= 60; ++x)
          if (x * x + p * q * y * y == 4 * p) brute = true;
      ASSERT_EQ(quad_feasibility(p, q), brute) << p << " " << q;
      ASSERT_FALSE(brute);
    }
}

TEST(HalfIntegerPower, Examples) {
  EXPECT_EQ(half_integer_power(1), std::make_pair(BigInt(3), BigInt(1)));
  EXPECT_EQ(half_integer_power(2), std::make_pair(BigInt(7), BigInt(3)));
  EXPECT_EQ(half_integer_power(4), std::make_pair(BigInt(47), BigInt(21)));
  EXPECT_THROW(half_integer_power(0), DomainError);
}

TEST(HalfIntegerPower, UnitNormAndResidueCycle) {
  const std::pair<long, long> cycle[4] = {{0, 3}, {1, 2}, {0, 3}, {2, 2}};
  for (long k = 1; k <= 200; ++k) {
    auto [a, b] = half_integer_power(k);
    // ((3 + sqrt 5)/2) has norm 1
    ASSERT_EQ(a * a - 5 * b * b, 4) << k;
    long a3 = mpz_fdiv_ui(a.get_mpz_t(), 3), a5 = mpz_fdiv_ui(a.get_mpz_t(), 5);
    long b3 = mpz_fdiv_ui(b.get_mpz_t(), 3);
    ASSERT_EQ(std::make_pair(a3, a5), cycle[(k - 1) % 4]) << k;
    ASSERT_FALSE(a3 == 0 && a5 == 2);
    ASSERT_FALSE(a5 == 3 && b3 == 0);
  }
}
