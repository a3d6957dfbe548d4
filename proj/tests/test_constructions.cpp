#include <gtest/gtest.h>

#include <random>

#include "circdet/constructions.hpp"
#include "oracles.hpp"

using namespace circdet;

namespace {

std::vector<long> small(const IntPoly& f) {
  std::vector<long> v;
  for (const auto& c : f.coeffs()) v.push_back(c.get_si());
  return v;
}

// M_n straight from the n x n matrix.
BigInt matrix_value(const WitnessCertificate& c) { return oracle::circulant_det(oracle::fold(small(c.poly), c.n)); }

}  // namespace

TEST(Registry, EveryEntryChecksOut) {
  ASSERT_EQ(witness_registry().size(), 12u);
  for (const auto& name : registry_names()) {
    WitnessCertificate c = fixed_witness(name);
    EXPECT_EQ(matrix_value(c), c.claimed) << name;
    EXPECT_EQ(c.profile.total, c.claimed) << name;
  }
  EXPECT_THROW(fixed_witness("nope"), DomainError);
}

TEST(Registry, ParserRejectsJunk) {
  EXPECT_THROW(parse_registry("a | 15 | x\n"), DomainError);
  EXPECT_EQ(parse_registry("# only a comment\n\n").size(), 0u);
  auto r = parse_registry("t | 5 | 1 + x | 2  # trailing\n");
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].claimed, 2);
}

TEST(Fixed, DisplayedIdentities) {
  EXPECT_EQ(oracle::circulant_value({0, -1}, 15), -1);
  EXPECT_EQ(oracle::circulant_det({2, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}), 225);
  EXPECT_EQ(oracle::circulant_det(oracle::fold({1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1}, 35)), 125);
  EXPECT_EQ(oracle::circulant_det(oracle::fold({1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1}, 55)), 125);
  EXPECT_EQ(oracle::circulant_det(oracle::fold({1, 1, 1, 0, 1, 0, 1, 1, 1}, 35)), 343);
  EXPECT_EQ(oracle::circulant_det(oracle::fold({1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1}, 55)), 1331);
}

TEST(Certificate, MismatchIsABug) {
  EXPECT_THROW(make_certificate(15, IntPoly{0, 1}, BigInt(-1), "x"), InternalError);
  EXPECT_THROW(make_certificate(0, IntPoly{1}, BigInt(1), "one"), DomainError);
}

TEST(Coprime, GeometricSum) {
  for (long n = 1; n <= 20; ++n)
    for (long v = -30; v <= 30; ++v) {
      if (v == 0 || oracle::gcd(v, n) != 1) {
        EXPECT_THROW(coprime_certificate(n, BigInt(v)), DomainError);
        continue;
      }
      WitnessCertificate c = coprime_certificate(n, BigInt(v));
      ASSERT_EQ(matrix_value(c), v) << n << " " << v;
    }
}

TEST(Compose, ValuesMultiply) {
  auto a = coprime_certificate(15, BigInt(7)), b = coprime_certificate(15, BigInt(-11));
  auto c = compose_witness({a, b}, 15);
  EXPECT_EQ(c.claimed, -77);
  EXPECT_EQ(matrix_value(c), -77);
  EXPECT_EQ(matrix_value(with_positive_sign(c)), 77);
  EXPECT_THROW(compose_witness({a, coprime_certificate(14, BigInt(3))}, 15), DomainError);
  EXPECT_EQ(compose_witness({}, 9).claimed, 1);
}

TEST(Families, P3mSmallAgainstMatrix) {
  for (long p : {5L, 7L, 11L, 13L})
    for (long m = -10; m <= 10; ++m) {
      if (m == 0 || m % 3 == 0) {
        EXPECT_THROW(witness_p3m(p, m), DomainError);
        continue;
      }
      WitnessCertificate c = witness_p3m(p, m);
      ASSERT_EQ(c.n, 3 * p);
      ASSERT_EQ(matrix_value(c), p * p * p * m) << p << " " << m;
    }
}

TEST(Families, ThreePowersSmallAgainstMatrix) {
  for (long p : {5L, 7L, 11L, 13L})
    for (long m = -10; m <= 10; ++m) {
      if (m != 0 && m % p != 0) {
        ASSERT_EQ(matrix_value(witness_3power(p, m, ThreePowerVariant::F3)), 81 * m) << p << " " << m;
      } else {
        EXPECT_THROW(witness_3power(p, m, ThreePowerVariant::F3), DomainError);
      }
      if (m != 0 && oracle::gcd(m, 3 * p) == 1) {
        ASSERT_EQ(matrix_value(witness_3power(p, m, ThreePowerVariant::F4)), 27 * m) << p << " " << m;
      } else {
        EXPECT_THROW(witness_3power(p, m, ThreePowerVariant::F4), DomainError);
      }
    }
}

// Larger p, checked against the root product over all 3p-th roots.
TEST(Families, LargerPrimesAgainstRootProduct) {
  for (long p : {17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L})
    for (long m : {-7L, -2L, 1L, 2L, 5L, 10L}) {
      ASSERT_EQ(oracle::circulant_value(small(witness_p3m(p, m).poly), 3 * p), p * p * p * m) << p << " " << m;
      ASSERT_EQ(oracle::circulant_value(small(witness_3power(p, m, ThreePowerVariant::F3).poly), 3 * p), 81 * m);
      if (m % 3 != 0) {
        ASSERT_EQ(oracle::circulant_value(small(witness_3power(p, m, ThreePowerVariant::F4).poly), 3 * p), 27 * m);
      }
    }
}

TEST(Families, PreconditionsOnP) {
  EXPECT_THROW(witness_p3m(3, 1), DomainError);
  EXPECT_THROW(witness_p3m(9, 1), DomainError);
  EXPECT_THROW(witness_3power(2, 1, ThreePowerVariant::F3), DomainError);
}

TEST(Shift, FormulaAgainstMatrix) {
  std::mt19937_64 g(41);
  int done = 0;
  while (done < 2000) {
    long n = std::uniform_int_distribution<long>(2, 12)(g);
    std::vector<long> f = oracle::random_coeffs(g, static_cast<std::size_t>(n), 2);
    long f1 = 0;
    for (long c : f) f1 += c;
    long k = std::uniform_int_distribution<long>(-9, 9)(g), lambda = std::uniform_int_distribution<long>(-3, 3)(g);
    if (f1 == 0 || k == 0 || oracle::gcd(k, n) != 1) continue;
    BigInt mf = oracle::circulant_det(f);
    BigInt num = (BigInt(k * f1) + lambda * n) * mf;
    if (num % f1 != 0) continue;
    WitnessCertificate c = shift_construction(IntPoly(std::vector<BigInt>(f.begin(), f.end())), n, BigInt(k), BigInt(lambda));
    ASSERT_EQ(matrix_value(c), num / f1);
    ++done;
  }
  EXPECT_THROW(shift_construction(IntPoly{1, -1}, 5, BigInt(1), BigInt(0)), DomainError);
  EXPECT_THROW(shift_construction(IntPoly{1, 1}, 6, BigInt(2), BigInt(0)), DomainError);
}

TEST(NinePTwentyFiveP, SmallPrimesAgainstMatrix) {
  for (long p : {7L, 11L, 13L, 37L, 41L, 43L}) {
    auto [a, b] = witness_3sq_5sq(p);
    EXPECT_EQ(matrix_value(a), 9 * p) << p;
    EXPECT_EQ(matrix_value(b), 25 * p) << p;
  }
}

TEST(NinePTwentyFiveP, EveryQualifyingPrimeUpTo1000) {
  int count = 0;
  for (long p = 7; p <= 1000; ++p) {
    if (!oracle::is_prime(p)) continue;
    const long r = p % 15;
    if (r != 7 && r != 11 && r != 13) {
      EXPECT_THROW(witness_3sq_5sq(p), DomainError) << p;
      continue;
    }
    auto [a, b] = witness_3sq_5sq(p);
    ASSERT_EQ(oracle::circulant_value(small(a.poly), 15), 9 * p) << p;
    ASSERT_EQ(oracle::circulant_value(small(b.poly), 15), 25 * p) << p;
    ++count;
  }
  EXPECT_EQ(count, 66);
}

TEST(GoodForms, NineKAndTwentyFiveK) {
  int good = 0;
  for (long p = 31; p < 2000; p += 15) {
    if (!oracle::is_prime(p)) continue;
    Classification c = classify_element(find_norm_element(p));
    if (c.tag != Tag::good) {
      EXPECT_THROW(witness_good_form(c, GoodFormTarget::three), DomainError);
      continue;
    }
    auto a = witness_good_form(c, GoodFormTarget::three), b = witness_good_form(c, GoodFormTarget::five);
    ASSERT_EQ(oracle::circulant_value(small(a.poly), 15), 9 * p) << p;
    ASSERT_EQ(oracle::circulant_value(small(b.poly), 15), 25 * p) << p;
    ++good;
  }
  EXPECT_GT(good, 10);
}

TEST(GoodForms, WrongPairingThrows) {
  Classification c = classify_element(find_norm_element(31));
  EXPECT_THROW(witness_good_form(c.first, GoodFormTarget::five), DomainError);
  EXPECT_THROW(witness_good_form(c.second, GoodFormTarget::three), DomainError);
}
