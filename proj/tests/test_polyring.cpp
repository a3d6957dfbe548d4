#include <gtest/gtest.h>

#include <random>

#include "circdet/polyring.hpp"
#include "oracles.hpp"

using namespace circdet;

namespace {

IntPoly from(const std::vector<long>& v) { return IntPoly(std::vector<BigInt>(v.begin(), v.end())); }

std::vector<oracle::Z> zs(const IntPoly& f) { return f.coeffs(); }

IntPoly random_poly(std::mt19937_64& g, long max_deg, long bound) {
  long deg = std::uniform_int_distribution<long>(0, max_deg)(g);
  return from(oracle::random_coeffs(g, static_cast<std::size_t>(deg + 1), bound));
}

}  // namespace

TEST(Parse, MonomialSum) {
  EXPECT_EQ(parse_poly("1 - x + x^3"), (IntPoly{1, -1, 0, 1}));
  EXPECT_EQ(parse_poly("[1,-1,0,1]"), (IntPoly{1, -1, 0, 1}));
  EXPECT_TRUE(parse_poly("0").is_zero());
  EXPECT_TRUE(parse_poly("0").coeffs().empty());
  EXPECT_EQ(parse_poly("  -2x^2+3 x -   x ^ 2 "), (IntPoly{0, 3, -3}));
  EXPECT_EQ(parse_poly("x^2 + x^2"), (IntPoly{0, 0, 2}));
  EXPECT_EQ(parse_poly("[ ]"), IntPoly{});
}

TEST(Parse, HugeCoefficients) {
  IntPoly f = parse_poly("123456789012345678901234567890x^2 - 1");
  EXPECT_EQ(f[2], BigInt("123456789012345678901234567890"));
  EXPECT_EQ(render_poly(f), "-1 + 123456789012345678901234567890x^2");
}

TEST(Parse, ErrorsCarryOffset) {
  try {
    parse_poly("1 + x^");
    FAIL() << "accepted a dangling exponent";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
  EXPECT_THROW(parse_poly("x^-1"), ParseError);
  EXPECT_THROW(parse_poly("1 +* x"), ParseError);
  EXPECT_THROW(parse_poly("[1,,2]"), ParseError);
  EXPECT_THROW(parse_poly(""), ParseError);
  EXPECT_THROW(parse_poly("y"), ParseError);
}

TEST(Parse, RenderRoundTrip) {
  std::mt19937_64 g(11);
  for (int i = 0; i < 10000; ++i) {
    IntPoly f = random_poly(g, 20, 50);
    std::string s = render_poly(f);
    ASSERT_EQ(parse_poly(s), f) << s;
    ASSERT_EQ(render_poly(parse_poly(s)), s);
    ASSERT_EQ(parse_poly(render_list(f)), f);
  }
}

TEST(MulMod, Examples) {
  EXPECT_EQ(poly_mul_mod(IntPoly::x_pow(14), IntPoly{0, 1}, 15), IntPoly{1});
  IntPoly g{3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2};
  EXPECT_EQ(poly_mul_mod(IntPoly{1}, g, 15), (IntPoly{3, 2}));
  IntPoly phi3{1, 1, 1}, phi5{1, 1, 1, 1, 1};
  EXPECT_EQ(poly_mul_mod(phi3, phi5, 15), (IntPoly{1, 2, 3, 3, 3, 2, 1}));
}

TEST(MulMod, MatchesSchoolbookFold) {
  std::mt19937_64 g(12);
  for (int i = 0; i < 10000; ++i) {
    long n = std::uniform_int_distribution<long>(1, 40)(g);
    IntPoly a = random_poly(g, 60, 9), b = random_poly(g, 60, 9);
    std::vector<oracle::Z> prod = oracle::mul(zs(a), zs(b));
    std::vector<BigInt> folded(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < prod.size(); ++k) folded[k % static_cast<std::size_t>(n)] += prod[k];
    ASSERT_EQ(poly_mul_mod(a, b, static_cast<std::size_t>(n)), IntPoly(folded));
  }
}

TEST(ExactDiv, Examples) {
  IntPoly x5m1 = IntPoly::x_pow(5) - IntPoly{1};
  EXPECT_EQ(poly_exact_div(x5m1, IntPoly{-1, 1}), (IntPoly{1, 1, 1, 1, 1}));
  IntPoly x15m1 = IntPoly::x_pow(15) - IntPoly{1};
  IntPoly x3m1 = IntPoly::x_pow(3) - IntPoly{1};
  IntPoly want = poly_exact_div(x3m1 * x5m1, IntPoly{-1, 1});
  EXPECT_EQ(poly_exact_div(x15m1, from(oracle::cyclotomic(15))), want);
  try {
    poly_exact_div(IntPoly{1, 0, 1}, IntPoly{-1, 1});
    FAIL() << "x^2 + 1 is not divisible by x - 1";
  } catch (const InexactDivision& e) {
    EXPECT_EQ(e.remainder(), IntPoly{2});
  }
}

TEST(ExactDiv, ProductRoundTrip) {
  std::mt19937_64 g(13);
  for (int i = 0; i < 10000; ++i) {
    IntPoly f = random_poly(g, 25, 20), d = random_poly(g, 12, 20);
    if (d.is_zero()) continue;
    ASSERT_EQ(poly_exact_div(f * d, d), f);
  }
}

TEST(Cyclotomic, Small) {
  EXPECT_EQ(cyclotomic(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic(3), (IntPoly{1, 1, 1}));
  IntPoly x15 = IntPoly::x_pow(15) - IntPoly{1};
  IntPoly want = poly_exact_div(x15 * IntPoly{-1, 1}, (IntPoly::x_pow(3) - IntPoly{1}) * (IntPoly::x_pow(5) - IntPoly{1}));
  EXPECT_EQ(cyclotomic(15), want);
}

TEST(Cyclotomic, MatchesMobiusProduct) {
  for (long d = 1; d <= 105; ++d) EXPECT_EQ(cyclotomic(d), from(oracle::cyclotomic(d))) << d;
}

TEST(Cyclotomic, DivisorProductIsXnMinusOne) {
  for (long n = 1; n <= 105; ++n) {
    std::vector<oracle::Z> p{1};
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) p = oracle::mul(p, zs(cyclotomic(d)));
    EXPECT_EQ(IntPoly(p), IntPoly::x_pow(static_cast<std::size_t>(n)) - IntPoly{1}) << n;
  }
}

TEST(Resultant, CyclotomicPairs) {
  EXPECT_EQ(resultant(cyclotomic(15), cyclotomic(5)), 81);
  EXPECT_EQ(resultant(cyclotomic(15), cyclotomic(3)), 25);
  EXPECT_EQ(resultant(cyclotomic(15), cyclotomic(2)), 1);
  EXPECT_EQ(resultant(IntPoly{-1, 1}, IntPoly{3, 0, 1}), 4);
}

TEST(Resultant, ZeroIsAnError) {
  EXPECT_THROW(resultant(IntPoly{}, IntPoly{1, 1}), DomainError);
  EXPECT_THROW(resultant(IntPoly{1, 1}, IntPoly{}), DomainError);
}

TEST(Resultant, SwapSignAndSylvester) {
  std::mt19937_64 g(14);
  for (int i = 0; i < 10000; ++i) {
    IntPoly a = random_poly(g, 7, 6), b = random_poly(g, 7, 6);
    if (a.is_zero() || b.is_zero()) continue;
    BigInt r = resultant(a, b);
    const bool odd = (a.degree() * b.degree()) % 2 != 0;
    ASSERT_EQ(resultant(b, a), odd ? BigInt(-r) : r) << render_poly(a) << " , " << render_poly(b);
    if (a.degree() + b.degree() > 0) {
      std::vector<BigInt> s = sylvester_matrix(a, b);
      ASSERT_EQ(oracle::det(s, static_cast<std::size_t>(a.degree() + b.degree())), r);
    }
  }
}

TEST(Resultant, MonicAgainstRootProduct) {
  std::mt19937_64 g(15);
  for (int i = 0; i < 2000; ++i) {
    long d = std::uniform_int_distribution<long>(1, 30)(g);
    std::vector<long> f = oracle::random_coeffs(g, 6, 1);
    IntPoly fp = from(f);
    if (fp.is_zero()) continue;
    ASSERT_EQ(resultant(cyclotomic(d), fp), oracle::norm(f, d)) << d << " " << render_poly(fp);
  }
}
