#include <gtest/gtest.h>

#include <random>

#include "circdet/membership.hpp"
#include "oracles.hpp"

using namespace circdet;

namespace {

std::vector<long> small(const IntPoly& f) {
  std::vector<long> v;
  for (const auto& c : f.coeffs()) v.push_back(c.get_si());
  return v;
}

MembershipVerdict s15(long v) { return decide_s15(BigInt(v)); }

// Checks a member verdict's certificate against the matrix.
void expect_certified(const MembershipVerdict& d) {
  ASSERT_EQ(d.status, Status::member);
  ASSERT_TRUE(d.witness.has_value());
  ASSERT_EQ(d.witness->n, d.n);
  ASSERT_EQ(oracle::circulant_det(oracle::fold(small(d.witness->poly), d.n)), d.value) << d.value;
}

}  // namespace

TEST(S15, Examples) {
  expect_certified(s15(7));
  expect_certified(s15(-7));
  EXPECT_EQ(s15(7).reason, Reason::coprime);

  auto d = s15(9);
  EXPECT_EQ(d.status, Status::non_member);
  EXPECT_EQ(d.reason, Reason::no_qualifying_prime);
  EXPECT_FALSE(d.witness.has_value());

  d = s15(279);  // 9 * 31
  expect_certified(d);
  EXPECT_EQ(d.reason, Reason::class_i);
  EXPECT_EQ(d.prime, 31);

  d = s15(549);  // 9 * 61
  EXPECT_EQ(d.status, Status::non_member);
  EXPECT_NE(d.note.find("61^1 (bad)"), std::string::npos) << d.note;

  d = s15(144);  // 9 * 2^4
  expect_certified(d);
  EXPECT_EQ(d.reason, Reason::class_iii);

  EXPECT_EQ(s15(36).status, Status::non_member);

  d = s15(225);
  expect_certified(d);
  EXPECT_EQ(d.reason, Reason::fifteen_sq);

  d = s15(63);
  expect_certified(d);
  EXPECT_EQ(d.reason, Reason::class_i);

  d = s15(135);
  EXPECT_EQ(d.status, Status::non_member);
  EXPECT_EQ(d.reason, Reason::div_violation);

  expect_certified(s15(0));
  expect_certified(s15(27 * 2));
  expect_certified(s15(125 * 7));
  expect_certified(s15(9 * 19 * 19));  // class ii
  EXPECT_EQ(s15(9 * 19 * 19).reason, Reason::class_ii);
  expect_certified(s15(25 * 11));
}

TEST(S15, SignSymmetry) {
  std::mt19937_64 g(51);
  std::uniform_int_distribution<long> u(1, 200000);
  for (int i = 0; i < 10000; ++i) {
    long v = u(g);
    MembershipOptions o;
    o.synthesize = false;
    auto a = decide_s15(BigInt(v), o), b = decide_s15(BigInt(-v), o);
    ASSERT_EQ(a.status, b.status) << v;
    ASSERT_EQ(a.reason, b.reason) << v;
  }
}

// Every value reached by a polynomial must be accepted.
TEST(S15, NeverRejectsAnAttainedValue) {
  std::mt19937_64 g(52);
  for (int i = 0; i < 10000; ++i) {
    std::vector<long> a = oracle::random_coeffs(g, 15, 1);
    BigInt v = oracle::circulant_det(a);
    MembershipOptions o;
    o.synthesize = false;
    auto d = decide_s15(v, o);
    ASSERT_NE(d.status, Status::non_member) << v;
    ASSERT_TRUE(divisibility_ok(15, v)) << v;
  }
}

TEST(S15, WitnessesOnRandomMembers) {
  std::mt19937_64 g(53);
  std::uniform_int_distribution<long> u(-5000, 5000);
  int certified = 0;
  for (int i = 0; i < 400; ++i) {
    long k = u(g);
    if (k == 0 || k % 3 == 0 || k % 5 == 0) continue;
    for (long mult : {1L, 9L, 25L}) {
      auto d = s15(mult * k);
      if (d.status != Status::member) continue;
      expect_certified(d);
      ++certified;
    }
  }
  EXPECT_GT(certified, 300);
}

// 9p is in S_15 exactly for p = 7, 11, 13 mod 15 and for good p = 1 mod 15.
TEST(S15, NinePAgreesWithTheCharacter) {
  for (long p = 7; p < 3000; ++p) {
    if (!oracle::is_prime(p)) continue;
    const long r = p % 15;
    bool want = r == 7 || r == 11 || r == 13;
    if (r == 1) want = oracle::chi_good(small(find_norm_element(p).poly()));
    MembershipOptions o;
    o.synthesize = false;
    ASSERT_EQ(decide_s15(BigInt(9 * p), o).status == Status::member, want) << p;
    ASSERT_EQ(decide_s15(BigInt(25 * p), o).status == Status::member, want) << p;
  }
}

TEST(S15, UnknownWhenTrialDivisionRunsOut) {
  MembershipOptions o;
  o.trial_bound = 10;
  auto d = decide_s15(BigInt(9 * 31 * 61), o);
  EXPECT_EQ(d.status, Status::unknown);
  EXPECT_EQ(d.reason, Reason::unfactored);
  EXPECT_FALSE(d.witness.has_value());
  d = decide_s15(BigInt(9 * 31 * 61));
  expect_certified(d);
  EXPECT_EQ(d.prime, 31);
}

TEST(S15, ClosedUnderProducts) {
  std::mt19937_64 g(54);
  std::vector<long> members;
  for (long v = -3000; v <= 3000 && members.size() < 400; v += 7) {
    MembershipOptions o;
    o.synthesize = false;
    if (decide_s15(BigInt(v), o).status == Status::member) members.push_back(v);
  }
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  for (int i = 0; i < 10000; ++i) {
    BigInt v = BigInt(members[pick(g)]) * members[pick(g)];
    MembershipOptions o;
    o.synthesize = false;
    ASSERT_EQ(decide_s15(v, o).status, Status::member) << v;
  }
}

TEST(Sp, Examples) {
  for (long p : {3L, 5L, 7L, 11L}) {
    for (bool doubled : {false, true}) {
      const long n = doubled ? 2 * p : p;
      auto d = decide_sp(BigInt(p), p, doubled);
      EXPECT_EQ(d.status, Status::non_member);
      EXPECT_EQ(d.reason, Reason::div_violation);
      expect_certified(decide_sp(BigInt(n * n), p, doubled));
      expect_certified(decide_sp(BigInt(-n * n * 3), p, doubled));
      if (doubled) {
        EXPECT_EQ(decide_sp(BigInt(2), p, true).status, Status::non_member);
        expect_certified(decide_sp(BigInt(4), p, true));
        expect_certified(decide_sp(BigInt(p * p), p, true));
        EXPECT_EQ(decide_sp(BigInt(p * p), p, true).reason, Reason::p_pow);
        EXPECT_EQ(decide_sp(BigInt(8 * 1), p, true).reason, Reason::two_pow);
      }
    }
  }
  EXPECT_THROW(decide_sp(BigInt(1), 9, false), DomainError);
}

TEST(Sp, NeverRejectsAnAttainedValue) {
  std::mt19937_64 g(55);
  for (int i = 0; i < 10000; ++i) {
    const long ns[] = {3, 5, 7, 6, 10, 14};
    const long n = ns[i % 6];
    std::vector<long> a = oracle::random_coeffs(g, static_cast<std::size_t>(n), 2);
    BigInt v = oracle::circulant_det(a);
    const bool doubled = n % 2 == 0;
    auto d = decide_sp(v, doubled ? n / 2 : n, doubled);
    ASSERT_EQ(d.status, Status::member) << n << " " << v;
    ASSERT_TRUE(d.witness.has_value());
    ASSERT_EQ(oracle::circulant_det(oracle::fold(small(d.witness->poly), n)), v);
  }
}

TEST(Divisibility, Law) {
  EXPECT_TRUE(divisibility_ok(15, BigInt(0)));
  EXPECT_TRUE(divisibility_ok(15, BigInt(9)));
  EXPECT_FALSE(divisibility_ok(15, BigInt(3)));
  EXPECT_FALSE(divisibility_ok(15, BigInt(5 * 7)));
  EXPECT_TRUE(divisibility_ok(12, BigInt(8 * 9)));
  EXPECT_FALSE(divisibility_ok(12, BigInt(4 * 9)));
  EXPECT_THROW(divisibility_ok(0, BigInt(1)), DomainError);
  // every circulant determinant obeys it
  std::mt19937_64 g(56);
  for (int i = 0; i < 10000; ++i) {
    long n = std::uniform_int_distribution<long>(1, 18)(g);
    std::vector<long> a = oracle::random_coeffs(g, static_cast<std::size_t>(n), 2);
    ASSERT_TRUE(divisibility_ok(n, oracle::circulant_det(a))) << n;
  }
}
