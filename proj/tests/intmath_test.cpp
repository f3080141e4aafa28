#include "tricube/intmath.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace tricube;
using tricube::testing::random_big;
using tricube::testing::uniform;

TEST(Isqrt, SmallValues) {
  EXPECT_EQ(isqrt(0), 0);
  EXPECT_EQ(isqrt(1), 1);
  EXPECT_EQ(isqrt(16), 4);
  EXPECT_EQ(isqrt(24), 4);
  EXPECT_EQ(isqrt(25), 5);
}

TEST(Isqrt, RejectsNegative) { EXPECT_THROW(isqrt(-1), std::domain_error); }

TEST(Isqrt, FloorPropertyOnRandomValues) {
  for (int i = 0; i < 2000; ++i) {
    Int n = abs(random_big(4));
    if (i % 3 == 0) n = n * n + uniform(-1, 1);  // straddle exact squares
    if (n < 0) n = 0;
    const Int r = isqrt(n);
    ASSERT_LE(r * r, n) << n;
    ASSERT_GT((r + 1) * (r + 1), n) << n;
  }
}

TEST(PerfectSquareRoot, Examples) {
  EXPECT_EQ(perfect_square_root(0), Int(0));
  EXPECT_EQ(perfect_square_root(-4), std::nullopt);
  EXPECT_EQ(perfect_square_root(33), std::nullopt);
  EXPECT_EQ(perfect_square_root(36), Int(6));
}

TEST(PerfectSquareRoot, PresentExactlyForSquares) {
  for (int i = 0; i < 1500; ++i) {
    const Int r = abs(random_big(3));
    const Int sq = r * r;
    ASSERT_EQ(perfect_square_root(sq), r);
    if (r > 0) {
      ASSERT_EQ(perfect_square_root(sq + 1), std::nullopt);
      ASSERT_EQ(perfect_square_root(sq - 1), r == 1 ? std::optional<Int>(0) : std::nullopt);
    }
    ASSERT_EQ(perfect_square_root(-sq - 1), std::nullopt);
  }
}

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(8), (Factorization{1, {{2, 3}}}));
  EXPECT_EQ(factorize(-24), (Factorization{-1, {{2, 3}, {3, 1}}}));
  EXPECT_EQ(factorize(1), (Factorization{1, {}}));
  EXPECT_EQ(factorize(-1), (Factorization{-1, {}}));
}

TEST(Factorize, ZeroAndZeroLimitRejected) {
  EXPECT_THROW(factorize(0), std::domain_error);
  EXPECT_THROW(factorize(10, 0), std::domain_error);
}

bool slow_is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

TEST(Factorize, ReconstructsRandomInputs) {
  for (int i = 0; i < 1500; ++i) {
    const std::int64_t n = uniform(-1'000'000'000'000LL, 1'000'000'000'000LL);
    if (n == 0) continue;
    const auto f = factorize(n);
    ASSERT_EQ(f.product(), Int(n));
    for (std::size_t j = 0; j < f.factors.size(); ++j) {
      ASSERT_GE(f.factors[j].exponent, 1u);
      if (j) ASSERT_LT(f.factors[j - 1].prime, f.factors[j].prime);
      if (f.factors[j].prime < 1'000'000) ASSERT_TRUE(slow_is_prime(f.factors[j].prime.convert_to<std::int64_t>()));
    }
  }
}

TEST(Factorize, LargeCofactorCertifiedPrime) {
  const Int mersenne61 = (Int(1) << 61) - 1;
  EXPECT_EQ(factorize(mersenne61, 1000), (Factorization{1, {{mersenne61, 1}}}));
  EXPECT_EQ(factorize(-12 * mersenne61), (Factorization{-1, {{2, 2}, {3, 1}, {mersenne61, 1}}}));
  const Int wide = (Int(1) << 89) - 1;  // prime, but beyond the certified Miller-Rabin range
  EXPECT_THROW(factorize(wide, 1000), IncompleteFactorization);
}

TEST(Factorize, CompositeCofactorReported) {
  try {
    factorize(2 * 101 * 103, 10);
    FAIL() << "expected IncompleteFactorization";
  } catch (const IncompleteFactorization& e) {
    EXPECT_EQ(e.cofactor(), 101 * 103);
    EXPECT_NE(std::string(e.what()).find("10403"), std::string::npos);
  }
  const Int semiprime = Int(1'000'000'007) * 1'000'000'009;
  EXPECT_THROW(factorize(semiprime), IncompleteFactorization);
  // Inside the trial range the same product factors completely.
  EXPECT_EQ(factorize(Int(1'009) * 1'013, 2000), (Factorization{1, {{1009, 1}, {1013, 1}}}));
}

TEST(CertifyPrime, PseudoprimesRejected) {
  EXPECT_EQ(certify_prime(561), false);         // Carmichael
  EXPECT_EQ(certify_prime(2047), false);        // strong pseudoprime to base 2
  EXPECT_EQ(certify_prime(3215031751), false);  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_EQ(certify_prime(1'000'000'007), true);
  EXPECT_EQ(certify_prime(2), true);
  EXPECT_EQ(certify_prime(1), false);
  EXPECT_EQ(certify_prime((Int(1) << 127) - 1), std::nullopt);
}

TEST(SignedDivisors, Examples) {
  EXPECT_EQ(signed_divisors(8), (std::vector<Int>{-8, -4, -2, -1, 1, 2, 4, 8}));
  EXPECT_EQ(signed_divisors(1), (std::vector<Int>{-1, 1}));
  EXPECT_EQ(signed_divisors(-6), (std::vector<Int>{-6, -3, -2, -1, 1, 2, 3, 6}));
  EXPECT_THROW(signed_divisors(0), std::domain_error);
}

TEST(SignedDivisors, MatchesDirectScan) {
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t n = uniform(1, 1'000'000) * (uniform(0, 1) ? 1 : -1);
    std::vector<Int> expected;
    const std::int64_t m = std::llabs(n);
    for (std::int64_t e = -m; e <= m; ++e)
      if (e != 0 && n % e == 0) expected.push_back(e);
    ASSERT_EQ(signed_divisors(n), expected) << n;
  }
}
