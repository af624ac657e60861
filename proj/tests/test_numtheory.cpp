#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "turan.hpp"

using namespace turan;

TEST(Sieve, SmallLimits) {
  EXPECT_EQ(sieve_primes(10), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_EQ(sieve_primes(2), (std::vector<std::uint64_t>{2}));
  const auto p100 = sieve_primes(100);
  EXPECT_EQ(p100.size(), 25u);
  EXPECT_EQ(p100.back(), 97u);
  EXPECT_THROW(sieve_primes(1), domain_error);
}

TEST(Sieve, MatchesTrialDivision) { EXPECT_EQ(sieve_primes(5000), oracle::primes_upto(5000)); }

TEST(Primality, MatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime(n)) << n;
  EXPECT_TRUE(is_prime(1'000'000'007ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(NextPrime, Examples) {
  EXPECT_EQ(next_prime(10), 11u);
  EXPECT_EQ(next_prime(113), 127u);
  EXPECT_EQ(next_prime(4), 5u);
  EXPECT_EQ(next_prime(1), 2u);
  for (std::uint64_t n = 1; n < 3000; ++n) ASSERT_EQ(next_prime(n), oracle::next_prime(n)) << n;
}

TEST(PrevPrime, LargestAtMost) {
  EXPECT_EQ(prev_prime(2), 2u);
  EXPECT_EQ(prev_prime(10), 7u);
  EXPECT_EQ(prev_prime(11), 11u);
  EXPECT_THROW(prev_prime(1), domain_error);
}

TEST(ProgressionPrime, Examples) {
  EXPECT_EQ(next_prime_in_progression(4, 3), 13u);
  EXPECT_EQ(next_prime_in_progression(1, 1), 2u);
  EXPECT_EQ(next_prime_in_progression(5, 4), 29u);
  EXPECT_THROW(next_prime_in_progression(0, 3), domain_error);
}

TEST(ProgressionPrime, MinimalAgainstOracle) {
  for (std::uint64_t m = 1; m <= 12; ++m) {
    for (std::uint64_t n = 1; n <= 40; ++n) {
      std::uint64_t want = m * n + 1;
      while (!(oracle::is_prime(want) && want % m == 1 % m)) ++want;
      ASSERT_EQ(next_prime_in_progression(n, m), want) << n << ' ' << m;
    }
  }
}

TEST(PrimePower, DetectionMatchesOracle) {
  for (std::uint64_t q = 0; q < 5000; ++q) ASSERT_EQ(is_prime_power(q), oracle::is_prime_power(q)) << q;
  const auto pp = as_prime_power(243);
  ASSERT_TRUE(pp);
  EXPECT_EQ(pp->prime, 3u);
  EXPECT_EQ(pp->exponent, 5u);
  EXPECT_EQ(next_prime_power_at_least(6), 7u);
  EXPECT_EQ(next_prime_power_at_least(14), 16u);
}

TEST(PrimitiveRoot, Examples) {
  EXPECT_EQ(primitive_root(7), 3u);
  EXPECT_EQ(primitive_root(5), 2u);
  EXPECT_EQ(primitive_root(3), 2u);
  EXPECT_THROW(primitive_root(2), domain_error);
  EXPECT_THROW(primitive_root(9), domain_error);
}

TEST(PrimitiveRoot, LeastByExhaustivePowering) {
  for (auto p : oracle::primes_upto(600)) {
    if (p == 2) continue;
    ASSERT_EQ(primitive_root(p), oracle::least_primitive_root(p)) << p;
  }
}

TEST(CharacterTable, Examples) {
  const CharacterTable c5(5);
  EXPECT_EQ(c5.generator(), 2u);
  EXPECT_EQ(c5.index(1), 0u);
  EXPECT_EQ(c5.index(2), 1u);
  EXPECT_EQ(c5.index(4), 2u);
  EXPECT_EQ(c5.index(3), 3u);
  const CharacterTable c3(3);
  EXPECT_EQ(c3.index(1), 0u);
  EXPECT_EQ(c3.index(2), 1u);
  EXPECT_EQ(CharacterTable(7).index(6), 3u);
  EXPECT_THROW(c5.index(10), domain_error);
}

TEST(CharacterTable, IndexIsBijectiveAndMultiplicative) {
  for (auto p : oracle::primes_upto(97)) {
    if (p == 2) continue;
    const CharacterTable chi(p);
    const auto ind = oracle::discrete_logs(p);
    std::vector<bool> seen(p - 1, false);
    for (std::uint64_t k = 1; k < p; ++k) {
      ASSERT_EQ(chi.index(k), ind[k]);
      ASSERT_EQ(pow_mod(chi.generator(), chi.index(k), p), k);
      seen[chi.index(k)] = true;
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    for (std::uint64_t a = 1; a < p; ++a)
      for (std::uint64_t b = 1; b < p; ++b)
        ASSERT_EQ(chi.index(a * b % p), (chi.index(a) + chi.index(b)) % (p - 1));
  }
}

TEST(GaussSum, Examples) {
  EXPECT_NEAR(gauss_sum_magnitude(5, 1, 1), std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(gauss_sum_magnitude(5, 0, 1), 1.0, 1e-12);
  EXPECT_NEAR(gauss_sum_magnitude(5, 2, 10), 0.0, 1e-12);
  EXPECT_NEAR(gauss_sum_magnitude(5, 0, 10), 4.0, 1e-12);
}

TEST(GaussSum, MatchesOracleAndCaseTable) {
  for (auto p : {3ULL, 7ULL, 13ULL, 31ULL}) {
    const CharacterTable chi(p);
    for (std::uint64_t j = 0; j + 1 < p; ++j) {
      for (std::int64_t a = -2; a <= static_cast<std::int64_t>(2 * p); ++a) {
        const double got = gauss_sum_magnitude(chi, j, a);
        ASSERT_NEAR(got, oracle::gauss_sum(p, j, a), 1e-9);
        ASSERT_NEAR(got, gauss_sum_case_value(p, j, a), 1e-9 * std::sqrt(static_cast<double>(p)));
      }
    }
  }
}
