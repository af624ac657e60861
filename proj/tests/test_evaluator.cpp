#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "turan.hpp"

using namespace turan;

namespace {

RootTuple random_root_tuple(std::mt19937_64& gen, std::size_t n, std::uint64_t M) {
  std::uniform_int_distribution<std::uint64_t> u(0, M - 1);
  RootTuple t;
  t.order = M;
  for (std::size_t k = 0; k < n; ++k) t.angles.push_back(u(gen));
  return t;
}

FloatTuple random_float_tuple(std::mt19937_64& gen, std::size_t n, double rmax = 1.0) {
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> rad(1.0, rmax);
  FloatTuple t;
  for (std::size_t k = 0; k < n; ++k) t.values.push_back(std::polar(rmax > 1.0 ? rad(gen) : 1.0, ang(gen)));
  return t;
}

}  // namespace

TEST(Direct, AllOnes) {
  const FloatTuple t{{1.0, 1.0, 1.0}, {}};
  const auto prof = power_sums_direct(t, 1, 5);
  for (auto a : prof.abs) EXPECT_DOUBLE_EQ(a, 3.0);
  EXPECT_EQ(prof.argmax_nu, 1u);
  EXPECT_DOUBLE_EQ(prof.max_abs, 3.0);
}

TEST(Direct, PlusMinusOne) {
  const FloatTuple t{{1.0, -1.0}, {}};
  const auto prof = power_sums_direct(t, 1, 3);
  EXPECT_NEAR(prof.abs[0], 0.0, 1e-15);
  EXPECT_NEAR(prof.abs[1], 2.0, 1e-15);
  EXPECT_NEAR(prof.abs[2], 0.0, 1e-15);
  EXPECT_EQ(prof.argmax_nu, 2u);
}

TEST(Direct, MontgomeryFive) {
  const auto prof = power_sums_direct(montgomery(5), 1, 19);
  EXPECT_LE(prof.max_abs, std::sqrt(5.0) + 1e-9);
}

TEST(Direct, Errors) {
  EXPECT_THROW(power_sums_direct(FloatTuple{}, 1, 3), domain_error);
  EXPECT_THROW(power_sums_direct(montgomery(5), 0, 3), domain_error);
  EXPECT_THROW(power_sums_direct(montgomery(5), 4, 3), domain_error);
}

TEST(Direct, MatchesOracleOnLongRanges) {
  std::mt19937_64 gen(11);
  const auto t = random_root_tuple(gen, 9, 7919);
  const auto prof = power_sums_direct(t, 5000, 12000);
  for (std::uint64_t nu = 5000; nu <= 12000; nu += 37)
    ASSERT_LT(std::abs(prof.sum_at(nu) - oracle::root_power_sum(t.angles, t.order, nu)), 1e-10);
}

TEST(Fft, AllZeroAngles) {
  const RootTuple t{10, {0, 0, 0, 0}, {}};
  const auto prof = power_sums_fft(t, 25);
  for (auto a : prof.abs) EXPECT_NEAR(a, 4.0, 1e-12);
}

TEST(Fft, SingerTwo) {
  const auto prof = power_sums_fft(singer_tuple(2), 7);
  for (std::uint64_t nu = 1; nu <= 6; ++nu) EXPECT_NEAR(prof.at(nu), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(prof.at(7), 3.0, 1e-12);
  EXPECT_EQ(prof.argmax_nu, 7u);
}

TEST(Fft, Montgomery101SpotCheck) {
  const auto t = montgomery(101);
  const std::uint64_t hi = 100 * 100 + 100 - 1;
  const auto prof = power_sums_fft(t, hi);
  std::mt19937_64 gen(2);
  std::uniform_int_distribution<std::uint64_t> u(1, hi);
  for (int i = 0; i < 1000; ++i) {
    const auto nu = u(gen);
    ASSERT_LT(std::abs(prof.sum_at(nu) - oracle::root_power_sum(t.angles, t.order, nu)), 1e-8 * 100) << nu;
  }
  EXPECT_LE(prof.max_abs, std::sqrt(101.0) + 1e-6);
}

TEST(Fft, AgreesWithDirectOnRandomTuples) {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<std::size_t> un(1, 64);
  std::uniform_int_distribution<std::uint64_t> um(1, 10000);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = random_root_tuple(gen, un(gen), um(gen));
    const auto f = power_sums_fft(t, t.order);
    const auto d = power_sums_direct(t, 1, t.order);
    for (std::size_t i = 0; i < f.abs.size(); ++i)
      ASSERT_LE(std::abs(f.abs[i] - d.abs[i]), 1e-8 * static_cast<double>(t.size())) << trial;
  }
}

TEST(Fft, PeriodicAndConjugateSymmetric) {
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = random_root_tuple(gen, 20, 997 + trial);
    const auto M = t.order;
    const auto prof = power_sums_fft(t, 3 * M);
    for (std::uint64_t nu = 1; nu <= M; ++nu) {
      ASSERT_EQ(prof.at(nu + M), prof.at(nu));
      ASSERT_EQ(prof.at(nu + 2 * M), prof.at(nu));
      if (nu < M) { ASSERT_NEAR(prof.at(M - nu), prof.at(nu), 1e-10); }
    }
    EXPECT_NEAR(prof.at(M), 20.0, 1e-9);
  }
}

TEST(Fft, CapIsEnforced) {
  EvalConfig cfg;
  cfg.max_fft_length = 100;
  EXPECT_THROW(power_sums_fft(montgomery(11), 10, cfg), resource_error);
  EXPECT_NO_THROW(power_sums(montgomery(11), 1, 10, cfg));  // falls back to direct
}

TEST(Fft, NuLoOffset) {
  const auto t = montgomery(13);
  const auto a = power_sums_fft(t, 400, {}, 150);
  const auto b = power_sums_fft(t, 400);
  EXPECT_EQ(a.nu_lo, 150u);
  for (std::uint64_t nu = 150; nu <= 400; ++nu) EXPECT_EQ(a.at(nu), b.at(nu));
}

TEST(Profile, ArgmaxIsLeastIndex) {
  const RootTuple t{4, {0, 2}, {}};  // S = 2, 0, 2, 0, ...
  const auto prof = power_sums(t, 1, 12);
  EXPECT_EQ(prof.argmax_nu, 2u);
}

TEST(Profile, SubsetAdditivity) {
  std::mt19937_64 gen(4);
  const auto t = montgomery(31);
  const std::vector<std::size_t> sub{0, 3, 4, 10, 17, 29};
  const auto comp = complement_indices(t.size(), sub);
  const auto full = power_sums_fft(t, 900);
  const auto a = power_sums_fft(sub_tuple(t, sub), 900);
  const auto b = power_sums_fft(sub_tuple(t, comp), 900);
  for (std::uint64_t nu = 1; nu <= 900; ++nu)
    ASSERT_LT(std::abs(full.sum_at(nu) - a.sum_at(nu) - b.sum_at(nu)), 1e-10 * 30);
}

TEST(DistinctSums, MEqualsOneIsPowerSum) {
  std::mt19937_64 gen(1);
  const auto t = random_float_tuple(gen, 5);
  EXPECT_LT(std::abs(distinct_power_sum(t, {3}) - oracle::float_power_sum(t.values, 3)), 1e-12);
}

TEST(DistinctSums, NTwoHandFormula) {
  std::mt19937_64 gen(2);
  const auto t = random_float_tuple(gen, 2);
  const auto z1 = t.values[0];
  const auto z2 = t.values[1];
  const cplx want = std::pow(z1, 2) * std::pow(z2, 5) + std::pow(z2, 2) * std::pow(z1, 5);
  EXPECT_LT(std::abs(distinct_power_sum(t, {2, 5}) - want), 1e-12);
}

TEST(DistinctSums, NThreeViaPowerSums) {
  std::mt19937_64 gen(3);
  const auto t = random_float_tuple(gen, 3);
  const auto S = [&](std::uint64_t nu) { return oracle::float_power_sum(t.values, nu); };
  EXPECT_LT(std::abs(distinct_power_sum(t, {1, 2}) - (S(1) * S(2) - S(3))), 1e-12);
}

TEST(DistinctSums, MatchesPermutationOracleAndLimits) {
  std::mt19937_64 gen(4);
  const auto t = random_float_tuple(gen, 6, 1.5);
  for (const auto& nus : std::vector<std::vector<std::uint64_t>>{{1, 1}, {2, 3, 1}, {1, 4, 2, 2}, {1, 1, 1, 1, 1}})
    EXPECT_LT(std::abs(distinct_power_sum(t, nus) - oracle::distinct_sum(t.values, nus)), 1e-9);
  EXPECT_EQ(distinct_power_sum(random_float_tuple(gen, 2), {1, 2, 3}), cplx(0.0, 0.0));
  EXPECT_THROW(distinct_power_sum(t, {1, 1, 1, 1, 1, 1, 1}), resource_error);
  EXPECT_THROW(distinct_power_sum(t, {}), domain_error);
}

TEST(Partitions, BellNumbers) {
  for (std::size_t m = 1; m <= 6; ++m) EXPECT_EQ(set_partitions(m).size(), oracle::bell(m)) << m;
}

TEST(PartitionExpansion, Examples) {
  std::mt19937_64 gen(5);
  const auto t1 = random_float_tuple(gen, 4);
  EXPECT_TRUE(partition_expansion_check(t1, {3}).ok);
  const auto t2 = random_float_tuple(gen, 6);
  const auto r2 = partition_expansion_check(t2, {2, 5});
  EXPECT_TRUE(r2.ok);
  EXPECT_LE(r2.residual, 1e-10);
  const auto t3 = random_float_tuple(gen, 5);
  const auto r3 = partition_expansion_check(t3, {1, 2, 4});
  EXPECT_LE(r3.residual, 1e-9);
  EXPECT_THROW(partition_expansion_check(random_float_tuple(gen, 9), {1, 2}), resource_error);
  EXPECT_THROW(partition_expansion_check(t3, {1, 1, 1, 1, 1}), resource_error);
}

TEST(PartitionExpansion, RandomTuples) {
  std::mt19937_64 gen(6);
  std::uniform_int_distribution<std::size_t> un(1, 6);
  std::uniform_int_distribution<std::size_t> um(1, 3);
  std::uniform_int_distribution<std::uint64_t> unu(0, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = random_float_tuple(gen, un(gen), trial % 2 ? 2.0 : 1.0);
    std::vector<std::uint64_t> nus(um(gen));
    for (auto& v : nus) v = unu(gen);
    const auto r = partition_expansion_check(t, nus);
    ASSERT_TRUE(r.ok) << r.residual;
  }
}

TEST(SubsetMoment, Examples) {
  const auto t = montgomery(5);
  EXPECT_NEAR(subset_moment(t, {2}, 3, 40), 40.0, 1e-9);
  double sq = 0.0;
  for (std::uint64_t nu = 1; nu <= 19; ++nu) sq += std::norm(oracle::root_power_sum(t.angles, t.order, nu));
  EXPECT_NEAR(subset_moment(t, {0, 1, 2, 3}, 1, 19), sq, 1e-9);
  EXPECT_LE(sq, 19.0 * 5.0 + 1e-9);
  const RootTuple anti{2, {0, 1}, {}};
  EXPECT_NEAR(subset_moment(anti, {0, 1}, 2, 4), 32.0, 1e-9);
  EXPECT_THROW(subset_moment(anti, {}, 2, 4), domain_error);
}

TEST(Output, ProfileCsvAndSummary) {
  const auto prof = power_sums(singer_tuple(2), 1, 3);
  std::ostringstream os;
  write_profile_csv(os, prof);
  EXPECT_EQ(os.str(), "nu,abs\n1,1.41421356237\n2,1.41421356237\n3,1.41421356237\n");
  std::ostringstream os2;
  write_profile_csv(os2, prof, true);
  EXPECT_EQ(os2.str().substr(0, 13), "nu,abs,re,im\n");
  const auto j = profile_summary(prof, 3, 7);
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(j.at("M"), 7);
  EXPECT_EQ(j.at("argmax_nu"), prof.argmax_nu);
}
