#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "turan.hpp"

using namespace turan;

namespace {

FloatTuple random_tuple(std::mt19937_64& gen, std::size_t n, bool unimodular) {
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> rad(1.0, 2.0);
  FloatTuple t;
  for (std::size_t k = 0; k < n; ++k) t.values.push_back(std::polar(unimodular ? 1.0 : rad(gen), ang(gen)));
  return t;
}

}  // namespace

TEST(Cassels, Examples) {
  const auto c1 = cassels_check(FloatTuple{{1.0}, {}});
  EXPECT_TRUE(c1.pass);
  EXPECT_DOUBLE_EQ(c1.achieved, 1.0);
  EXPECT_EQ(c1.nu_hi, 3u);
  const auto c2 = cassels_check(FloatTuple{{-1.0}, {}});
  EXPECT_TRUE(c2.pass);
  EXPECT_DOUBLE_EQ(c2.achieved, 1.0);
}

TEST(Cassels, RandomUnimodular) {
  std::mt19937_64 gen(1);
  for (int i = 0; i < 1000; ++i) ASSERT_TRUE(cassels_check(random_tuple(gen, 1 + i % 20, true)).pass);
}

TEST(Andersson, RangesAndBounds) {
  const auto t = montgomery(7);
  const auto c = andersson_lower_check(t, 6);
  EXPECT_EQ(c.nu_hi, 31u);  // n^2 - n + 1
  EXPECT_DOUBLE_EQ(c.bound, std::sqrt(6.0));
  EXPECT_TRUE(c.pass);
  EXPECT_GE(oracle::max_abs_root(t.angles, t.order, 31), std::sqrt(6.0) - 1e-6);
  const auto c1 = andersson_lower_check(t, 1);
  EXPECT_EQ(c1.nu_hi, 11u);  // 2n - 1
  EXPECT_DOUBLE_EQ(c1.bound, 1.0);
  EXPECT_THROW(andersson_lower_check(t, 0), domain_error);
  EXPECT_THROW(andersson_lower_check(t, 7), domain_error);
}

TEST(Andersson, RejectsSmallModulus) {
  const FloatTuple t{{0.5, 1.0}, {}};
  EXPECT_THROW(andersson_lower_check(t, 1), precondition_error);
  EXPECT_THROW(full_certificate(t), precondition_error);
  const FloatTuple edge{{cplx(1.0 - 1e-13, 0.0), 1.0}, {}};
  EXPECT_NO_THROW(andersson_lower_check(edge, 1));
}

TEST(Ncs, Formula) {
  EXPECT_NEAR(ncs_lower_bound(4, 16), std::sqrt(3.25), 1e-15);
  EXPECT_NEAR(ncs_lower_bound(4, 16), 1.8027756, 1e-7);
  for (std::uint64_t n = 1; n < 30; ++n) EXPECT_NEAR(ncs_lower_bound(n, n), 1.0, 1e-12);
  EXPECT_NEAR(ncs_lower_bound(4, 1'000'000), 2.0, 1e-5);
  EXPECT_THROW(ncs_lower_bound(5, 4), domain_error);
}

TEST(Ncs, CheckPreconditions) {
  const FloatTuple big{{2.0, 1.0}, {}};
  EXPECT_THROW(ncs_check(big, 4), precondition_error);
  EXPECT_THROW(ncs_check(montgomery(5), 3), domain_error);
  EXPECT_TRUE(ncs_check(montgomery(5), 16).pass);
}

TEST(ErdosRenyiBound, Formula) {
  EXPECT_NEAR(erdos_renyi_bound(4, 16), 8.246, 1e-3);
  EXPECT_NEAR(erdos_renyi_bound(1, 1), 2.0393, 1e-4);
  EXPECT_NEAR(erdos_renyi_bound(100, 10000), std::sqrt(600.0 * std::log(10001.0)), 1e-12);
}

TEST(LowerBoundFuzz, AllChecksPass) {
  std::mt19937_64 gen(2024);
  for (int i = 0; i < 1000; ++i) {
    const bool uni = i % 2 == 0;
    const auto t = random_tuple(gen, 1 + i % 16, uni);
    const auto n = t.size();
    ASSERT_TRUE(cassels_check(t).pass);
    for (std::uint64_t m = 1; m <= n; ++m) ASSERT_TRUE(andersson_lower_check(t, m).pass) << i << ' ' << m;
    if (uni) { ASSERT_TRUE(ncs_check(t, n * n).pass); }
  }
}

TEST(Envelopes, Examples) {
  const auto a05 = envelope_A(0.5);
  EXPECT_NEAR(a05.lower, 1.0 - std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(a05.lower, 0.29289, 1e-5);
  EXPECT_EQ(a05.upper, 1.0);
  EXPECT_EQ(envelope_A(1.0).lower, 1.0);
  EXPECT_EQ(envelope_A(1.0).upper, 1.0);
  EXPECT_EQ(envelope_A(2.5).lower, 1.0);
  EXPECT_DOUBLE_EQ(envelope_A(2.5).upper, std::sqrt(3.0));
  EXPECT_EQ(envelope_A(7.0).upper, 2.0);
  EXPECT_NEAR(envelope_B(2.0).lower, std::sqrt(1.25), 1e-15);
  EXPECT_NEAR(envelope_B(2.0).lower, 1.11803, 1e-5);
  EXPECT_NEAR(envelope_B(3.0).lower, std::sqrt(4.0 / 3.0), 1e-12);
  EXPECT_NEAR(std::sqrt(2.0 - 2.0 / 3.0), std::sqrt(4.0 / 3.0), 1e-12);
  EXPECT_EQ(envelope_B(0.5).lower, 1.0);
  EXPECT_EQ(envelope_B(0.5).upper, 1.0);
  EXPECT_THROW(envelope_A(0.0), domain_error);
  EXPECT_THROW(envelope_B(-1.0), domain_error);
}

TEST(Envelopes, OrderingAndMonotonicity) {
  double prev_a = 0.0;
  double prev_b = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double alpha = 0.006 * i;
    const auto A = envelope_A(alpha);
    const auto B = envelope_B(alpha);
    EXPECT_LE(A.lower, A.upper);
    EXPECT_LE(B.lower, B.upper);
    EXPECT_GE(A.lower, prev_a);
    EXPECT_GE(B.lower, prev_b);
    if (alpha >= 1.0) { EXPECT_GE(B.lower, A.lower); }
    prev_a = A.lower;
    prev_b = B.lower;
  }
  EXPECT_NEAR(envelope_B(1.0).lower, envelope_B(1.0 + 1e-13).lower, 1e-12);
  EXPECT_NEAR(envelope_B(3.0).lower, envelope_B(3.0 + 1e-13).lower, 1e-12);
}

TEST(FullCertificate, MontgomeryFive) {
  const auto cert = full_certificate(montgomery(5));
  EXPECT_TRUE(cert.passed());
  std::vector<std::string> names;
  for (const auto& c : cert.checks) names.push_back(c.name);
  EXPECT_EQ(names, (std::vector<std::string>{"cassels", "andersson_m1", "andersson_m2", "andersson_m4", "ncs_m16",
                                             "upper"}));
  const auto& up = cert.checks.back();
  EXPECT_EQ(up.nu_hi, 19u);
  EXPECT_DOUBLE_EQ(up.bound, std::sqrt(5.0));
  EXPECT_EQ(cert.tuple_digest, tuple_digest(montgomery(5)));
  EXPECT_EQ(cert.tolerance, 1e-6);
}

TEST(FullCertificate, AllOnes) {
  const FloatTuple t{std::vector<cplx>(5, 1.0), {}};
  const auto cert = full_certificate(t);
  EXPECT_TRUE(cert.passed());
  for (const auto& c : cert.checks)
    if (c.name != "cassels") { EXPECT_DOUBLE_EQ(c.achieved, 5.0); }
}

TEST(FullCertificate, FailingUpperClaimIsAResult) {
  auto t = montgomery(7);
  t.provenance.claim = UpperClaim{1.0, 10, "deliberately false"};
  const auto cert = full_certificate(t);
  EXPECT_FALSE(cert.passed());
  EXPECT_FALSE(cert.checks.back().pass);
  EXPECT_EQ(cert.checks.back().note, "deliberately false");
}

TEST(FullCertificate, NonUnimodularSkipsNcs) {
  const FloatTuple t{{2.0, cplx(0.0, 1.5), -1.0}, {}};
  const auto cert = full_certificate(t);
  for (const auto& c : cert.checks) EXPECT_EQ(c.name.rfind("ncs", 0), std::string::npos);
  EXPECT_TRUE(cert.passed());
}

TEST(FullCertificate, Json) {
  const nlohmann::json j = full_certificate(montgomery(5));
  EXPECT_EQ(j.at("pass"), true);
  EXPECT_EQ(j.at("checks").size(), 6u);
  EXPECT_EQ(j.at("checks")[0].at("nu_range"), nlohmann::json::array({1, 9}));
  EXPECT_EQ(j.at("checks").back().at("note"), "montgomery: |S| <= sqrt(p)");
}
