// Build a few extremal tuples, evaluate their power sums and certify them.

#include <cstdio>

#include "turan.hpp"

int main() {
  using namespace turan;

  const auto t = montgomery(11);
  const auto prof = power_sums_fft(t, 10 * 10 + 10 - 1);
  std::printf("montgomery(11): n=%zu M=%llu max|S| over nu<=109 = %s (sqrt 11 = %s)\n", t.size(),
              static_cast<unsigned long long>(t.order), format_number(prof.max_abs, 7).c_str(),
              format_number(std::sqrt(11.0), 7).c_str());

  const auto s = singer_tuple(4);
  const auto sp = power_sums(s, 1, 20);
  std::printf("singer(4): n=%zu M=%llu max|S| over nu<=20 = %s\n", s.size(), static_cast<unsigned long long>(s.order),
              format_number(sp.max_abs, 7).c_str());

  const auto cert = full_certificate(t);
  for (const auto& c : cert.checks)
    std::printf("  %-14s nu<=%-6llu bound %-10s achieved %-10s %s\n", c.name.c_str(),
                static_cast<unsigned long long>(c.nu_hi), format_number(c.bound, 7).c_str(),
                format_number(c.achieved, 7).c_str(), c.pass ? "pass" : "FAIL");
  return cert.passed() ? 0 : 1;
}
