// Theorem-1 style pipeline for a handful of n: jump to the next prime, drop a
// flat subset, report how far the result sits above sqrt(n).

#include <cstdio>

#include "turan.hpp"

int main() {
  using namespace turan;

  SearchConfig cfg;
  cfg.seed = 7;
  std::printf("%5s %5s %4s %12s %12s %12s\n", "n", "p", "m", "subset", "achieved", "delta_hat");
  for (std::uint64_t n : {20, 24, 32, 45, 62}) {
    const auto res = theorem1_tuple(n, cfg);
    const auto& r = res.record;
    std::printf("%5llu %5llu %4llu %12s %12s %12s\n", static_cast<unsigned long long>(r.n),
                static_cast<unsigned long long>(r.p), static_cast<unsigned long long>(r.gap),
                format_number(r.subset_score, 7).c_str(), format_number(r.achieved_max, 7).c_str(),
                format_number(r.delta_hat, 7).c_str());
  }
  return 0;
}
