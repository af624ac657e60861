#pragma once

// Power sums S(nu) = sum_k z_k^nu.
//
// For a RootTuple every S(nu) is a value of one length-M transform of the
// angle multiplicity vector, so the FFT path yields the whole period at once.
// The direct path works for any tuple and serves as the reference.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <vector>

#include "json.hpp"
#include "turan/errors.hpp"
#include "turan/fft.hpp"
#include "turan/format.hpp"
#include "turan/types.hpp"
#include "turan/unit.hpp"

namespace turan {

inline constexpr std::uint64_t kDefaultFftMaxLength = std::uint64_t{1} << 24;

struct EvalConfig {
  std::uint64_t max_fft_length = kDefaultFftMaxLength;
};

namespace detail {

inline constexpr std::size_t kDirectBlock = 1024;

inline PowerSumProfile make_profile(std::vector<cplx> sums, std::uint64_t nu_lo) {
  PowerSumProfile out;
  out.nu_lo = nu_lo;
  out.nu_hi = nu_lo + sums.size() - 1;
  out.abs.resize(sums.size());
  out.argmax_nu = nu_lo;
  out.max_abs = -1.0;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    out.abs[i] = std::abs(sums[i]);
    if (out.abs[i] > out.max_abs) {
      out.max_abs = out.abs[i];
      out.argmax_nu = nu_lo + i;
    }
  }
  out.sums = std::move(sums);
  return out;
}

inline cplx ipow(cplx z, std::uint64_t e) {
  cplx acc{1.0, 0.0};
  while (e) {
    if (e & 1) acc *= z;
    z *= z;
    e >>= 1;
  }
  return acc;
}

// Blocked iterated multiplication: each block of kDirectBlock consecutive
// exponents starts from anchor(k, nu) and then multiplies by step[k].
inline std::vector<cplx> direct_sums(const std::vector<cplx>& step,
                                     const std::function<cplx(std::size_t, std::uint64_t)>& anchor,
                                     std::uint64_t nu_lo, std::uint64_t nu_hi) {
  if (step.empty()) throw domain_error("power sums of an empty tuple");
  if (nu_lo < 1 || nu_hi < nu_lo) throw domain_error("power sums need 1 <= nu_lo <= nu_hi");
  const std::size_t count = nu_hi - nu_lo + 1;
  std::vector<cplx> out(count, cplx{0.0, 0.0});
  for (std::size_t b0 = 0; b0 < count; b0 += kDirectBlock) {
    const std::size_t len = std::min(kDirectBlock, count - b0);
    cplx* acc = out.data() + b0;
    for (std::size_t k = 0; k < step.size(); ++k) {
      cplx cur = anchor(k, nu_lo + b0);
      const cplx s = step[k];
      for (std::size_t i = 0; i < len; ++i) {
        acc[i] += cur;
        cur = fft::detail::cmul(cur, s);
      }
    }
  }
  return out;
}

}  // namespace detail

/// S(nu) for nu_lo..nu_hi by iterated multiplication. RootTuple powers are
/// re-anchored from the exact angle every 1024 exponents.
inline PowerSumProfile power_sums_direct(const RootTuple& t, std::uint64_t nu_lo, std::uint64_t nu_hi) {
  validate(t);
  std::vector<cplx> step;
  step.reserve(t.size());
  for (auto c : t.angles) step.push_back(unit_root(c, t.order));
  const auto M = t.order;
  auto anchor = [&](std::size_t k, std::uint64_t nu) { return unit_root(mul_mod(t.angles[k], nu % M, M), M); };
  return detail::make_profile(detail::direct_sums(step, anchor, nu_lo, nu_hi), nu_lo);
}

inline PowerSumProfile power_sums_direct(const FloatTuple& t, std::uint64_t nu_lo, std::uint64_t nu_hi) {
  auto anchor = [&](std::size_t k, std::uint64_t nu) { return detail::ipow(t.values[k], nu); };
  return detail::make_profile(detail::direct_sums(t.values, anchor, nu_lo, nu_hi), nu_lo);
}

/// S(0), ..., S(M-1) from one length-M transform of the angle multiplicities.
inline std::vector<cplx> full_period_sums(const RootTuple& t, const EvalConfig& cfg = {}) {
  validate(t);
  if (t.order > cfg.max_fft_length)
    throw resource_error("FFT length " + std::to_string(t.order) + " exceeds cap " +
                         std::to_string(cfg.max_fft_length));
  std::vector<cplx> v(t.order, cplx{0.0, 0.0});
  for (auto c : t.angles) v[c] += 1.0;
  const fft::Plan plan(t.order, +1);
  std::vector<cplx> scratch(plan.scratch_size());
  plan.execute_inplace(v, scratch);
  return v;
}

/// S(nu) for nu_lo..nu_hi, extended from one period by periodicity.
inline PowerSumProfile power_sums_fft(const RootTuple& t, std::uint64_t nu_hi, const EvalConfig& cfg = {},
                                      std::uint64_t nu_lo = 1) {
  if (t.angles.empty()) throw domain_error("power sums of an empty tuple");
  if (nu_lo < 1 || nu_hi < nu_lo) throw domain_error("power sums need 1 <= nu_lo <= nu_hi");
  const auto period = full_period_sums(t, cfg);
  std::vector<cplx> sums(nu_hi - nu_lo + 1);
  std::uint64_t r = nu_lo % t.order;
  for (auto& s : sums) {
    s = period[r];
    if (++r == t.order) r = 0;
  }
  return detail::make_profile(std::move(sums), nu_lo);
}

/// Picks the cheaper path: the FFT when a full period costs less than direct
/// summation over the range (and fits the cap), otherwise direct.
inline PowerSumProfile power_sums(const RootTuple& t, std::uint64_t nu_lo, std::uint64_t nu_hi,
                                  const EvalConfig& cfg = {}) {
  const double M = static_cast<double>(t.order);
  const double direct_cost = static_cast<double>(t.size()) * static_cast<double>(nu_hi - nu_lo + 1);
  const double fft_cost = 8.0 * M * std::log2(M + 1.0);
  if (t.order <= cfg.max_fft_length && fft_cost < direct_cost) return power_sums_fft(t, nu_hi, cfg, nu_lo);
  return power_sums_direct(t, nu_lo, nu_hi);
}

inline PowerSumProfile power_sums(const FloatTuple& t, std::uint64_t nu_lo, std::uint64_t nu_hi,
                                  const EvalConfig& = {}) {
  return power_sums_direct(t, nu_lo, nu_hi);
}

/// S(nu_1, ..., nu_m): sum over injective k_1..k_m of prod z_{k_j}^{nu_j}.
inline cplx distinct_power_sum(const FloatTuple& t, const std::vector<std::uint64_t>& nus) {
  const std::size_t m = nus.size();
  if (m == 0) throw domain_error("distinct_power_sum: need at least one exponent");
  if (m > 6) throw resource_error("distinct_power_sum: at most 6 exponents");
  const std::size_t n = t.size();
  if (m > n) return {0.0, 0.0};
  // pw[j][k] = z_k^{nu_j}
  std::vector<std::vector<cplx>> pw(m, std::vector<cplx>(n));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < n; ++k) pw[j][k] = detail::ipow(t.values[k], nus[j]);

  std::vector<bool> used(n, false);
  std::function<cplx(std::size_t)> rec = [&](std::size_t j) -> cplx {
    if (j == m) return {1.0, 0.0};
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      if (used[k]) continue;
      used[k] = true;
      acc += pw[j][k] * rec(j + 1);
      used[k] = false;
    }
    return acc;
  };
  return rec(0);
}

inline cplx distinct_power_sum(const RootTuple& t, const std::vector<std::uint64_t>& nus) {
  return distinct_power_sum(to_float(t), nus);
}

/// All set partitions of {0..m-1}, blocks in order of least element.
inline std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t m) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::vector<std::size_t>> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(i);
      rec(i + 1);
      cur[b].pop_back();
    }
    cur.push_back({i});
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

struct ExpansionCheck {
  bool ok = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

/// Checks prod_j S(nu_j) = sum over set partitions U of S(sum_{U_1} nu, ...).
inline ExpansionCheck partition_expansion_check(const FloatTuple& t, const std::vector<std::uint64_t>& nus) {
  const std::size_t m = nus.size();
  const std::size_t n = t.size();
  if (m == 0) throw domain_error("partition_expansion_check: need at least one exponent");
  if (m > 4 || n > 8) throw resource_error("partition_expansion_check: limited to m <= 4, n <= 8");

  cplx lhs{1.0, 0.0};
  for (auto nu : nus) {
    cplx s{0.0, 0.0};
    for (auto z : t.values) s += detail::ipow(z, nu);
    lhs *= s;
  }
  cplx rhs{0.0, 0.0};
  for (const auto& partition : set_partitions(m)) {
    std::vector<std::uint64_t> merged;
    for (const auto& block : partition) {
      std::uint64_t sum = 0;
      for (auto j : block) sum += nus[j];
      merged.push_back(sum);
    }
    rhs += distinct_power_sum(t, merged);
  }
  ExpansionCheck out;
  out.residual = std::abs(lhs - rhs);
  out.tolerance = 1e-9 * std::pow(static_cast<double>(n), static_cast<double>(m));
  out.ok = out.residual <= out.tolerance;
  return out;
}

inline ExpansionCheck partition_expansion_check(const RootTuple& t, const std::vector<std::uint64_t>& nus) {
  return partition_expansion_check(to_float(t), nus);
}

/// sum_{nu=1}^{nu_hi} |S_subset(nu)|^{2N}.
inline double subset_moment(const RootTuple& t, const std::vector<std::size_t>& subset, unsigned N,
                            std::uint64_t nu_hi, const EvalConfig& cfg = {}) {
  if (N < 1) throw domain_error("subset_moment: N must be >= 1");
  if (subset.empty()) throw domain_error("subset_moment: empty subset");
  const auto prof = power_sums_fft(sub_tuple(t, subset), nu_hi, cfg);
  double acc = 0.0;
  for (auto a : prof.abs) acc += std::pow(a * a, static_cast<double>(N));
  return acc;
}

/// CSV with header "nu,abs" or "nu,abs,re,im", 12 significant digits.
inline void write_profile_csv(std::ostream& os, const PowerSumProfile& prof, bool with_complex = false) {
  os << (with_complex ? "nu,abs,re,im\n" : "nu,abs\n");
  for (std::size_t i = 0; i < prof.abs.size(); ++i) {
    os << prof.nu_lo + i << ',' << format_number(prof.abs[i]);
    if (with_complex) os << ',' << format_number(prof.sums[i].real()) << ',' << format_number(prof.sums[i].imag());
    os << '\n';
  }
}

inline nlohmann::json profile_summary(const PowerSumProfile& prof, std::size_t n, std::uint64_t M) {
  return {{"n", n},
          {"M", M},
          {"nu_lo", prof.nu_lo},
          {"nu_hi", prof.nu_hi},
          {"max_abs", prof.max_abs},
          {"argmax_nu", prof.argmax_nu}};
}

}  // namespace turan
