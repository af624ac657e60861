#pragma once

// Bound checks on a tuple's power sums. Every check names the nu range it
// inspected; a failed check is a result, not an exception.
//
//   cassels    max_{nu <= 2n+1} Re S(nu) >= 0
//   andersson  max_{nu <= 2nm - m(m+1) + 1} |S(nu)| >= sqrt(m), 1 <= m <= n, |z_k| >= 1
//   ncs        max_{nu <= m} |S(nu)| >= sqrt(n (1 - (n-1)/m)), unimodular z_k
//   upper      max_{nu <= nu_hi} |S(nu)| <= bound, from a construction's claim

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "turan/bounds.hpp"
#include "turan/errors.hpp"
#include "turan/evaluator.hpp"
#include "turan/types.hpp"

namespace turan {

inline constexpr double kBoundTolerance = 1e-6;
inline constexpr double kModulusSlack = 1e-12;

struct Check {
  std::string name;
  std::uint64_t nu_lo = 1;
  std::uint64_t nu_hi = 0;
  double bound = 0.0;
  double achieved = 0.0;
  bool pass = false;
  std::string note;
};

struct Certificate {
  std::string tuple_digest;
  std::vector<Check> checks;
  double tolerance = kBoundTolerance;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

inline std::vector<cplx> tuple_values(const RootTuple& t) { return to_float(t).values; }
inline const std::vector<cplx>& tuple_values(const FloatTuple& t) { return t.values; }

template <class Tuple>
bool has_modulus_at_least_one(const Tuple& t) {
  for (auto z : tuple_values(t))
    if (std::abs(z) < 1.0 - kModulusSlack) return false;
  return true;
}

inline bool is_unimodular(const RootTuple&) { return true; }
inline bool is_unimodular(const FloatTuple& t) {
  return std::all_of(t.values.begin(), t.values.end(),
                     [](cplx z) { return std::abs(std::abs(z) - 1.0) <= kModulusSlack; });
}

namespace detail {

template <class Tuple>
void require_modulus_at_least_one(const Tuple& t, const char* who) {
  if (!has_modulus_at_least_one(t))
    throw precondition_error(std::string(who) + ": requires |z_k| >= 1 for every k");
}

inline double max_abs_prefix(const PowerSumProfile& prof, std::uint64_t nu_hi) {
  double mx = 0.0;
  for (std::uint64_t nu = prof.nu_lo; nu <= nu_hi; ++nu) mx = std::max(mx, prof.at(nu));
  return mx;
}

inline double max_real_prefix(const PowerSumProfile& prof, std::uint64_t nu_hi) {
  double mx = -INFINITY;
  for (std::uint64_t nu = prof.nu_lo; nu <= nu_hi; ++nu) mx = std::max(mx, prof.sum_at(nu).real());
  return mx;
}

inline std::uint64_t andersson_range(std::uint64_t n, std::uint64_t m) { return 2 * n * m - m * (m + 1) + 1; }

// Checks read a profile starting at nu = 1 that covers their range.
inline Check cassels_from(const PowerSumProfile& prof, std::size_t n) {
  Check c{"cassels", 1, 2 * n + 1, 0.0, 0.0, false, ""};
  c.achieved = max_real_prefix(prof, c.nu_hi);
  c.pass = c.achieved >= -1e-9 * static_cast<double>(n);
  return c;
}

inline Check andersson_from(const PowerSumProfile& prof, std::size_t n, std::uint64_t m) {
  Check c{"andersson_m" + std::to_string(m), 1, andersson_range(n, m), std::sqrt(static_cast<double>(m)), 0.0,
          false, ""};
  c.achieved = max_abs_prefix(prof, c.nu_hi);
  c.pass = c.achieved >= c.bound - kBoundTolerance;
  return c;
}

inline Check ncs_from(const PowerSumProfile& prof, std::size_t n, std::uint64_t m) {
  Check c{"ncs_m" + std::to_string(m), 1, m, ncs_lower_bound(n, m), 0.0, false, ""};
  c.achieved = max_abs_prefix(prof, m);
  c.pass = c.achieved >= c.bound - kBoundTolerance;
  return c;
}

inline Check upper_from(const PowerSumProfile& prof, const UpperClaim& claim) {
  Check c{"upper", 1, claim.nu_hi, claim.bound, 0.0, false, claim.label};
  c.achieved = max_abs_prefix(prof, claim.nu_hi);
  c.pass = c.achieved <= c.bound + kBoundTolerance;
  return c;
}

}  // namespace detail

template <class Tuple>
Check cassels_check(const Tuple& t, const EvalConfig& cfg = {}) {
  if (t.size() < 1) throw domain_error("cassels_check: empty tuple");
  return detail::cassels_from(power_sums(t, 1, 2 * t.size() + 1, cfg), t.size());
}

template <class Tuple>
Check andersson_lower_check(const Tuple& t, std::uint64_t m, const EvalConfig& cfg = {}) {
  const std::size_t n = t.size();
  if (m < 1 || m > n) throw domain_error("andersson_lower_check: need 1 <= m <= n");
  detail::require_modulus_at_least_one(t, "andersson_lower_check");
  return detail::andersson_from(power_sums(t, 1, detail::andersson_range(n, m), cfg), n, m);
}

/// Companion check of ncs_lower_bound over nu = 1..m, unimodular tuples only.
template <class Tuple>
Check ncs_check(const Tuple& t, std::uint64_t m, const EvalConfig& cfg = {}) {
  const std::size_t n = t.size();
  if (m < n) throw domain_error("ncs_check: requires m >= n");
  if (!is_unimodular(t)) throw precondition_error("ncs_check: requires a unimodular tuple");
  return detail::ncs_from(power_sums(t, 1, m, cfg), n, m);
}

template <class Tuple>
Check upper_check(const Tuple& t, const UpperClaim& claim, const EvalConfig& cfg = {}) {
  if (claim.nu_hi < 1) throw domain_error("upper_check: empty range");
  return detail::upper_from(power_sums(t, 1, claim.nu_hi, cfg), claim);
}

/// Cassels; Andersson at m = 1, n/2, n; NCS at m = n^2 when unimodular; the
/// provenance claim if any. All checks read a single profile.
template <class Tuple>
Certificate full_certificate(const Tuple& t, const EvalConfig& cfg = {}) {
  const std::size_t n = t.size();
  if (n < 1) throw domain_error("full_certificate: empty tuple");
  detail::require_modulus_at_least_one(t, "full_certificate");

  std::vector<std::uint64_t> ms{1, n / 2, n};
  ms.erase(std::remove(ms.begin(), ms.end(), 0), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  const bool unimodular = is_unimodular(t);
  const auto& claim = t.provenance.claim;

  std::uint64_t hi = 2 * n + 1;
  for (auto m : ms) hi = std::max(hi, detail::andersson_range(n, m));
  if (unimodular) hi = std::max<std::uint64_t>(hi, n * n);
  if (claim) hi = std::max(hi, claim->nu_hi);
  const auto prof = power_sums(t, 1, hi, cfg);

  Certificate cert;
  cert.tuple_digest = tuple_digest(t);
  cert.checks.push_back(detail::cassels_from(prof, n));
  for (auto m : ms) cert.checks.push_back(detail::andersson_from(prof, n, m));
  if (unimodular) cert.checks.push_back(detail::ncs_from(prof, n, n * n));
  if (claim && claim->nu_hi >= 1) cert.checks.push_back(detail::upper_from(prof, *claim));
  return cert;
}

inline void to_json(nlohmann::json& j, const Check& c) {
  j = nlohmann::json{{"name", c.name},         {"nu_range", {c.nu_lo, c.nu_hi}}, {"bound", c.bound},
                     {"achieved", c.achieved}, {"pass", c.pass}};
  if (!c.note.empty()) j["note"] = c.note;
}

inline void to_json(nlohmann::json& j, const Certificate& c) {
  j = nlohmann::json{{"tuple_digest", c.tuple_digest}, {"checks", c.checks}, {"tolerance", c.tolerance},
                     {"pass", c.passed()}};
}

}  // namespace turan
