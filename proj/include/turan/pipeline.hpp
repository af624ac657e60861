#pragma once

// End-to-end constructions of n-tuples with small max_{nu <= n^2} |S(nu)|.
//
//   theorem1  montgomery(p) for the least prime p > n, minus a flat removal set
//             of size p - 1 - n found by the selector
//   theorem2  montgomery_modified(n', m) over the least prime P = m n' + 1 with
//             n' >= n, minus n' - n elements
//   trim      a ready-made tuple of size n + j with its last j entries dropped
//
// Each run yields a DeltaRecord: the achieved max and the excess over sqrt(n),
// an upper estimate of the true excess Delta(n).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "turan/errors.hpp"
#include "turan/evaluator.hpp"
#include "turan/format.hpp"
#include "turan/numtheory.hpp"
#include "turan/parallel.hpp"
#include "turan/random.hpp"
#include "turan/selector.hpp"
#include "turan/tuples.hpp"
#include "turan/types.hpp"

namespace turan {

inline constexpr std::uint64_t kDefaultSweepCap = 400;

struct DeltaRecord {
  std::uint64_t n = 0;
  std::string method;
  std::uint64_t p = 0;    // prime or prime power the construction starts from
  std::uint64_t gap = 0;  // elements removed (m) or trimmed (j)
  double subset_score = 0.0;
  double achieved_max = 0.0;  // over nu = 1..nu_cert
  std::uint64_t argmax_nu = 0;
  double delta_hat = 0.0;  // achieved_max - sqrt(target)
  double wall_ms = 0.0;

  std::uint64_t nu_cert = 0;       // certification range
  std::uint64_t nu_select = 0;     // selector range (0 when nothing was selected)
  double construction_bound = 0.0; // |S_full| bound over its own range
  std::string bound_label;
  std::string strategy;
  std::uint64_t prime_gap = 0;  // p_{k+1} - p_k with p_k <= n < p_{k+1}
};

struct PipelineResult {
  RootTuple tuple;
  DeltaRecord record;
  std::optional<SubsetSearchResult> selection;
};

/// Gap between the consecutive primes around n (p_k <= n < p_{k+1}).
inline std::uint64_t prime_gap_around(std::uint64_t n) {
  if (n < 2) throw domain_error("prime_gap_around: n must be >= 2");
  return next_prime(n) - prev_prime(n);
}

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline void certify(PipelineResult& res, std::uint64_t nu_cert, double target, const EvalConfig& cfg) {
  const auto prof = power_sums(res.tuple, 1, nu_cert, cfg);
  res.record.nu_cert = nu_cert;
  res.record.achieved_max = prof.max_abs;
  res.record.argmax_nu = prof.argmax_nu;
  res.record.delta_hat = prof.max_abs - std::sqrt(target);
}

inline PipelineResult remove_flat_subset(const RootTuple& full, std::size_t remove, std::uint64_t nu_select,
                                         const SearchConfig& cfg) {
  PipelineResult res;
  if (remove == 0) {
    res.tuple = full;
    return res;
  }
  auto sel = select_subset(full, remove, nu_select, cfg);
  res.tuple = sub_tuple(full, complement_indices(full.size(), sel.subset));
  res.record.subset_score = sel.score;
  res.record.strategy = sel.strategy;
  res.record.nu_select = nu_select;
  res.selection = std::move(sel);
  return res;
}

}  // namespace detail

/// Least prime p > n; removes a flat (p-1-n)-subset of montgomery(p) chosen
/// over nu <= (p-1)^2 and certifies the rest over nu <= n^2. When n + 1 is
/// prime the result is montgomery(n + 1) unchanged.
inline PipelineResult theorem1_tuple(std::uint64_t n, const SearchConfig& cfg = {}) {
  if (n < 2) throw domain_error("theorem1_tuple: n must be >= 2");
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t p = next_prime(n);
  const auto full = montgomery(p);
  const std::uint64_t m = p - 1 - n;
  auto res = detail::remove_flat_subset(full, m, (p - 1) * (p - 1), cfg);
  if (m > 0) {
    res.tuple.provenance.kind = "theorem1";
    res.tuple.provenance.params = {{"n", static_cast<std::int64_t>(n)}, {"p", static_cast<std::int64_t>(p)},
                                   {"m", static_cast<std::int64_t>(m)}};
    res.tuple.provenance.claim =
        UpperClaim{std::sqrt(static_cast<double>(p)) + res.record.subset_score, n * n,
                   "theorem1: |S| <= sqrt(p) + subset score"};
  }
  auto& r = res.record;
  r.n = n;
  r.method = "theorem1";
  r.p = p;
  r.gap = m;
  r.construction_bound = std::sqrt(static_cast<double>(p));
  r.bound_label = "sqrt(p)";
  r.prime_gap = prime_gap_around(n);
  detail::certify(res, n * n, static_cast<double>(n), cfg.eval);
  r.wall_ms = detail::elapsed_ms(t0);
  return res;
}

/// Least prime P = 1 mod m with P >= m n + 1, n' = (P-1)/m; removes n' - n
/// elements of montgomery_modified(n', m) chosen over nu <= m n'^2 and
/// certifies over nu <= m n^2 against sqrt(m n).
inline PipelineResult theorem2_tuple(std::uint64_t n, std::uint64_t m, const SearchConfig& cfg = {}) {
  if (n < 2) throw domain_error("theorem2_tuple: n must be >= 2");
  if (m < 1) throw domain_error("theorem2_tuple: m must be >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t P = next_prime_in_progression(n, m);
  const std::uint64_t n2 = (P - 1) / m;
  const auto full = montgomery_modified(n2, m);
  const std::uint64_t remove = n2 - n;
  auto res = detail::remove_flat_subset(full, remove, m * n2 * n2, cfg);
  res.tuple.provenance.kind = "theorem2";
  res.tuple.provenance.params = {{"n", static_cast<std::int64_t>(n)},
                                 {"m", static_cast<std::int64_t>(m)},
                                 {"P", static_cast<std::int64_t>(P)},
                                 {"removed", static_cast<std::int64_t>(remove)}};
  res.tuple.provenance.claim = UpperClaim{std::sqrt(static_cast<double>(P)) + res.record.subset_score, m * n * n,
                                          "theorem2: |S| <= sqrt(mn'+1) + subset score"};
  auto& r = res.record;
  r.n = n;
  r.method = "montmod";
  r.p = P;
  r.gap = remove;
  r.construction_bound = std::sqrt(static_cast<double>(P));
  r.bound_label = "sqrt(mn'+1)";
  r.prime_gap = prime_gap_around(n);
  detail::certify(res, m * n * n, static_cast<double>(m * n), cfg.eval);
  r.wall_ms = detail::elapsed_ms(t0);
  return res;
}

namespace detail {

// One trim candidate: keep the first n entries of `full` (size n + j).
inline PipelineResult trim_candidate(const RootTuple& full, std::uint64_t n, const std::string& method,
                                     std::uint64_t base, double bound, std::string label, const EvalConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t j = full.size() - n;
  std::vector<std::size_t> keep(n), dropped(j);
  for (std::size_t i = 0; i < n; ++i) keep[i] = i;
  for (std::size_t i = 0; i < j; ++i) dropped[i] = n + i;
  PipelineResult res;
  res.tuple = sub_tuple(full, keep);
  res.tuple.provenance.kind = method;
  res.tuple.provenance.params = {{"n", static_cast<std::int64_t>(n)},
                                 {"base", static_cast<std::int64_t>(base)},
                                 {"j", static_cast<std::int64_t>(j)}};
  const auto& fc = *full.provenance.claim;
  res.tuple.provenance.claim = UpperClaim{bound, std::min(fc.nu_hi, n * n), label};
  auto& r = res.record;
  r.n = n;
  r.method = method;
  r.p = base;
  r.gap = j;
  r.subset_score = j ? subset_score(full, dropped, n * n, cfg) : 0.0;
  r.nu_select = j ? n * n : 0;
  r.construction_bound = fc.bound;
  r.bound_label = label;
  r.strategy = j ? "drop-last" : "";
  r.prime_gap = prime_gap_around(n);
  certify(res, n * n, static_cast<double>(n), cfg);
  r.wall_ms = elapsed_ms(t0);
  return res;
}

}  // namespace detail

/// All applicable trim candidates, in order: prime p = n + j + 1 (montgomery),
/// prime power n + j (bose), n itself a prime power (singer, j = 1).
/// Candidates whose field exceeds the cap are skipped.
inline std::vector<PipelineResult> trim_candidates(std::uint64_t n, const EvalConfig& cfg = {},
                                                   std::uint64_t field_cap = kDefaultFieldCap) {
  if (n < 2) throw domain_error("trim_tuple: n must be >= 2");
  std::vector<PipelineResult> out;
  {
    const std::uint64_t p = next_prime(n);
    const std::uint64_t j = p - 1 - n;
    out.push_back(detail::trim_candidate(montgomery(p), n, "trim-prime", p,
                                         std::sqrt(static_cast<double>(p)) + static_cast<double>(j),
                                         "sqrt(n+j+1) + j", cfg));
  }
  try {
    const std::uint64_t q = next_prime_power_at_least(n);
    const std::uint64_t j = q - n;
    out.push_back(detail::trim_candidate(bose_tuple(q, field_cap), n, "trim-primepower", q,
                                         std::sqrt(static_cast<double>(q)) + static_cast<double>(j),
                                         "sqrt(n+j) + j", cfg));
  } catch (const resource_error&) {
  }
  if (is_prime_power(n)) {
    try {
      out.push_back(detail::trim_candidate(singer_tuple(n, field_cap), n, "trim-singer", n,
                                           std::sqrt(static_cast<double>(n)) + 1.0, "sqrt(n) + 1 (typo-corrected)",
                                           cfg));
    } catch (const resource_error&) {
    }
  }
  return out;
}

/// The trim candidate with the smallest achieved max (earliest on ties).
inline PipelineResult trim_tuple(std::uint64_t n, const EvalConfig& cfg = {},
                                 std::uint64_t field_cap = kDefaultFieldCap) {
  auto cands = trim_candidates(n, cfg, field_cap);
  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i)
    if (cands[i].record.achieved_max < cands[best].record.achieved_max) best = i;
  return std::move(cands[best]);
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepConfig {
  std::uint64_t n_lo = 2;
  std::uint64_t n_hi = 100;
  std::vector<std::string> methods{"theorem1"};  // theorem1, trim, montmod
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::uint64_t cap = kDefaultSweepCap;
  std::uint64_t montmod_m = 2;
  SearchConfig search;
};

struct SweepAggregates {
  std::uint64_t n_lo = 0;
  std::uint64_t n_hi = 0;
  double sum_delta_sq = 0.0;
  double max_delta = 0.0;
  std::uint64_t argmax_n = 0;
  std::uint64_t count_exceed_n14 = 0;
  std::optional<double> slope_fit;
  std::uint64_t cramer_flags = 0;  // n whose prime gap exceeds (log n)^2
};

struct SweepResult {
  std::vector<DeltaRecord> records;  // best record per n, ascending n
  SweepAggregates aggregates;
};

inline bool is_sweep_method(const std::string& m) { return m == "theorem1" || m == "trim" || m == "montmod"; }

/// One record per method for a single n; montmod is re-certified over nu <= n^2.
inline std::vector<DeltaRecord> sweep_point(std::uint64_t n, const SweepConfig& cfg) {
  SearchConfig search = cfg.search;
  search.seed = rng::derive_seed(cfg.seed, n);
  search.threads = 1;
  std::vector<DeltaRecord> out;
  for (const auto& method : cfg.methods) {
    if (method == "theorem1") {
      out.push_back(theorem1_tuple(n, search).record);
    } else if (method == "trim") {
      out.push_back(trim_tuple(n, search.eval).record);
    } else if (method == "montmod") {
      const auto t0 = std::chrono::steady_clock::now();
      auto res = theorem2_tuple(n, cfg.montmod_m, search);
      detail::certify(res, n * n, static_cast<double>(n), search.eval);
      res.record.wall_ms = detail::elapsed_ms(t0);
      out.push_back(res.record);
    } else {
      throw domain_error("unknown sweep method '" + method + "' (theorem1, trim, montmod)");
    }
  }
  return out;
}

/// Least-squares slope of log y against log x.
inline std::optional<double> loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double k = static_cast<double>(xs.size());
  const double den = k * sxx - sx * sx;
  if (den == 0.0) return std::nullopt;
  return (k * sxy - sx * sy) / den;
}

inline SweepAggregates aggregate(const std::vector<DeltaRecord>& records, std::uint64_t n_lo, std::uint64_t n_hi) {
  SweepAggregates a;
  a.n_lo = n_lo;
  a.n_hi = n_hi;
  a.max_delta = -INFINITY;
  std::vector<double> xs, ys;
  for (const auto& r : records) {
    a.sum_delta_sq += r.delta_hat * r.delta_hat;
    if (r.delta_hat > a.max_delta) {
      a.max_delta = r.delta_hat;
      a.argmax_n = r.n;
    }
    if (r.delta_hat > std::pow(static_cast<double>(r.n), 0.25)) ++a.count_exceed_n14;
    if (r.delta_hat > 0.0) {
      xs.push_back(static_cast<double>(r.n));
      ys.push_back(r.delta_hat);
    }
    const double ln = std::log(static_cast<double>(r.n));
    if (static_cast<double>(r.prime_gap) > ln * ln) ++a.cramer_flags;
  }
  if (records.empty()) a.max_delta = 0.0;
  a.slope_fit = loglog_slope(xs, ys);
  return a;
}

/// Best record per n (smallest achieved max, earliest method on ties),
/// parallel over n, aggregated in ascending n.
inline SweepResult delta_sweep(const SweepConfig& cfg) {
  if (cfg.n_lo < 2 || cfg.n_hi < cfg.n_lo) throw domain_error("delta_sweep: need 2 <= n_lo <= n_hi");
  if (cfg.n_hi > cfg.cap)
    throw resource_error("delta_sweep: n_hi " + std::to_string(cfg.n_hi) + " exceeds cap " + std::to_string(cfg.cap));
  if (cfg.methods.empty()) throw domain_error("delta_sweep: no methods given");
  for (const auto& m : cfg.methods)
    if (!is_sweep_method(m)) throw domain_error("unknown sweep method '" + m + "' (theorem1, trim, montmod)");

  const std::size_t count = cfg.n_hi - cfg.n_lo + 1;
  std::vector<DeltaRecord> best(count);
  parallel_for(count, cfg.threads, [&](std::size_t i) {
    const auto recs = sweep_point(cfg.n_lo + i, cfg);
    std::size_t arg = 0;
    for (std::size_t k = 1; k < recs.size(); ++k)
      if (recs[k].achieved_max < recs[arg].achieved_max) arg = k;
    best[i] = recs[arg];
  });
  SweepResult out;
  out.records = std::move(best);
  out.aggregates = aggregate(out.records, cfg.n_lo, cfg.n_hi);
  return out;
}

inline const char* kSweepCsvHeader = "n,method,p,gap,subset_score,achieved_max,argmax_nu,delta_hat,wall_ms";

/// Sweep CSV in the frozen column order; `zero_wall` prints wall_ms as 0.
inline void write_sweep_csv(std::ostream& os, const std::vector<DeltaRecord>& records, bool zero_wall = false) {
  os << kSweepCsvHeader << '\n';
  for (const auto& r : records) {
    os << r.n << ',' << r.method << ',' << r.p << ',' << r.gap << ',' << format_number(r.subset_score) << ','
       << format_number(r.achieved_max) << ',' << r.argmax_nu << ',' << format_number(r.delta_hat) << ','
       << format_number(zero_wall ? 0.0 : r.wall_ms) << '\n';
  }
}

/// Delta-hat / sqrt(gap), or null for gap 0.
inline nlohmann::json gap_ratio(const DeltaRecord& r) {
  if (r.gap == 0) return nullptr;
  return r.delta_hat / std::sqrt(static_cast<double>(r.gap));
}

inline nlohmann::json record_json(const DeltaRecord& r, bool zero_wall = false) {
  const double ln = std::log(static_cast<double>(r.n));
  return {{"n", r.n},
          {"method", r.method},
          {"p", r.p},
          {"gap", r.gap},
          {"subset_score", r.subset_score},
          {"achieved_max", r.achieved_max},
          {"argmax_nu", r.argmax_nu},
          {"delta_hat", r.delta_hat},
          {"wall_ms", zero_wall ? 0.0 : r.wall_ms},
          {"nu_cert", r.nu_cert},
          {"nu_select", r.nu_select},
          {"construction_bound", r.construction_bound},
          {"bound_label", r.bound_label},
          {"strategy", r.strategy},
          {"prime_gap", r.prime_gap},
          {"delta_over_sqrt_gap", gap_ratio(r)},
          {"cramer_flag", static_cast<double>(r.prime_gap) > ln * ln}};
}

inline nlohmann::json aggregates_json(const SweepAggregates& a) {
  nlohmann::json j{{"N_range", {a.n_lo, a.n_hi}},
                   {"sum_delta_sq", a.sum_delta_sq},
                   {"max_delta", a.max_delta},
                   {"count_exceed_n14", a.count_exceed_n14},
                   {"slope_fit", nullptr},
                   {"argmax_n", a.argmax_n},
                   {"cramer_flags", a.cramer_flags}};
  if (a.slope_fit) j["slope_fit"] = *a.slope_fit;
  return j;
}

}  // namespace turan
