#pragma once

// Choosing a small removal set M0 of a tuple whose own power sums stay flat:
// then |S_rest(nu)| <= |S_full(nu)| + |S_M0(nu)|.
//
// Strategies: exhaustive enumeration, seeded random sampling, and a greedy
// descent on the 2N-th moment sum_nu |S_A(nu)|^{2N} that shrinks A from the
// full index set down to m elements.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "turan/errors.hpp"
#include "turan/evaluator.hpp"
#include "turan/fft.hpp"
#include "turan/parallel.hpp"
#include "turan/random.hpp"
#include "turan/types.hpp"

namespace turan {

enum class Strategy { automatic, exhaustive, random, greedy };

inline std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::exhaustive:
      return "exhaustive";
    case Strategy::random:
      return "random";
    case Strategy::greedy:
      return "moment-greedy";
    default:
      return "auto";
  }
}

inline Strategy strategy_from_string(const std::string& s) {
  if (s == "auto") return Strategy::automatic;
  if (s == "exhaustive") return Strategy::exhaustive;
  if (s == "random") return Strategy::random;
  if (s == "greedy" || s == "moment-greedy") return Strategy::greedy;
  throw domain_error("unknown strategy '" + s + "' (auto, exhaustive, random, greedy)");
}

struct SearchConfig {
  Strategy strategy = Strategy::automatic;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  unsigned N = 3;
  std::uint64_t exhaustive_cap = 1'000'000;
  // Work estimates (element-steps) above which auto skips a strategy.
  double exhaustive_budget = 4e8;
  double greedy_budget = 1e8;
  unsigned threads = 1;
  EvalConfig eval;
};

struct SubsetSearchResult {
  std::vector<std::size_t> subset;  // sorted indices into the tuple
  double score = 0.0;               // max_{nu <= nu_hi} |S_subset(nu)|
  std::string strategy;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t m = 0;
  std::uint64_t nu_hi = 0;
};

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

/// max_{nu <= nu_hi} |S_subset(nu)| through the FFT of the sub-tuple; 0 if empty.
inline double subset_score(const RootTuple& t, const std::vector<std::size_t>& subset, std::uint64_t nu_hi,
                           const EvalConfig& cfg = {}) {
  if (subset.empty()) return 0.0;
  if (nu_hi < 1) throw domain_error("subset_score: nu_hi must be >= 1");
  return power_sums_fft(sub_tuple(t, subset), nu_hi, cfg).max_abs;
}

/// Direct subset scoring from a table of the M-th roots of unity, with an
/// optional early exit once the running max exceeds a threshold.
class SubsetScorer {
 public:
  SubsetScorer(const RootTuple& t, std::uint64_t nu_hi) : t_(t), nu_hi_(nu_hi), roots_(t.order) {
    validate(t);
    for (std::uint64_t j = 0; j < t.order; ++j) roots_[j] = unit_root(j, t.order);
  }

  struct Outcome {
    double value;   // the max, or a partial max above the threshold
    bool complete;  // false when stopped early
  };

  Outcome score(const std::vector<std::size_t>& subset,
                double abort_above = std::numeric_limits<double>::infinity()) const {
    if (subset.empty()) return {0.0, true};
    const std::uint64_t M = t_.order;
    const double limit = abort_above * abort_above;
    std::vector<std::uint64_t> step(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) step[i] = t_.angles.at(subset[i]);
    std::vector<std::uint64_t> idx = step;
    double best = 0.0;
    for (std::uint64_t nu = 1; nu <= nu_hi_; ++nu) {
      double re = 0.0;
      double im = 0.0;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        const cplx z = roots_[idx[i]];
        re += z.real();
        im += z.imag();
        idx[i] += step[i];
        if (idx[i] >= M) idx[i] -= M;
      }
      const double a = re * re + im * im;
      if (a > best) {
        best = a;
        if (best > limit) return {std::sqrt(best), false};
      }
    }
    return {std::sqrt(best), true};
  }

  const RootTuple& tuple() const noexcept { return t_; }
  const std::vector<cplx>& roots() const noexcept { return roots_; }

 private:
  const RootTuple& t_;
  std::uint64_t nu_hi_;
  std::vector<cplx> roots_;
};

namespace detail {

inline void require_m(std::size_t m, std::size_t n, const char* who) {
  if (m > n) throw domain_error(std::string(who) + ": subset size m exceeds n");
}

inline void atomic_min(std::atomic<double>& target, double value) {
  double cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

}  // namespace detail

/// Minimal score over all C(n, m) subsets; the lexicographically least wins ties.
inline SubsetSearchResult exhaustive_subset_search(const RootTuple& t, std::size_t m, std::uint64_t nu_hi,
                                                   std::uint64_t cap = 1'000'000) {
  const std::size_t n = t.size();
  detail::require_m(m, n, "exhaustive_subset_search");
  const auto count = binomial(n, m);
  if (count > cap)
    throw resource_error("exhaustive_subset_search: C(" + std::to_string(n) + "," + std::to_string(m) +
                         ") exceeds cap " + std::to_string(cap) + "; use the random or greedy strategy");
  SubsetSearchResult res;
  res.strategy = "exhaustive";
  res.m = m;
  res.nu_hi = nu_hi;
  res.trials = count;
  if (m == 0) return res;

  const SubsetScorer scorer(t, nu_hi);
  std::vector<std::size_t> comb(m);
  for (std::size_t i = 0; i < m; ++i) comb[i] = i;
  double best = std::numeric_limits<double>::infinity();
  for (;;) {
    const auto out = scorer.score(comb, best);
    if (out.complete && out.value < best) {
      best = out.value;
      res.subset = comb;
    }
    // next combination in lexicographic order
    std::size_t i = m;
    while (i > 0 && comb[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < m; ++j) comb[j] = comb[j - 1] + 1;
  }
  res.score = best;
  return res;
}

/// Best of `trials` uniform m-subsets; trial i uses seed derive_seed(seed, i).
/// Trials scoring above `incumbent` may stop early; they can never win.
/// Ties go to the lowest trial index, so the result is thread-count independent.
inline SubsetSearchResult random_subset_search(const RootTuple& t, std::size_t m, std::uint64_t nu_hi,
                                               std::uint64_t trials, std::uint64_t seed, unsigned threads = 1,
                                               double incumbent = std::numeric_limits<double>::infinity()) {
  const std::size_t n = t.size();
  detail::require_m(m, n, "random_subset_search");
  if (trials < 1) throw domain_error("random_subset_search: trials must be >= 1");
  SubsetSearchResult res;
  res.strategy = "random";
  res.m = m;
  res.nu_hi = nu_hi;
  res.trials = trials;
  res.seed = seed;
  if (m == 0) return res;

  const SubsetScorer scorer(t, nu_hi);
  std::vector<double> scores(trials, std::numeric_limits<double>::infinity());
  std::vector<std::vector<std::size_t>> subsets(trials);
  std::atomic<double> bar{incumbent};
  parallel_for(trials, threads, [&](std::size_t i) {
    rng::Engine eng(rng::derive_seed(seed, i));
    subsets[i] = rng::sample_subset(eng, n, m);
    // Trial 0 always completes so a result exists even under an incumbent.
    const double limit = i == 0 ? std::numeric_limits<double>::infinity() : bar.load();
    const auto out = scorer.score(subsets[i], limit);
    if (out.complete) {
      scores[i] = out.value;
      detail::atomic_min(bar, out.value);
    }
  });
  std::size_t arg = 0;
  for (std::size_t i = 1; i < trials; ++i)
    if (scores[i] < scores[arg]) arg = i;
  res.subset = subsets[arg];
  res.score = scores[arg];
  return res;
}

/// Approximate cost of moment_greedy_search, in element-steps.
inline double greedy_cost(std::size_t n, std::size_t m, std::uint64_t M, unsigned N) {
  const double Md = static_cast<double>(M);
  return static_cast<double>(n - std::min(n, m)) * (N + 1) * Md * std::log2(Md + 2.0);
}

/// Shrinks A from the full index set, each step removing the k that minimizes
/// sum_{nu <= nu_hi} |S_A(nu) - z_k^nu|^{2N}. All candidates are scored at
/// once: with x = |S|^2 + 1 and w = z_k^nu,
///
///   |S - w|^{2N} = sum_{a+b+c=N} N!/(a! b! c!) x^a (-S)^b (-conj S)^c conj(w)^{b-c},
///
/// so each power d = b - c >= 1 contributes 2 Re H_d(d c_k), where H_d is the
/// length-M transform of the nu-folded coefficient sequence. d = 0 is common
/// to every candidate and dropped. Ties go to the lowest index.
inline SubsetSearchResult moment_greedy_search(const RootTuple& t, std::size_t m, std::uint64_t nu_hi, unsigned N = 3,
                                               const EvalConfig& cfg = {}) {
  const std::size_t n = t.size();
  if (m < 1 || m > n) throw domain_error("moment_greedy_search: need 1 <= m <= n");
  if (N < 1) throw domain_error("moment_greedy_search: N must be >= 1");
  if (nu_hi < 1) throw domain_error("moment_greedy_search: nu_hi must be >= 1");
  SubsetSearchResult res;
  res.strategy = "moment-greedy";
  res.m = m;
  res.nu_hi = nu_hi;

  const std::uint64_t M = t.order;
  auto S = full_period_sums(t, cfg);
  const SubsetScorer scorer(t, nu_hi);
  const auto& roots = scorer.roots();

  // weight[r] = #{1 <= nu <= nu_hi : nu = r mod M}
  std::vector<double> weight(M, 0.0);
  for (std::uint64_t r = 0; r < M; ++r) {
    if (r == 0) {
      weight[r] = static_cast<double>(nu_hi / M);
    } else if (r <= nu_hi) {
      weight[r] = static_cast<double>((nu_hi - r) / M + 1);
    }
  }

  struct Term {
    unsigned a, b, c;
    double coef;
  };
  std::vector<std::vector<Term>> terms(N + 1);  // by d = b - c >= 1
  std::vector<double> fact(N + 1, 1.0);
  for (unsigned i = 1; i <= N; ++i) fact[i] = fact[i - 1] * i;
  for (unsigned b = 0; b <= N; ++b)
    for (unsigned c = 0; b + c <= N; ++c)
      if (b > c) {
        const unsigned a = N - b - c;
        const double sign = (b + c) % 2 ? -1.0 : 1.0;
        terms[b - c].push_back({a, b, c, sign * fact[N] / (fact[a] * fact[b] * fact[c])});
      }

  const fft::Plan plan(M, -1);
  std::vector<cplx> scratch(plan.scratch_size());
  std::vector<std::vector<cplx>> H(N + 1, std::vector<cplx>(M));
  std::vector<bool> alive(n, true);
  std::vector<cplx> pw_s(N + 1), pw_c(N + 1);
  std::vector<double> pw_x(N + 1);

  for (std::size_t size = n; size > m; --size) {
    for (std::uint64_t r = 0; r < M; ++r) {
      const cplx s = S[r];
      pw_s[0] = pw_c[0] = 1.0;
      pw_x[0] = 1.0;
      const double x = std::norm(s) + 1.0;
      for (unsigned i = 1; i <= N; ++i) {
        pw_s[i] = pw_s[i - 1] * s;
        pw_c[i] = pw_c[i - 1] * std::conj(s);
        pw_x[i] = pw_x[i - 1] * x;
      }
      for (unsigned d = 1; d <= N; ++d) {
        cplx h{0.0, 0.0};
        for (const auto& tm : terms[d]) h += tm.coef * pw_x[tm.a] * pw_s[tm.b] * pw_c[tm.c];
        H[d][r] = weight[r] * h;
      }
    }
    for (unsigned d = 1; d <= N; ++d) plan.execute_inplace(H[d], scratch);

    std::size_t arg = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      if (!alive[k]) continue;
      double obj = 0.0;
      for (unsigned d = 1; d <= N; ++d) obj += 2.0 * H[d][mul_mod(d, t.angles[k], M)].real();
      if (obj < best) {
        best = obj;
        arg = k;
      }
    }
    alive[arg] = false;
    const std::uint64_t c = t.angles[arg];
    std::uint64_t idx = 0;
    for (std::uint64_t r = 0; r < M; ++r) {
      S[r] -= roots[idx];
      idx += c;
      if (idx >= M) idx -= M;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    if (alive[k]) res.subset.push_back(k);
  res.score = scorer.score(res.subset).value;
  return res;
}

/// Auto policy: exhaustive when C(n,m) fits both cap and budget; otherwise the
/// greedy result (when affordable) seeds random restarts as the incumbent.
inline SubsetSearchResult select_subset(const RootTuple& t, std::size_t m, std::uint64_t nu_hi,
                                        const SearchConfig& cfg = {}) {
  const std::size_t n = t.size();
  detail::require_m(m, n, "select_subset");
  switch (cfg.strategy) {
    case Strategy::exhaustive:
      return exhaustive_subset_search(t, m, nu_hi, cfg.exhaustive_cap);
    case Strategy::random:
      return random_subset_search(t, m, nu_hi, cfg.trials, cfg.seed, cfg.threads);
    case Strategy::greedy:
      return moment_greedy_search(t, m, nu_hi, cfg.N, cfg.eval);
    case Strategy::automatic:
      break;
  }
  if (m == 0) return exhaustive_subset_search(t, 0, nu_hi);
  const auto count = binomial(n, m);
  const double exhaustive_work = static_cast<double>(count) * static_cast<double>(m) * static_cast<double>(nu_hi);
  if (count <= cfg.exhaustive_cap && exhaustive_work <= cfg.exhaustive_budget)
    return exhaustive_subset_search(t, m, nu_hi, cfg.exhaustive_cap);

  const bool use_greedy = greedy_cost(n, m, t.order, cfg.N) <= cfg.greedy_budget;
  if (!use_greedy) return random_subset_search(t, m, nu_hi, cfg.trials, cfg.seed, cfg.threads);
  auto greedy = moment_greedy_search(t, m, nu_hi, cfg.N, cfg.eval);
  auto random = random_subset_search(t, m, nu_hi, cfg.trials, cfg.seed, cfg.threads, greedy.score);
  auto& best = random.score < greedy.score ? random : greedy;
  best.strategy = "moment-greedy+random";
  best.trials = cfg.trials;
  best.seed = cfg.seed;
  return best;
}

inline void to_json(nlohmann::json& j, const SubsetSearchResult& r) {
  j = nlohmann::json{{"strategy", r.strategy}, {"m", r.m},           {"nu_hi", r.nu_hi}, {"subset", r.subset},
                     {"score", r.score},       {"trials", r.trials}, {"seed", r.seed}};
}

}  // namespace turan
