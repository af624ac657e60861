#pragma once

// Extremal tuples of roots of unity.
//
//   montgomery(p)            w_k = chi(k) e(k/p), k = 1..p-1
//   montgomery_modified(n,m) the w_k with k an m-th power residue mod p = mn+1
//   bose_tuple(q)            e(a/(q^2-1)) over a Bose-Sidon set
//   singer_tuple(q)          e(a/(q^2+q+1)) over a Singer difference set
//   erdos_renyi_random       independent uniform angles, resampled until flat

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "turan/bounds.hpp"
#include "turan/difference_sets.hpp"
#include "turan/errors.hpp"
#include "turan/evaluator.hpp"
#include "turan/numtheory.hpp"
#include "turan/random.hpp"
#include "turan/types.hpp"
#include "turan/unit.hpp"

namespace turan {

inline constexpr unsigned kDefaultErdosRenyiRetries = 64;

inline double sqrt_of(std::uint64_t x) { return std::sqrt(static_cast<double>(x)); }

/// M = p(p-1), c_k = (p ind(k) + (p-1) k) mod M for k = 1..p-1.
inline RootTuple montgomery(std::uint64_t p) {
  if (p <= 2 || !is_prime(p)) throw domain_error("montgomery: p must be an odd prime, got " + std::to_string(p));
  const CharacterTable chi(p);
  RootTuple t;
  t.order = p * (p - 1);
  t.angles.reserve(p - 1);
  for (std::uint64_t k = 1; k < p; ++k) t.angles.push_back((p * chi.index(k) + (p - 1) * k) % t.order);
  const std::uint64_t n = p - 1;
  t.provenance.kind = "montgomery";
  t.provenance.params = {{"p", static_cast<std::int64_t>(p)}};
  t.provenance.claim = UpperClaim{sqrt_of(p), n * n + n - 1, "montgomery: |S| <= sqrt(p)"};
  return t;
}

/// The w_k = chi(k) e(k/p) with ind(k) = 0 mod m, p = mn + 1. The n angles
/// are sorted and reduced to the lowest common order (p n).
inline RootTuple montgomery_modified(std::uint64_t n, std::uint64_t m) {
  if (n < 1 || m < 1) throw domain_error("montgomery_modified: n, m must be >= 1");
  const std::uint64_t p = m * n + 1;
  if (!is_prime(p) || p == 2)
    throw domain_error("montgomery_modified: m*n+1 = " + std::to_string(p) + " is not an odd prime");
  const CharacterTable chi(p);
  RootTuple t;
  t.order = p * (p - 1);
  for (std::uint64_t k = 1; k < p; ++k) {
    const auto ind = chi.index(k);
    if (ind % m == 0) t.angles.push_back((p * ind + (p - 1) * k) % t.order);
  }
  std::sort(t.angles.begin(), t.angles.end());
  t = normalized(t);
  t.provenance.kind = "montmod";
  t.provenance.params = {{"n", static_cast<std::int64_t>(n)}, {"m", static_cast<std::int64_t>(m)},
                         {"p", static_cast<std::int64_t>(p)}};
  t.provenance.claim = UpperClaim{sqrt_of(p), m * n * n + n - 1, "montmod: |S| <= sqrt(mn+1)"};
  return t;
}

inline RootTuple bose_tuple(std::uint64_t q, std::uint64_t cap = kDefaultFieldCap) {
  auto set = bose_set(q, cap);
  RootTuple t;
  t.order = set.v;
  t.angles = std::move(set.elements);
  t.provenance.kind = "bose";
  t.provenance.params = {{"q", static_cast<std::int64_t>(q)}};
  t.provenance.claim = UpperClaim{sqrt_of(q), q * q - 2, "bose: |S| <= sqrt(q)"};
  return t;
}

inline RootTuple singer_tuple(std::uint64_t q, std::uint64_t cap = kDefaultFieldCap) {
  auto set = singer_set(q, cap);
  RootTuple t;
  t.order = set.v;
  t.angles = std::move(set.elements);
  const std::uint64_t n = q + 1;
  t.provenance.kind = "singer";
  t.provenance.params = {{"q", static_cast<std::int64_t>(q)}};
  t.provenance.claim = UpperClaim{sqrt_of(q), n * n - n, "singer: |S| <= sqrt(q)"};
  return t;
}

struct ErdosRenyiResult {
  FloatTuple tuple;
  double max_abs = 0.0;  // over nu = 1..m
  double bound = 0.0;
  unsigned attempts = 0;
  std::uint64_t seed = 0;
};

/// Thrown when every attempt exceeded the bound; carries the best one.
class erdos_renyi_failure : public search_failure {
 public:
  explicit erdos_renyi_failure(ErdosRenyiResult best)
      : search_failure("erdos_renyi_random: no draw met the bound after " + std::to_string(best.attempts) +
                       " attempts (best max " + format_number(best.max_abs) + ")"),
        best_(std::move(best)) {}
  const ErdosRenyiResult& best() const noexcept { return best_; }

 private:
  ErdosRenyiResult best_;
};

/// Attempt i draws n angles from an engine seeded with derive_seed(seed, i).
inline ErdosRenyiResult erdos_renyi_random(std::uint64_t n, std::uint64_t m, std::uint64_t seed,
                                           unsigned max_retries = kDefaultErdosRenyiRetries) {
  if (n < 1 || m < 1) throw domain_error("erdos_renyi_random: n, m must be >= 1");
  if (max_retries < 1) throw domain_error("erdos_renyi_random: max_retries must be >= 1");
  const double bound = erdos_renyi_bound(n, m);
  ErdosRenyiResult best;
  best.bound = bound;
  best.seed = seed;
  best.max_abs = INFINITY;
  for (unsigned attempt = 0; attempt < max_retries; ++attempt) {
    rng::Engine eng(rng::derive_seed(seed, attempt));
    FloatTuple t;
    t.values.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) {
      const double a = 2.0 * std::numbers::pi * rng::uniform01(eng);
      t.values.emplace_back(std::cos(a), std::sin(a));
    }
    const double mx = power_sums_direct(t, 1, m).max_abs;
    if (mx < best.max_abs) {
      best.tuple = std::move(t);
      best.max_abs = mx;
    }
    best.attempts = attempt + 1;
    if (best.max_abs <= bound) break;
  }
  best.tuple.provenance.kind = "erdos-renyi";
  best.tuple.provenance.params = {{"n", static_cast<std::int64_t>(n)},
                                  {"m", static_cast<std::int64_t>(m)},
                                  {"seed", static_cast<std::int64_t>(seed)}};
  best.tuple.provenance.claim = UpperClaim{bound, m, "erdos-renyi: |S| <= sqrt(6 n log(m+1))"};
  if (best.max_abs > bound) throw erdos_renyi_failure(std::move(best));
  return best;
}

}  // namespace turan
