#pragma once

// Primes, primitive roots and the maximal-order Dirichlet character mod p.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/errors.hpp"
#include "turan/unit.hpp"

namespace turan {

/// All primes <= limit, ascending (sieve of Eratosthenes).
inline std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  if (limit < 2) throw domain_error("sieve_primes: limit must be >= 2");
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r && witness; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

/// Smallest prime strictly greater than n.
constexpr std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t p = n + 1;
  while (!is_prime(p)) ++p;
  return p;
}

/// Largest prime <= n; n >= 2.
inline std::uint64_t prev_prime(std::uint64_t n) {
  if (n < 2) throw domain_error("prev_prime: n must be >= 2");
  while (!is_prime(n)) --n;
  return n;
}

/// Smallest prime p with p = 1 (mod m) and p >= m*n + 1.
inline std::uint64_t next_prime_in_progression(std::uint64_t n, std::uint64_t m) {
  if (n < 1 || m < 1) throw domain_error("next_prime_in_progression: need n >= 1 and m >= 1");
  std::uint64_t p = m * n + 1;
  while (!is_prime(p)) p += m;
  return p;
}

/// Distinct prime factors of n, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;
};

/// q = r^s with r prime and s >= 1, if it is one.
inline std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t r = 0;
  // The smallest factor of q lies below its cube root, or q is p, p^2 or p*p'.
  for (std::uint64_t d = 2; d * d * d <= q; ++d) {
    if (q % d == 0) {
      r = d;
      break;
    }
  }
  if (r == 0) {
    if (is_prime(q)) return PrimePower{q, 1};
    const auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(q))));
    if (root * root == q && is_prime(root)) return PrimePower{root, 2};
    return std::nullopt;
  }
  std::uint32_t s = 0;
  while (q % r == 0) {
    q /= r;
    ++s;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{r, s};
}

inline bool is_prime_power(std::uint64_t q) { return as_prime_power(q).has_value(); }

/// Smallest prime power >= n.
inline std::uint64_t next_prime_power_at_least(std::uint64_t n) {
  std::uint64_t q = std::max<std::uint64_t>(n, 2);
  while (!is_prime_power(q)) ++q;
  return q;
}

/// Smallest primitive root modulo an odd prime p.
inline std::uint64_t primitive_root(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw domain_error("primitive_root: p must be an odd prime, got " + std::to_string(p));
  const auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generator = true;
    for (auto f : factors) {
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw domain_error("primitive_root: no generator found");  // unreachable for primes
}

/// Discrete-log table for the character of order p-1 fixed by chi(g) = e(1/(p-1)),
/// g the least primitive root. chi^j(k) = e(j * ind(k) / (p-1)).
class CharacterTable {
 public:
  explicit CharacterTable(std::uint64_t p) : p_(p), g_(primitive_root(p)), ind_(p, 0) {
    std::uint64_t x = 1;
    for (std::uint64_t e = 0; e + 1 < p; ++e) {
      ind_[x] = e;
      x = x * g_ % p;
    }
  }

  std::uint64_t prime() const noexcept { return p_; }
  std::uint64_t generator() const noexcept { return g_; }

  /// ind_g(k) in [0, p-2] for k not divisible by p.
  std::uint64_t index(std::uint64_t k) const {
    k %= p_;
    if (k == 0) throw domain_error("CharacterTable::index: k divisible by p");
    return ind_[k];
  }

  /// chi^j(k) as a unit complex number; 0 when p | k.
  cplx value(std::uint64_t j, std::uint64_t k) const {
    if (k % p_ == 0) return {0.0, 0.0};
    return unit_root(mul_mod(j, index(k), p_ - 1), p_ - 1);
  }

 private:
  std::uint64_t p_;
  std::uint64_t g_;
  std::vector<std::uint64_t> ind_;
};

inline CharacterTable character_table(std::uint64_t p) { return CharacterTable(p); }

/// |sum_{k=1}^{p-1} chi^j(k) e(k a / p)| by direct summation. Each phase is
/// reduced exactly over the common denominator p(p-1) before conversion.
inline double gauss_sum_magnitude(const CharacterTable& chi, std::uint64_t j, std::int64_t a) {
  const std::uint64_t p = chi.prime();
  const std::uint64_t den = p * (p - 1);
  const std::uint64_t jr = j % (p - 1);
  const auto ar = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                              static_cast<std::int64_t>(p));
  cplx sum{0.0, 0.0};
  for (std::uint64_t k = 1; k < p; ++k) {
    const std::uint64_t phase = (mul_mod(jr, chi.index(k), p - 1) * p + mul_mod(k, ar, p) * (p - 1)) % den;
    sum += unit_root(phase, den);
  }
  return std::abs(sum);
}

inline double gauss_sum_magnitude(std::uint64_t p, std::uint64_t j, std::int64_t a) {
  return gauss_sum_magnitude(CharacterTable(p), j, a);
}

/// Closed-form magnitude of the Gauss sum: sqrt(p), 1, 0 or p-1 by case.
inline double gauss_sum_case_value(std::uint64_t p, std::uint64_t j, std::int64_t a) {
  const bool divides = a % static_cast<std::int64_t>(p) == 0;
  const bool principal = j % (p - 1) == 0;
  if (!divides) return principal ? 1.0 : std::sqrt(static_cast<double>(p));
  return principal ? static_cast<double>(p - 1) : 0.0;
}

}  // namespace turan
