#pragma once

// Slow, obviously-correct reference implementations. Nothing here includes
// the library; tests compare library output against these.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= n; ++k)
    if (is_prime(k)) out.push_back(k);
  return out;
}

inline std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t k = n + 1;
  while (!is_prime(k)) ++k;
  return k;
}

inline bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

/// Multiplicative order of g mod p by repeated multiplication.
inline std::uint64_t order_mod(std::uint64_t g, std::uint64_t p) {
  std::uint64_t x = g % p;
  std::uint64_t k = 1;
  while (x != 1) {
    x = x * g % p;
    ++k;
  }
  return k;
}

inline std::uint64_t least_primitive_root(std::uint64_t p) {
  for (std::uint64_t g = 2;; ++g)
    if (order_mod(g, p) == p - 1) return g;
}

/// ind[k] with g^ind[k] = k mod p, by powering.
inline std::vector<std::uint64_t> discrete_logs(std::uint64_t p) {
  const auto g = least_primitive_root(p);
  std::vector<std::uint64_t> ind(p, 0);
  std::uint64_t x = 1;
  for (std::uint64_t e = 0; e + 1 < p; ++e) {
    ind[x] = e;
    x = x * g % p;
  }
  return ind;
}

inline cplx e(double x) { return std::polar(1.0, 2.0 * std::numbers::pi * x); }

/// S(nu) = sum_k e(nu c_k / M) with the angle reduced exactly first.
inline cplx root_power_sum(const std::vector<std::uint64_t>& angles, std::uint64_t M, std::uint64_t nu) {
  cplx s{0.0, 0.0};
  for (auto c : angles) {
    const auto r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(c) * nu) % M);
    s += e(static_cast<double>(r) / static_cast<double>(M));
  }
  return s;
}

inline cplx float_power_sum(const std::vector<cplx>& z, std::uint64_t nu) {
  cplx s{0.0, 0.0};
  for (auto v : z) s += std::pow(v, static_cast<double>(nu));
  return s;
}

inline double max_abs_root(const std::vector<std::uint64_t>& angles, std::uint64_t M, std::uint64_t nu_hi) {
  double mx = 0.0;
  for (std::uint64_t nu = 1; nu <= nu_hi; ++nu) mx = std::max(mx, std::abs(root_power_sum(angles, M, nu)));
  return mx;
}

/// Textbook O(n^2) DFT: X[k] = sum_j x[j] e(sign jk / n).
inline std::vector<cplx> naive_dft(const std::vector<cplx>& x, int sign) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    long double re = 0, im = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const long double a = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(sign) *
                            static_cast<long double>((j * k) % n) / static_cast<long double>(n);
      re += x[j].real() * std::cos(a) - x[j].imag() * std::sin(a);
      im += x[j].real() * std::sin(a) + x[j].imag() * std::cos(a);
    }
    out[k] = {static_cast<double>(re), static_cast<double>(im)};
  }
  return out;
}

/// Gauss sum |sum_{k=1}^{p-1} chi^j(k) e(ka/p)|, chi(g) = e(1/(p-1)).
inline double gauss_sum(std::uint64_t p, std::uint64_t j, std::int64_t a) {
  const auto ind = discrete_logs(p);
  cplx s{0.0, 0.0};
  const std::int64_t P = static_cast<std::int64_t>(p);
  for (std::uint64_t k = 1; k < p; ++k) {
    const auto ka = ((static_cast<std::int64_t>(k) * a) % P + P) % P;
    s += e(static_cast<double>(j * ind[k] % (p - 1)) / static_cast<double>(p - 1)) *
         e(static_cast<double>(ka) / static_cast<double>(p));
  }
  return std::abs(s);
}

// Polynomials over GF(r), low to high.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_rem(Poly a, const Poly& b, std::uint32_t r) {
  trim(a);
  std::uint32_t inv = 1;
  while (inv * b.back() % r != 1) ++inv;
  while (a.size() >= b.size()) {
    const std::uint32_t f = a.back() * inv % r;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + r * r - f * b[i] % r) % r;
    trim(a);
  }
  return a;
}

/// Every monic polynomial of the given degree, in base-r counting order of
/// the lower coefficients.
inline std::vector<Poly> monic_polys(std::uint32_t r, std::uint32_t deg) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < deg; ++i) count *= r;
  std::vector<Poly> out;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly p(deg + 1, 0);
    auto c = code;
    for (std::uint32_t i = 0; i < deg; ++i) {
      p[i] = static_cast<std::uint32_t>(c % r);
      c /= r;
    }
    p[deg] = 1;
    out.push_back(p);
  }
  return out;
}

/// Irreducible iff no monic divisor of degree 1..deg/2.
inline bool is_irreducible(const Poly& f, std::uint32_t r) {
  const auto deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d)
    for (const auto& g : monic_polys(r, d))
      if (poly_rem(f, g, r).empty()) return false;
  return true;
}

/// Every nonzero residue mod v arises exactly once as a difference.
inline bool is_perfect_difference_set(const std::vector<std::uint64_t>& s, std::uint64_t v) {
  std::vector<int> hits(v, 0);
  for (auto a : s)
    for (auto b : s)
      if (a != b) ++hits[(a + v - b) % v];
  for (std::uint64_t d = 1; d < v; ++d)
    if (hits[d] != 1) return false;
  return hits[0] == 0;
}

inline bool is_sidon(const std::vector<std::uint64_t>& s, std::uint64_t v) {
  std::vector<std::uint64_t> diffs;
  for (auto a : s)
    for (auto b : s)
      if (a != b) diffs.push_back((a + v - b) % v);
  std::sort(diffs.begin(), diffs.end());
  return std::adjacent_find(diffs.begin(), diffs.end()) == diffs.end();
}

/// sum over injective maps i -> k_i of prod z_{k_i}^{nu_i}.
inline cplx distinct_sum(const std::vector<cplx>& z, const std::vector<std::uint64_t>& nus) {
  const std::size_t n = z.size();
  const std::size_t m = nus.size();
  if (m > n) return {0.0, 0.0};
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  // Enumerate injections as ordered m-prefixes of permutations; each prefix
  // appears (n-m)! times.
  double fact = 1.0;
  for (std::size_t k = 2; k <= n - m; ++k) fact *= static_cast<double>(k);
  cplx s{0.0, 0.0};
  do {
    cplx term{1.0, 0.0};
    for (std::size_t i = 0; i < m; ++i) term *= std::pow(z[idx[i]], static_cast<double>(nus[i]));
    s += term;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return s / fact;
}

/// Bell numbers B_0..B_6.
inline std::uint64_t bell(std::size_t m) {
  static const std::uint64_t table[] = {1, 1, 2, 5, 15, 52, 203};
  return table[m];
}

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

inline double subset_max(const std::vector<std::uint64_t>& angles, std::uint64_t M,
                         const std::vector<std::size_t>& subset, std::uint64_t nu_hi) {
  std::vector<std::uint64_t> sub;
  for (auto i : subset) sub.push_back(angles[i]);
  return max_abs_root(sub, M, nu_hi);
}

}  // namespace oracle
