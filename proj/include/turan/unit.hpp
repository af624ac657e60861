#pragma once

#include <complex>
#include <cstdint>
#include <numbers>

namespace turan {

using cplx = std::complex<double>;

/// e(num/den) = exp(2*pi*i*num/den) with the fraction reduced exactly first.
inline cplx unit_root(std::uint64_t num, std::uint64_t den) {
  const double x = static_cast<double>(num % den) / static_cast<double>(den);
  const double a = 2.0 * std::numbers::pi * x;
  return {std::cos(a), std::sin(a)};
}

/// (a * b) mod m without overflow.
constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace turan
