#pragma once

// Arithmetic in GF(r^s) as GF(r)[x] / (f), f the least monic irreducible of
// degree s. Elements are packed base-r integers: the coefficient of x^i is
// digit i. Multiplication goes through exp/log tables over a fixed primitive
// element, which doubles as the discrete-log table for the constructions.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "turan/errors.hpp"
#include "turan/numtheory.hpp"

namespace turan {

/// Default cap on the order of any field the library will build.
inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 20;

namespace gf {

/// Polynomial over GF(r), coefficients low to high, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t r) {
  return static_cast<std::uint32_t>(pow_mod(a, r - 2, r));
}

inline Poly sub(Poly a, const Poly& b, std::uint32_t r) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + r - b[i]) % r;
  trim(a);
  return a;
}

/// a mod f; f nonzero.
inline Poly mod(Poly a, const Poly& f, std::uint32_t r) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inverse_mod(f.back(), r);
  while (a.size() >= f.size()) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % r;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + r - c * f[i] % r) % r);
    }
    trim(a);
  }
  return a;
}

inline Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t r) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % r);
    }
  }
  return mod(std::move(out), f, r);
}

/// base^e mod f.
inline Poly pow_mod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t r) {
  Poly result = mod(Poly{1}, f, r);
  base = mod(std::move(base), f, r);
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, f, r);
    base = mul_mod(base, base, f, r);
    e >>= 1;
  }
  return result;
}

inline Poly gcd(Poly a, Poly b, std::uint32_t r) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly t = mod(a, b, r);
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

/// Rabin's test: f of degree d is irreducible over GF(r) iff
/// x^(r^d) = x (mod f) and gcd(x^(r^(d/l)) - x, f) = 1 for every prime l | d.
inline bool is_irreducible(const Poly& f, std::uint32_t r) {
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  const Poly x{0, 1};
  // x^(r^k) mod f by k successive r-th powers.
  auto frobenius = [&](std::size_t k) {
    Poly y = mod(x, f, r);
    for (std::size_t i = 0; i < k; ++i) y = pow_mod(y, r, f, r);
    return y;
  };
  if (!sub(frobenius(d), x, r).empty()) return false;
  for (auto l : prime_factors(d)) {
    const Poly g = gcd(f, sub(frobenius(d / l), x, r), r);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace gf

/// GF(r^s) with a deterministic modulus and primitive element.
class FiniteField {
 public:
  using Element = std::uint32_t;

  FiniteField(std::uint32_t r, std::uint32_t s, std::uint64_t cap = kDefaultFieldCap) : r_(r), s_(s) {
    if (r < 2 || !is_prime(r)) throw domain_error("finite_field: characteristic must be prime, got " + std::to_string(r));
    if (s < 1) throw domain_error("finite_field: degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
      q *= r;
      if (q > cap) {
        throw resource_error("finite_field: order " + std::to_string(r) + "^" + std::to_string(s) +
                             " exceeds cap " + std::to_string(cap));
      }
    }
    order_ = static_cast<Element>(q);
    pow_r_.resize(s_ + 1, 1);
    for (std::uint32_t i = 1; i <= s_; ++i) pow_r_[i] = pow_r_[i - 1] * r_;
    modulus_ = least_irreducible();
    theta_ = least_primitive();
    build_tables();
  }

  std::uint32_t characteristic() const noexcept { return r_; }
  std::uint32_t degree() const noexcept { return s_; }
  std::uint64_t order() const noexcept { return order_; }
  /// Monic modulus, coefficients low to high (size s+1).
  const gf::Poly& modulus() const noexcept { return modulus_; }
  Element theta() const noexcept { return theta_; }

  Element add(Element a, Element b) const {
    Element out = 0;
    for (std::uint32_t i = 0; i < s_; ++i) out += ((digit(a, i) + digit(b, i)) % r_) * pow_r_[i];
    return out;
  }

  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(std::uint64_t{log_[a]} + log_[b]) % (order_ - 1)];
  }

  /// theta^k.
  Element power_of_theta(std::uint64_t k) const { return exp_[k % (order_ - 1)]; }

  /// Discrete log base theta, in [0, q-2]; a != 0.
  std::uint64_t log(Element a) const {
    if (a == 0 || a >= order_) throw domain_error("FiniteField::log: argument must be a nonzero element");
    return log_[a];
  }

  /// Elements of the subfield GF(r^d), d | s: 0 and powers of theta^((q-1)/(r^d-1)).
  std::vector<Element> subfield(std::uint32_t d) const {
    if (d == 0 || s_ % d != 0) throw domain_error("FiniteField::subfield: degree must divide s");
    const std::uint64_t sub_order = pow_r_[d];
    const std::uint64_t step = (order_ - 1) / (sub_order - 1);
    std::vector<Element> out{0};
    for (std::uint64_t j = 0; j + 1 < sub_order; ++j) out.push_back(power_of_theta(j * step));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::uint32_t digit(Element a, std::uint32_t i) const { return (a / pow_r_[i]) % r_; }

  gf::Poly unpack(Element a) const {
    gf::Poly p(s_);
    for (std::uint32_t i = 0; i < s_; ++i) p[i] = digit(a, i);
    gf::trim(p);
    return p;
  }

  Element pack(const gf::Poly& p) const {
    Element out = 0;
    for (std::size_t i = 0; i < p.size(); ++i) out += p[i] * pow_r_[i];
    return out;
  }

  Element raw_mul(Element a, Element b) const { return pack(gf::mul_mod(unpack(a), unpack(b), modulus_, r_)); }

  Element raw_pow(Element a, std::uint64_t e) const { return pack(gf::pow_mod(unpack(a), e, modulus_, r_)); }

  /// Lexicographically least monic irreducible of degree s: lower coefficients
  /// read as a base-r integer with the x^(s-1) coefficient most significant.
  gf::Poly least_irreducible() const {
    for (Element low = 0; low < order_; ++low) {
      gf::Poly f(s_ + 1, 0);
      for (std::uint32_t i = 0; i < s_; ++i) f[i] = digit(low, i);
      f[s_] = 1;
      if (gf::is_irreducible(f, r_)) return f;
    }
    throw domain_error("finite_field: no irreducible polynomial found");  // unreachable
  }

  Element least_primitive() const {
    const std::uint64_t group = order_ - 1;
    const auto factors = prime_factors(group);
    for (Element e = 1; e < order_; ++e) {
      bool generator = true;
      for (auto l : factors) {
        if (raw_pow(e, group / l) == 1) {
          generator = false;
          break;
        }
      }
      if (generator) return e;
    }
    throw domain_error("finite_field: no primitive element found");  // unreachable
  }

  void build_tables() {
    const std::uint64_t group = order_ - 1;
    exp_.assign(group, 0);
    log_.assign(order_, 0);
    Element x = 1;
    for (std::uint64_t k = 0; k < group; ++k) {
      exp_[k] = x;
      log_[x] = static_cast<Element>(k);
      x = raw_mul(x, theta_);
    }
  }

  std::uint32_t r_;
  std::uint32_t s_;
  Element order_ = 0;
  std::vector<Element> pow_r_;
  gf::Poly modulus_;
  Element theta_ = 0;
  std::vector<Element> exp_;
  std::vector<Element> log_;
};

inline FiniteField finite_field(std::uint32_t r, std::uint32_t s, std::uint64_t cap = kDefaultFieldCap) {
  return FiniteField(r, s, cap);
}

}  // namespace turan
