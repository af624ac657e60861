#pragma once

// Singer perfect difference sets and Bose Sidon sets from finite-field
// geometry. Both take the discrete log over a primitive element of an
// extension of GF(q).

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "turan/errors.hpp"
#include "turan/finite_field.hpp"
#include "turan/numtheory.hpp"

namespace turan {

enum class DifferenceSetKind { singer, bose };

inline std::string to_string(DifferenceSetKind k) { return k == DifferenceSetKind::singer ? "singer" : "bose"; }

struct DifferenceSet {
  DifferenceSetKind kind;
  std::uint64_t q;
  std::uint64_t v;
  std::vector<std::uint64_t> elements;  // strictly increasing residues mod v
};

namespace detail {

inline PrimePower require_prime_power(std::uint64_t q, const char* who) {
  auto pp = as_prime_power(q);
  if (!pp) throw domain_error(std::string(who) + ": q = " + std::to_string(q) + " is not a prime power");
  return *pp;
}

}  // namespace detail

/// Perfect (q^2+q+1, q+1, 1) difference set: discrete logs, reduced mod
/// q^2+q+1, of the nonzero points of the GF(q)-span of {1, theta} in GF(q^3).
inline DifferenceSet singer_set(std::uint64_t q, std::uint64_t cap = kDefaultFieldCap) {
  const auto pp = detail::require_prime_power(q, "singer_set");
  const FiniteField field(static_cast<std::uint32_t>(pp.prime), 3 * pp.exponent, cap);
  const std::uint64_t v = q * q + q + 1;
  const auto base = field.subfield(pp.exponent);
  const auto theta = field.theta();

  std::vector<std::uint64_t> logs;
  for (auto a : base) {
    for (auto b : base) {
      if (a == 0 && b == 0) continue;
      logs.push_back(field.log(field.add(a, field.mul(b, theta))) % v);
    }
  }
  std::sort(logs.begin(), logs.end());
  logs.erase(std::unique(logs.begin(), logs.end()), logs.end());
  if (logs.size() != q + 1) throw domain_error("singer_set: line does not have q+1 projective points");
  return {DifferenceSetKind::singer, q, v, std::move(logs)};
}

/// Sidon set of size q in Z_{q^2-1}: {log_theta(theta + a) : a in GF(q)}.
inline DifferenceSet bose_set(std::uint64_t q, std::uint64_t cap = kDefaultFieldCap) {
  const auto pp = detail::require_prime_power(q, "bose_set");
  const FiniteField field(static_cast<std::uint32_t>(pp.prime), 2 * pp.exponent, cap);
  const auto base = field.subfield(pp.exponent);
  const auto theta = field.theta();

  std::vector<std::uint64_t> logs;
  logs.reserve(base.size());
  for (auto a : base) logs.push_back(field.log(field.add(theta, a)));
  std::sort(logs.begin(), logs.end());
  return {DifferenceSetKind::bose, q, q * q - 1, std::move(logs)};
}

/// Every nonzero residue mod v occurs exactly once as a difference.
inline bool is_perfect_difference_set(const std::vector<std::uint64_t>& elems, std::uint64_t v) {
  std::vector<int> hits(v, 0);
  for (auto a : elems)
    for (auto b : elems)
      if (a != b) ++hits[(a + v - b) % v];
  return hits[0] == 0 && std::all_of(hits.begin() + 1, hits.end(), [](int h) { return h == 1; });
}

/// All ordered differences a-b (a != b) are distinct mod v.
inline bool is_sidon_mod(const std::vector<std::uint64_t>& elems, std::uint64_t v) {
  std::vector<bool> seen(v, false);
  for (auto a : elems) {
    for (auto b : elems) {
      if (a == b) continue;
      const auto d = (a + v - b) % v;
      if (d == 0 || seen[d]) return false;
      seen[d] = true;
    }
  }
  return true;
}

inline void to_json(nlohmann::json& j, const DifferenceSet& d) {
  j = nlohmann::json{{"kind", to_string(d.kind)}, {"q", d.q}, {"v", d.v}, {"elements", d.elements}};
}

inline void from_json(const nlohmann::json& j, DifferenceSet& d) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "singer") {
    d.kind = DifferenceSetKind::singer;
  } else if (kind == "bose") {
    d.kind = DifferenceSetKind::bose;
  } else {
    throw domain_error("difference set: unknown kind '" + kind + "'");
  }
  j.at("q").get_to(d.q);
  j.at("v").get_to(d.v);
  j.at("elements").get_to(d.elements);
}

}  // namespace turan
